from hypothesis import strategies as st

from ncsphere.ncalg import Element, Monomial
from ncsphere.scalars import GaussQ, Scalar

gauss = st.builds(GaussQ, st.integers(-4, 4), st.integers(-4, 4))
scalars = st.dictionaries(st.integers(-3, 3), gauss, max_size=3).map(Scalar)


@st.composite
def monomials(draw, max_length=4):
    p, q = draw(st.integers(0, max_length)), draw(st.integers(0, max_length))
    k = draw(st.integers(0, max_length))
    return Monomial(p, q, k, 0) if draw(st.booleans()) else Monomial(p, q, 0, k)


elements = st.dictionaries(monomials(), scalars, max_size=4).map(Element)
words = st.lists(st.integers(0, 3), max_size=10).map(tuple)
