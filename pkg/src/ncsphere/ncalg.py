"""The *-algebra of the noncommutative three-sphere.

Generators ``a, a*, b, b*`` with relations

    aa* = a*a,  bb* = b*b,  ab = lam ba,  ab* = lam^-1 b*a,  aa* + bb* = 1.

Words are reduced by the oriented rewrite system

    a*a -> aa*          ba  -> lam^-1 ab      ba* -> lam a*b
    b*a -> lam ab*      b*a* -> lam^-1 a*b*   bb* -> 1 - aa*   b*b -> 1 - aa*

whose irreducible words are ``a^p a*^q b^r b*^s`` with ``r*s == 0``.
Each rule strictly decreases the lexicographic measure

    (number of b/b* letters,
     number of b/b*-letters standing left of an a/a*-letter (counted in pairs),
     number of a*-letters standing left of an a-letter (counted in pairs))

so every rewrite sequence terminates; see :func:`termination_measure`.

``Element`` multiplication does not rewrite words: it uses the closed form
for the product of two normal monomials (``z = aa*`` is central and
``b^R b*^S = (1 - z)^min(R,S) b^(R-k) b*^(S-k)``).  The rewriting engine in
:func:`rewrite` is kept as the independent route that the closed form is
tested against.
"""

from __future__ import annotations

import random
from collections import namedtuple
from functools import lru_cache
from math import comb

import numpy as np

from .combination import Combination
from .report import Report
from .scalars import EXP_LIMIT, LAM, ONE, ExponentOverflowError, Scalar

A, AS, B, BS = 0, 1, 2, 3
LETTERS = ("a", "a'", "b", "b'")
_LETTER_CODE = {"a": A, "a'": AS, "a*": AS, "b": B, "b'": BS, "b*": BS}
_STAR_LETTER = {A: AS, AS: A, B: BS, BS: B}


class NotCoinvariantError(ValueError):
    """Raised when an element with nonzero degree is evaluated classically."""


_MonoBase = namedtuple("_MonoBase", "p q r s")


class Monomial(_MonoBase):
    """Normal word ``a^p a*^q b^r b*^s`` (never both ``r`` and ``s`` positive)."""

    __slots__ = ()

    def __new__(cls, p=0, q=0, r=0, s=0):
        for e in (p, q, r, s):
            if not 0 <= e <= EXP_LIMIT:
                raise ExponentOverflowError(f"monomial exponent {e} outside [0, {EXP_LIMIT}]")
        if r and s:
            raise ValueError("normal monomials never contain both b and b*")
        return super().__new__(cls, p, q, r, s)

    @property
    def degree(self) -> int:
        return self.p - self.q + self.r - self.s

    @property
    def length(self) -> int:
        return self.p + self.q + self.r + self.s

    def sort_key(self):
        return (self.length, self.p, self.q, self.r, self.s)

    def word(self) -> tuple:
        return (A,) * self.p + (AS,) * self.q + (B,) * self.r + (BS,) * self.s


ONE_MONO = Monomial()


@lru_cache(maxsize=1 << 16)
def mono_mul(m1: Monomial, m2: Monomial) -> tuple:
    """Product of two normal monomials as ``((Monomial, lam_exp, int), ...)``."""
    p1, q1, r1, s1 = m1
    p2, q2, r2, s2 = m2
    k = -(r1 - s1) * (p2 - q2)
    P, Q, R, S = p1 + p2, q1 + q2, r1 + r2, s1 + s2
    j = min(R, S)
    r, s = R - j, S - j
    if j == 0:
        return ((Monomial(P, Q, r, s), k, 1),)
    return tuple((Monomial(P + t, Q + t, r, s), k, (-1) ** t * comb(j, t)) for t in range(j + 1))


def all_monomials(max_length: int, min_length: int = 0) -> list:
    """Every normal monomial with ``min_length <= length <= max_length``, sorted."""
    out = []
    for L in range(min_length, max_length + 1):
        for p in range(L + 1):
            for q in range(L + 1 - p):
                rest = L - p - q
                out.append(Monomial(p, q, rest, 0))
                if rest:
                    out.append(Monomial(p, q, 0, rest))
    out.sort(key=Monomial.sort_key)
    return out


class Element(Combination):
    """Element of the sphere algebra: normal monomials with Scalar coefficients."""

    __slots__ = ()

    @classmethod
    def monomial(cls, m: Monomial, coeff=ONE) -> "Element":
        return cls({m: coeff})

    @classmethod
    def scalar(cls, c) -> "Element":
        return cls({ONE_MONO: c})

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        return super().__mul__(other)

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            raise ValueError("negative powers are not defined in the sphere algebra")
        out, base = one, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def star(self) -> "Element":
        return star(self)

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def degrees(self) -> set:
        return {m.degree for m in self._terms}

    def __repr__(self):
        from .parsing import print_expr

        return f"Element({print_expr(self)!r})"

    def __str__(self):
        from .parsing import print_expr

        return print_expr(self)


def mul(f: Element, g: Element) -> Element:
    acc: dict = {}
    for m1, c1 in f._terms.items():
        for m2, c2 in g._terms.items():
            c12 = c1 * c2
            for m, k, n in mono_mul(m1, m2):
                c = c12.shift(k)
                if n != 1:
                    c = c * n
                w = acc.get(m)
                acc[m] = c if w is None else w + c
    return Element._raw({m: c for m, c in acc.items() if c})


def star(f: Element) -> Element:
    """Conjugate-linear anti-automorphism extending a <-> a*, b <-> b*."""
    acc: dict = {}
    for (p, q, r, s), c in f._terms.items():
        # (a^p a*^q b^r b*^s)* = b^s b*^r a^q a*^p
        cc = c.conj()
        for m, k, n in mono_mul(Monomial(0, 0, s, r), Monomial(q, p, 0, 0)):
            v = cc.shift(k) * n
            w = acc.get(m)
            acc[m] = v if w is None else w + v
    return Element._raw({m: c for m, c in acc.items() if c})


def generator(letter) -> Element:
    code = _LETTER_CODE[letter] if isinstance(letter, str) else letter
    return Element._raw({Monomial(*[int(code == i) for i in range(4)]): ONE})


def _word_codes(word) -> tuple:
    if isinstance(word, str):
        s = word.replace("*", "'").replace(" ", "")
        codes = []
        for i, ch in enumerate(s):
            if ch == "'":
                continue
            starred = i + 1 < len(s) and s[i + 1] == "'"
            codes.append(_LETTER_CODE[ch + "'" if starred else ch])
        return tuple(codes)
    return tuple(_LETTER_CODE[t] if isinstance(t, str) else int(t) for t in word)


def normalize(word, coeff=ONE) -> Element:
    """Normal form of ``coeff * word`` for a word in ``a, a', b, b'``.

    ``word`` may be a sequence of letters/codes or a string such as
    ``"b a a' b'"``.
    """
    out = Element.scalar(coeff)
    for code in _word_codes(word):
        out = mul(out, generator(code))
    return out


# --- rewriting engine -------------------------------------------------------

RULES = {
    (AS, A): ((0, 1, (A, AS)),),
    (B, A): ((-1, 1, (A, B)),),
    (B, AS): ((1, 1, (AS, B)),),
    (BS, A): ((1, 1, (A, BS)),),
    (BS, AS): ((-1, 1, (AS, BS)),),
    (B, BS): ((0, 1, ()), (0, -1, (A, AS))),
    (BS, B): ((0, 1, ()), (0, -1, (A, AS))),
}


def redexes(word: tuple) -> list:
    return [i for i in range(len(word) - 1) if (word[i], word[i + 1]) in RULES]


def termination_measure(word: tuple) -> tuple:
    bs = sum(1 for x in word if x in (B, BS))
    ba = a_left = 0
    b_seen = as_seen = 0
    for x in word:
        if x in (B, BS):
            b_seen += 1
        else:
            ba += b_seen
            if x == AS:
                as_seen += 1
            else:
                a_left += as_seen
    return (bs, ba, a_left)


def rewrite(word, coeff=ONE, rng: random.Random | None = None, step_bound=None):
    """Reduce ``coeff * word`` by the rewrite rules.

    Without ``rng`` the leftmost redex of the first reducible word is
    rewritten; with ``rng`` both the word and the redex are chosen at
    random.  Returns ``(Element, max_steps)`` where ``max_steps`` is the
    longest derivation chain.  ``step_bound`` (default ``len(word)**3``)
    raises ``RuntimeError`` when exceeded; that would signal a
    non-terminating rule set, not a user error.
    """
    word = _word_codes(word)
    L = len(word)
    bound = step_bound if step_bound is not None else max(1, L**3)
    pending = [(word, Scalar.coerce(coeff), 0)]
    done: list = []
    longest = 0
    while pending:
        idx = rng.randrange(len(pending)) if rng else 0
        w, c, steps = pending.pop(idx)
        pos = redexes(w)
        if not pos:
            done.append((w, c))
            longest = max(longest, steps)
            continue
        i = rng.choice(pos) if rng else pos[0]
        if steps + 1 > bound:
            raise RuntimeError(f"rewrite of length-{L} word exceeded {bound} steps")
        for k, n, rep in RULES[(w[i], w[i + 1])]:
            pending.insert(0 if not rng else len(pending), (w[:i] + rep + w[i + 2 :], (c.shift(k)) * n, steps + 1))
    pairs = []
    for w, c in done:
        p = w.count(A)
        q = w.count(AS)
        r = w.count(B)
        s = w.count(BS)
        pairs.append((Monomial(p, q, r, s), c))
    return Element._accumulate(pairs), longest


# --- grading and classical evaluation ----------------------------------------


def degree_decompose(f: Element) -> dict:
    parts: dict = {}
    for m, c in f._terms.items():
        parts.setdefault(m.degree, {})[m] = c
    return {d: Element._raw(parts[d]) for d in sorted(parts)}


def is_coinvariant(f: Element) -> bool:
    return all(m.degree == 0 for m in f._terms)


def eval_classical(f: Element, theta, psi):
    """Evaluate a degree-zero element at a point of the classical 2-sphere.

    Uses the character ``a -> cos(theta/2) e^{i psi}``, ``b -> sin(theta/2)``,
    ``lam -> 1``.  ``theta`` and ``psi`` may be numpy arrays (broadcast).
    """
    if not is_coinvariant(f):
        bad = sorted(d for d in f.degrees() if d)
        raise NotCoinvariantError(f"element has components of degree {bad}")
    theta = np.asarray(theta, dtype=float)
    psi = np.asarray(psi, dtype=float)
    if np.any(theta < -1e-12) or np.any(theta > np.pi + 1e-12):
        raise ValueError("theta must lie in [0, pi]")
    c = np.cos(theta / 2)
    s = np.sin(theta / 2)
    out = np.zeros(np.broadcast(theta, psi).shape, dtype=complex)
    for (p, q, r, t), coeff in f._terms.items():
        out = out + coeff.at_one() * c ** (p + q) * s ** (r + t) * np.exp(1j * (p - q) * psi)
    return out[()] if out.ndim == 0 else out


# --- distinguished elements ---------------------------------------------------

zero = Element._raw({})
one = Element.scalar(ONE)
lam = Element.scalar(LAM)
a = generator(A)
a_star = generator(AS)
b = generator(B)
b_star = generator(BS)
z = a * a_star
x_plus = b * a_star
x_minus = a * b_star


def random_word(rng: random.Random, max_length: int) -> tuple:
    return tuple(rng.randrange(4) for _ in range(rng.randint(0, max_length)))


def random_element(rng: random.Random, max_length: int = 4, max_terms: int = 4) -> Element:
    """Random element with small Gaussian-integer / lam-monomial coefficients."""
    monos = all_monomials(max_length)
    pairs = []
    for _ in range(rng.randint(0, max_terms)):
        c = Scalar({rng.randint(-2, 2): complex(rng.randint(-3, 3), rng.randint(-3, 3))})
        pairs.append((rng.choice(monos), c))
    return Element._accumulate(pairs)


def verify_rewriting(words: int = 1000, max_length: int = 12, seed: int = 42) -> Report:
    """Order independence, star anti-homomorphism and grading on random words."""
    rng = random.Random(seed)
    params = {"words": words, "max_length": max_length, "seed": seed}
    longest = 0
    for i in range(words):
        w = random_word(rng, max_length)
        ref = normalize(w)
        got, steps = rewrite(w, rng=rng)
        longest = max(longest, steps)
        if got != ref:
            return Report("rewriting", params, "fail", counterexample=f"word {w}: order-dependent normal form")
        if renormalize(ref) != ref:
            return Report("rewriting", params, "fail", counterexample=f"word {w}: not idempotent")
        w2 = random_word(rng, max_length)
        g = normalize(w2)
        f = ref
        if star(f * g) != star(g) * star(f):
            return Report("rewriting", params, "fail", counterexample=f"words {w}, {w2}: star anti-hom")
        sums = {d1 + d2 for d1 in f.degrees() for d2 in g.degrees()}
        if not (f * g).degrees() <= sums:
            return Report("rewriting", params, "fail", counterexample=f"words {w}, {w2}: grading")
    return Report("rewriting", params, "pass", dims={"longest_derivation": longest})


def renormalize(f: Element) -> Element:
    """Re-reduce every term of ``f`` from its word; the identity on normal forms."""
    return Element._accumulate(
        (m, c) for t, c0 in f._terms.items() for m, c in normalize(t.word(), c0)._terms.items()
    )
