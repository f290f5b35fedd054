"""Text syntax for sphere-algebra elements.

Grammar (whitespace is insignificant)::

    expr     := [sign] term (sign term)*
    term     := factor+                      juxtaposition = product
    factor   := atom ('^' uint)?
    atom     := a | a' | b | b' | q | q' | i | rational | '(' expr ')'
    rational := int ('/' uint)?

``q`` is lam, ``q'`` its inverse and ``x'`` the star of a generator.  The
leading sign is an extension so that printed negative elements parse back.
Printing emits the same grammar with monomials sorted by
``(length, p, q, r, s)``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .ncalg import Element, Monomial, generator, one
from .scalars import EXP_LIMIT, I_Q, ExponentOverflowError, GaussQ, Scalar


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[abqi]'?)|(?P<op>[-+()^/]))")


def _tokenize(text: str) -> list:
    toks, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    if any(t[1] == "i'" for t in toks):
        pos = next(t[2] for t in toks if t[1] == "i'")
        raise ParseError("i has no starred form; write -i", pos)
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, value=None):
        tok = self.toks[self.i]
        if value is not None and tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Element:
        e = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return e

    def expr(self) -> Element:
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        total = self.term().scale(sign)
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            total = total + self.term().scale(sign)
        return total

    def term(self) -> Element:
        tok = self.peek()
        if not self._starts_factor(tok):
            raise ParseError(f"expected a factor, found {tok[1] or 'end of input'!r}", tok[2])
        out = self.factor()
        while self._starts_factor(self.peek()):
            out = out * self.factor()
        return out

    @staticmethod
    def _starts_factor(tok) -> bool:
        return tok[0] in ("int", "name") or tok[1] == "("

    def factor(self) -> Element:
        kind, val, pos = self.peek()
        if kind == "name":
            self.take()
            n = self._exponent()
            return _atom_power(val, 1 if n is None else n)
        if kind == "int":
            self.take()
            r = Fraction(int(val))
            if self.peek()[1] == "/":
                self.take()
                k, d, dpos = self.take()
                if k != "int":
                    raise ParseError("expected denominator", dpos)
                if int(d) == 0:
                    raise ParseError("zero denominator", dpos)
                r = r / int(d)
            n = self._exponent()
            return Element.scalar(r ** (1 if n is None else n))
        self.take("(")
        inner = self.expr()
        self.take(")")
        n = self._exponent()
        return inner if n is None else inner**n

    def _exponent(self):
        if self.peek()[1] != "^":
            return None
        self.take()
        kind, val, pos = self.take()
        if kind != "int":
            raise ParseError("expected unsigned integer exponent", pos)
        n = int(val)
        if n > EXP_LIMIT:
            raise ExponentOverflowError(f"exponent {n} exceeds {EXP_LIMIT} at position {pos}")
        return n


def _atom_power(name: str, n: int) -> Element:
    if name == "q":
        return Element.scalar(Scalar.lam(n))
    if name == "q'":
        return Element.scalar(Scalar.lam(-n))
    if name == "i":
        return Element.scalar(I_Q**n)
    m = next(iter(generator(name).keys()))
    return Element.monomial(Monomial(*(e * n for e in m)))


def parse_expr(text: str) -> Element:
    return _Parser(text).parse()


# --- printing -----------------------------------------------------------------


def _fmt_rational(x: Fraction) -> str:
    return str(x) if x.denominator == 1 else f"({x})"


def _qpow(k: int) -> list:
    if k == 0:
        return []
    base = "q" if k > 0 else "q'"
    return [base if abs(k) == 1 else f"{base}^{abs(k)}"]


def _simple_parts(c: Scalar) -> list:
    """Split a scalar into ``(sign, tokens)`` pieces, one per real/imaginary lam-term."""
    parts = []
    for k, v in c.items():
        for x, imag in ((v.re, False), (v.im, True)):
            if not x:
                continue
            toks = [] if abs(x) == 1 else [_fmt_rational(abs(x))]
            if imag:
                toks.append("i")
            toks += _qpow(k)
            parts.append((1 if x > 0 else -1, toks))
    return parts


def _join(pieces) -> str:
    """Join ``(sign, tokens)`` pieces into a signed sum."""
    out = []
    for idx, (sign, toks) in enumerate(pieces):
        body = " ".join(toks) if toks else "1"
        if idx == 0:
            out.append(("-" if sign < 0 else "") + body)
        else:
            out.append(("- " if sign < 0 else "+ ") + body)
    return " ".join(out) if out else "0"


def _coeff_pieces(c: Scalar, factor_toks: list):
    parts = _simple_parts(c)
    if len(parts) == 1:
        sign, toks = parts[0]
        return sign, toks + factor_toks
    return 1, [f"({_join(parts)})"] + factor_toks


def _mono_tokens(m: Monomial) -> list:
    toks = []
    for name, e in zip(("a", "a'", "b", "b'"), m):
        if e:
            toks.append(name if e == 1 else f"{name}^{e}")
    return toks


def print_scalar(c: Scalar) -> str:
    return _join(_simple_parts(c))


def print_expr(f: Element) -> str:
    return _join(_coeff_pieces(c, _mono_tokens(m)) for m, c in f.sorted_terms())


def print_b_expr(f: Element) -> str:
    """Print a degree-zero element as a polynomial in ``z, x+, x-``.

    Every degree-zero normal monomial equals ``lam^e z^j x-^k`` or
    ``lam^e z^j x+^k`` for a unique phase ``e``.  Output only; ``x+``/``x-``
    are not part of the input grammar.
    """
    from .ncalg import is_coinvariant, x_minus, x_plus

    if not is_coinvariant(f):
        raise ValueError("only degree-zero elements have a z, x+, x- form")
    acc: dict = {}
    for m, c in f.items():
        j = min(m.p, m.q)
        k = m.r + m.s
        if m.s:
            kind, gen = "x-", x_minus
        elif m.r:
            kind, gen = "x+", x_plus
        else:
            kind, gen = "", one
        ((mono, phase),) = (gen**k).items()
        # gen^k = phase * (a^k b*^k or a*^k b^k); z^j times it adds no phase
        e = _lam_exponent(phase)
        key = (j, k, kind)
        acc[key] = acc.get(key, Scalar()) + c.shift(-e)
    pieces = []
    for (j, k, kind), c in sorted(acc.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0])):
        if not c:
            continue
        toks = []
        if j:
            toks.append("z" if j == 1 else f"z^{j}")
        if k:
            toks.append(kind if k == 1 else f"{kind}^{k}")
        pieces.append(_coeff_pieces(c, toks))
    return _join(pieces)


def _lam_exponent(c: Scalar) -> int:
    ((k, v),) = c.items()
    if v != GaussQ(1):
        raise ValueError("expected a pure lam power")
    return k
