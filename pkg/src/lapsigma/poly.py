"""Integer polynomials and exact real-root counting.

Two independent counting routes are provided:

* Sturm: square-free decomposition (Yun) followed by a Sturm chain per
  factor, built from sign-corrected integer pseudo-remainders with content
  removal.  Valid for any integer polynomial.
* Descartes: sign variations of the coefficient list.  This is exact only
  when every root is real, which holds for characteristic polynomials of
  symmetric matrices; the routine checks the total and raises otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple


class IntPolynomial:
    """Polynomial with int coefficients, stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPolynomial:
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            body = ("" if mag == 1 and k else str(mag)) + ("x" if k else "") + (f"^{k}" if k > 1 else "")
            terms.append(("-" if c < 0 else "+") + " " + body)
        s = " ".join(terms)
        return s[2:] if s.startswith("+") else "-" + s[2:]

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial([])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> IntPolynomial:
        """Divide by the content and make the leading coefficient positive."""
        g = self.content()
        if g == 0:
            return self
        if self.lc < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def reflect(self) -> IntPolynomial:
        """p(-x)."""
        return IntPolynomial(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def trailing_zeros(self) -> int:
        """Multiplicity of the root x = 0."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return k

    def shift_divide(self, k: int) -> IntPolynomial:
        """p(x) / x^k; caller guarantees exactness."""
        return IntPolynomial(self.coeffs[k:])

    def clear_threshold(self, q: Fraction) -> IntPolynomial:
        """Return b^d * p((y + a) / b) for q = a/b with b > 0.

        Roots transform as y = b*x - a, so comparisons of roots against q
        become comparisons against 0 with the same orientation.
        """
        q = Fraction(q)
        a, b = q.numerator, q.denominator
        d = self.degree
        r = [c * b ** (d - k) for k, c in enumerate(self.coeffs)]
        # Taylor shift by a (Horner scheme)
        for i in range(d):
            for j in range(d - 1, i - 1, -1):
                r[j] += a * r[j + 1]
        return IntPolynomial(r)


def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """r with lc(b)^(deg a - deg b + 1) * a = q*b + r."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    r = list(a.coeffs)
    db, lb = b.degree, b.lc
    bc = b.coeffs
    delta = a.degree - db + 1
    if delta <= 0:
        return a
    for _ in range(delta):
        if len(r) - 1 < db:
            r = [c * lb for c in r]
            continue
        lead = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, c in enumerate(bc):
            r[shift + i] -= lead * c
        r.pop()
        while r and r[-1] == 0 and len(r) - 1 >= db:
            r.pop()
            # dropping a degree still consumes one multiplication step
    return IntPolynomial(r)


def exact_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """a / b in Z[x]; raises ArithmeticError unless the division is exact."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a.coeffs)
    db, lb = b.degree, b.lc
    if len(r) - 1 < db:
        if r:
            raise ArithmeticError("inexact polynomial division")
        return IntPolynomial([])
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        lead = r[k + db]
        if lead % lb:
            raise ArithmeticError("inexact polynomial division")
        t = lead // lb
        q[k] = t
        if t:
            for i, c in enumerate(b.coeffs):
                r[k + i] -= t * c
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return IntPolynomial(q)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, pseudo_remainder(a, b).primitive()
    return a.primitive()


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: list of (f_i, i) with p = c * prod f_i^i, f_i square-free."""
    if p.degree < 1:
        return []
    dp = p.derivative()
    a0 = poly_gcd(p, dp)
    b = exact_quotient(p, a0)
    c = exact_quotient(dp, a0)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b_next = exact_quotient(b, a)
        c = exact_quotient(d, a)
        if a.degree > 0:
            out.append((a, i))
        b = b_next
        d = c - b.derivative()
        i += 1
    return out


def sturm_chain(f: IntPolynomial) -> list[IntPolynomial]:
    """Sturm sequence of a square-free polynomial, scaled by positive factors only."""
    chain = [f, f.derivative()]
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        r = pseudo_remainder(a, b)
        if r.is_zero():
            break
        delta = a.degree - b.degree + 1
        # prem multiplies by lc(b)^delta; undo a negative factor to keep -rem's sign
        if b.lc < 0 and delta % 2:
            r = -r
        g = r.content()
        chain.append(IntPolynomial(-(c // g) for c in r.coeffs))
    return chain


def _variations(signs: Iterable[int]) -> int:
    last = 0
    count = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sturm_split(f: IntPolynomial) -> tuple[int, int]:
    """(#distinct roots < 0, #distinct roots > 0) of square-free f with f(0) != 0."""
    chain = sturm_chain(f)
    at_zero = _variations(_sign(g.coeffs[0] if g.coeffs else 0) for g in chain)
    at_pinf = _variations(_sign(g.lc) for g in chain)
    at_ninf = _variations(_sign(g.lc) * (-1) ** g.degree for g in chain)
    return at_ninf - at_zero, at_zero - at_pinf


class RootCounts(NamedTuple):
    above: int
    at: int
    below: int


def root_counts(p: IntPolynomial, q, method: str = "sturm") -> RootCounts:
    """Real roots of p (with multiplicity) above, at and below rational q."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root count")
    P = p.clear_threshold(Fraction(q))
    at = P.trailing_zeros()
    P = P.shift_divide(at)
    if method == "sturm":
        above = below = 0
        for f, mult in squarefree_decomposition(P):
            neg, pos = sturm_split(f)
            above += mult * pos
            below += mult * neg
    elif method == "descartes":
        above = _variations(_sign(c) for c in P.coeffs)
        below = _variations(_sign(c) for c in P.reflect().coeffs)
        if above + below != P.degree:
            raise ArithmeticError("polynomial is not real-rooted; Descartes count is inexact")
    else:
        raise ValueError(f"unknown counting method {method!r}")
    return RootCounts(above, at, below)


_CMP = {
    ">": lambda c: c.above,
    ">=": lambda c: c.above + c.at,
    "=": lambda c: c.at,
    "<": lambda c: c.below,
    "<=": lambda c: c.below + c.at,
}


def count_roots_cmp(p: IntPolynomial, q, cmp: str, method: str = "sturm") -> int:
    """Number of real roots r of p, with multiplicity, such that ``r cmp q``."""
    aliases = {"≥": ">=", "≤": "<=", "==": "="}
    cmp = aliases.get(cmp, cmp)
    if cmp not in _CMP:
        raise ValueError(f"unknown comparison {cmp!r}")
    return _CMP[cmp](root_counts(p, q, method))
