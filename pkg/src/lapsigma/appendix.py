"""The parametrised principal submatrices L1..L9 and their certified claims.

Each matrix depends on two integers d1 > d2 >= 2 (the largest and second
largest degree).  :func:`verify_param_matrix` checks, for one parameter
pair:

* the exact characteristic polynomial against the printed closed form,
* exact evaluations at the printed test points,
* the claimed position of the second largest eigenvalue, decided exactly
  by root counting whenever the threshold is rational,
* closed-form eigenvalues of L1 and L3 against the numeric spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .bounds import BoundReport
from .exact import char_poly
from .numeric import spectrum
from .poly import IntPolynomial, root_counts

IDS = ("L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8", "L9")
CLOSED_FORM_TOL = 1e-10
Q = Fraction


def _l1(a, b):
    return [[a, -1, -1], [-1, b, -1], [-1, -1, b]]


def _l2(a, b):
    return [[a, -1, -1, 0], [-1, b, 0, -1], [-1, 0, b, -1], [0, -1, -1, b]]


def _l3(a, b):
    return [[a, 0, 0], [0, b, -1], [0, -1, b]]


def _order4(x23, x14, x34):
    """L4..L9 share one pattern; they differ in three off-diagonal slots."""
    def build(a, b):
        return [[a, -1, -x23, -x14],
                [-1, b, -1, -1],
                [-x23, -1, b - 1, -x34],
                [-x14, -1, -x34, b - 1]]
    return build


_BUILDERS: dict[str, Callable[[int, int], list[list[int]]]] = {
    "L1": _l1, "L2": _l2, "L3": _l3,
    "L4": _order4(1, 1, 1), "L5": _order4(1, 1, 0),
    "L6": _order4(1, 0, 1), "L7": _order4(1, 0, 0),
    "L8": _order4(0, 0, 1), "L9": _order4(0, 0, 0),
}

# printed characteristic polynomials, coefficients low degree first
_PRINTED: dict[str, Callable[[int, int], list[int]]] = {
    "L1": lambda a, b: [-a * b * b + a + 2 * b + 2, 2 * a * b + b * b - 3, -(a + 2 * b), 1],
    "L2": lambda a, b: [a * b ** 3 - 2 * a * b - 2 * b * b,
                        -(3 * a * b * b + b ** 3 - 2 * a - 6 * b),
                        3 * a * b + 3 * b * b - 4, -(a + 3 * b), 1],
    "L3": lambda a, b: (IntPolynomial.from_roots([a, b + 1, b - 1])).coeffs,
}


def _quartic(c2: int, c1a: int, c1b: int, c1c: int, c0: Callable[[int, int], int]):
    def coeffs(a, b):
        return [c0(a, b),
                -3 * a * b * b - b ** 3 + 4 * a * b + 2 * b * b + c1a * a + c1b * b + c1c,
                3 * a * b + 3 * b * b - 2 * a - 4 * b + c2,
                -a - 3 * b + 2, 1]
    return coeffs


_PRINTED.update({
    "L4": _quartic(-5, 2, 8, 2, lambda a, b: a * b ** 3 - 2 * a * b * b - 2 * a * b - 3 * b * b - 2 * b),
    "L5": _quartic(-4, 1, 7, -2, lambda a, b: a * b ** 3 - 2 * a * b * b - a * b - 3 * b * b + 2 * a + 3),
    "L6": _quartic(-4, 2, 6, -1, lambda a, b: a * b ** 3 - 2 * a * b * b - 2 * a * b - 2 * b * b + b + 1),
    "L7": _quartic(-3, 1, 5, -3, lambda a, b: a * b ** 3 - 2 * a * b * b - a * b - 2 * b * b + 2 * a + b + 2),
    "L8": _quartic(-3, 2, 4, -2, lambda a, b: a * b ** 3 - 2 * a * b * b - 2 * a * b - b * b + 2 * b),
    "L9": _quartic(-2, 1, 3, -4, lambda a, b: a * b ** 3 - 2 * a * b * b - a * b - b * b + 2 * a + 2 * b - 1),
})

# printed test-point values: (offset from d2 or "d1", closed form in (d1, d2))
_TEST_POINTS: dict[str, list[tuple[object, Callable[[int, int], Fraction]]]] = {
    "L2": [(Q(1), lambda a, b: Q(a - b - 3)),
           ("d1", lambda a, b: Q(-2 * (a - b) ** 2)),
           (Q(1, 3), lambda a, b: Q(17, 27) * (a - b) - Q(35, 81)),
           (Q(2, 3), lambda a, b: Q(28, 27) * (a - b) - Q(128, 81))],
    "L4": [(Q(1), lambda a, b: Q(b - a)),
           (Q(1, 2), lambda a, b: Q(3, 8) * (a - b) + Q(1, 16))],
    "L5": [(Q(1), lambda a, b: Q(0))],
    "L6": [(Q(1), lambda a, b: Q(b - a - 1)),
           (Q(1, 2), lambda a, b: Q(3, 8) * (a - b) - Q(3, 16))],
    "L7": [(Q(1), lambda a, b: Q(-1)),
           (Q(1, 2), lambda a, b: Q(15, 8) * (a - b) + Q(1, 16))],
    "L8": [(Q(1), lambda a, b: Q(b - a - 2)),
           (Q(1, 2), lambda a, b: Q(3, 8) * (a - b) - Q(23, 16))],
    "L9": [(Q(1), lambda a, b: Q(-4)),
           (Q(1, 2), lambda a, b: Q(15, 8) * (a - b) - Q(51, 16))],
}


@dataclass(frozen=True)
class ParamMatrix:
    id: str
    delta1: int
    delta2: int
    entries: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.entries)


def check_params(mid: str, delta1: int, delta2: int) -> None:
    if mid not in _BUILDERS:
        raise ValueError(f"unknown matrix id {mid!r}; expected one of {', '.join(IDS)}")
    if not delta1 > delta2 >= 2:
        raise ValueError(f"{mid} needs delta1 > delta2 >= 2, got ({delta1}, {delta2})")
    if mid not in ("L1", "L2", "L3") and delta1 < 2 * delta2 + 3:
        raise ValueError(f"{mid} needs delta1 >= 2*delta2 + 3, "
                         f"got {delta1} < {2 * delta2 + 3}")


def build_param_matrix(mid: str, delta1: int, delta2: int) -> ParamMatrix:
    check_params(mid, delta1, delta2)
    rows = _BUILDERS[mid](delta1, delta2)
    return ParamMatrix(mid, delta1, delta2, tuple(tuple(r) for r in rows))


def printed_charpoly(mid: str, delta1: int, delta2: int) -> IntPolynomial:
    return IntPolynomial(_PRINTED[mid](delta1, delta2))


def _mu2_claim(mid: str, a: int, b: int) -> tuple[Fraction, bool]:
    """(threshold, strict) of the claimed lower bound on mu_2."""
    if mid in ("L1", "L3", "L5"):
        return Q(b + 1), False
    if mid == "L2":
        if a == b + 1:
            return b + Q(1, 3), True
        if a == b + 2:
            return b + Q(2, 3), True
        return Q(b + 1), False
    return b + Q(1, 2), True


def _closed_form_eigs(mid: str, a: int, b: int) -> list[float] | None:
    if mid == "L1":
        r = math.sqrt((a - b) * (a - b + 2) + 9) / 2
        c = (a + b - 1) / 2
        return sorted([c + r, c - r, b + 1.0], reverse=True)
    if mid == "L3":
        return sorted([float(a), b + 1.0, b - 1.0], reverse=True)
    return None


def verify_param_matrix(mid: str, delta1: int, delta2: int) -> BoundReport:
    pm = build_param_matrix(mid, delta1, delta2)
    a, b = delta1, delta2
    cp = char_poly(pm.entries)
    parts: dict[str, bool] = {"charpoly": cp == printed_charpoly(mid, a, b)}

    points = {}
    for offset, expected in _TEST_POINTS.get(mid, []):
        x = Q(a) if offset == "d1" else b + offset
        label = "d1" if offset == "d1" else f"d2+{offset}"
        got = cp(x)
        points[label] = got
        parts[f"f({label})"] = got == expected(a, b)

    # exact position of mu_2 against the claimed threshold
    t, strict = _mu2_claim(mid, a, b)
    c = root_counts(cp, t)
    parts["mu2"] = c.above >= 2 if strict else c.above + c.at >= 2

    spec = spectrum(pm.entries)
    mu2 = spec.values[1]
    closed = _closed_form_eigs(mid, a, b)
    if closed is not None:
        parts["closed_form"] = all(abs(x - y) <= CLOSED_FORM_TOL
                                   for x, y in zip(closed, spec.values))

    return BoundReport(f"appendix_{mid}", True, lhs=mu2, rhs=float(t), rhs_exact=t,
                       holds=all(parts.values()), equality=c.at > 0 and c.above < 2,
                       witness={"parts": parts, "test_points": points,
                                "strict": strict, "eigenvalues": spec.values})


def default_grid(mid: str, d1_max: int = 40, d2_max: int = 10):
    """Parameter pairs swept by default: the full admissible grid."""
    if mid in ("L1", "L2", "L3"):
        return [(a, b) for b in range(2, d1_max) for a in range(b + 1, d1_max + 1)]
    return [(a, b) for b in range(2, d2_max + 1) for a in range(2 * b + 3, d1_max + 1)]


def sweep(ids=IDS, d1_max: int = 40, d2_max: int = 10) -> list[BoundReport]:
    return [verify_param_matrix(mid, a, b) for mid in ids for a, b in default_grid(mid, d1_max, d2_max)]
