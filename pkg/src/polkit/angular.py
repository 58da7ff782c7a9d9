"""Exact angular-momentum coupling coefficients.

Wigner 6j symbols are evaluated with the Racah single-sum formula using
exact integer/rational arithmetic; the only floating-point operations are
the final conversion and one square root, so results are accurate to a few
ulp with no cancellation error.  Arguments out of the triangle conditions
return 0 by convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# Generous cap for this package's needs; factorial tables stay small.
MAX_TWICE_J = 200


@dataclass(frozen=True, order=True)
class HalfInt:
    """An angular momentum j represented exactly as twice its value."""

    twice: int

    def __post_init__(self) -> None:
        if self.twice < 0:
            raise ValueError(f"negative angular momentum: {self.twice}/2")
        if self.twice > MAX_TWICE_J:
            raise ValueError(f"angular momentum too large: {self.twice}/2")

    @classmethod
    def of(cls, j: "HalfInt | int | float") -> "HalfInt":
        """Coerce an int, an exact half-integral float, or a HalfInt."""
        if isinstance(j, HalfInt):
            return j
        twice = 2 * j
        if twice != int(twice):
            raise ValueError(f"not a half-integer: {j!r}")
        return cls(int(twice))

    @property
    def value(self) -> float:
        return self.twice / 2

    def is_integral(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + other.twice)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - other.twice)

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"


_factorials: list[int] = [1]


def _factorial(n: int) -> int:
    """Cached integer factorial (table grows on demand)."""
    while len(_factorials) <= n:
        _factorials.append(_factorials[-1] * len(_factorials))
    return _factorials[n]


def triangle_ok(a: HalfInt, b: HalfInt, c: HalfInt) -> bool:
    """True iff |a-b| <= c <= a+b and a+b+c is an integer."""
    ta, tb, tc = a.twice, b.twice, c.twice
    return (ta + tb + tc) % 2 == 0 and abs(ta - tb) <= tc <= ta + tb


def _triangle_ok_twice(ta: int, tb: int, tc: int) -> bool:
    return (ta + tb + tc) % 2 == 0 and abs(ta - tb) <= tc <= ta + tb


def _delta(ta: int, tb: int, tc: int) -> Fraction:
    """Triangle coefficient Delta(abc)^2 as an exact rational."""
    return Fraction(
        _factorial((ta + tb - tc) // 2)
        * _factorial((ta - tb + tc) // 2)
        * _factorial((-ta + tb + tc) // 2),
        _factorial((ta + tb + tc) // 2 + 1),
    )


@lru_cache(maxsize=1 << 18)
def _wigner6j_twice(tj1: int, tj2: int, tj3: int, tj4: int, tj5: int, tj6: int) -> float:
    for ta, tb, tc in (
        (tj1, tj2, tj3),
        (tj1, tj5, tj6),
        (tj4, tj2, tj6),
        (tj4, tj5, tj3),
    ):
        if not _triangle_ok_twice(ta, tb, tc):
            return 0.0

    # Racah sum: integer bounds in units of full (not twice) spins.
    t_min = max(
        (tj1 + tj2 + tj3) // 2,
        (tj1 + tj5 + tj6) // 2,
        (tj4 + tj2 + tj6) // 2,
        (tj4 + tj5 + tj3) // 2,
    )
    t_max = min(
        (tj1 + tj2 + tj4 + tj5) // 2,
        (tj2 + tj3 + tj5 + tj6) // 2,
        (tj3 + tj1 + tj6 + tj4) // 2,
    )
    total = Fraction(0)
    for t in range(t_min, t_max + 1):
        denom = (
            _factorial(t - (tj1 + tj2 + tj3) // 2)
            * _factorial(t - (tj1 + tj5 + tj6) // 2)
            * _factorial(t - (tj4 + tj2 + tj6) // 2)
            * _factorial(t - (tj4 + tj5 + tj3) // 2)
            * _factorial((tj1 + tj2 + tj4 + tj5) // 2 - t)
            * _factorial((tj2 + tj3 + tj5 + tj6) // 2 - t)
            * _factorial((tj3 + tj1 + tj6 + tj4) // 2 - t)
        )
        term = Fraction(_factorial(t + 1), denom)
        total += -term if t % 2 else term

    if total == 0:
        return 0.0

    deltas = (
        _delta(tj1, tj2, tj3)
        * _delta(tj1, tj5, tj6)
        * _delta(tj4, tj2, tj6)
        * _delta(tj4, tj5, tj3)
    )
    # value = sqrt(deltas) * total, computed as sign * sqrt(deltas * total^2)
    # so only one float conversion and one sqrt are involved.
    magnitude = math.sqrt(float(deltas * total * total))
    return -magnitude if total < 0 else magnitude


def wigner6j(
    j1: HalfInt, j2: HalfInt, j3: HalfInt, j4: HalfInt, j5: HalfInt, j6: HalfInt
) -> float:
    """Wigner 6j symbol {j1 j2 j3; j4 j5 j6}; 0 for broken triangles."""
    return _wigner6j_twice(j1.twice, j2.twice, j3.twice, j4.twice, j5.twice, j6.twice)


def tensor_prefactor_C(j_v: HalfInt) -> float:
    """Prefactor of the tensor polarizability sum for a state of spin j_v.

    C = sqrt(5 j (2j-1) / (6 (j+1) (2j+1) (2j+3))); zero when j < 1, where
    the tensor part vanishes identically.
    """
    if j_v.twice < 2:
        return 0.0
    j = Fraction(j_v.twice, 2)
    ratio = Fraction(5) * j * (2 * j - 1) / (6 * (j + 1) * (2 * j + 1) * (2 * j + 3))
    return math.sqrt(float(ratio))
