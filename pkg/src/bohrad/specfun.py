"""Scalar special functions: rising factorial, Gauss hypergeometric series,
Lerch transcendent, polylogarithm.

Everything is evaluated by direct series summation inside the open unit
interval; no analytic continuation is attempted.  Terms are produced with the
ratio recurrence (never through explicit factorials, which would overflow),
and a series is accepted once three consecutive terms fall below the working
precision of the partial sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ParameterError, TruncationError

_EPS = 2.0 ** -53
_MAX_TERMS = 1_000_000
_CONSECUTIVE_SMALL = 3


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and float(x).is_integer()


def pochhammer(x: float, n: int) -> float:
    """Rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1."""
    if n < 0 or not float(n).is_integer():
        raise ParameterError(f"pochhammer order must be a nonnegative integer, got {n!r}")
    out = 1.0
    for i in range(int(n)):
        out *= x + i
    return out


@dataclass(frozen=True)
class HypergeomParams:
    """Validated parameter triple (a, b, c) of the Gauss series.

    c may be a nonpositive integer -m only if a or b is a nonpositive
    integer -j with j <= m, in which case the series terminates before the
    zero of (c)_n is reached.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        if _is_nonpositive_integer(self.c):
            m = -int(self.c)
            ok = False
            for upper in (self.a, self.b):
                if _is_nonpositive_integer(upper) and -int(upper) <= m:
                    ok = True
            if not ok:
                raise ParameterError(
                    f"c={self.c} is a nonpositive integer and neither numerator "
                    "parameter terminates the series first"
                )

    def term_ratio(self, n: int) -> float:
        """gamma_{n+1}/gamma_n = (a+n)(b+n) / ((c+n)(n+1))."""
        for upper in (self.a, self.b):
            # once a numerator parameter has hit zero the coefficient stays 0,
            # including at the later index where c+n would vanish
            if _is_nonpositive_integer(upper) and -int(upper) <= n:
                return 0.0
        return (self.a + n) * (self.b + n) / ((self.c + n) * (n + 1.0))


def gauss_2f1(a: float, b: float, c: float, z: float) -> float:
    """Gauss hypergeometric series 2F1(a, b; c; z) for real z in (-1, 1).

    Summed term by term via the ratio recurrence.  Polynomial cases (a or b
    a nonpositive integer) terminate exactly.
    """
    params = HypergeomParams(a, b, c)
    if not -1.0 < z < 1.0:
        raise DomainError(f"gauss_2f1 requires |z| < 1, got z={z}")
    term = 1.0
    total = 1.0
    scale = 1.0
    small = 0
    for n in range(_MAX_TERMS):
        ratio = params.term_ratio(n)
        if ratio == 0.0:
            return total
        term *= ratio * z
        total += term
        scale = max(scale, abs(total))
        if abs(term) <= _EPS * scale:
            small += 1
            if small >= _CONSECUTIVE_SMALL:
                return total
        else:
            small = 0
    raise TruncationError("gauss_2f1 did not converge within the term cap", partial=total)


def lerch_phi(z: float, s: float, a: float) -> float:
    """Lerch transcendent  Phi(z, s, a) = sum_{n>=0} z^n / (a+n)^s  for |z| < 1.

    a must not be a nonpositive integer (a term would divide by zero); for
    negative non-integer a the exponent s must be an integer so every power
    stays real.
    """
    if not -1.0 < z < 1.0:
        raise DomainError(f"lerch_phi requires |z| < 1, got z={z}")
    if _is_nonpositive_integer(a):
        raise ParameterError(f"lerch_phi requires a not in {{0, -1, -2, ...}}, got a={a}")
    if a < 0 and not float(s).is_integer():
        raise ParameterError(
            f"lerch_phi with a={a} < 0 needs integer s to stay real, got s={s}"
        )
    total = 0.0
    zpow = 1.0
    scale = 0.0
    small = 0
    for n in range(_MAX_TERMS):
        term = zpow * math.pow(a + n, -s)
        total += term
        scale = max(scale, abs(total), abs(term))
        if abs(term) <= _EPS * scale and n > 0:
            small += 1
            if small >= _CONSECUTIVE_SMALL:
                return total
        else:
            small = 0
        zpow *= z
        if zpow == 0.0:
            return total
    raise TruncationError("lerch_phi did not converge within the term cap", partial=total)


def polylog(s: float, z: float) -> float:
    """Polylogarithm Li_s(z) = sum_{k>=1} z^k / k^s = z * Phi(z, s, 1)."""
    if not -1.0 < z < 1.0:
        raise DomainError(f"polylog requires |z| < 1, got z={z}")
    return z * lerch_phi(z, s, 1.0)
