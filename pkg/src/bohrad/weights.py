"""Weight families phi = {phi_n(r)} for generalized majorant sums.

A weight family is a sequence of nonnegative functions phi_n : [0, 1) -> R
whose series converges on [0, r_max).  The classical majorant uses
phi_n(r) = r^n; the other built-ins thin or reweight the powers:

    power              phi_n = r^n
    even               phi_0 = 1, phi_{2n} = r^{2n}, odd weights 0
    odd_with_unit_head phi_0 = 1, phi_{2n-1} = r^{2n-1}, positive even weights 0
    shifted_linear(N)  phi_0 = 1, phi_n = (n+1) r^n for n >= N, 0 between
    power_alpha(a, N)  phi_0 = 1, phi_n = n^a r^n for n >= N, 0 between
    hypergeometric     phi_n = |gamma_n| r^n with gamma_n the Gauss series
                       coefficients (a)_n (b)_n / ((c)_n n!)

Tail sums Phi_N(r) = sum_{n >= N} phi_n(r) use closed forms wherever one
exists; only user-supplied custom rules fall back to certified summation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import (
    DivergenceError,
    DomainError,
    HypothesisError,
    ParameterError,
    TruncationError,
)
from .specfun import HypergeomParams, lerch_phi

_MAX_TERMS = 1_000_000
_SIGN_CHECK_TERMS = 64


@dataclass(frozen=True)
class TailSum:
    """Value of a tail sum plus how it was obtained.

    truncation_order is the number of series terms actually summed (0 when a
    closed form was used); bound_on_remainder bounds what was left out.
    """

    value: float
    truncation_order: int
    bound_on_remainder: float


class WeightFamily:
    """A named weight sequence with optional closed-form tails.

    Use the classmethod constructors; the raw __init__ is the escape hatch
    for custom rules (mirrored by :meth:`custom`).
    """

    def __init__(
        self,
        name: str,
        rule: Callable[[int, float], float],
        *,
        r_max: float = 1.0,
        tail: Callable[[int, float], float] | None = None,
        params: dict | None = None,
    ):
        if not 0.0 < r_max <= 1.0:
            raise ParameterError(f"r_max must lie in (0, 1], got {r_max}")
        self.name = name
        self.r_max = float(r_max)
        self.params = dict(params or {})
        self._rule = rule
        self._tail = tail  # closed form (N, r) -> Phi_N(r), or None

    def __repr__(self):  # pragma: no cover - debugging aid
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"WeightFamily({self.name}{', ' if inner else ''}{inner})"

    # --- constructors -------------------------------------------------

    @classmethod
    def power(cls) -> "WeightFamily":
        """phi_n(r) = r^n, the classical majorant weights."""
        return cls(
            "power",
            lambda n, r: r**n,
            tail=lambda N, r: r**N / (1.0 - r),
        )

    @classmethod
    def even(cls) -> "WeightFamily":
        """phi_0 = 1 and phi_{2n} = r^{2n}; all odd weights vanish."""

        def rule(n, r):
            return r**n if n % 2 == 0 else 0.0

        def tail(N, r):
            M = N if N % 2 == 0 else N + 1
            return r**M / (1.0 - r * r)

        return cls("even", rule, tail=tail)

    @classmethod
    def odd_with_unit_head(cls) -> "WeightFamily":
        """phi_0 = 1 and phi_{2n-1} = r^{2n-1}; positive even weights vanish."""

        def rule(n, r):
            if n == 0:
                return 1.0
            return r**n if n % 2 == 1 else 0.0

        def tail(N, r):
            if N == 0:
                return 1.0 + r / (1.0 - r * r)
            M = N if N % 2 == 1 else N + 1
            return r**M / (1.0 - r * r)

        return cls("odd_with_unit_head", rule, tail=tail)

    @classmethod
    def shifted_linear(cls, start: int = 1) -> "WeightFamily":
        """phi_0 = 1 and phi_n = (n+1) r^n for n >= start, zero in between."""
        if start < 1 or not float(start).is_integer():
            raise ParameterError(f"shifted_linear start must be an integer >= 1, got {start}")
        start = int(start)

        def rule(n, r):
            if n == 0:
                return 1.0
            return (n + 1.0) * r**n if n >= start else 0.0

        def tail(N, r):
            M = max(N, start)
            # sum_{n>=M} (n+1) r^n = r^M (M + 1 - M r) / (1-r)^2
            core = r**M * (M + 1.0 - M * r) / (1.0 - r) ** 2
            return core + 1.0 if N == 0 else core

        return cls("shifted_linear", rule, tail=tail, params={"start": start})

    @classmethod
    def power_alpha(cls, alpha: float, start: int = 1) -> "WeightFamily":
        """phi_0 = 1 and phi_n = n^alpha r^n for n >= start, zero in between."""
        if start < 1 or not float(start).is_integer():
            raise ParameterError(f"power_alpha start must be an integer >= 1, got {start}")
        start = int(start)
        alpha = float(alpha)

        def rule(n, r):
            if n == 0:
                return 1.0
            return n**alpha * r**n if n >= start else 0.0

        def tail(N, r):
            M = max(N, start)
            # sum_{n>=M} n^alpha r^n = r^M * Phi(r, -alpha, M)  (Lerch form)
            core = 0.0 if r == 0.0 else r**M * lerch_phi(r, -alpha, float(M))
            return core + 1.0 if N == 0 else core

        return cls("power_alpha", rule, tail=tail, params={"alpha": alpha, "start": start})

    @classmethod
    def hypergeometric(cls, a: float, b: float, c: float) -> "WeightFamily":
        """phi_n(r) = |gamma_n| r^n with gamma_n = (a)_n (b)_n / ((c)_n n!).

        The tail from N = 1 equals |2F1(a,b;c;r) - 1| provided the gamma_n
        (n >= 1) share one sign; the constructor checks the first 64
        coefficients and raises HypothesisError on a mix.
        """
        params = HypergeomParams(a, b, c)
        coeffs = [1.0]  # signed gamma_n, grown on demand

        def coeff(n: int) -> float:
            while len(coeffs) <= n:
                m = len(coeffs) - 1
                coeffs.append(coeffs[-1] * params.term_ratio(m))
            return coeffs[n]

        sign = 0
        for n in range(1, _SIGN_CHECK_TERMS + 1):
            g = coeff(n)
            if g == 0.0:
                continue
            s = 1 if g > 0 else -1
            if sign == 0:
                sign = s
            elif s != sign:
                raise HypothesisError(
                    f"hypergeometric coefficients mix signs (a={a}, b={b}, c={c}); "
                    "the tail sum would not equal |F - 1|"
                )

        def rule(n, r):
            return abs(coeff(n)) * r**n

        fam = cls(
            "hypergeometric",
            rule,
            tail=None,
            params={"a": a, "b": b, "c": c},
        )
        fam.coefficient_sign = sign
        fam._hyp = params
        fam._hyp_coeff = coeff
        return fam

    @classmethod
    def custom(
        cls,
        rule: Callable[[int, float], float],
        r_max: float,
        name: str = "custom",
        tail: Callable[[int, float], float] | None = None,
    ) -> "WeightFamily":
        """Wrap a user rule phi(n, r).  r_max declares where the series converges."""
        return cls(name, rule, r_max=r_max, tail=tail)

    # --- evaluation ---------------------------------------------------

    def _hypergeometric_tail(self, N, r, tol):
        if r == 0.0:
            return abs(self._hyp_coeff(N)) if N == 0 else 0.0
        total = 0.0
        rpow = r**N
        small = 0
        n = N
        while n - N < _MAX_TERMS:
            t = abs(self._hyp_coeff(n)) * rpow
            total += t
            # coefficient ratios tend to 1, so terms eventually decay like r^n
            q = abs(self._hyp.term_ratio(n)) * r
            q = min(max(q, r), 1.0 - 1e-12)
            if t * q / (1.0 - q) < 0.5 * tol:
                small += 1
                if small >= 2:
                    return total
            else:
                small = 0
            rpow *= r
            n += 1
        raise TruncationError("hypergeometric tail did not converge", partial=total)

    def _series_tail(self, N, r, tol):
        # Fallback for custom rules: geometric certificate from observed ratios.
        q_floor = r / self.r_max if self.r_max < 1.0 else r
        total = 0.0
        prev = 0.0
        qhat = q_floor
        small = 0
        for i in range(_MAX_TERMS):
            n = N + i
            t = self._rule(n, r)
            if t < 0.0:
                raise ParameterError(f"weight rule returned a negative value at n={n}")
            total += t
            if prev > 0.0 and t > 0.0:
                qhat = max(q_floor, min(t / prev, 1.0 - 1e-12))
            if t > 0.0:
                prev = t
            bound = 4.0 * t * qhat / (1.0 - qhat)
            if t == 0.0 or bound < tol:
                small += 1
                if small >= 3 and i >= 8:
                    return total
            else:
                small = 0
        raise TruncationError("weight tail did not converge within the term cap", partial=total)


def weight_at(family: WeightFamily, n: int, r: float) -> float:
    """Evaluate phi_n(r).  Weights are defined for r in [0, 1)."""
    if n < 0 or not float(n).is_integer():
        raise ParameterError(f"weight index must be a nonnegative integer, got {n!r}")
    if not 0.0 <= r < 1.0:
        raise DomainError(f"weights are defined for r in [0, 1), got r={r}")
    value = family._rule(int(n), r)
    if value < 0.0:
        raise ParameterError(f"weight rule returned a negative value at n={n}")
    return float(value)


def tail_value(family: WeightFamily, N: int, r: float, tol: float = 1e-12) -> float:
    """Tail sum Phi_N(r) as a bare float (hot path; see tail_sum for metadata)."""
    if N < 0 or not float(N).is_integer():
        raise ParameterError(f"tail start must be a nonnegative integer, got {N!r}")
    if not 0.0 <= r < 1.0:
        raise DomainError(f"tail sums are defined for r in [0, 1), got r={r}")
    if r >= family.r_max:
        raise DivergenceError(
            f"r={r} is at or beyond the declared convergence radius {family.r_max}"
        )
    N = int(N)
    if family._tail is not None:
        return float(family._tail(N, r))
    if family.name == "hypergeometric":
        return float(family._hypergeometric_tail(N, r, tol))
    return float(family._series_tail(N, r, tol))


def tail_sum(family: WeightFamily, N: int, r: float, tol: float = 1e-12) -> TailSum:
    """Tail sum Phi_N(r) = sum_{n>=N} phi_n(r) with truncation metadata."""
    value = tail_value(family, N, r, tol)
    if family._tail is not None:
        return TailSum(value=value, truncation_order=0, bound_on_remainder=0.0)
    return TailSum(value=value, truncation_order=int(N), bound_on_remainder=tol)


def condition_gap(family: WeightFamily, p: float, gamma: float, scale: float, r: float) -> float:
    """Gap scale * Phi_1(r) - (1+gamma) * phi_0(r) of the radius equation.

    Negative means the series condition still holds at r; the generalized
    radius is the smallest positive zero.  scale folds the exponent and any
    quasiconformal factor (2/p analytic, 2(1+k)/p harmonic).
    """
    if not 0.0 < p <= 2.0:
        raise ParameterError(f"exponent p must lie in (0, 2], got {p}")
    if not 0.0 <= gamma < 1.0:
        raise ParameterError(f"domain parameter gamma must lie in [0, 1), got {gamma}")
    if scale <= 0.0:
        raise ParameterError(f"scale must be positive, got {scale}")
    return scale * tail_value(family, 1, r, 1e-14) - (1.0 + gamma) * weight_at(family, 0, r)
