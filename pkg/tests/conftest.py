"""Shared brute-force oracles.

Every helper here recomputes values by direct summation or elementary
arithmetic, independently of the library's closed forms and stopping
rules, so the tests cross-validate rather than echo the implementation.
"""

from __future__ import annotations

import pytest

import bohrad


def brute_tail(rule, N, r, terms=6000):
    """Direct partial sum of a weight rule from index N."""
    return sum(rule(n, r) for n in range(N, N + terms))


def brute_weighted_sum(moduli, rule, r):
    """Sum of |a_n| phi_n(r) over a finite coefficient list, n >= 1."""
    return sum(m * rule(n, r) for n, m in enumerate(moduli) if n >= 1)


def brute_a_term(moduli, rule, r, terms=400, tail_terms=4000):
    """Direct double summation of the refinement term."""
    a0 = moduli[0]
    total = 0.0
    for n in range(1, min(len(moduli), terms)):
        an = moduli[n]
        tail = sum(rule(m, r) for m in range(2 * n + 1, 2 * n + 1 + tail_terms))
        total += an ** (2 * n) * (rule(2 * n, r) / (1.0 + a0) + tail)
    return total


def mobius_moduli(a, gamma, order):
    """Coefficient moduli of (a-g-(1-g)z)/(1-ag-a(1-g)z), elementary route."""
    head = abs(a - gamma) / (1.0 - a * gamma)
    lead = (1.0 - a * a) / (a * (1.0 - a * gamma))
    q = a * (1.0 - gamma) / (1.0 - a * gamma)
    out = [head]
    power = 1.0
    for _ in range(order):
        power *= q
        out.append(lead * power)
    return out


@pytest.fixture
def power_family():
    return bohrad.WeightFamily.power()
