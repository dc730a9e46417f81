"""The classical radius, recovered three ways.

For bounded analytic functions on the unit disk, the coefficient-modulus
series sum |a_n| r^n stays below 1 exactly up to r = 1/3.  This script finds
that number by bisection on the defining equation, confirms it against the
closed form, and then exhibits concrete functions that break the bound just
past it.
"""

from bohrad import (
    ExtremalParams,
    WeightFamily,
    analytic_problem,
    analytic_radius,
    closed_form_radius,
    lambda_zero,
    majorant,
    mobius_extremal,
    sharpness_probe,
)

family = WeightFamily.power()

result = analytic_radius(family, p=1.0, gamma=0.0)
closed = closed_form_radius("classical", gamma=0.0)
print("bisection      :", f"{result.value:.15f}  ({result.iterations} iterations)")
print("closed form    :", f"{closed:.15f}")
print("disagreement   :", f"{abs(result.value - closed):.3e}")
print()

print("majorant of the extremal map (a - z)/(1 - a z) near the radius:")
for a in (0.9, 0.99, 0.999):
    stream = mobius_extremal(ExtremalParams(a))
    at_radius = majorant(stream, result.value)
    past = majorant(stream, result.value + 0.01)
    print(f"  a = {a:<6} M(1/3) = {at_radius:.6f}   M(1/3 + 0.01) = {past:.6f}")
print()

problem = analytic_problem(family, 1.0, 0.0, lambda_zero)
witness = sharpness_probe(result.value, problem, eps=0.01)
print("sharpness probe at r = radius + 0.01:")
print(f"  witness a = {witness.a}, functional = {witness.functional_value:.6f} > {witness.threshold:.1f}")
print()

print("the same radius grows with the domain parameter gamma:")
for gamma in (0.0, 0.2, 0.4, 0.6, 0.8):
    value = analytic_radius(family, 1.0, gamma).value
    print(f"  gamma = {gamma:<4} radius = {value:.12f}   (1+g)/(3+g) = {(1+gamma)/(3+gamma):.12f}")
