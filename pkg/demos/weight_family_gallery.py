"""Radius catalog across weight families.

Replacing the plain powers r^n with other nonnegative weights changes the
radius in closed form.  Each row pairs the exact formula with the generic
bisection solver to show they agree to solver tolerance.
"""

from bohrad import WeightFamily, analytic_radius, catalog_solver, closed_form_radius

ROWS = [
    ("power", "r^n", {"p": 1.0, "gamma": 0.0}),
    ("power", "r^n", {"p": 2.0, "gamma": 0.0}),
    ("even", "even powers only", {"p": 1.0, "gamma": 0.0}),
    ("odd", "odd powers, unit head", {"p": 1.0, "gamma": 0.0}),
    ("linear_shift", "(n+1) r^n", {"p": 1.0, "gamma": 0.0}),
    ("weighted_n", "n r^n", {"p": 1.0, "gamma": 0.0}),
    ("binomial", "binomial series weights", {"p": 1.0, "gamma": 0.0, "y": 2.0}),
]

print(f"{'case':<14}{'weights':<26}{'params':<24}{'closed form':<18}{'bisection':<18}delta")
for case, label, params in ROWS:
    closed = closed_form_radius(case, **params)
    solved = catalog_solver(case, **params)
    ptext = ", ".join(f"{k}={v}" for k, v in params.items())
    print(f"{case:<14}{label:<26}{ptext:<24}{closed:<18.12f}{solved.value:<18.12f}{abs(closed - solved.value):.1e}")

print()
print("hypergeometric weights |c_n| r^n from a Gauss series (a, b; c):")
for a, b, c in ((1.0, 1.0, 1.0), (2.0, 1.0, 1.0), (0.5, 1.5, 2.5), (-0.5, 1.0, 1.0)):
    fam = WeightFamily.hypergeometric(a, b, c)
    value = analytic_radius(fam, 1.0, 0.0).value
    print(f"  (a, b, c) = ({a:>4}, {b}, {c})   radius = {value:.12f}")

print()
print("masking low indices delays the sum and enlarges the radius:")
for start in (1, 2, 3, 5):
    fam = WeightFamily.shifted_linear(start)
    value = analytic_radius(fam, 1.0, 0.0).value
    print(f"  (n+1) r^n from n = {start}:  radius = {value:.12f}")
