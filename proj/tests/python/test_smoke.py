"""Smoke test for the python bindings; plain asserts, no framework."""

import math

import bryant


def close(x, y, tol):
    return abs(x - y) < tol


# floating periods near the crossing
f1, f2 = bryant.periods(1.78, 0.05, n=500)
assert close(f1, 35.066, 0.01), f1
assert close(f2, 34.816, 0.01), f2

# interval periods must enclose the floating values at the same resolution
enc1, enc2 = bryant.period_enclosures(1.78, 0.05, n=500)
assert enc1[0] <= f1 <= enc1[1], (enc1, f1)
assert enc2[0] <= f2 <= enc2[1], (enc2, f2)
assert enc1[1] - enc1[0] < 1e-3
assert enc2[1] - enc2[0] < 1e-3

# frozen oracle values for the error machinery
assert close(bryant.zeta(1.0, 1, 1.0, 1.0, 1.0, 1.0), 7.650414737654321, 1e-12)
assert bryant.global_rk4_bound(0.0505, 500, 4.6, 48.0, 850.0, 25000.0) < 1e-5
assert bryant.c_derivative_bound(4.6, 0.0505) < 20.0
assert close(bryant.solve_gauge_beta(3.0), 0.41330423812239926, 1e-10)

# meshes
positions, quads = bryant.sample_mesh("horosphere", nu=8, nv=8)
assert len(positions) == 64, len(positions)
assert len(quads) == 49, len(quads)
assert all(math.hypot(*p) < 1.0 for p in positions)
assert len(bryant.preset_names()) == 6

# library errors surface as BryantError
try:
    bryant.periods(0.5, 0.05, n=100)
except bryant.BryantError:
    pass
else:
    raise AssertionError("expected BryantError for a <= 1")

print("python smoke ok")
