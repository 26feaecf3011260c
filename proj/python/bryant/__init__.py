"""Rigorous periods, certification and meshes for catenoid cousins."""

import json

from ._core import (
    BryantError,
    c_derivative_bound,
    certify_json,
    global_rk4_bound,
    period_enclosures,
    periods,
    preset_names,
    sample_mesh,
    solve_gauge_beta,
    zeta,
)


def certify(a=1.78, c1=0.0495, c2=0.0505, n=4000, subintervals=50):
    """Run the full certification and return the certificate as a dict."""
    return json.loads(certify_json(a=a, c1=c1, c2=c2, n=n, subintervals=subintervals))


__all__ = [
    "BryantError",
    "c_derivative_bound",
    "certify",
    "certify_json",
    "global_rk4_bound",
    "period_enclosures",
    "periods",
    "preset_names",
    "sample_mesh",
    "solve_gauge_beta",
    "zeta",
]
