import json

from ._varbound import (
    central_numerical_radius,
    commutator,
    commutator_bounds,
    enclosing_circle,
    max_variance,
    norm,
    numerical_radius,
    radius,
    search,
    variance,
    verify_json,
)


def verify(suite="all", trials=20, dim_max=6, seed=0, tol=1e-9):
    return json.loads(verify_json(suite, trials, dim_max, seed, tol))


__all__ = [
    "central_numerical_radius",
    "commutator",
    "commutator_bounds",
    "enclosing_circle",
    "max_variance",
    "norm",
    "numerical_radius",
    "radius",
    "search",
    "variance",
    "verify",
]
