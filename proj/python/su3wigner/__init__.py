"""SU(3) irreps in the Gel'fand-Tsetlin basis: Weyl matrices and Wigner functions."""

from ._core import (
    ValidationError,
    __version__,
    basis,
    clebsch_gordan,
    compose,
    dfun,
    dimension,
    factorize,
    haar_random_su3,
    so3,
    su2_subgroup,
    verify,
    weyl,
    wigner_6j,
    wigner_D,
    wigner_small_d,
)

__all__ = [
    "ValidationError",
    "basis",
    "clebsch_gordan",
    "compose",
    "dfun",
    "dimension",
    "factorize",
    "haar_random_su3",
    "so3",
    "su2_subgroup",
    "verify",
    "weyl",
    "wigner_6j",
    "wigner_D",
    "wigner_small_d",
]
