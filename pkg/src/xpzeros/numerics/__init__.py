"""Special functions and numerical kernels."""

from xpzeros.numerics.bessel import bessel_k, bessel_k_array
from xpzeros.numerics.quadrature import adaptive_integrate
from xpzeros.numerics.roots import find_real_roots
from xpzeros.numerics.special import log_gamma, zeta_critical_line
from xpzeros.numerics.types import QuadratureResult, RootList

__all__ = [
    "QuadratureResult",
    "RootList",
    "adaptive_integrate",
    "bessel_k",
    "bessel_k_array",
    "find_real_roots",
    "log_gamma",
    "zeta_critical_line",
]
