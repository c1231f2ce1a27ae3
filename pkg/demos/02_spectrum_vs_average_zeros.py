"""
Quantum levels against the smooth Riemann zeros
===============================================

The eigenvalues are the zeros of a real Bessel determinant.  With h = 2 pi
hbar and theta = pi/4 the smooth level formula coincides with the smooth
Riemann zero count, so the levels can be set next to the average zeros.
"""

from xpzeros import spectrum
from xpzeros.numbertheory import riemann
from xpzeros.params import ModelParams

P = ModelParams()

res = spectrum.solve_spectrum(P, 5.0, 60.0)
print(len(res), "levels in [5, 60], smooth count predicts", res.predicted_count)

levels = [spectrum.average_level(n, P) for n in range(16)]
print("first average level", levels[0], "first average Riemann zero", riemann.riemann_average_zero(0))

print("   E_n          nearest level   difference")
for (level, delta), E in zip(spectrum.pair_with_levels(res.energies, levels), res.energies):
    print(f"{E:12.6f}   {level:12.6f}   {delta:+.4f}")

# the lowest level sits well above the first average zero 14.52
print("determinant at 14.52:", spectrum.spectral_determinant(14.52, P))

# negative energies behave as theta -> -theta, not as a mirror image
neg = spectrum.solve_spectrum(P, -60.0, -5.0).energies[::-1]
for e_pos, e_neg in zip(res.energies[:5], neg[:5]):
    print(f"E+ = {e_pos:9.4f}   |E-| = {-e_neg:9.4f}")

# AT THETA = PI THERE IS A ZERO-ENERGY STATE
zero = spectrum.solve_spectrum(ModelParams(theta=3.141592653589793), -25.0, 25.0)
print("theta = pi:", zero.energies)

# EIGENFUNCTION CHECK
E0 = res.energies[0]
psi = spectrum.eigenfunction_grid(E0, P)
print("operator residual", spectrum.operator_residual(psi, E0, P))
print("boundary residual", spectrum.relative_boundary_residual(psi, P))
