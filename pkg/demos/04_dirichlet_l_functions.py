"""
Dirichlet L-functions
=====================

A primitive character chi mod q with real root number fixes h = 2 pi hbar/q
and an angle theta.  The levels of the model then follow the average
zeros of L(s, chi).
"""

from xpzeros import spectrum
from xpzeros.numbertheory import dirichlet

for q in (1, 3, 4, 5, 8):
    for chi in dirichlet.primitive_real_characters(q):
        inv = dirichlet.character_invariants(chi)
        p = dirichlet.params_for_character(chi)
        print(f"q = {q}  a = {inv.a_chi}  eps = {inv.epsilon_chi.real:+.0f}  h = {p.h:.6f}  theta = {p.theta:.6f}")

# q = 4: levels against average zeros
chi = dirichlet.primitive_real_characters(4)[0]
p = dirichlet.params_for_character(chi)
energies = spectrum.solve_spectrum(p, 0.5, 30.0).energies
averages = [dirichlet.l_average_zero(chi, n) for n in range(12)]
for (avg, delta), E in zip(spectrum.pair_with_levels(energies, averages), energies):
    print(f"E = {E:10.6f}   average zero {avg:10.6f}   difference {delta:+.5f}")

# GAUSS SUMS
for q in (7, 12, 15):
    for chi in dirichlet.characters(q):
        if dirichlet.is_primitive(chi):
            print(q, chi.label, abs(dirichlet.gauss_sum(chi)) ** 2)
