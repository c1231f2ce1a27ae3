"""
Polya's fake zeta function
==========================

Xi*(t) = 8 pi^2 Re K_{9/4 - it/2}(2 pi).  Every zero is real; above
t ~ 20 they sit within about one spacing of the Riemann zeros.
"""

from xpzeros.numbertheory import polya, riemann

zeros = polya.polya_zeros(60.0)
true = riemann.load_zero_fixture()
print(len(zeros), "zeros on (0, 60], predicted", polya.predicted_zero_count(60.0))
for k, z in enumerate(zeros):
    nearest = min(true, key=lambda t: abs(t - z))
    print(f"{k:3d}  {z:12.6f}   nearest Riemann zero {nearest:12.6f}")

# SIZE OF THE LARGE-t FORMULA
# the zeros agree, the amplitude does not: compare where the cosine is +-1
for t in (31.7187913947, 42.3640657835, 54.6755896897):
    print(f"t = {t:.3f}   Xi*/asymptotic = {polya.polya_fake_zeta(t) / polya.polya_asymptotic(t):.4f}")
