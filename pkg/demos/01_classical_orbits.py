"""
Classical orbits of H = x (p + lp^2/p)
======================================

Orbits start at the wall x = lx, run out to the turning point and come
back.  The bounce p -> lp^2/p at the wall closes them.
"""

import math

import numpy as np

from xpzeros import classical
from xpzeros.params import ModelParams

P = ModelParams()  # hbar = lx = 1, h = 2 pi
print("h =", P.h)

# ONE ORBIT
E = 10 * P.h
p0 = classical.momentum_at_wall(E, P)
orbit = classical.integrate_orbit(p0, P)
print("E =", E, "p0 =", p0)
print("measured period", orbit.period, "closed form", math.acosh(E / (2 * P.h)))
print("turning point", orbit.turning_x, "expected", classical.turning_point(E, P))
print("energy drift", orbit.energy_drift)
print("wall momentum after one cycle", orbit.end.p, "= lp^2/p0 =", P.lp**2 / p0)

# THE PERIOD GROWS ONLY LOGARITHMICALLY WITH E
for factor in (2.5, 5, 10, 50, 100):
    E = factor * P.h
    print(f"E/h = {factor:6.1f}  period = {classical.period(E, P):.6f}  log(E/h) = {math.log(factor):.6f}")

# IMAGINARY TIME: t -> t + i pi gives back the same point
t = np.linspace(0.0, 1.0, 5)
a = classical.orbit_closed_form(p0, t, P)
b = classical.orbit_closed_form(p0, t + 1j * math.pi, P)
print("max change of x under t -> t + i pi", np.max(np.abs(a.x - b.x)))

# PHASE-SPACE AREA COUNTS STATES
for factor in (3, 10, 30):
    E = factor * P.h
    area = classical.area_numeric(E, P)
    print(f"E = {E:8.3f}  area/2pi = {area / (2 * math.pi):.10f}  N(E) = {classical.counting_smooth(E, P):.10f}"
          f"  large-E form = {classical.counting_large_energy(E, P):.10f}")
