"""Dirichlet characters, Gauss sums and the average zeros of Dirichlet L-functions."""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

from xpzeros.errors import NoSolutionError, UnsupportedCharacterError
from xpzeros.params import ModelParams, normalize_angle

TWO_PI = 2.0 * math.pi
MAX_MODULUS = 10000
_SNAP = 1e-14


@dataclass(frozen=True)
class DirichletCharacter:
    """Value table of a character mod q; ``values[n]`` is chi(n mod q).

    ``label`` holds the exponents j_i with chi(g_i) = exp(2 pi i j_i / ord(g_i))
    for the stored generators g_i of the unit group.
    """

    modulus: int
    values: tuple[complex, ...]
    label: tuple[int, ...]

    def __call__(self, n: int) -> complex:
        return self.values[n % self.modulus]

    @property
    def is_principal(self) -> bool:
        return all(j == 0 for j in self.label)


@dataclass(frozen=True)
class CharacterInvariants:
    a_chi: int
    tau_chi: complex
    epsilon_chi: complex
    primitive: bool


def factorize(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _primitive_root_prime_power(p: int, k: int) -> int:
    order = (p - 1) * p ** (k - 1)
    prime_factors = [f for f, _ in factorize(order)]
    mod = p**k
    for g in range(2, mod):
        if math.gcd(g, p) == 1 and all(pow(g, order // f, mod) != 1 for f in prime_factors):
            return g
    raise AssertionError("no primitive root")


def _cyclic_components(q: int):
    """(modulus of component, generator mod that modulus, order) for each cyclic factor."""
    comps = []
    for p, k in factorize(q):
        mod = p**k
        if p == 2:
            if k == 2:
                comps.append((mod, 3, 2))
            elif k >= 3:
                comps.append((mod, mod - 1, 2))
                comps.append((mod, 5, 2 ** (k - 2)))
        else:
            comps.append((mod, _primitive_root_prime_power(p, k), (p - 1) * p ** (k - 1)))
    return comps


def _discrete_logs(q: int, comps):
    """For each unit n mod q, the exponents e_i with n = prod g_i^{e_i} (component-wise)."""
    logs = {}
    tables = []
    for mod, g, order in comps:
        table = {}
        if mod % 8 == 0:
            # (Z/2^k)^* = <-1> x <5>; n = (-1)^e0 5^e1
            continue
        x = 1
        for e in range(order):
            table[x] = e
            x = x * g % mod
        tables.append((mod, table))

    two_power = [c for c in comps if c[0] % 8 == 0]
    five_table = {}
    if two_power:
        mod = two_power[0][0]
        x = 1
        for e in range(mod // 4):
            five_table[x] = e
            x = x * 5 % mod

    for n in range(q):
        if math.gcd(n, q) != 1:
            continue
        exps = []
        for mod, g, order in comps:
            r = n % mod
            if mod % 8 == 0:
                if g == mod - 1:
                    exps.append(0 if r % 4 == 1 else 1)
                else:
                    exps.append(five_table[r if r % 4 == 1 else (-r) % mod])
            else:
                exps.append(dict(tables)[mod][r])
        logs[n] = tuple(exps)
    return logs


def _root_of_unity(k: int, m: int) -> complex:
    z = cmath.exp(2j * math.pi * k / m)
    re = 0.0 if abs(z.real) < _SNAP else z.real
    im = 0.0 if abs(z.imag) < _SNAP else z.imag
    return complex(re, im)


@lru_cache(maxsize=64)
def characters(q: int) -> tuple[DirichletCharacter, ...]:
    """All phi(q) characters mod q, principal character first.

    Built from the cyclic decomposition of (Z/q)^*: one cyclic factor per odd
    prime power, and <-1> x <5> for 2^k with k >= 3.
    """
    q = int(q)
    if not 1 <= q <= MAX_MODULUS:
        raise ValueError(f"modulus must be in [1, {MAX_MODULUS}], got {q}")
    if q == 1:
        return (DirichletCharacter(1, (1 + 0j,), ()),)
    comps = _cyclic_components(q)
    logs = _discrete_logs(q, comps)
    orders = [order for _, _, order in comps]
    out = []
    for label in itertools.product(*(range(o) for o in orders)):
        values = [0j] * q
        for n, exps in logs.items():
            # chi(n) = prod exp(2 pi i j_i e_i / o_i), reduced over the common exponent
            lcm = math.lcm(*orders)
            k = sum(j * e * (lcm // o) for j, e, o in zip(label, exps, orders)) % lcm
            values[n] = _root_of_unity(k, lcm)
        out.append(DirichletCharacter(q, tuple(values), label))
    return tuple(out)


def is_primitive(chi: DirichletCharacter) -> bool:
    """True when no proper divisor d of q induces chi.

    chi is induced from d exactly when chi(n) = 1 for every unit n = 1 mod d.
    """
    q = chi.modulus
    if q == 1:
        return True
    for d in range(1, q):
        if q % d:
            continue
        if all(abs(chi.values[n] - 1.0) < 1e-9 for n in range(1, q, d) if math.gcd(n, q) == 1):
            return False
    return True


def gauss_sum(chi: DirichletCharacter) -> complex:
    q = chi.modulus
    n = np.arange(1, q + 1)
    terms = np.array([chi(int(k)) for k in n]) * np.exp(2j * np.pi * n / q)
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def character_invariants(chi: DirichletCharacter) -> CharacterInvariants:
    """Parity a, Gauss sum tau, root number epsilon = tau / (i^a sqrt q), primitivity."""
    minus_one = chi(-1)
    a = int(round((1.0 - minus_one.real) / 2.0))
    tau = gauss_sum(chi)
    eps = tau / (1j**a * math.sqrt(chi.modulus))
    return CharacterInvariants(a, tau, eps, is_primitive(chi))


def _real_sign(chi: DirichletCharacter) -> tuple[int, int]:
    inv = character_invariants(chi)
    if not inv.primitive:
        raise UnsupportedCharacterError(f"character {chi.label} mod {chi.modulus} is not primitive")
    if abs(inv.epsilon_chi.imag) > 1e-9:
        raise UnsupportedCharacterError(
            f"epsilon = {inv.epsilon_chi:.6f} is not real; the average-zero rule needs a real sign"
        )
    return inv.a_chi, int(round(inv.epsilon_chi.real))


def l_counting_smooth(chi: DirichletCharacter, t: float) -> float:
    """(t/2pi) log(q t / 2 pi e) - 1/8 + (a + eps - 1)/4 for a primitive character with real eps."""
    a, eps = _real_sign(chi)
    q = chi.modulus
    return t / TWO_PI * math.log(q * t / (TWO_PI * math.e)) - 0.125 + (a + eps - 1) / 4.0


def l_average_zero(chi: DirichletCharacter, n: int) -> float:
    """Solve l_counting_smooth(t) = n + 1/2 on the increasing branch t > 2 pi / q.

    Here n is the raw integer of the rule; for the trivial character
    l_average_zero(chi, n) == riemann_average_zero(n + 1).
    """
    a, eps = _real_sign(chi)
    q = chi.modulus
    lo = TWO_PI / q
    shift = -0.125 + (a + eps - 1) / 4.0

    def g(t):
        return t / TWO_PI * math.log(q * t / (TWO_PI * math.e)) + shift

    target = n + 0.5
    if target <= g(lo):
        raise NoSolutionError(f"n = {n} lies below the increasing branch (minimum {g(lo):.4f})")
    hi = 2.0 * lo
    while g(hi) < target:
        hi *= 2.0
    return brentq(lambda t: g(t) - target, lo, hi, xtol=1e-15, rtol=1e-15)


def params_for_character(chi: DirichletCharacter, hbar: float = 1.0, lx: float = 1.0) -> ModelParams:
    """Model parameters with h = 2 pi hbar / q and theta = (pi/4)(3 - 2a - 2 eps)."""
    a, eps = _real_sign(chi)
    h = TWO_PI * hbar / chi.modulus
    theta = normalize_angle(math.pi / 4 * (3 - 2 * a - 2 * eps))
    return ModelParams(hbar=hbar, lx=lx, lp=h / lx, theta=theta)


def primitive_real_characters(q: int):
    """Primitive characters mod q whose root number is real."""
    out = []
    for chi in characters(q):
        inv = character_invariants(chi)
        if inv.primitive and abs(inv.epsilon_chi.imag) <= 1e-9:
            out.append(chi)
    return out
