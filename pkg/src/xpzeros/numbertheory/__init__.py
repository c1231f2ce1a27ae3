"""Reference objects from analytic number theory."""

from xpzeros.numbertheory.dirichlet import (
    CharacterInvariants,
    DirichletCharacter,
    character_invariants,
    characters,
    is_primitive,
    l_average_zero,
    params_for_character,
)
from xpzeros.numbertheory.polya import polya_asymptotic, polya_fake_zeta, polya_zeros
from xpzeros.numbertheory.riemann import (
    load_zero_fixture,
    riemann_average_zero,
    riemann_counting_smooth,
    riemann_xi,
)

__all__ = [
    "CharacterInvariants",
    "DirichletCharacter",
    "character_invariants",
    "characters",
    "is_primitive",
    "l_average_zero",
    "load_zero_fixture",
    "params_for_character",
    "polya_asymptotic",
    "polya_fake_zeta",
    "polya_zeros",
    "riemann_average_zero",
    "riemann_counting_smooth",
    "riemann_xi",
]
