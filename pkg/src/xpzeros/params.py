from __future__ import annotations

import math
from dataclasses import dataclass

from xpzeros.errors import DomainError

TWO_PI = 2.0 * math.pi


def normalize_angle(theta: float) -> float:
    """Map an angle into [0, 2 pi)."""
    theta = math.fmod(float(theta), TWO_PI)
    if theta < 0.0:
        theta += TWO_PI
    if theta >= TWO_PI:
        theta = 0.0
    return theta


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of H = x (p + lp^2/p) on x >= lx.

    ``theta`` labels the self-adjoint extension and is stored in [0, 2 pi).
    The action ``h = lx * lp`` is always derived, never stored.  The defaults
    are the Riemann configuration: hbar = lx = 1, h = 2 pi hbar, theta = pi/4.
    """

    hbar: float = 1.0
    lx: float = 1.0
    lp: float = TWO_PI
    theta: float = math.pi / 4

    def __post_init__(self):
        for name in ("hbar", "lx", "lp"):
            value = float(getattr(self, name))
            if not (math.isfinite(value) and value > 0.0):
                raise DomainError(f"{name} must be positive and finite, got {value!r}")
            object.__setattr__(self, name, value)
        if not math.isfinite(self.theta):
            raise DomainError(f"theta must be finite, got {self.theta!r}")
        object.__setattr__(self, "theta", normalize_angle(self.theta))

    @property
    def h(self) -> float:
        return self.lx * self.lp

    @classmethod
    def from_action(cls, h: float, hbar: float = 1.0, lx: float = 1.0, theta: float = math.pi / 4):
        """Build parameters from the action h = lx * lp instead of lp."""
        return cls(hbar=hbar, lx=lx, lp=float(h) / float(lx), theta=theta)
