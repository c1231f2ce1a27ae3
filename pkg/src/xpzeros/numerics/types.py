from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple


class QuadratureResult(NamedTuple):
    value: complex
    error_estimate: float
    evaluations: int


@dataclass(frozen=True)
class RootList:
    """Sorted real roots located by sign scanning.

    ``close_pair`` is set when two roots lie within two scan steps of each
    other, a hint that a pair of roots may have slipped between grid points
    elsewhere.
    """

    roots: tuple[float, ...]
    bracket_width: float
    tolerance: float
    close_pair: bool = False
    evaluations: int = field(default=0, compare=False)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, i):
        return self.roots[i]
