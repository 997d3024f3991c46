"""
环面 T^k = S¹ × ⋯ × S¹
"""

import itertools
from dataclasses import dataclass
from typing import Tuple

from algebra import CoefficientRing, Generator, GradedRing

from .base import Manifold, register_manifold


def _label(subset: Tuple[int, ...]) -> str:
    return "".join(f"t{i}" for i in subset)


def _inversions(sequence: Tuple[int, ...]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(sequence)), 2) if sequence[i] > sequence[j])


@register_manifold
@dataclass(frozen=True)
class Torus(Manifold):
    """环面，上同调为 k 个 1 次生成元上的外代数"""

    keyword = "T"
    description = "torus T^k"
    signature = "T(k), k >= 1"

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"torus needs k >= 1, got {self.k}")

    @classmethod
    def from_argument(cls, value: int) -> "Torus":
        return cls(value)

    @property
    def dimension(self) -> int:
        return self.k

    def ring(self, r: CoefficientRing) -> GradedRing:
        subsets = [
            s
            for size in range(1, self.k + 1)
            for s in itertools.combinations(range(1, self.k + 1), size)
        ]
        products = {}
        for s, t in itertools.product(subsets, repeat=2):
            if set(s) & set(t):
                continue
            sign = -1 if _inversions(s + t) % 2 else 1
            products[(_label(s), _label(t))] = {_label(tuple(sorted(s + t))): sign}
        gens = [Generator(_label(s), len(s)) for s in subsets]
        return GradedRing.build(r, self.k, gens, products)

    def __str__(self) -> str:
        return f"T({self.k})"
