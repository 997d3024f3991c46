"""
透镜空间 L(k,1)

整系数: H̃² = ℤ_k，H̃³ = ℤ
ℤ_p 系数，p | k: α(1)、β(2)、γ(3)，α∪β = β∪α = γ；
α² = β 当且仅当 p = 2 且 k ≡ 2 (mod 4)（Bockstein 规则），否则 α² = 0
ℤ_p 系数，p ∤ k: 只剩 γ
"""

from dataclasses import dataclass

from algebra import CoefficientRing, Generator, GradedRing

from .base import Manifold, register_manifold
from .sphere import Sphere, sphere_ring


def lens_ring(r: CoefficientRing, k: int) -> GradedRing:
    if not r.is_field:
        return GradedRing.build(r, 3, [Generator("b", 2, k), Generator("c", 3)])
    p = r.characteristic
    if k % p:
        return sphere_ring(r, 3)
    products = {("a", "b"): {"c": 1}, ("b", "a"): {"c": 1}}
    if p == 2 and k % 4 == 2:
        products[("a", "a")] = {"b": 1}
    return GradedRing.build(
        r, 3, [Generator("a", 1), Generator("b", 2), Generator("c", 3)], products
    )


@register_manifold
@dataclass(frozen=True)
class Lens(Manifold):
    """透镜空间 L(k,1)，对 unknot 做 −k 手术得到"""

    keyword = "L"
    description = "lens space L(k,1), H_1 = Z_k"
    signature = "L(k), k >= 1"

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"lens space needs k >= 1, got {self.k}")

    @classmethod
    def from_argument(cls, value: int) -> Manifold:
        lens = cls(value)
        return Sphere(3) if lens.is_sphere else lens

    @property
    def dimension(self) -> int:
        return 3

    @property
    def is_sphere(self) -> bool:
        return self.k == 1

    def ring(self, r: CoefficientRing) -> GradedRing:
        return lens_ring(r, self.k)

    def __str__(self) -> str:
        return f"L({self.k})"
