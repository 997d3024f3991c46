"""
闭定向曲面 Σ_g
"""

from dataclasses import dataclass

from algebra import CoefficientRing, Generator, GradedRing

from .base import Manifold, register_manifold
from .sphere import Sphere


@register_manifold
@dataclass(frozen=True)
class Surface(Manifold):
    """
    亏格 g 的闭定向曲面

    H̃¹ 有辛基 a_i, b_i，H̃² 由基本类 f 生成：
    a_i∪b_i = f = −b_i∪a_i，其余乘积为零。Σ_0 = S²。
    """

    keyword = "Sigma"
    description = "closed oriented surface of genus g"
    signature = "Sigma(g), g >= 0"

    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be nonnegative, got {self.genus}")

    @classmethod
    def from_argument(cls, value: int) -> Manifold:
        surface = cls(value)
        return Sphere(2) if surface.is_sphere else surface

    @property
    def dimension(self) -> int:
        return 2

    @property
    def is_sphere(self) -> bool:
        return self.genus == 0

    def ring(self, r: CoefficientRing) -> GradedRing:
        gens = []
        products = {}
        for i in range(1, self.genus + 1):
            gens += [Generator(f"a{i}", 1), Generator(f"b{i}", 1)]
            products[(f"a{i}", f"b{i}")] = {"f": 1}
            products[(f"b{i}", f"a{i}")] = {"f": -1}
        gens.append(Generator("f", 2))
        return GradedRing.build(r, 2, gens, products)

    def __str__(self) -> str:
        return f"Sigma({self.genus})"
