"""
复合流形：乘积与连通和

connected_sum() 是唯一推荐的构造方式，它会规范化:
展开嵌套连通和、去掉 S^n 因子、按亏格合并曲面、按打印形式排序。
规范化之后 ConnSum 在字面上满足交换律和结合律。
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from algebra import CoefficientRing, Generator, GradedRing, tensor_product
from errors import DimensionMismatchError

from .base import Manifold, cohomology_ring
from .sphere import Sphere
from .surface import Surface
from .torus import Torus

# 连通和的公共顶类标签
TOP_LABEL = "u"


@dataclass(frozen=True)
class Product(Manifold):
    """乘积流形 a × b，上同调环由 Künneth 公式给出"""

    left: Manifold
    right: Manifold

    @property
    def dimension(self) -> int:
        return self.left.dimension + self.right.dimension

    def ring(self, r: CoefficientRing) -> GradedRing:
        return tensor_product(cohomology_ring(self.left, r), cohomology_ring(self.right, r))

    def __str__(self) -> str:
        left = f"({self.left})" if isinstance(self.left, ConnSum) else str(self.left)
        right = f"({self.right})" if isinstance(self.right, (ConnSum, Product)) else str(self.right)
        return f"{left} x {right}"


@dataclass(frozen=True)
class ConnSum(Manifold):
    """
    连通和 X_1 # ⋯ # X_m

    1..n−1 次为各项的直和（标签前缀 "1."、"2."…），交叉乘积为零；
    n 次只有公共顶类 u，同一项内落在 n 次的乘积经该项的顶类映到 u。
    """

    summands: Tuple[Manifold, ...]

    def __post_init__(self):
        if len(self.summands) < 2:
            raise ValueError("a connected sum needs at least two summands")
        n = self.summands[0].dimension
        for m in self.summands[1:]:
            if m.dimension != n:
                raise DimensionMismatchError(n, m.dimension, "connected sum")
        if n < 2:
            raise ValueError(f"connected sums need dimension >= 2, got {n}")

    @property
    def dimension(self) -> int:
        return self.summands[0].dimension

    def ring(self, r: CoefficientRing) -> GradedRing:
        n = self.dimension
        gens: List[Generator] = []
        products: Dict[Tuple[str, str], Dict[str, int]] = {}
        for i, summand in enumerate(self.summands, 1):
            part = cohomology_ring(summand, r).relabel(str(i))
            tops = {g.label for g in part.in_degree(n)}
            gens.extend(g for g in part.generators if g.degree < n)
            for (a, b), vec in part.products:
                target: Dict[str, int] = {}
                for t, c in vec:
                    key = TOP_LABEL if t in tops else t
                    target[key] = target.get(key, 0) + c
                products[(a, b)] = target
        gens.append(Generator(TOP_LABEL, n))
        return GradedRing.build(r, n, gens, products)

    def __str__(self) -> str:
        return " # ".join(str(m) for m in self.summands)


def connected_sum(*manifolds: Manifold) -> Manifold:
    """
    规范化的连通和

    Args:
        manifolds: 同维的流形（至少一个）

    Returns:
        规范形式；所有项都是球面时返回 S^n，只剩一项时返回该项

    Raises:
        DimensionMismatchError: 维数不同
    """
    if not manifolds:
        raise ValueError("connected_sum needs at least one manifold")
    n = manifolds[0].dimension
    flat: List[Manifold] = []
    for m in manifolds:
        if m.dimension != n:
            raise DimensionMismatchError(n, m.dimension, "connected sum")
        flat.extend(m.summands if isinstance(m, ConnSum) else (m,))

    # T² 就是 Σ_1
    surfaces = [m for m in flat if isinstance(m, Surface) or (isinstance(m, Torus) and m.k == 2)]
    genus = sum(getattr(m, "genus", 1) for m in surfaces)
    kept = [m for m in flat if not m.is_sphere and m not in surfaces]
    if genus:
        kept.append(Surface(genus))
    kept.sort(key=lambda m: m.sort_key())

    if not kept:
        return Sphere(n)
    if len(kept) == 1:
        return kept[0]
    return ConnSum(tuple(kept))


def product(left: Manifold, right: Manifold) -> Product:
    return Product(left, right)
