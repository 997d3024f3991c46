"""
无穷远上同调代数（闭形式）

对梯子图 s 与系数环 R:
- 2 ≤ k ≤ n−1: ⊕_v H̃^k(X_v)
- k = 1: ⊕_v H̃^1(X_v) ⊕ 每条边一个 R[[τ]]/R[τ]
- k = n: (⊕_v H̃^n(X_v) ⊕ ⊕_e R[[σ_e]]) / ⊕_e K_e，
  K_e = {(Σβ_i 在 u, β, −Σβ_i 在 v)}，e = (u, v)

有限部分逐节点相乘，不同节点之间乘积为零；涉及 τ、σ 符号类的乘积为零。
级数部分不枚举元素，成员关系只对有限支撑（多项式）的级数结构化地回答。
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Mapping, Optional, Sequence, Tuple

from algebra import CoefficientRing, FinModule, GradedRing, Vector, direct_sum_all
from catalog import cohomology_ring
from errors import RingAxiomError

from .space import Edge, Space

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EndElement:
    """
    无穷远上同调中的元素（由有限数据表示）

    Attributes:
        degree: 次数
        finite: 有限部分的线性组合
        series: n 次时每条边 σ 级数的有限支撑系数 (β_0, β_1, …)
    """
    degree: int
    finite: Tuple[Tuple[str, int], ...] = ()
    series: Tuple[Tuple[int, Tuple[int, ...]], ...] = ()

    @classmethod
    def of(
        cls,
        degree: int,
        finite: Optional[Mapping[str, int]] = None,
        series: Optional[Mapping[int, Sequence[int]]] = None,
    ) -> "EndElement":
        return cls(
            degree,
            tuple(sorted((finite or {}).items())),
            tuple(sorted((e, tuple(beta)) for e, beta in (series or {}).items())),
        )

    @property
    def finite_part(self) -> Vector:
        return dict(self.finite)

    @property
    def series_part(self) -> Dict[int, Tuple[int, ...]]:
        return dict(self.series)


@dataclass(frozen=True)
class EndAlgebra:
    """
    梯子图的无穷远上同调代数

    Attributes:
        ring: 系数环
        n: 截面维数
        finite: 有限部分（各节点上同调环的直和，标签前缀 v0.、v1.…；单节点时不加前缀）
        edges: 边（每条边贡献一个 τ 直和项和一个 σ 直和项）
        node_tops: 每个节点的顶类标签
    """
    ring: CoefficientRing
    n: int
    finite: GradedRing
    edges: Tuple[Edge, ...]
    node_tops: Tuple[str, ...] = field(default=())

    @property
    def tau_count(self) -> int:
        """1 次的 R[[τ]]/R[τ] 直和项个数"""
        return len(self.edges)

    @property
    def sigma_count(self) -> int:
        """n 次的 R[[σ]] 直和项个数"""
        return len(self.edges)

    def finite_module(self, k: int) -> FinModule:
        return self.finite.module(k)

    def symbolic_count(self, k: int) -> int:
        if k == 1:
            return self.tau_count
        if k == self.n:
            return self.sigma_count
        return 0

    def describe(self, k: int) -> str:
        """k 次群的文字描述"""
        finite = str(self.finite_module(k))
        e = self.symbolic_count(k)
        if not e:
            return finite
        r = "Z" if not self.ring.is_field else str(self.ring)
        power = f"^{e}" if e > 1 else ""
        if k == 1:
            symbolic = f"({r}[[t]]/{r}[t]){power}"
            return symbolic if finite == "0" else f"{finite} + {symbolic}"
        return f"({finite} + {r}[[s]]{power})/K"

    def relation(self, e: int, beta: Sequence[int]) -> EndElement:
        """K_e 中由截断级数 β 给出的元素 (Σβ_i 在 u, β, −Σβ_i 在 v)"""
        u, v = self.edges[e]
        total = sum(beta)
        finite = {self.node_tops[u]: total}
        finite[self.node_tops[v]] = -total
        return EndElement.of(self.n, self.finite.normalize(finite), {e: beta})

    def pi(self, vec: Mapping[str, int]) -> EndElement:
        """典范单射 π：有限部分的 n 次类 → n 次商群"""
        return EndElement.of(self.n, self.finite.normalize(vec))

    def normal_form(self, x: EndElement) -> EndElement:
        """
        把多项式级数部分经 K 消去，得到级数部分为零的唯一代表元

        由于 π 是单射，两个元素相等当且仅当正规形式相等。
        """
        if x.degree != self.n or not x.series:
            return EndElement.of(x.degree, self.finite.normalize(x.finite_part))
        acc = dict(x.finite_part)
        for e, beta in x.series:
            u, v = self.edges[e]
            total = sum(beta)
            # β ~ −Σβ_i 在 u, +Σβ_i 在 v
            acc[self.node_tops[u]] = acc.get(self.node_tops[u], 0) - total
            acc[self.node_tops[v]] = acc.get(self.node_tops[v], 0) + total
        return EndElement.of(self.n, self.finite.normalize(acc))

    def is_zero(self, x: EndElement) -> bool:
        """x 是否为零（n 次时即是否属于 ⊕K_e）"""
        return not self.normal_form(x).finite

    def cup(self, x: EndElement, y: EndElement) -> EndElement:
        """
        杯积：有限部分逐节点相乘，符号类参与的乘积为零
        """
        degree = x.degree + y.degree
        if degree > self.n:
            return EndElement.of(degree)
        product = self.finite.multiply(x.finite_part, y.finite_part)
        return EndElement.of(degree, product)


def _top_label(ring: GradedRing, n: int) -> str:
    tops = ring.in_degree(n)
    if len(tops) != 1:
        raise RingAxiomError(f"expected one fundamental class in degree {n}, found {len(tops)}")
    return tops[0].label


@lru_cache(maxsize=512)
def end_algebra(s: Space, r: CoefficientRing) -> EndAlgebra:
    """
    计算梯子图的无穷远上同调代数

    Args:
        s: 梯子图（caps 不参与计算）
        r: 系数环

    Returns:
        EndAlgebra；单节点时有限部分就是 cohomology_ring(X, r)
    """
    n = s.dimension
    rings = [cohomology_ring(m, r) for m in s.nodes]
    tags = [f"v{i}" for i in range(len(rings))]
    finite = direct_sum_all(rings, tags)
    if len(rings) == 1:
        tops = (_top_label(rings[0], n),)
    else:
        tops = tuple(f"{tag}.{_top_label(ring, n)}" for tag, ring in zip(tags, rings))
    logger.debug("end algebra of %s over %s: %d generators, %d edges", s, r, len(finite.generators), len(s.edges))
    return EndAlgebra(r, n, finite, s.edges, tops)
