"""
截断正向系统（暴力验证）

构造 H̃*(W_0) → H̃*(W_1) → ⋯ → H̃*(W_N)，其中
H̃^k(W_j) = ⊕_v H̃^k(X_v) ⊕ (Jacob 梯子部分的截断窗口)：
- n 次: 每条边 e 的 σ 坐标 σ_{e,i}，i ∈ [j..N−1]
- 1 次: 每条边 e 的 τ 坐标 τ_{e,i}，i ∈ [j..N−1]

转移映射 i*_j（第 j 阶段 → 第 j+1 阶段）:
- n 次: (α, β, γ) ↦ (α − β_j, β − β_j σ^j, γ + β_j)，即 σ_{e,j} 映到 −u 顶类 + v 顶类
- 1 次: τ_{e,j} 离开窗口（ψ 的对偶是包含映射的对偶），其余为恒等
- 2..n−1 次: 恒等

极限由核的稳定化计算：H̃^k(W_0) 模掉复合映射 i*_{J,0} 的核。
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Tuple

import numpy as np

from algebra import (
    CoefficientRing,
    FinModule,
    GradedRing,
    direct_sum_all,
    nullspace_mod_p,
    quotient_dimension,
    rank_mod_p,
)
from algebra.linalg import identity_matrix, matmul_mod_p, stack, zero_matrix
from catalog import Manifold, cohomology_ring
from errors import CoefficientRingError, UnsupportedCaseError
from ladder import Space, make_ladder

logger = logging.getLogger(__name__)

# 坐标: ("f", label) 有限部分；("s", e, i) σ 窗口；("t", e, i) τ 窗口
Coordinate = Tuple


@dataclass(frozen=True, eq=False)
class TruncatedSystem:
    """
    截断正向系统

    Attributes:
        space: 梯子图
        ring: 系数环
        n: 截面维数
        depth: 截断深度 N（共 N 个转移映射）
        finite: 各节点上同调环的楔和
        node_tops: 每个节点的顶类标签
        maps: 次数 k → (i*_0, …, i*_{N−1})，矩阵形状为 (目标维数, 源维数)
    """
    space: Space
    ring: CoefficientRing
    n: int
    depth: int
    finite: GradedRing
    node_tops: Tuple[str, ...]
    maps: Dict[int, Tuple[np.ndarray, ...]] = field(default_factory=dict)

    @property
    def modulus(self) -> int:
        return self.ring.characteristic

    def coordinates(self, j: int, k: int) -> List[Coordinate]:
        """第 j 阶段 k 次模的基"""
        coords: List[Coordinate] = [("f", g.label) for g in self.finite.in_degree(k)]
        window = range(j, self.depth)
        if k == self.n:
            coords += [("s", e, i) for e in range(len(self.space.edges)) for i in window]
        elif k == 1:
            coords += [("t", e, i) for e in range(len(self.space.edges)) for i in window]
        return coords

    def stage_dimension(self, j: int, k: int) -> int:
        return len(self.coordinates(j, k))

    def homology_map(self, j: int, k: int) -> np.ndarray:
        """
        同调方向的 ψ_j: H̃_k(W_{j+1}) → H̃_k(W_j)

        n 次: (a, b, c) ↦ (a, (c − a)s^j + b, c)；1 次: id ⊕ 包含 ⊕ id；其余为恒等
        """
        rows = self.coordinates(j, k)
        cols = self.coordinates(j + 1, k)
        where = {c: i for i, c in enumerate(rows)}
        psi = zero_matrix(len(rows), len(cols))
        for col, c in enumerate(cols):
            psi[where[c], col] = 1
        if k == self.n:
            for e, (u, v) in enumerate(self.space.edges):
                row = where[("s", e, j)]
                psi[row, cols.index(("f", self.node_tops[u]))] -= 1
                psi[row, cols.index(("f", self.node_tops[v]))] += 1
        return self._reduce(psi)

    def composite(self, k: int, depth: Optional[int] = None) -> np.ndarray:
        """i*_{J,0} = i*_{J−1} ∘ ⋯ ∘ i*_0"""
        depth = self.depth if depth is None else depth
        result = identity_matrix(self.stage_dimension(0, k))
        for m in self.maps[k][:depth]:
            result = matmul_mod_p(m, result, self.modulus) if self.ring.is_field else m @ result
        return result

    def kernel_basis(self, k: int, depth: Optional[int] = None) -> np.ndarray:
        """ker i*_{J,0} 的基（按行，第 0 阶段坐标）"""
        self._require_field(k)
        width = self.stage_dimension(0, k)
        depth = self.depth if depth is None else depth
        if depth == 0:
            return zero_matrix(0, width)
        return nullspace_mod_p(self.composite(k, depth), self.modulus, width)

    def finite_vectors(self, k: int) -> np.ndarray:
        """有限部分坐标（第 0 阶段）的单位向量"""
        coords = self.coordinates(0, k)
        rows = [i for i, c in enumerate(coords) if c[0] == "f"]
        basis = zero_matrix(len(rows), len(coords))
        for r, i in enumerate(rows):
            basis[r, i] = 1
        return basis

    def product_vectors(self) -> np.ndarray:
        """所有次数 < n 的生成元两两乘积（落在 n 次）的坐标向量"""
        coords = self.coordinates(0, self.n)
        where = {c: i for i, c in enumerate(coords)}
        lower = [g for g in self.finite.generators if g.degree < self.n]
        rows = []
        for a in lower:
            for b in lower:
                if a.degree + b.degree != self.n:
                    continue
                vec = np.zeros(len(coords), dtype=object)
                for t, c in self.finite.product(a.label, b.label).items():
                    vec[where[("f", t)]] += c
                if vec.any():
                    rows.append(self._reduce(vec))
        return stack(rows, len(coords))

    def _reduce(self, m: np.ndarray) -> np.ndarray:
        return m % self.modulus if self.ring.is_field else m

    def _require_field(self, k: int) -> None:
        if not self.ring.is_field and k in (1, self.n):
            raise UnsupportedCaseError(f"integer limits in degree {k} are not computed")


def _transition_map(system: TruncatedSystem, j: int, k: int) -> np.ndarray:
    source = system.coordinates(j, k)
    target = system.coordinates(j + 1, k)
    where = {c: i for i, c in enumerate(target)}
    m = zero_matrix(len(target), len(source))
    for col, c in enumerate(source):
        if c in where:
            m[where[c], col] = 1
    if k == system.n:
        for e, (u, v) in enumerate(system.space.edges):
            col = source.index(("s", e, j))
            m[where[("f", system.node_tops[u])], col] -= 1
            m[where[("f", system.node_tops[v])], col] += 1
    return system._reduce(m)


def build_graph_system(space: Space, r: CoefficientRing, depth: int) -> TruncatedSystem:
    """
    为任意梯子图构造截断系统（每条边一个 σ/τ 窗口）

    Args:
        space: 梯子图
        r: 系数环
        depth: 截断深度 N ≥ 1
    """
    if depth < 1:
        raise ValueError(f"truncation depth must be >= 1, got {depth}")
    n = space.dimension
    rings = [cohomology_ring(m, r) for m in space.nodes]
    tags = [f"v{i}" for i in range(len(rings))]
    finite = direct_sum_all(rings, tags)
    tops = []
    for tag, ring in zip(tags, rings):
        (top,) = ring.in_degree(n)
        tops.append(top.label if len(rings) == 1 else f"{tag}.{top.label}")
    system = TruncatedSystem(space, r, n, depth, finite, tuple(tops))
    maps = {
        k: tuple(_transition_map(system, j, k) for j in range(depth))
        for k in range(1, n + 1)
    }
    logger.debug("truncated system for %s over %s at depth %d", space, r, depth)
    return replace(system, maps=maps)


def build_truncated_system(x: Manifold, y: Manifold, r: CoefficientRing, depth: int) -> TruncatedSystem:
    """
    梯子 L(X,Y) 的截断系统

    Raises:
        DimensionMismatchError: dim X ≠ dim Y
    """
    return build_graph_system(make_ladder(x, y), r, depth)


# ========== 极限 ==========

@dataclass(frozen=True)
class LimitResult:
    """
    极限计算结果

    Attributes:
        value: 有限窗口上的极限模（limit_module）或 Γ_p 的维数（limit_gamma_dim）
        stabilized: 深度 N−1 与 N 的结果一致
        stable_depth: 结果与深度 N 一致的最小深度 J ≥ 1
        depth: 使用的截断深度 N
    """
    value: object
    stabilized: bool
    stable_depth: int
    depth: int


def _finite_dimension(system: TruncatedSystem, k: int, depth: int) -> int:
    kernel = system.kernel_basis(k, depth)
    width = system.stage_dimension(0, k)
    return quotient_dimension(system.finite_vectors(k), kernel, system.modulus, width)


def _gamma_dimension(system: TruncatedSystem, depth: int) -> int:
    kernel = system.kernel_basis(system.n, depth)
    width = system.stage_dimension(0, system.n)
    return quotient_dimension(system.product_vectors(), kernel, system.modulus, width)


def _stabilize(system: TruncatedSystem, evaluate, depth: Optional[int]) -> LimitResult:
    depth = system.depth if depth is None else depth
    if not 1 <= depth <= system.depth:
        raise ValueError(f"depth {depth} outside 1..{system.depth}")
    values = {J: evaluate(J) for J in range(1, depth + 1)}
    final = values[depth]
    stable_depth = min(J for J in values if all(values[K] == final for K in range(J, depth + 1)))
    stabilized = depth == 1 or values[depth - 1] == final
    return LimitResult(final, stabilized, stable_depth, depth)


def limit_module(system: TruncatedSystem, k: int, depth: Optional[int] = None) -> LimitResult:
    """
    k 次的极限模（有限窗口部分）

    素域上为 H̃^k(W_0) 中有限坐标的像模掉 ker i*_{J,0} 后的维数；
    整数环上只支持 2..n−1 次（转移映射为恒等）。

    Args:
        system: 截断系统
        k: 次数
        depth: 只用前 J 个转移映射（默认 N）
    """
    if not system.ring.is_field:
        system._require_field(k)
        module = system.finite.module(k)
        return LimitResult(module, True, 1, system.depth if depth is None else depth)

    def evaluate(J: int) -> FinModule:
        return FinModule(system.ring, _finite_dimension(system, k, J))

    return _stabilize(system, evaluate, depth)


def limit_gamma_dim(system: TruncatedSystem, p: int, depth: Optional[int] = None) -> LimitResult:
    """
    极限中由低次类乘积张成的子空间 Γ_p 的维数（在 W_0 代表元上计算）

    Raises:
        CoefficientRingError: 系统不是 ℤ_p 系数
    """
    if system.ring.characteristic != p:
        raise CoefficientRingError(f"system is over {system.ring}, not Z_{p}")
    return _stabilize(system, lambda J: _gamma_dimension(system, J), depth)


def check_surjectivity(system: TruncatedSystem) -> bool:
    """每个转移矩阵是否行满秩（映满截断后的目标窗口）"""
    if not system.ring.is_field:
        raise CoefficientRingError("surjectivity is checked over prime fields")
    for k, maps in system.maps.items():
        for j, m in enumerate(maps):
            if rank_mod_p(m, system.modulus, m.shape[1]) != m.shape[0]:
                logger.debug("i*_%d in degree %d is not surjective", j, k)
                return False
    return True


def kernels_increase(system: TruncatedSystem, k: int) -> bool:
    """ker i*_{j,0} ⊆ ker i*_{j+1,0} 对所有 j 成立"""
    width = system.stage_dimension(0, k)
    for J in range(1, system.depth):
        smaller = system.kernel_basis(k, J)
        larger = system.kernel_basis(k, J + 1)
        if quotient_dimension(smaller, larger, system.modulus, width):
            return False
    return True


def dual_maps_agree(system: TruncatedSystem) -> bool:
    """同调方向 ψ_j 的转置是否恰好等于存储的 i*_j"""
    return all(
        np.array_equal(system.homology_map(j, k).T, maps[j])
        for k, maps in system.maps.items()
        for j in range(system.depth)
    )


def zero_map(system: TruncatedSystem, k: int, j: int) -> TruncatedSystem:
    """把第 j 个 k 次转移映射换成零矩阵（反例构造）"""
    maps = dict(system.maps)
    stage = list(maps[k])
    stage[j] = np.zeros_like(stage[j])
    maps[k] = tuple(stage)
    return replace(system, maps=maps)

