"""
闭形式与暴力验证的比较

从初始深度开始，每次把深度加倍，直到结果在深度 N/2..N 上不变（稳定），
然后逐次数比较有限部分维数与 Γ_p。超过最大深度仍不稳定视为失败。
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import config
from algebra import CoefficientRing
from invariants import gamma_dim
from ladder import Space, end_algebra

from .truncated import (
    TruncatedSystem,
    build_graph_system,
    check_surjectivity,
    limit_gamma_dim,
    limit_module,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleCheck:
    """
    一次 oracle-check 的结果

    Attributes:
        space: 被检查的空间
        prime: 素数
        depth: 最终使用的截断深度 N
        checked_depth: 与深度 N 比较并一致的较浅深度 N/2（不稳定时为 None）
        stable_depth: 结果在 J..N 上都与深度 N 一致的最小 J（各次数与 Γ_p 取最大）
        closed_dims: 闭形式有限部分 1..n 次维数
        oracle_dims: 暴力计算的 1..n 次维数
        closed_gamma: 闭形式 Γ_p
        oracle_gamma: 暴力计算的 Γ_p
        surjective: 所有转移映射是否满射
    """
    space: Space
    prime: int
    depth: int
    checked_depth: Optional[int]
    stable_depth: int
    closed_dims: Tuple[int, ...]
    oracle_dims: Tuple[int, ...]
    closed_gamma: int
    oracle_gamma: int
    surjective: bool

    @property
    def stabilized(self) -> bool:
        return self.checked_depth is not None

    @property
    def agree(self) -> bool:
        return self.closed_dims == self.oracle_dims and self.closed_gamma == self.oracle_gamma

    @property
    def ok(self) -> bool:
        return self.stabilized and self.agree and self.surjective

    @property
    def message(self) -> str:
        if not self.stabilized:
            return f"oracle did not stabilize by depth {self.depth}"
        if not self.surjective:
            return "transition maps are not surjective"
        if not self.agree:
            return f"closed-form and oracle DISAGREE at depth {self.depth}"
        return f"closed-form and oracle agree; stabilized at depth {self.checked_depth}"

    def to_dict(self) -> dict:
        return {
            "space": str(self.space),
            "prime": self.prime,
            "depth": self.depth,
            "stabilized": self.stabilized,
            "checked_depth": self.checked_depth,
            "stable_depth": self.stable_depth,
            "closed_form": {"dims": list(self.closed_dims), "gamma": self.closed_gamma},
            "oracle": {"dims": list(self.oracle_dims), "gamma": self.oracle_gamma},
            "agree": self.agree,
            "surjective": self.surjective,
            "message": self.message,
        }


def _oracle_values(system: TruncatedSystem, depth: int) -> Tuple[Tuple[int, ...], int, int]:
    """(1..n 次维数, Γ_p, 最小稳定深度)"""
    modules = [limit_module(system, k, depth) for k in range(1, system.n + 1)]
    gamma = limit_gamma_dim(system, system.ring.characteristic, depth)
    stable_depth = max([m.stable_depth for m in modules] + [gamma.stable_depth])
    return tuple(m.value.dimension for m in modules), gamma.value, stable_depth


def run_oracle_check(
    space: Space,
    p: int,
    depth: Optional[int] = None,
    max_depth: Optional[int] = None,
) -> OracleCheck:
    """
    在 ℤ_p 上比较闭形式与截断系统

    深度 N 的结果在 N/2..N 上不变即视为稳定；否则 N 加倍，直到超过 max_depth。

    Args:
        space: 梯子图
        p: 素数
        depth: 初始截断深度（默认 ENDSUM_DEFAULT_DEPTH）
        max_depth: 加倍上限（默认 ENDSUM_MAX_DEPTH）
    """
    field = CoefficientRing.prime_field(p)
    depth = depth or config.default_depth()
    max_depth = max(max_depth or config.max_depth(), depth)

    closed = end_algebra(space.without_caps(), field)
    closed_dims = closed.finite.dimensions()
    closed_gamma = gamma_dim(closed)

    while True:
        system = build_graph_system(space, field, depth)
        dims, gamma, stable_depth = _oracle_values(system, depth)
        shallower = max(1, depth // 2)
        stable = stable_depth <= shallower
        logger.debug(
            "oracle %s over Z_%d: depth %d -> %s, gamma %d (stable from %d)",
            space, p, depth, dims, gamma, stable_depth,
        )
        if stable or depth * 2 > max_depth:
            break
        depth *= 2

    return OracleCheck(
        space=space,
        prime=p,
        depth=depth,
        checked_depth=shallower if stable else None,
        stable_depth=stable_depth,
        closed_dims=closed_dims,
        oracle_dims=dims,
        closed_gamma=closed_gamma,
        oracle_gamma=gamma,
        surjective=check_surjectivity(system),
    )
