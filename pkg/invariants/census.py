"""
自 CSI 普查

对空间 s 的两个副本，枚举所有无序节点对 (u, v)，计算 csi(s, u, s, v) 的不变量摘要，
并统计两两可区分的摘要类个数。

各行互相独立，可以用 asyncio 并发计算；结果顺序与调度无关。
"""

import asyncio
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import config
from ladder import Space, csi

from .summary import InvariantSummary, summarize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CensusRow:
    """
    普查的一行

    Attributes:
        u: 第一个副本中的节点
        v: 第二个副本中的节点
        merged: 合并后的空间
        summary: 不变量摘要
    """
    u: int
    v: int
    merged: Space
    summary: InvariantSummary

    def to_dict(self, s: Space) -> dict:
        return {
            "u": self.u,
            "v": self.v,
            "u_label": str(s.nodes[self.u]),
            "v_label": str(s.nodes[self.v]),
            "space": str(self.merged),
            "gamma": {str(p): d for p, d in self.summary.gamma},
        }


@dataclass(frozen=True)
class CensusResult:
    """普查结果：按 (u, v) 排序的行与不同摘要类的个数"""
    space: Space
    primes: Tuple[int, ...]
    rows: Tuple[CensusRow, ...]

    @property
    def distinct(self) -> int:
        return len({row.summary.comparison_key() for row in self.rows})

    def gamma_rows(self) -> List[Tuple[int, ...]]:
        """每行按 primes 顺序排列的 Γ_p 值"""
        return [tuple(row.summary.gamma_map[p] for p in self.primes) for row in self.rows]

    def to_dict(self) -> dict:
        return {
            "space": str(self.space),
            "primes": list(self.primes),
            "rows": [row.to_dict(self.space) for row in self.rows],
            "distinct": self.distinct,
        }


def _pairs(s: Space) -> List[Tuple[int, int]]:
    # csi(s,u,s,v) 与 csi(s,v,s,u) 同构，只取 u ≤ v
    count = len(s.nodes)
    return [(u, v) for u in range(count) for v in range(u, count)]


def _row(s: Space, u: int, v: int, primes: Sequence[int]) -> CensusRow:
    merged = csi(s, u, s, v)
    logger.debug("census row (%d, %d): %s", u, v, merged)
    return CensusRow(u, v, merged, summarize(merged, primes))


class CensusRunner:
    """
    普查执行器

    Example:
        runner = CensusRunner()
        result = await runner.run_async(generalized_capped_ladder([2, 3]), [2, 3])
        print(result.distinct)   # 3
    """

    async def run_async(self, s: Space, primes: Sequence[int]) -> CensusResult:
        """并发计算所有行"""
        primes = tuple(sorted(set(primes)))
        s = s.without_caps()
        tasks = [asyncio.to_thread(_row, s, u, v, primes) for u, v in _pairs(s)]
        rows = await asyncio.gather(*tasks)
        return CensusResult(s, primes, tuple(rows))

    def run(self, s: Space, primes: Sequence[int]) -> CensusResult:
        """顺序计算所有行"""
        primes = tuple(sorted(set(primes)))
        s = s.without_caps()
        rows = tuple(_row(s, u, v, primes) for u, v in _pairs(s))
        return CensusResult(s, primes, rows)


# 便捷函数
def self_csi_census(s: Space, primes: Sequence[int], parallel: Optional[bool] = None) -> CensusResult:
    """
    便捷函数：自 CSI 普查

    Args:
        s: 连通梯子图
        primes: 非空素数列表
        parallel: 是否并发（默认读取 ENDSUM_CENSUS_PARALLEL）

    Returns:
        CensusResult
    """
    if not primes:
        raise ValueError("census needs at least one prime")
    runner = CensusRunner()
    if parallel is None:
        parallel = config.CENSUS_PARALLEL
    if parallel:
        return asyncio.run(runner.run_async(s, primes))
    return runner.run(s, primes)
