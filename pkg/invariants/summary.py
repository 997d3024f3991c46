"""
不变量提取与比较

- gamma_dim: Γ_p（由低次类乘积张成的 n 次子空间）的维数
- summarize: 汇总梯子图的真同伦不变量
- distinguish: 比较两个摘要；不同即证明不真同伦等价，相同则不下结论
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

from algebra import INTEGERS, CoefficientRing, rank_mod_p
from errors import CoefficientRingError, IncomparableError, UnsupportedCaseError
from ladder import EndAlgebra, Space, end_algebra

logger = logging.getLogger(__name__)

NOT_DISTINGUISHED_TEXT = "not distinguished by computed invariants"


def gamma_dim(e: EndAlgebra) -> int:
    """
    dim_{ℤ_p} Γ_p

    π 是单射，所以只需在有限部分计算：把所有 deg a, deg b < n 且落在 n 次的
    生成元乘积写成各节点顶类的坐标，求秩。

    Raises:
        CoefficientRingError: 系数不是素域
    """
    if not e.ring.is_field:
        raise CoefficientRingError(f"gamma needs prime-field coefficients, got {e.ring}")
    where = {label: i for i, label in enumerate(e.node_tops)}
    lower = [g for g in e.finite.generators if g.degree < e.n]
    rows = []
    for a in lower:
        for b in lower:
            if a.degree + b.degree != e.n:
                continue
            row = [0] * len(where)
            for t, c in e.finite.product(a.label, b.label).items():
                row[where[t]] += c
            if any(row):
                rows.append(row)
    return rank_mod_p(rows, e.ring.characteristic, len(where))


@dataclass(frozen=True)
class InvariantSummary:
    """
    梯子图的不变量摘要

    Attributes:
        n: 截面维数
        coefficients: 用到的系数环；不含 "Z" 表示整系数部分无法计算
        middle: 2..n−1 次的整系数同构类 (k, (自由秩, 挠))
        degree1_free_rank: 1 次有限部分的自由秩（整系数不可用时为 None）
        degree1_torsion: 1 次有限部分的挠（整系数不可用时为 None）
        degree1_uncountable: 1 次是否含 ℤ[[τ]]/ℤ[τ] 直和项
        top_uncountable: n 次是否含 ℤ[[σ]] 直和项
        gamma: (p, dim Γ_p)
        nodes: 节点数（只用于展示）
    """
    n: int
    coefficients: Tuple[str, ...]
    middle: Tuple[Tuple[int, Tuple[int, Tuple[int, ...]]], ...]
    degree1_free_rank: Optional[int]
    degree1_torsion: Optional[Tuple[int, ...]]
    degree1_uncountable: bool
    top_uncountable: bool
    gamma: Tuple[Tuple[int, int], ...]
    nodes: int = 1

    @property
    def integral(self) -> bool:
        return "Z" in self.coefficients

    @property
    def gamma_map(self) -> Dict[int, int]:
        return dict(self.gamma)

    def comparison_key(self) -> tuple:
        """distinguish 比较的全部字段"""
        return (
            self.n,
            self.middle,
            None if self.degree1_uncountable else self.degree1_free_rank,
            self.degree1_torsion,
            self.degree1_uncountable,
            self.top_uncountable,
            self.gamma,
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "coefficients": list(self.coefficients),
            "middle": {
                f"H^{k}": {"free_rank": free, "torsion": list(torsion)}
                for k, (free, torsion) in self.middle
            },
            "degree1": {
                "free_rank": self.degree1_free_rank,
                "torsion": None if self.degree1_torsion is None else list(self.degree1_torsion),
                "uncountable": self.degree1_uncountable,
            },
            "top": {"uncountable": self.top_uncountable},
            "gamma": {str(p): d for p, d in self.gamma},
        }


def _integral_algebra(s: Space) -> Optional[EndAlgebra]:
    try:
        return end_algebra(s, INTEGERS)
    except UnsupportedCaseError as e:
        logger.info("integral invariants of %s are unavailable: %s", s, e)
        return None


def summarize(s: Space, primes: Iterable[int]) -> InvariantSummary:
    """
    汇总不变量：整系数部分来自 end_algebra(s, ℤ)，gamma 来自各 ℤ_p

    整系数环无法计算时（例如 L(2) x L(3) 的 Künneth 需要 Tor 项），
    middle 为空、degree1 的秩与挠为 None，其余字段照常给出。

    Args:
        s: 梯子图（caps 被忽略）
        primes: 计算 Γ_p 的素数
    """
    primes = sorted(set(primes))
    bare = s.without_caps()
    integral = _integral_algebra(bare)
    n = bare.dimension
    gamma = []
    for p in primes:
        field = CoefficientRing.prime_field(p)
        gamma.append((p, gamma_dim(end_algebra(bare, field))))

    if integral is not None:
        middle = tuple((k, integral.finite_module(k).iso_class()) for k in range(2, n))
        degree1 = integral.finite_module(1)
        free_rank, torsion = degree1.free_rank, degree1.torsion
    else:
        middle, free_rank, torsion = (), None, None
    coefficients = (("Z",) if integral is not None else ()) + tuple(f"Z_{p}" for p in primes)

    summary = InvariantSummary(
        n=n,
        coefficients=coefficients,
        middle=middle,
        degree1_free_rank=free_rank,
        degree1_torsion=torsion,
        degree1_uncountable=len(bare.edges) > 0,
        top_uncountable=len(bare.edges) > 0,
        gamma=tuple(gamma),
        nodes=len(s.nodes),
    )
    logger.debug("summary of %s: %s", s, summary.comparison_key())
    return summary


@dataclass(frozen=True)
class Verdict:
    """
    比较结论

    Attributes:
        distinguished: 至少一个字段不同
        witnesses: 不同的字段名（按比较顺序）
    """
    distinguished: bool
    witnesses: Tuple[str, ...] = ()

    @property
    def witness(self) -> Optional[str]:
        return self.witnesses[0] if self.witnesses else None

    @property
    def text(self) -> str:
        if self.distinguished:
            return f"DISTINGUISHED by {self.witness}"
        return f"NOT_DISTINGUISHED: {NOT_DISTINGUISHED_TEXT}"

    def to_dict(self) -> dict:
        return {
            "verdict": "DISTINGUISHED" if self.distinguished else "NOT_DISTINGUISHED",
            "witness": self.witness,
            "witnesses": list(self.witnesses),
            "text": self.text,
        }


def distinguish(a: InvariantSummary, b: InvariantSummary) -> Verdict:
    """
    比较两个摘要

    不同字段依次为: 中间次数 H^k、degree1.free_rank（仅当两边都没有 τ 直和项）、
    degree1.torsion（这三项只在两边都有整系数部分时比较）、
    degree1.uncountable、top.uncountable、共同素数上的 gamma[p]。
    τ 直和项的个数与 n 次商群的整系数同构类不参与比较。

    Raises:
        IncomparableError: 维数不同
    """
    if a.n != b.n:
        raise IncomparableError(f"cannot compare summaries of dimension {a.n} and {b.n}")
    witnesses = []
    integral = a.integral and b.integral
    if integral:
        b_middle = dict(b.middle)
        for k, iso in a.middle:
            if b_middle.get(k) != iso:
                witnesses.append(f"H^{k}")
    # ℤ[[τ]]/ℤ[τ] 存在时有限部分的自由秩不作为不变量
    tau_free = not (a.degree1_uncountable or b.degree1_uncountable)
    if integral and tau_free and a.degree1_free_rank != b.degree1_free_rank:
        witnesses.append("degree1.free_rank")
    if integral and a.degree1_torsion != b.degree1_torsion:
        witnesses.append("degree1.torsion")
    if a.degree1_uncountable != b.degree1_uncountable:
        witnesses.append("degree1.uncountable")
    if a.top_uncountable != b.top_uncountable:
        witnesses.append("top.uncountable")
    a_gamma, b_gamma = a.gamma_map, b.gamma_map
    for p in sorted(set(a_gamma) & set(b_gamma)):
        if a_gamma[p] != b_gamma[p]:
            witnesses.append(f"gamma[{p}]")
    return Verdict(bool(witnesses), tuple(witnesses))
