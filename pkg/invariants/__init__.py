"""
不变量模块

从无穷远上同调代数中提取真同伦不变量（挠、不可数标志、dim Γ_p），比较空间，并做自 CSI 普查
"""

from .census import CensusResult, CensusRow, CensusRunner, self_csi_census
from .summary import (
    NOT_DISTINGUISHED_TEXT,
    InvariantSummary,
    Verdict,
    distinguish,
    gamma_dim,
    summarize,
)

__all__ = [
    "CensusResult",
    "CensusRow",
    "CensusRunner",
    "self_csi_census",
    "NOT_DISTINGUISHED_TEXT",
    "InvariantSummary",
    "Verdict",
    "distinguish",
    "gamma_dim",
    "summarize",
]
