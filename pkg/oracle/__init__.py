"""
Oracle 模块

截断正向系统的暴力极限计算，用来独立验证无穷远上同调的闭形式
"""

from .check import OracleCheck, run_oracle_check
from .truncated import (
    LimitResult,
    TruncatedSystem,
    build_graph_system,
    build_truncated_system,
    check_surjectivity,
    dual_maps_agree,
    kernels_increase,
    limit_gamma_dim,
    limit_module,
    zero_map,
)

__all__ = [
    "OracleCheck",
    "run_oracle_check",
    "LimitResult",
    "TruncatedSystem",
    "build_graph_system",
    "build_truncated_system",
    "check_surjectivity",
    "dual_maps_agree",
    "kernels_increase",
    "limit_gamma_dim",
    "limit_module",
    "zero_map",
]
