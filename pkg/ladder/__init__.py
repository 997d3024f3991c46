"""
梯子模块

空间演算（梯子、stringer、stringer sum、CSI）与无穷远上同调代数的闭形式
"""

from .end_algebra import EndAlgebra, EndElement, end_algebra
from .space import (
    Edge,
    Space,
    cross_with_torus,
    csi,
    generalized_capped_ladder,
    make_ladder,
    make_stringer,
    stringer_sum,
)

__all__ = [
    "EndAlgebra",
    "EndElement",
    "end_algebra",
    "Edge",
    "Space",
    "cross_with_torus",
    "csi",
    "generalized_capped_ladder",
    "make_ladder",
    "make_stringer",
    "stringer_sum",
]
