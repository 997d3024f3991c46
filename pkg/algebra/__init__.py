"""
代数模块

ℤ 与素域上的精确分次交换代数：有限生成模、Smith 标准形、
楔和与张量积、系数约化。
"""

from .base import INTEGERS, CoefficientRing, FinModule, iso_class
from .graded import (
    Generator,
    GradedRing,
    Vector,
    direct_sum,
    direct_sum_all,
    reduce_coefficients,
    tensor_product,
)
from .linalg import (
    contains,
    matmul_mod_p,
    nullspace_mod_p,
    quotient_dimension,
    rank_mod_p,
    row_reduce_mod_p,
)
from .snf import SNF, invariant_factors, smith_normal_form

__all__ = [
    "INTEGERS",
    "CoefficientRing",
    "FinModule",
    "iso_class",
    "Generator",
    "GradedRing",
    "Vector",
    "direct_sum",
    "direct_sum_all",
    "reduce_coefficients",
    "tensor_product",
    "contains",
    "matmul_mod_p",
    "nullspace_mod_p",
    "quotient_dimension",
    "rank_mod_p",
    "row_reduce_mod_p",
    "SNF",
    "invariant_factors",
    "smith_normal_form",
]
