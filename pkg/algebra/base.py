"""
系数环与有限生成模

- CoefficientRing: 系数环 ℤ 或素域 ℤ_p
- FinModule: 有限生成模的典范形式（自由秩 + 整除链挠系数）
- iso_class: 同构类（典范形式），用于比较不变量
"""

from dataclasses import dataclass
from typing import Iterable, Tuple

from sympy import isprime

from errors import CoefficientRingError

from .snf import invariant_factors


@dataclass(frozen=True)
class CoefficientRing:
    """
    系数环

    characteristic 为 0 表示整数环 ℤ，为素数 p 表示素域 ℤ_p

    Example:
        CoefficientRing.integers()        # ℤ
        CoefficientRing.prime_field(3)    # ℤ_3
    """
    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not (isinstance(p, int) and p > 0 and isprime(p)):
            raise CoefficientRingError(f"prime field needs a prime characteristic, got {p!r}")

    @classmethod
    def integers(cls) -> "CoefficientRing":
        return cls(0)

    @classmethod
    def prime_field(cls, p: int) -> "CoefficientRing":
        return cls(p)

    @property
    def is_field(self) -> bool:
        return self.characteristic != 0

    @property
    def kind(self) -> str:
        return "PrimeField" if self.is_field else "Integers"

    def reduce(self, value: int, order: int = 0) -> int:
        """
        把系数规约到生成元所在循环群中

        Args:
            value: 整数系数
            order: 生成元的加法阶（0 表示自由）
        """
        if self.is_field:
            return value % self.characteristic
        if order:
            return value % order
        return value

    def __str__(self) -> str:
        return f"Z_{self.characteristic}" if self.is_field else "Z"


INTEGERS = CoefficientRing(0)


@dataclass(frozen=True)
class FinModule:
    """
    有限生成模的典范形式

    整数环上: free_rank 个 ℤ 加上挠部分 ℤ_{d_1} ⊕ … ⊕ ℤ_{d_t}，d_i | d_{i+1}，d_i ≥ 2
    素域上: 维数 free_rank，torsion 为空

    两个模同构当且仅当典范形式相等
    """
    ring: CoefficientRing
    free_rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError(f"negative rank: {self.free_rank}")
        if self.ring.is_field and self.torsion:
            raise ValueError("vector spaces carry no torsion")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion divisor must be >= 2, got {d}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisor chain")

    @classmethod
    def from_orders(cls, ring: CoefficientRing, orders: Iterable[int]) -> "FinModule":
        """
        由循环直和项的阶构造典范形式

        Args:
            orders: 每个循环直和项的阶，0 表示自由直和项 ℤ

        Example:
            FinModule.from_orders(INTEGERS, [2, 3])   # ℤ_6
        """
        orders = list(orders)
        if ring.is_field:
            if any(orders):
                raise ValueError("vector space summands must be free")
            return cls(ring, len(orders))
        diagonal = [[orders[i] if i == j else 0 for j in range(len(orders))] for i in range(len(orders))]
        factors = invariant_factors(diagonal)
        free = sum(1 for d in factors if d == 0)
        torsion = tuple(d for d in factors if d > 1)
        return cls(ring, free, torsion)

    @classmethod
    def zero(cls, ring: CoefficientRing) -> "FinModule":
        return cls(ring)

    @property
    def dimension(self) -> int:
        """素域上的维数"""
        if not self.ring.is_field:
            raise CoefficientRingError("dimension is defined over prime fields only")
        return self.free_rank

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def direct_sum(self, other: "FinModule") -> "FinModule":
        if self.ring != other.ring:
            raise CoefficientRingError(f"cannot add modules over {self.ring} and {other.ring}")
        orders = [0] * (self.free_rank + other.free_rank) + list(self.torsion) + list(other.torsion)
        return FinModule.from_orders(self.ring, orders)

    def iso_class(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.free_rank, self.torsion)

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.ring.is_field:
            return f"({self.ring})^{self.free_rank}" if self.free_rank > 1 else str(self.ring)
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z_{d}" for d in self.torsion)
        return " + ".join(parts)


def iso_class(module: FinModule) -> Tuple[int, Tuple[int, ...]]:
    """返回模的典范形式 (自由秩, 挠系数整除链)"""
    return module.iso_class()
