"""
球面 S^n 与 ℤ-同调 3 维球面
"""

from dataclasses import dataclass

from sympy import isprime

from algebra import CoefficientRing, Generator, GradedRing

from .base import Manifold, register_manifold


def sphere_ring(r: CoefficientRing, n: int) -> GradedRing:
    """H̃*(S^n;R)：n 次一个自由生成元，没有乘积"""
    return GradedRing.build(r, n, [Generator("s", n)])


@register_manifold
@dataclass(frozen=True)
class Sphere(Manifold):
    """球面 S^n，连通和的单位元"""

    keyword = "S"
    description = "sphere S^n"
    signature = "S(n), n >= 2"

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"sphere dimension must be positive, got {self.n}")

    @classmethod
    def from_argument(cls, value: int) -> "Sphere":
        if value < 2:
            raise ValueError(f"S(n) needs n >= 2, got {value}")
        return cls(value)

    @property
    def dimension(self) -> int:
        return self.n

    @property
    def is_sphere(self) -> bool:
        return True

    def ring(self, r: CoefficientRing) -> GradedRing:
        return sphere_ring(r, self.n)

    def __str__(self) -> str:
        return f"S({self.n})"


@register_manifold
@dataclass(frozen=True)
class HomologySphere(Manifold):
    """
    ℤ-同调 3 维球面（不透明条目）

    p 记录引入它时所用的素数；任意系数下的上同调环都与 S³ 相同，
    但它不是 S³，因此连通和规范化时不会被消去。
    """

    keyword = "HS"
    description = "opaque integral homology 3-sphere"
    signature = "HS(p), p prime"

    p: int

    @classmethod
    def from_argument(cls, value: int) -> "HomologySphere":
        if not isprime(value):
            raise ValueError(f"HS(p) needs a prime, got {value}")
        return cls(value)

    @property
    def dimension(self) -> int:
        return 3

    def ring(self, r: CoefficientRing) -> GradedRing:
        return sphere_ring(r, 3)

    def __str__(self) -> str:
        return f"HS({self.p})"
