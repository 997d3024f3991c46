"""
分次交换环（约化上同调）

GradedRing 存储闭流形的约化上同调 H̃*(X;R):
每个生成元对应一个循环直和项（带加法阶），乘法表把有序生成元对
映到和次数中的整系数线性组合。0 次项不存储，单位元只在张量积中临时加入。

运算:
- direct_sum: 楔和的上同调，不同直和项之间乘积为零
- tensor_product: Künneth 公式（带 Koszul 符号）
- reduce_coefficients: 万有系数定理，整数环 → ℤ_p
"""

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from errors import CoefficientRingError, RingAxiomError, UnsupportedCaseError

from .base import CoefficientRing, FinModule

# 线性组合: 生成元标签 -> 系数
Vector = Dict[str, int]
# 乘法表: ((a, b), ((t, c), ...)) 按键排序
ProductTable = Tuple[Tuple[Tuple[str, str], Tuple[Tuple[str, int], ...]], ...]


@dataclass(frozen=True)
class Generator:
    """
    上同调生成元

    Attributes:
        label: 标签（环内唯一）
        degree: 次数 ≥ 1
        order: 加法阶，0 表示自由直和项
    """
    label: str
    degree: int
    order: int = 0


@dataclass(frozen=True)
class GradedRing:
    """
    约化上同调环

    用 GradedRing.build() 构造，它会规约系数并检查标签和次数。

    Example:
        ring = GradedRing.build(INTEGERS, 2, [Generator("a", 1), Generator("b", 1), Generator("f", 2)],
                                {("a", "b"): {"f": 1}, ("b", "a"): {"f": -1}})
        ring.multiply({"a": 1}, {"b": 1})   # {"f": 1}
    """
    ring: CoefficientRing
    top_degree: int
    generators: Tuple[Generator, ...]
    products: ProductTable = ()

    @classmethod
    def build(
        cls,
        ring: CoefficientRing,
        top_degree: int,
        generators: Iterable[Generator],
        products: Optional[Mapping[Tuple[str, str], Mapping[str, int]]] = None,
    ) -> "GradedRing":
        generators = list(generators)
        gens: List[Generator] = []
        for g in generators:
            if ring.is_field and g.order:
                raise RingAxiomError(f"generator {g.label} has order {g.order} over a field")
            if g.order == 1:
                continue
            if g.order < 0 or not 1 <= g.degree <= top_degree:
                raise RingAxiomError(f"bad generator {g}")
            gens.append(g)
        by_label = {g.label: g for g in gens}
        if len(by_label) != len(gens):
            raise RingAxiomError("generator labels must be unique")
        # 阶为 1 的生成元是零，涉及它们的乘积直接丢弃
        known = set(by_label) | {g.label for g in generators if g.order == 1}

        table = []
        for (a, b), vec in sorted((products or {}).items()):
            for label in (a, b, *vec):
                if label not in known:
                    raise RingAxiomError(f"product table mentions unknown generator {label!r}")
            if a not in by_label or b not in by_label:
                continue
            target = by_label[a].degree + by_label[b].degree
            entries = []
            for label, coeff in sorted(vec.items()):
                if label not in by_label:
                    continue
                if by_label[label].degree != target:
                    raise RingAxiomError(f"{a}*{b} lands in degree {target}, not in that of {label}")
                c = ring.reduce(coeff, by_label[label].order)
                if c:
                    entries.append((label, c))
            if entries:
                table.append(((a, b), tuple(entries)))
        return cls(ring, top_degree, tuple(gens), tuple(table))

    @classmethod
    def zero(cls, ring: CoefficientRing, top_degree: int = 0) -> "GradedRing":
        """零环（一点或 T⁰ 的约化上同调）"""
        return cls(ring, top_degree, ())

    @cached_property
    def by_label(self) -> Dict[str, Generator]:
        return {g.label: g for g in self.generators}

    @cached_property
    def table(self) -> Dict[Tuple[str, str], Tuple[Tuple[str, int], ...]]:
        return dict(self.products)

    def generator(self, label: str) -> Generator:
        return self.by_label[label]

    def in_degree(self, k: int) -> Tuple[Generator, ...]:
        return tuple(g for g in self.generators if g.degree == k)

    def module(self, k: int) -> FinModule:
        return FinModule.from_orders(self.ring, (g.order for g in self.in_degree(k)))

    def dimensions(self) -> Tuple[int, ...]:
        """素域上 1..top 各次的维数"""
        return tuple(self.module(k).dimension for k in range(1, self.top_degree + 1))

    def poincare_polynomial(self) -> Tuple[int, ...]:
        """加入单位元后的 Poincaré 多项式系数（0..top 次）"""
        return (1,) + self.dimensions()

    def is_torsion_free(self) -> bool:
        return all(g.order == 0 for g in self.generators)

    def normalize(self, vec: Mapping[str, int]) -> Vector:
        out = {}
        for label, coeff in vec.items():
            c = self.ring.reduce(coeff, self.by_label[label].order)
            if c:
                out[label] = c
        return out

    def product(self, a: str, b: str) -> Vector:
        return dict(self.table.get((a, b), ()))

    def multiply(self, x: Mapping[str, int], y: Mapping[str, int]) -> Vector:
        """线性组合的双线性乘积"""
        acc: Dict[str, int] = defaultdict(int)
        for a, ca in x.items():
            for b, cb in y.items():
                for t, ct in self.table.get((a, b), ()):
                    acc[t] += ca * cb * ct
        return self.normalize(acc)

    def relabel(self, prefix: str) -> "GradedRing":
        """给所有标签加前缀 prefix."""
        rename = {g.label: f"{prefix}.{g.label}" for g in self.generators}
        gens = [Generator(rename[g.label], g.degree, g.order) for g in self.generators]
        table = {
            (rename[a], rename[b]): {rename[t]: c for t, c in vec}
            for (a, b), vec in self.products
        }
        return GradedRing.build(self.ring, self.top_degree, gens, table)

    def check_axioms(self) -> "GradedRing":
        """
        检查分次交换律、结合律和零化子相容性

        Raises:
            RingAxiomError: 任一存储的乘积违反公理
        """
        gens = self.generators
        for a, b in itertools.product(gens, repeat=2):
            sign = -1 if (a.degree * b.degree) % 2 else 1
            ab = self.product(a.label, b.label)
            ba = self.normalize({t: sign * c for t, c in self.product(b.label, a.label).items()})
            if self.normalize(ab) != ba:
                raise RingAxiomError(f"graded commutativity fails for {a.label}, {b.label}")
            if a.order and not self.ring.is_field:
                for t, c in itertools.chain(ab.items(), self.product(b.label, a.label).items()):
                    if self.ring.reduce(a.order * c, self.by_label[t].order):
                        raise RingAxiomError(f"{a.label} has order {a.order} but {a.label}*{b.label} does not")
        for a, b, c in itertools.product(gens, repeat=3):
            if a.degree + b.degree + c.degree > self.top_degree:
                continue
            left = self.multiply(self.product(a.label, b.label), {c.label: 1})
            right = self.multiply({a.label: 1}, self.product(b.label, c.label))
            if left != right:
                raise RingAxiomError(f"associativity fails for {a.label}, {b.label}, {c.label}")
        return self


def _check_same_ring(rings: Sequence[GradedRing]) -> CoefficientRing:
    coeffs = {r.ring for r in rings}
    if len(coeffs) > 1:
        raise CoefficientRingError(f"coefficient rings differ: {sorted(map(str, coeffs))}")
    return rings[0].ring


def direct_sum(a: GradedRing, b: GradedRing, tags: Optional[Tuple[str, str]] = None) -> GradedRing:
    """
    楔和的约化上同调：逐次直和，交叉乘积为零

    标签冲突或给出 tags 时，两侧标签分别加前缀
    """
    _check_same_ring([a, b])
    if tags is None and set(a.by_label) & set(b.by_label):
        tags = ("1", "2")
    if tags is not None:
        a, b = a.relabel(tags[0]), b.relabel(tags[1])
    table = {k: dict(v) for k, v in itertools.chain(a.products, b.products)}
    return GradedRing.build(a.ring, max(a.top_degree, b.top_degree), a.generators + b.generators, table)


def direct_sum_all(rings: Sequence[GradedRing], tags: Sequence[str]) -> GradedRing:
    """多个环的直和；只有一个环时原样返回"""
    if len(rings) == 1:
        return rings[0]
    ring = _check_same_ring(rings)
    tagged = [r.relabel(t) for r, t in zip(rings, tags)]
    gens = tuple(itertools.chain.from_iterable(r.generators for r in tagged))
    table = {k: dict(v) for r in tagged for k, v in r.products}
    return GradedRing.build(ring, max(r.top_degree for r in rings), gens, table)


_UNIT = Generator("1", 0)


def _unital_product(r: GradedRing, x: Generator, y: Generator) -> Vector:
    if x is _UNIT:
        return {y.label: 1} if y is not _UNIT else {"1": 1}
    if y is _UNIT:
        return {x.label: 1}
    return r.product(x.label, y.label)


def tensor_product(a: GradedRing, b: GradedRing) -> GradedRing:
    """
    分次张量积（Künneth 公式）

    先给两侧加入 0 次单位元，再取约化部分。生成元为对 x⊗y，
    乘法遵循 Koszul 符号 (x⊗y)(x'⊗y') = (-1)^{|y||x'|} (xx')⊗(yy')。

    Raises:
        UnsupportedCaseError: 整数系数且两个因子都有挠（会出现 Tor 项）
    """
    ring = _check_same_ring([a, b])
    if not ring.is_field and not (a.is_torsion_free() or b.is_torsion_free()):
        raise UnsupportedCaseError("integer tensor product with torsion in both factors")

    clash = bool(set(a.by_label) & set(b.by_label))
    left_name = (lambda s: f"1.{s}") if clash else (lambda s: s)
    right_name = (lambda s: f"2.{s}") if clash else (lambda s: s)

    def name(x: Generator, y: Generator) -> str:
        if x is _UNIT:
            return right_name(y.label)
        if y is _UNIT:
            return left_name(x.label)
        return f"{left_name(x.label)}*{right_name(y.label)}"

    left = (_UNIT,) + a.generators
    right = (_UNIT,) + b.generators
    pairs = [(x, y) for x in left for y in right if not (x is _UNIT and y is _UNIT)]
    pairs.sort(key=lambda xy: xy[0].degree + xy[1].degree)
    lookup_a = {g.label: g for g in left}
    lookup_b = {g.label: g for g in right}

    gens = [Generator(name(x, y), x.degree + y.degree, x.order or y.order) for x, y in pairs]
    table: Dict[Tuple[str, str], Dict[str, int]] = {}
    for (x, y), (x2, y2) in itertools.product(pairs, repeat=2):
        if x.degree + y.degree + x2.degree + y2.degree > a.top_degree + b.top_degree:
            continue
        xx = _unital_product(a, x, x2)
        yy = _unital_product(b, y, y2)
        if not xx or not yy:
            continue
        sign = -1 if (y.degree * x2.degree) % 2 else 1
        vec: Dict[str, int] = defaultdict(int)
        for s, cs in xx.items():
            for t, ct in yy.items():
                vec[name(lookup_a[s], lookup_b[t])] += sign * cs * ct
        table[(name(x, y), name(x2, y2))] = dict(vec)
    return GradedRing.build(ring, a.top_degree + b.top_degree, gens, table)


def reduce_coefficients(a: GradedRing, p: int) -> GradedRing:
    """
    万有系数定理：H̃^k(X;ℤ_p) ≅ H̃^k(X;ℤ)⊗ℤ_p ⊕ Tor(H̃^{k+1}(X;ℤ), ℤ_p)

    ⊗ 部分的生成元保留原标签，乘积系数取模 p；
    Tor 部分的生成元标签为 d<label>，位于低一次，不带乘积。
    """
    if a.ring.is_field:
        raise CoefficientRingError("reduce_coefficients expects integer coefficients")
    field_ring = CoefficientRing(p)

    survives = {g.label for g in a.generators if g.order == 0 or g.order % p == 0}
    gens: List[Generator] = []
    for k in range(1, a.top_degree + 1):
        gens.extend(Generator(g.label, k) for g in a.in_degree(k) if g.label in survives)
        gens.extend(
            Generator(f"d{g.label}", k)
            for g in a.in_degree(k + 1)
            if g.order and g.order % p == 0
        )
    table = {
        (x, y): {t: c for t, c in vec if t in survives}
        for (x, y), vec in a.products
        if x in survives and y in survives
    }
    return GradedRing.build(field_ring, a.top_degree, gens, table)
