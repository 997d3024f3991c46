"""
空间演算：梯子图

Space 是一个有限连通多重图：
- 节点是 stringer 的截面流形 X_v（全部同维 n ≥ 2）
- 每条边是一族无穷多的 rung（每个单位高度一次 0-手术）
- caps 是每个节点上的紧致封口名称，只作为元数据，不参与计算

一个节点、无边是 stringer；两个节点、一条边是梯子 L(X,Y)。
CSI 与 stringer sum 都是节点合并/重标记操作。
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from catalog import Lens, Manifold, Product, Sphere, Torus, connected_sum
from errors import DimensionMismatchError, NodeSelectionError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Space:
    """
    梯子图

    Attributes:
        nodes: 节点 id（下标）→ 截面流形
        edges: 有向边 (u, v)，允许重边；方向约定为 (第一个节点, 第二个节点)
        caps: 每个节点的封口名称元组（与 nodes 等长，省略时全为空）
    """
    nodes: Tuple[Manifold, ...]
    edges: Tuple[Edge, ...] = ()
    caps: Tuple[Tuple[str, ...], ...] = field(default=())

    def __post_init__(self):
        if not self.nodes:
            raise ValueError("a space needs at least one node")
        n = self.nodes[0].dimension
        for m in self.nodes[1:]:
            if m.dimension != n:
                raise DimensionMismatchError(n, m.dimension, "space nodes")
        if n < 2:
            raise ValueError(f"cross-section dimension must be >= 2, got {n}")
        if not self.caps:
            object.__setattr__(self, "caps", tuple(() for _ in self.nodes))
        if len(self.caps) != len(self.nodes):
            raise ValueError("caps must list one entry per node")
        for u, v in self.edges:
            for w in (u, v):
                if not 0 <= w < len(self.nodes):
                    raise NodeSelectionError(f"edge ({u}, {v}) refers to a missing node")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
        if not self._is_connected():
            raise ValueError("space graph must be connected")

    def _is_connected(self) -> bool:
        neighbours: List[List[int]] = [[] for _ in self.nodes]
        for u, v in self.edges:
            neighbours[u].append(v)
            neighbours[v].append(u)
        seen = {0}
        queue = deque([0])
        while queue:
            for w in neighbours[queue.popleft()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.nodes)

    @property
    def dimension(self) -> int:
        """截面维数 n"""
        return self.nodes[0].dimension

    @property
    def is_stringer(self) -> bool:
        return len(self.nodes) == 1 and not self.edges

    @property
    def is_ladder(self) -> bool:
        return len(self.nodes) == 2 and len(self.edges) == 1

    def check_node(self, u: int) -> int:
        if not isinstance(u, int) or not 0 <= u < len(self.nodes):
            raise NodeSelectionError(f"no node #{u} (space has {len(self.nodes)} nodes)")
        return u

    def find_nodes(self, pattern: Manifold) -> List[int]:
        """所有标签等于 pattern（规范化后比较）的节点"""
        return [i for i, m in enumerate(self.nodes) if m == pattern]

    def select_node(self, pattern: Optional[Manifold] = None, index: Optional[int] = None) -> int:
        """
        选择一个节点

        Args:
            pattern: 按流形标签选择；必须唯一匹配
            index: 按节点编号选择
            两者都省略时（DSL 的 *）要求空间只有一个节点

        Raises:
            NodeSelectionError: 没有匹配、匹配不唯一或编号越界
        """
        if index is not None:
            return self.check_node(index)
        if pattern is None:
            if len(self.nodes) != 1:
                raise NodeSelectionError(f"'*' needs a single-node space, this one has {len(self.nodes)} nodes")
            return 0
        matches = self.find_nodes(pattern)
        if not matches:
            raise NodeSelectionError(f"no node labelled {pattern}")
        if len(matches) > 1:
            raise NodeSelectionError(
                f"{len(matches)} nodes labelled {pattern}; select one with #i (candidates: "
                + ", ".join(f"#{i}" for i in matches) + ")"
            )
        return matches[0]

    def with_node(self, u: int, label: Manifold) -> "Space":
        nodes = list(self.nodes)
        nodes[self.check_node(u)] = label
        return Space(tuple(nodes), self.edges, self.caps)

    def with_caps(self, caps: Sequence[str]) -> "Space":
        """按节点顺序把 cap 名称依次分配给节点"""
        if len(caps) > len(self.nodes):
            raise ValueError(f"{len(caps)} caps for {len(self.nodes)} nodes")
        merged = [tuple(existing) for existing in self.caps]
        for i, cap in enumerate(caps):
            merged[i] = merged[i] + (cap,)
        return Space(self.nodes, self.edges, tuple(merged))

    def without_caps(self) -> "Space":
        return Space(self.nodes, self.edges)

    def reverse_edge(self, e: int) -> "Space":
        edges = list(self.edges)
        u, v = edges[e]
        edges[e] = (v, u)
        return Space(self.nodes, tuple(edges), self.caps)

    def permute(self, order: Sequence[int]) -> "Space":
        """
        节点重编号：新空间的第 i 个节点是旧空间的第 order[i] 个节点
        """
        if sorted(order) != list(range(len(self.nodes))):
            raise ValueError(f"{list(order)} is not a permutation of the nodes")
        position = {old: new for new, old in enumerate(order)}
        return Space(
            tuple(self.nodes[i] for i in order),
            tuple((position[u], position[v]) for u, v in self.edges),
            tuple(self.caps[i] for i in order),
        )

    def describe(self) -> str:
        if self.is_stringer:
            return f"stringer({self.nodes[0]})"
        if self.is_ladder:
            (u, v), = self.edges
            return f"ladder({self.nodes[u]}, {self.nodes[v]})"
        nodes = ", ".join(f"#{i}={m}" for i, m in enumerate(self.nodes))
        edges = ", ".join(f"{u}-{v}" for u, v in self.edges)
        return f"graph[{nodes}; {edges}]"

    def __str__(self) -> str:
        return self.describe()


# ========== 构造函数 ==========

def make_ladder(x: Manifold, y: Manifold) -> Space:
    """
    梯子流形 L(X,Y)：两个 stringer 之间每个高度接一个 rung

    Raises:
        DimensionMismatchError: dim X ≠ dim Y
    """
    if x.dimension != y.dimension:
        raise DimensionMismatchError(x.dimension, y.dimension, "ladder")
    return Space((x, y), ((0, 1),))


def make_stringer(x: Manifold) -> Space:
    """stringer [0,∞) × X"""
    return Space((x,))


def stringer_sum(s: Space, u: int, z: Manifold) -> Space:
    """
    stringer sum：在每个高度把节点 u 与 z 做连通和

    Example:
        stringer_sum(make_ladder(L(p), S(3)), 0, L(p))  # L(L_p # L_p, S³)
        stringer_sum(make_ladder(L(p), S(3)), 1, L(p))  # L(L_p, L_p)
    """
    s.check_node(u)
    if z.dimension != s.dimension:
        raise DimensionMismatchError(s.dimension, z.dimension, "stringer sum")
    return s.with_node(u, connected_sum(s.nodes[u], z))


def csi(a: Space, u: int, b: Space, v: int) -> Space:
    """
    无穷远连通和（CSI）：沿 a 的节点 u 与 b 的节点 v 中的直射线粘合

    结果是两图的不交并，u 与 v 合并为 X_u # X_v；合并节点保持 u 在 a 中的位置，
    b 的其余节点按原顺序排在后面，所有边重新指向合并节点。

    Raises:
        DimensionMismatchError: 截面维数不同
        NodeSelectionError: 节点编号非法
    """
    a.check_node(u)
    b.check_node(v)
    if a.dimension != b.dimension:
        raise DimensionMismatchError(a.dimension, b.dimension, "csi")

    offset = len(a.nodes)
    remap = {}
    for w in range(len(b.nodes)):
        if w == v:
            remap[w] = u
        else:
            remap[w] = offset
            offset += 1

    nodes = list(a.nodes)
    nodes[u] = connected_sum(a.nodes[u], b.nodes[v])
    caps = list(a.caps)
    caps[u] = a.caps[u] + b.caps[v]
    for w in range(len(b.nodes)):
        if w != v:
            nodes.append(b.nodes[w])
            caps.append(b.caps[w])
    edges = a.edges + tuple((remap[x], remap[y]) for x, y in b.edges)
    result = Space(tuple(nodes), edges, tuple(caps))
    logger.debug("csi(%s @ #%d, %s @ #%d) = %s", a, u, b, v, result)
    return result


def generalized_capped_ladder(primes: Sequence[int]) -> Space:
    """
    广义封口梯子 M(p_1, …, p_m)

    m = 1 时为 L(L_p, S³) ∪ E_p ∪ D⁴；m ≥ 2 时从 M(p_1,p_2) = L(L_{p_1}, L_{p_2}) ∪ E ∪ E
    出发，每次在最后一个透镜节点处与 L(S³, L_q) ∪ E_q 做 CSI，得到一条路径图。

    Raises:
        ValueError: 空列表
    """
    primes = list(primes)
    if not primes:
        raise ValueError("generalized_capped_ladder needs at least one prime")
    if len(primes) == 1:
        p = primes[0]
        return Space((Lens.from_argument(p), Sphere(3)), ((0, 1),), ((f"E({p})",), ("D(4)",)))

    p, q = primes[:2]
    space = Space((Lens.from_argument(p), Lens.from_argument(q)), ((0, 1),), ((f"E({p})",), (f"E({q})",)))
    last = 1
    for q in primes[2:]:
        rung = Space((Sphere(3), Lens.from_argument(q)), ((0, 1),), ((), (f"E({q})",)))
        space = csi(space, last, rung, 0)
        last = len(space.nodes) - 1
    return space


def cross_with_torus(space: Space, k: int) -> Space:
    """
    把每个节点乘以 T^k（截面维数 n → n+k）

    S^n 节点换成 S^{n+k}，其余节点 X 换成 X × T^k
    """
    if k < 1:
        raise ValueError(f"torus dimension must be positive, got {k}")
    nodes = tuple(
        Sphere(m.dimension + k) if m.is_sphere else Product(m, Torus(k))
        for m in space.nodes
    )
    return Space(nodes, space.edges, space.caps)
