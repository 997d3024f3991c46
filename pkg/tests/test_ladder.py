"""梯子图与无穷远上同调代数测试"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra import INTEGERS, CoefficientRing, FinModule
from catalog import Lens, Product, Sphere, Surface, Torus, cohomology_ring, connected_sum
from errors import DimensionMismatchError, NodeSelectionError
from invariants import gamma_dim, summarize
from ladder import (
    EndElement,
    Space,
    cross_with_torus,
    csi,
    end_algebra,
    generalized_capped_ladder,
    make_ladder,
    make_stringer,
    stringer_sum,
)

Z2 = CoefficientRing.prime_field(2)
L2, L3, L5, S3 = Lens(2), Lens(3), Lens(5), Sphere(3)


# ========== 构造 ==========

def test_make_ladder():
    s = make_ladder(L2, S3)
    assert s.nodes == (L2, S3)
    assert s.edges == ((0, 1),)
    assert s.is_ladder and not s.is_stringer
    assert str(s) == "ladder(L(2), S(3))"
    assert make_ladder(Surface(2), Sphere(2)).dimension == 2


def test_make_ladder_dimension_mismatch():
    with pytest.raises(DimensionMismatchError) as info:
        make_ladder(L2, Surface(1))
    assert (info.value.left, info.value.right) == (3, 2)


def test_make_stringer():
    s = make_stringer(L3)
    assert s.is_stringer
    assert s.edges == ()
    assert str(s) == "stringer(L(3))"


def test_space_validation():
    with pytest.raises(ValueError):
        Space(())
    with pytest.raises(ValueError):
        Space((L2, S3))
    with pytest.raises(ValueError):
        Space((L2, S3), ((0, 0), (0, 1)))
    with pytest.raises(NodeSelectionError):
        Space((L2, S3), ((0, 2),))
    with pytest.raises(ValueError):
        Space((Torus(1),))


def test_stringer_sum():
    y = make_ladder(L2, S3)
    assert stringer_sum(y, 0, L2) == make_ladder(connected_sum(L2, L2), S3)
    assert stringer_sum(y, 1, L2) == make_ladder(L2, L2)
    with pytest.raises(NodeSelectionError):
        stringer_sum(y, 2, L2)


@pytest.mark.parametrize("u", [0, 1])
def test_stringer_sum_is_csi_with_a_stringer(u):
    y = make_ladder(L3, S3)
    assert stringer_sum(y, u, L3) == csi(y, u, make_stringer(L3), 0)


def test_csi_of_capped_ladder_and_stringer():
    y = make_ladder(L2, S3).with_caps(["E(2)", "D(4)"])
    z = make_stringer(L2).with_caps(["E(2)"])
    m1 = csi(y, 0, z, 0)
    m2 = csi(y, 1, z, 0)
    assert m1.nodes == (connected_sum(L2, L2), S3)
    assert m2.nodes == (L2, L2)
    assert m1.caps == (("E(2)", "E(2)"), ("D(4)",))
    assert m1.without_caps() == make_ladder(connected_sum(L2, L2), S3)


def test_csi_of_two_ladders():
    m = csi(make_ladder(L2, L3), 1, make_ladder(L3, L5), 0)
    assert m.nodes == (L2, connected_sum(L3, L3), L5)
    assert m.edges == ((0, 1), (1, 2))
    assert str(m) == "graph[#0=L(2), #1=L(3) # L(3), #2=L(5); 0-1, 1-2]"


def test_csi_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        csi(make_stringer(L2), 0, make_stringer(Surface(1)), 0)


def test_csi_is_commutative_up_to_relabeling():
    a = make_ladder(L2, S3)
    b = make_ladder(L3, L5)
    ab = summarize(csi(a, 0, b, 1), [2, 3, 5])
    ba = summarize(csi(b, 1, a, 0), [2, 3, 5])
    assert ab.comparison_key() == ba.comparison_key()


def test_generalized_capped_ladder():
    single = generalized_capped_ladder([2])
    assert single.without_caps() == make_ladder(L2, S3)
    assert single.caps == (("E(2)",), ("D(4)",))

    pair = generalized_capped_ladder([2, 3])
    assert pair.without_caps() == make_ladder(L2, L3)

    path = generalized_capped_ladder([2, 3, 5])
    assert path.nodes == (L2, L3, L5)
    assert path.edges == ((0, 1), (1, 2))
    assert path.caps == (("E(2)",), ("E(3)",), ("E(5)",))

    with pytest.raises(ValueError):
        generalized_capped_ladder([])


def test_select_node():
    s = make_ladder(L2, L2)
    with pytest.raises(NodeSelectionError) as info:
        s.select_node(L2)
    assert "#0" in str(info.value) and "#1" in str(info.value)
    with pytest.raises(NodeSelectionError):
        s.select_node(L3)
    with pytest.raises(NodeSelectionError):
        s.select_node()
    assert s.select_node(index=1) == 1
    assert make_ladder(L2, S3).select_node(S3) == 1
    assert make_stringer(L2).select_node() == 0


def test_permute_and_reverse():
    s = generalized_capped_ladder([2, 3, 5]).without_caps()
    p = s.permute([2, 0, 1])
    assert p.nodes == (L5, L2, L3)
    assert p.edges == ((1, 2), (2, 0))
    assert s.reverse_edge(0).edges == ((1, 0), (1, 2))
    with pytest.raises(ValueError):
        s.permute([0, 0, 1])


def test_cross_with_torus():
    s = cross_with_torus(make_ladder(L2, S3), 2)
    assert s.nodes == (Product(L2, Torus(2)), Sphere(5))
    assert s.dimension == 5


# ========== 无穷远上同调代数 ==========

@pytest.mark.parametrize("j", [1, 2, 3, 4, 6, 12])
def test_ladder_degree_two_is_lens_torsion(j):
    e = end_algebra(make_ladder(Lens.from_argument(j), S3), INTEGERS)
    assert e.finite_module(2) == FinModule.from_orders(INTEGERS, [j])
    assert e.tau_count == 1 and e.sigma_count == 1


def test_stringer_end_algebra_is_the_cross_section_ring():
    for r in (INTEGERS, Z2):
        e = end_algebra(make_stringer(L2), r)
        assert e.finite == cohomology_ring(L2, r)
        assert e.tau_count == 0
        assert e.describe(1) == str(e.finite_module(1))


def test_sphere_ladder():
    e = end_algebra(make_ladder(S3, S3), Z2)
    assert e.finite.dimensions() == (0, 0, 2)
    assert e.symbolic_count(1) == 1
    assert e.symbolic_count(2) == 0
    assert e.describe(1) == "(Z_2[[t]]/Z_2[t])"
    assert e.describe(3) == "((Z_2)^2 + Z_2[[s]])/K"
    assert gamma_dim(e) == 0


def test_end_algebra_node_tags():
    e = end_algebra(make_ladder(L2, S3), Z2)
    assert e.node_tops == ("v0.c", "v1.s")
    assert e.finite.product("v0.a", "v0.b") == {"v0.c": 1}


def test_relation_elements_vanish():
    e = end_algebra(make_ladder(L2, S3), Z2)
    assert e.is_zero(e.relation(0, [1, 0, 1, 1]))
    assert not e.is_zero(e.pi({"v0.c": 1}))


def test_pi_is_injective_on_node_tops():
    e = end_algebra(make_ladder(L3, L3), CoefficientRing.prime_field(3))
    for vec in ({"v0.c": 1}, {"v1.c": 2}, {"v0.c": 1, "v1.c": 1}):
        assert not e.is_zero(e.pi(vec))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=8), st.integers(-5, 5))
def test_normal_form_removes_series(beta, c):
    e = end_algebra(make_ladder(L2, L3), INTEGERS)
    x = EndElement.of(e.n, {"v0.c": c}, {0: beta})
    normal = e.normal_form(x)
    assert not normal.series
    # 级数 β 等价于 −Σβ 在 u、+Σβ 在 v
    assert normal.finite_part == e.finite.normalize({"v0.c": c - sum(beta), "v1.c": sum(beta)})
    assert e.normal_form(normal) == normal


def test_cup_products():
    e = end_algebra(make_ladder(L2, S3), Z2)
    a = EndElement.of(1, {"v0.a": 1})
    b = EndElement.of(2, {"v0.b": 1})
    assert e.cup(a, b).finite_part == {"v0.c": 1}
    assert e.cup(a, a).finite_part == {"v0.b": 1}
    assert e.cup(b, b).finite_part == {}


@pytest.mark.parametrize("order", [[1, 0], [0, 1]])
def test_invariants_do_not_depend_on_labels(order):
    s = make_ladder(connected_sum(L2, L2), S3)
    t = s.permute(order).reverse_edge(0)
    assert summarize(s, [2, 3]).comparison_key() == summarize(t, [2, 3]).comparison_key()
