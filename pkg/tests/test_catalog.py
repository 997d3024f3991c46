"""流形目录测试：上同调环、Poincaré 对偶、规范化"""

import pytest

from algebra import INTEGERS, CoefficientRing, FinModule, rank_mod_p, reduce_coefficients
from catalog import (
    ConnSum,
    HomologySphere,
    Lens,
    Product,
    Sphere,
    Surface,
    Torus,
    cohomology_ring,
    connected_sum,
    discover_manifolds,
    get_manifold,
    list_manifolds,
    product,
)
from catalog import base as catalog_base
from errors import DimensionMismatchError

PRIMES = [2, 3, 5]

CLOSED = [
    Sphere(3),
    Lens(2),
    Lens(4),
    Lens(6),
    Surface(2),
    Torus(3),
    connected_sum(Lens(2), Lens(2)),
    product(Lens(2), Torus(1)),
]


def _field(p: int) -> CoefficientRing:
    return CoefficientRing.prime_field(p)


@pytest.mark.parametrize("m", CLOSED, ids=str)
@pytest.mark.parametrize("p", PRIMES)
def test_ring_axioms(m, p):
    cohomology_ring(m, _field(p)).check_axioms()


@pytest.mark.parametrize("m", CLOSED, ids=str)
def test_integer_ring_axioms(m):
    cohomology_ring(m, INTEGERS).check_axioms()


@pytest.mark.parametrize("m", CLOSED, ids=str)
@pytest.mark.parametrize("p", PRIMES)
def test_poincare_duality(m, p):
    """k 次与 n−k 次之间的杯积配对非退化"""
    ring = cohomology_ring(m, _field(p))
    n = m.dimension
    (top,) = ring.in_degree(n)
    for k in range(1, n):
        left, right = ring.in_degree(k), ring.in_degree(n - k)
        assert len(left) == len(right)
        if not left:
            continue
        pairing = [[ring.product(a.label, b.label).get(top.label, 0) for b in right] for a in left]
        assert rank_mod_p(pairing, p, len(right)) == len(left)


@pytest.mark.parametrize("m", [m for m in CLOSED if m.dimension % 2], ids=str)
@pytest.mark.parametrize("p", PRIMES)
def test_odd_dimensional_euler_characteristic_vanishes(m, p):
    poincare = cohomology_ring(m, _field(p)).poincare_polynomial()
    assert sum((-1) ** k * d for k, d in enumerate(poincare)) == 0


@pytest.mark.parametrize("m", CLOSED, ids=str)
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_universal_coefficients(m, p):
    """ℤ_p 系数的维数与整系数环约化的结果一致"""
    integral = cohomology_ring(m, INTEGERS)
    field = cohomology_ring(m, _field(p))
    assert reduce_coefficients(integral, p).dimensions() == field.dimensions()

    def count(module: FinModule) -> int:
        return sum(1 for d in module.torsion if d % p == 0)

    for k in range(1, m.dimension + 1):
        expected = integral.module(k).free_rank + count(integral.module(k))
        if k < m.dimension:
            expected += count(integral.module(k + 1))
        assert field.module(k).dimension == expected


# ========== 具体的环 ==========

@pytest.mark.parametrize("k", [2, 3, 7, 12])
def test_lens_integral_cohomology(k):
    ring = cohomology_ring(Lens(k), INTEGERS)
    assert ring.module(1).is_zero
    assert ring.module(2) == FinModule(INTEGERS, 0, (k,))
    assert ring.module(3) == FinModule(INTEGERS, 1)


def test_lens_square_rule():
    assert cohomology_ring(Lens(2), _field(2)).product("a", "a") == {"b": 1}
    assert cohomology_ring(Lens(6), _field(2)).product("a", "a") == {"b": 1}
    assert cohomology_ring(Lens(4), _field(2)).product("a", "a") == {}
    assert cohomology_ring(Lens(3), _field(3)).product("a", "a") == {}
    assert cohomology_ring(Lens(3), _field(3)).product("a", "b") == {"c": 1}


def test_lens_over_coprime_field_is_a_sphere():
    assert cohomology_ring(Lens(6), _field(5)).dimensions() == (0, 0, 1)
    assert cohomology_ring(Lens(2), _field(3)) == cohomology_ring(Sphere(3), _field(3))


def test_surface_ring():
    ring = cohomology_ring(Surface(2), INTEGERS)
    assert ring.module(1) == FinModule(INTEGERS, 4)
    assert ring.product("a1", "b1") == {"f": 1}
    assert ring.product("b2", "a2") == {"f": -1}
    assert ring.product("a1", "b2") == {}


def test_torus_ring():
    ring = cohomology_ring(Torus(3), INTEGERS)
    assert [ring.module(k).free_rank for k in (1, 2, 3)] == [3, 3, 1]
    assert ring.product("t1", "t2t3") == {"t1t2t3": 1}
    assert ring.product("t2", "t1t3") == {"t1t2t3": -1}


def test_connected_sum_ring():
    ring = cohomology_ring(connected_sum(Lens(2), Lens(2)), _field(2))
    assert ring.dimensions() == (2, 2, 1)
    assert ring.product("1.a", "1.b") == {"u": 1}
    assert ring.product("2.b", "2.a") == {"u": 1}
    assert ring.product("1.a", "2.b") == {}

    integral = cohomology_ring(connected_sum(Lens(2), Lens(3)), INTEGERS)
    assert integral.module(2).iso_class() == (0, (6,))


def test_product_ring():
    ring = cohomology_ring(product(Lens(2), Torus(1)), INTEGERS)
    assert ring.module(1) == FinModule(INTEGERS, 1)
    assert ring.module(2) == FinModule(INTEGERS, 0, (2,))
    assert ring.module(3).iso_class() == (1, (2,))
    assert cohomology_ring(product(Lens(2), Torus(1)), _field(2)).dimensions() == (2, 2, 2, 1)


def test_homology_sphere_has_sphere_cohomology():
    for r in (INTEGERS, _field(2), _field(3)):
        assert cohomology_ring(HomologySphere(3), r) == cohomology_ring(Sphere(3), r)
    assert isinstance(connected_sum(Lens(2), HomologySphere(3)), ConnSum)


# ========== 规范化 ==========

def test_connected_sum_drops_spheres():
    assert connected_sum(Lens(2), Sphere(3)) == Lens(2)
    assert connected_sum(Sphere(3), Sphere(3)) == Sphere(3)


def test_connected_sum_is_commutative_and_associative():
    a, b, c = Lens(2), Lens(3), Lens(5)
    assert connected_sum(a, b) == connected_sum(b, a)
    assert connected_sum(connected_sum(a, b), c) == connected_sum(a, connected_sum(b, c))
    assert str(connected_sum(c, a, b)) == "L(2) # L(3) # L(5)"


def test_connected_sum_merges_surfaces():
    assert connected_sum(Surface(1), Surface(2)) == Surface(3)
    assert connected_sum(Torus(2), Surface(1)) == Surface(2)
    assert connected_sum(Surface(1), Sphere(2)) == Surface(1)


def test_connected_sum_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        connected_sum(Lens(2), Surface(1))
    with pytest.raises(DimensionMismatchError):
        ConnSum((Lens(2), Torus(2)))


def test_argument_normalization():
    assert Lens.from_argument(1) == Sphere(3)
    assert Surface.from_argument(0) == Sphere(2)
    with pytest.raises(ValueError):
        Sphere.from_argument(1)
    with pytest.raises(ValueError):
        HomologySphere.from_argument(4)


def test_printed_forms():
    assert str(product(connected_sum(Lens(2), Lens(3)), Torus(1))) == "(L(2) # L(3)) x T(1)"
    assert str(product(Lens(2), product(Torus(1), Torus(1)))) == "L(2) x (T(1) x T(1))"
    assert str(Surface(2)) == "Sigma(2)"
    assert Product(Lens(2), Torus(2)).dimension == 5


def test_registry():
    keywords = [entry["keyword"] for entry in list_manifolds()]
    assert keywords == sorted(keywords)
    assert {"S", "L", "Sigma", "T", "HS"} <= set(keywords)
    assert get_manifold("L") is Lens
    assert get_manifold("nope") is None


def test_discovery_registers_new_family_files(tmp_path, monkeypatch):
    monkeypatch.setattr(catalog_base, "_registry", catalog_base.get_all_manifolds())
    package = tmp_path / "extra_families"
    package.mkdir()
    (package / "__init__.py").write_text("", encoding="utf-8")
    (package / "projective.py").write_text(
        "from catalog import Manifold, register_manifold\n"
        "\n"
        "\n"
        "@register_manifold\n"
        "class ProjectiveSpace(Manifold):\n"
        "    keyword = 'RP'\n"
        "    description = 'real projective space'\n"
        "    signature = 'RP(n), n odd'\n",
        encoding="utf-8",
    )
    (package / "_helpers.py").write_text("raise RuntimeError('never imported')\n", encoding="utf-8")
    (package / "broken.py").write_text("import endsum_missing_dependency\n", encoding="utf-8")
    monkeypatch.syspath_prepend(str(tmp_path))

    loaded = discover_manifolds(package, "extra_families")

    assert loaded == ["projective"]
    assert get_manifold("RP").signature == "RP(n), n odd"
    assert "RP" in [entry["keyword"] for entry in list_manifolds()]
