"""场景解析测试：展开结果、诊断位置、打印往返"""

from pathlib import Path

import pytest

from catalog import Lens, Product, Sphere, Surface, Torus, connected_sum
from errors import ScenarioError
from ladder import csi, generalized_capped_ladder, make_ladder
from skills.scenario_parser import (
    CsiExpr,
    LadderExpr,
    NameExpr,
    decode_scenario,
    format_scenario,
    parse_scenario,
    tokenize,
)

SCENARIOS = Path(__file__).parent.parent / "scenarios"


def _error(text: str) -> ScenarioError:
    with pytest.raises(ScenarioError) as info:
        parse_scenario(text)
    return info.value


def test_tokenize_tracks_positions():
    tokens = tokenize("space A = stringer(L(2))  // note\noracle-check A prime 2")
    assert [t.text for t in tokens[:4]] == ["space", "A", "=", "stringer"]
    check = next(t for t in tokens if t.text == "oracle-check")
    assert (check.line, check.column) == (2, 1)
    assert tokens[-1].kind == "eof"


def test_declarations_are_elaborated():
    doc = parse_scenario(
        "space Y = ladder(L(2), S(3)) cap E(2) cap D(4)\n"
        "space Z = stringer(L(2)) cap E(2)\n"
        "space M1 = csi(Y @ L(2), Z @ *)\n"
    )
    spaces = doc.spaces
    assert spaces["Y"].without_caps() == make_ladder(Lens(2), Sphere(3))
    assert spaces["Y"].caps == (("E(2)",), ("D(4)",))
    assert spaces["M1"] == csi(spaces["Y"], 0, spaces["Z"], 0)
    assert spaces["M1"].nodes == (connected_sum(Lens(2), Lens(2)), Sphere(3))
    assert isinstance(doc.declarations[0].expr, LadderExpr)
    assert isinstance(doc.declarations[2].expr, CsiExpr)


def test_manifold_expressions():
    doc = parse_scenario(
        "space A = stringer((L(2) # L(3)) x T(1))\n"
        "space B = stringer(Sigma(1) # T(2) # S(2))\n"
        "space C = stringer(L(1))\n"
    )
    assert doc.spaces["A"].nodes == (Product(connected_sum(Lens(2), Lens(3)), Torus(1)),)
    assert doc.spaces["B"].nodes == (Surface(2),)
    assert doc.spaces["C"].nodes == (Sphere(3),)


def test_product_binds_tighter_than_connected_sum():
    doc = parse_scenario("space A = stringer(L(2) x T(1) # L(3) x T(1))\n")
    (node,) = doc.spaces["A"].nodes
    assert node == connected_sum(Product(Lens(2), Torus(1)), Product(Lens(3), Torus(1)))


def test_other_space_constructors():
    doc = parse_scenario(
        "space M = M(2, 3, 5)\n"
        "space X = cross(ladder(L(2), S(3)), 2)\n"
        "space Y = ladder(L(2), S(3))\n"
        "space W = stringer_sum(Y @ S(3), L(2))\n"
        "space V = Y\n"
        "census M primes 2,3,5\n"
    )
    assert doc.spaces["M"] == generalized_capped_ladder([2, 3, 5])
    assert doc.spaces["X"].nodes == (Product(Lens(2), Torus(2)), Sphere(5))
    assert doc.spaces["W"] == make_ladder(Lens(2), Lens(2))
    assert doc.spaces["V"] == doc.spaces["Y"]
    assert isinstance(doc.declarations[4].expr, NameExpr)
    (census,) = doc.directives
    assert census.names == ("M",) and census.primes == (2, 3, 5)


def test_directives():
    doc = parse_scenario(
        "space A = ladder(L(2), L(2))\n"
        "space B = stringer(L(2) # L(2))\n"
        "invariants A primes 2\n"
        "distinguish A B primes 2,3\n"
        "oracle-check ladder(L(3), L(3)) prime 3\n"
        "oracle-check A prime 2 depth 4\n"
    )
    kinds = [d.kind for d in doc.directives]
    assert kinds == ["invariants", "distinguish", "oracle-check", "oracle-check"]
    assert doc.directives[1].spaces == (doc.spaces["A"], doc.spaces["B"])
    assert doc.directives[2].depth is None
    assert doc.directives[3].depth == 4
    assert doc.directives[2].spaces == (make_ladder(Lens(3), Lens(3)),)


def test_node_selection_by_index():
    doc = parse_scenario(
        "space Y = ladder(L(2), L(2))\n"
        "space Z = stringer(L(3))\n"
        "space M = csi(Y @ #1, Z @ *)\n"
    )
    assert doc.spaces["M"].nodes == (Lens(2), connected_sum(Lens(2), Lens(3)))


# ========== 诊断 ==========

def test_dimension_mismatch_is_located():
    error = _error("space A = stringer(L(2))\n\nspace B = ladder(L(2), Sigma(1))\n")
    assert (error.line, error.column) == (3, 11)
    assert "3 vs 2" in str(error)
    assert str(error).startswith("3:11: ")


def test_unknown_space():
    error = _error("space A = stringer(L(2))\ninvariants Foo primes 2\n")
    assert (error.line, error.column) == (2, 12)
    assert "unknown space 'Foo'" in str(error)


def test_unknown_manifold_lists_keywords():
    error = _error("space A = stringer(Q(2))\n")
    assert (error.line, error.column) == (1, 20)
    assert "L" in error.expected and "Sigma" in error.expected


def test_non_prime():
    error = _error("space A = stringer(L(2))\ninvariants A primes 2,4\n")
    assert (error.line, error.column) == (2, 23)
    assert "4 is not prime" in str(error)


def test_ambiguous_node_selection():
    error = _error(
        "space Y = ladder(L(2), L(2))\n"
        "space Z = stringer(L(2))\n"
        "space M = csi(Y @ L(2), Z @ *)\n"
    )
    assert error.line == 3
    assert "#0" in str(error) and "#1" in str(error)


def test_star_needs_a_single_node():
    error = _error("space Y = ladder(L(2), S(3))\nspace M = csi(Y @ *, Y @ *)\n")
    assert error.line == 2
    assert "single-node" in str(error)


def test_redeclaration():
    error = _error("space A = stringer(L(2))\nspace A = stringer(L(3))\n")
    assert (error.line, error.column) == (2, 7)


def test_reserved_names():
    error = _error("space primes = stringer(L(2))\n")
    assert "reserved" in str(error)


def test_syntax_error_reports_expected_tokens():
    error = _error("space A = ladder(L(2) S(3))\n")
    assert error.expected == (",",)
    assert (error.line, error.column) == (1, 23)


def test_distinguish_needs_equal_dimensions():
    error = _error(
        "space A = stringer(L(2))\nspace B = stringer(Sigma(1))\ndistinguish A B primes 2\n"
    )
    assert (error.line, error.column) == (3, 15)


def test_bad_depth():
    error = _error("oracle-check ladder(L(2), S(3)) prime 2 depth 0\n")
    assert "depth" in str(error)


def test_unexpected_character():
    error = _error("space A = stringer(L(2)) $\n")
    assert (error.line, error.column) == (1, 26)


# ========== 往返 ==========

@pytest.mark.parametrize("name", ["stringer_sums.endsum", "capped_csi.endsum", "census_m23.endsum", "oracle.endsum"])
def test_format_round_trip(name):
    doc = parse_scenario((SCENARIOS / name).read_text(encoding="utf-8"))
    printed = format_scenario(doc)
    again = parse_scenario(printed)
    assert again == doc
    assert again.spaces == doc.spaces
    assert format_scenario(again) == printed


def test_format_round_trip_of_compound_manifolds():
    text = (
        "space A = stringer((L(2) # L(3)) x T(1))\n"
        "space B = csi(A @ (L(2) # L(3)) x T(1), A @ #0)\n"
        "space C = stringer_sum(B @ *, L(2) x T(1))\n"
    )
    doc = parse_scenario(text)
    assert format_scenario(doc) == text
    (node,) = doc.spaces["C"].nodes
    assert node.summands[-1] == Product(Lens(2), Torus(1))
    assert len(node.summands) == 3


def test_invalid_utf8_is_located():
    data = "space A = stringer(L(2))\nspace B = ".encode("utf-8") + b"\xff\xfe"
    with pytest.raises(ScenarioError) as info:
        decode_scenario(data)
    assert (info.value.line, info.value.column) == (2, 11)
    assert "0xff" in str(info.value)


def test_utf8_after_multibyte_characters():
    data = "// Γ_p\n// ∞ ".encode("utf-8") + b"\x80"
    with pytest.raises(ScenarioError) as info:
        decode_scenario(data)
    assert (info.value.line, info.value.column) == (2, 6)
    assert decode_scenario("// Γ_p\n".encode("utf-8")) == "// Γ_p\n"
