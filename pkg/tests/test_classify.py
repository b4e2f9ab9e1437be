import math

import pytest

from pihall.arith import PrimeSet, pi_part
from pihall.classify import (
    BOUND_FULL,
    BOUND_NO_2,
    BOUND_NO_3,
    NO,
    OUT_OF_SCOPE,
    ScopeError,
    TAG_COVER,
    TAG_DEFINING,
    TAG_FULL,
    TAG_NO_2,
    TAG_NO_3,
    TAG_SMALL,
    YES,
    classify,
    classify_alt,
    classify_defining_char,
    classify_exceptional,
    classify_gl2,
    classify_linear_unitary,
    classify_orthogonal,
    classify_sl2,
    classify_sym,
    classify_symplectic,
    classify_sporadic,
    kpi_bound_almost_simple,
    sym_hall_case,
)
from pihall.groups import (
    GroupSpec,
    format_group,
    order,
    parse_group,
    prime_spectrum,
    validate,
)
from pihall.structure import StructureError, structure_order


def rep(text, pi):
    return classify(parse_group(text), PrimeSet(pi))


P23 = PrimeSet((2, 3))
P235 = PrimeSet((2, 3, 5))


# --------------------------------------------------------------------------
# dispatcher regimes


def test_trivial_regimes():
    r = rep("PSL(2,7)", (2, 3, 7))
    assert (r.e_pi, r.k_pi, r.scope_tag, r.c_pi, r.d_pi) == (YES, 1, TAG_COVER, YES, YES)
    assert r.hall_order == 168

    r = rep("PSL(2,7)", (2, 11))
    assert (r.k_pi, r.scope_tag) == (1, TAG_SMALL)
    assert r.hall_order == 8
    assert r.classes[0].structure == "2^3"

    r = rep("PSL(2,7)", (11, 13))
    assert (r.k_pi, r.hall_order) == (1, 1)


def test_bound_regimes():
    r = rep("PSL(2,7)", (3, 7))
    assert (r.e_pi, r.k_bound, r.scope_tag) == (OUT_OF_SCOPE, BOUND_NO_2, TAG_NO_2)
    r = rep("PSL(2,11)", (2, 11))
    assert (r.e_pi, r.k_bound, r.scope_tag) == (OUT_OF_SCOPE, BOUND_NO_3, TAG_NO_3)


# --------------------------------------------------------------------------
# two-dimensional groups


SL2_EXPECT = {
    # q -> (k, case ids) for pi = {2,3}
    5: (1, {"sl2.b"}),
    7: (2, {"sl2.c"}),
    11: (2, {"sl2.a", "sl2.b"}),
    13: (2, {"sl2.a", "sl2.b"}),
    17: (0, set()),  # (q^2-1)_{2,3} = 288: no {2,3}-Hall subgroup at all
    29: (1, {"sl2.b"}),
    23: (3, {"sl2.a", "sl2.c"}),
    25: (3, {"sl2.a", "sl2.c"}),
}


def test_sl2_grid():
    for q, (k, cases) in SL2_EXPECT.items():
        r = classify_sl2(q, P23, projective=True)
        assert r.k_pi == k, (q, r)
        assert {c.case_id for c in r.classes} == cases
        assert r.d_pi == NO
        r2 = classify_sl2(q, P23, projective=False)
        assert r2.k_pi == k
        assert r2.hall_order == 2 * r.hall_order


def test_sl2_alt5_case():
    r = classify_sl2(11, P235, projective=True)
    assert r.k_pi == 2
    assert r.classes[0].structure == "Alt(5)"
    assert r.hall_order == 60


def test_sl2_scope_errors():
    with pytest.raises(ScopeError):
        classify_sl2(7, PrimeSet((2, 3, 7)))
    with pytest.raises(ScopeError):
        classify_sl2(7, PrimeSet((2, 5)))
    with pytest.raises(ScopeError):
        classify_sl2(8, P23)


def test_gl2():
    r = classify_gl2(11, 1, P23)  # both dihedral and octahedral types
    assert r.k_pi == 2
    r = classify_gl2(5, 1, P23)
    assert r.k_pi == 1 and r.classes[0].case_id == "gl2.b"
    r = classify_gl2(7, -1, P23)
    assert r.e_pi == NO


# --------------------------------------------------------------------------
# linear and unitary


def test_linear_unitary_torus_case():
    r = classify_linear_unitary(3, 7, -1, P23, variant="isometry")
    assert r.k_pi == 1
    assert r.classes[0].case_id == "linear_unitary.b"
    # |SU3(7)|_{2,3} = 384
    assert r.hall_order == 384


def test_linear_unitary_exotic_dim4():
    r = classify_linear_unitary(4, 67, -1, P235, variant="isometry")
    assert r.k_pi == 2
    assert r.classes[0].structure == "4.2^4.Alt(6)"
    assert r.hall_order == 23040


def test_linear_unitary_dim11():
    r = classify_linear_unitary(11, 5, 1, P23, variant="isometry")
    assert r.k_pi == 3
    assert {c.case_id for c in r.classes} == {"linear_unitary.e", "linear_unitary.c"}


def test_linear_unitary_block_case_counts():
    # GL2(11) has two Hall classes; one orbit for Sym(2) tops
    r = classify_linear_unitary(4, 11, 1, P23, variant="isometry")
    assert r.k_pi == 2
    # two orbits at m = 5 gives the square
    r = classify_linear_unitary(10, 11, 1, P23, variant="isometry")
    assert r.k_pi == 4


def test_linear_unitary_existence_failure():
    r = classify_linear_unitary(5, 7, 1, P235, variant="isometry")
    assert r.e_pi == NO  # 5 divides |SL5(7)| but the block conditions fail


# --------------------------------------------------------------------------
# symplectic


def test_symplectic_examples():
    r = classify_symplectic(4, 7, P23, variant="isometry")
    assert r.k_pi == 2
    r = classify_symplectic(10, 7, P23, variant="simple")
    assert r.k_pi == 4  # k(SL2(7)) = 2, two orbits
    r = classify_symplectic(10, 23, P23, variant="simple")
    assert r.k_pi == 9  # k(SL2(23)) = 3, two orbits
    r = classify_symplectic(4, 7, P235, variant="isometry")
    assert r.e_pi == NO  # 5 divides |Sp4(7)| but not q^2-1


def test_symplectic_nine_requires_conditions():
    r = classify_symplectic(10, 23, P23, variant="simple")
    assert pi_part(23**2 - 1, (2, 3)) == 48
    assert r.k_pi == 9
    # n = 4 never reaches 9: only one orbit
    r = classify_symplectic(8, 23, P23, variant="simple")
    assert r.k_pi == 3  # Sym(4) Hall is transitive: t = 1


# --------------------------------------------------------------------------
# orthogonal


def test_orthogonal_dim3_matches_sl2():
    for q in (5, 7, 11, 13):
        table = classify_orthogonal(3, q, None, P23, variant="isometry")
        psl = classify_sl2(q, P23, projective=True)
        assert table.k_pi == psl.k_pi, q
        assert table.hall_order == psl.hall_order
        assert table.e_pi == psl.e_pi


def test_orthogonal_dim5_matches_symplectic():
    for q in (5, 7, 11, 13):
        table = classify_orthogonal(5, q, None, P23, variant="isometry")
        sp = classify_symplectic(4, q, P23, variant="simple")
        assert table.k_pi == sp.k_pi, q
        assert table.hall_order == sp.hall_order, q


def test_orthogonal_dim6_matches_linear_unitary():
    for q in (5, 7, 11, 13):
        for eta in (1, -1):
            table = classify_orthogonal(6, q, eta, P23, variant="isometry")
            lu = classify_linear_unitary(4, q, eta, P23, variant="isometry")
            assert table.k_pi == lu.k_pi, (q, eta)
            assert 2 * table.hall_order == lu.hall_order, (q, eta)


def test_orthogonal_dim4_minus_matches_psl2_squared():
    for q in (5, 7, 11, 13):
        table = classify_orthogonal(4, q, -1, P23, variant="isometry")
        psl = classify_sl2(q * q, P23, projective=True)
        assert table.k_pi == psl.k_pi, q
        assert table.hall_order == psl.hall_order, q


def test_orthogonal_dim4_plus_is_sl2_square():
    for q in (5, 7, 11, 13, 23):
        table = classify_orthogonal(4, q, 1, P23, variant="isometry")
        k = classify_sl2(q, P23, projective=False).k_pi
        assert table.k_pi == k * k, q
    # the icosahedral analogue: q = 61 pairs the dihedral and binary-icosahedral types
    table = classify_orthogonal(4, 61, 1, P235, variant="isometry")
    k = classify_sl2(61, P235, projective=False).k_pi
    assert k == 3 and table.k_pi == 9


def test_orthogonal_dim2():
    r = classify_orthogonal(2, 7, 1, P23, variant="isometry")
    assert (r.k_pi, r.c_pi, r.d_pi) == (1, YES, YES)
    assert r.hall_order == pi_part((7 - 1) // 2, (2, 3))


def test_orthogonal_dim12_minus():
    r = classify_orthogonal(12, 13, -1, P23, variant="isometry")
    assert r.k_pi == 3
    by_case = {c.case_id: c.class_count for c in r.classes}
    assert by_case == {"orthogonal.c": 1, "orthogonal.e": 2}


def test_orthogonal_dim11():
    r = classify_orthogonal(11, 13, None, P23, variant="isometry")
    assert r.k_pi == 2
    assert {c.case_id for c in r.classes} == {"orthogonal.a", "orthogonal.d"}


def test_orthogonal_exotic_constants():
    # q = 173 satisfies all the prime-part conditions in dimensions 7, 8, 9
    pi = PrimeSet((2, 3, 5, 7))
    r = classify_orthogonal(7, 173, None, pi, variant="isometry")
    assert r.k_pi == 2
    assert r.classes[0].structure == "Omega7(2)"
    assert r.hall_order == 2**9 * 3**4 * 5 * 7
    r = classify_orthogonal(8, 173, 1, pi, variant="isometry")
    assert r.k_pi == 4
    assert r.classes[0].structure == "2.Omega8+(2)"
    r = classify_orthogonal(8, 173, 1, pi, variant="simple")
    assert r.k_pi == 4
    assert r.classes[0].structure == "Omega8+(2)"
    assert r.hall_order == 2**12 * 3**5 * 5**2 * 7
    r = classify_orthogonal(9, 173, None, pi, variant="isometry")
    assert r.k_pi == 2
    assert r.classes[0].structure == "2.Omega8+(2).2"
    # q = 13 fails the 7-part condition (7 divides q^2 - 1)
    r = classify_orthogonal(7, 13, None, pi, variant="isometry")
    assert all(c.case_id != "orthogonal.f" for c in r.classes)


def test_orthogonal_torus_cases_large():
    r = classify_orthogonal(8, 13, 1, P23, variant="isometry")
    assert r.k_pi == 1
    assert r.classes[0].case_id == "orthogonal.b"
    # wrong sign: eta must be eps^m
    r = classify_orthogonal(8, 13, -1, P23, variant="isometry")
    assert all(c.case_id != "orthogonal.b" for c in r.classes)


# --------------------------------------------------------------------------
# exceptional


def test_g2_exotic():
    r = classify_exceptional("G2", 11, None, PrimeSet((2, 3, 7)))
    assert r.k_pi == 1
    assert r.classes[0].structure == "G2(2)"
    assert r.hall_order == 12096


def test_g2_torus():
    r = classify_exceptional("G2", 13, None, P23)
    assert r.k_pi == 1
    assert r.classes[0].case_id == "g2.b"


def test_f4_torus():
    r = classify_exceptional("F4", 13, None, P23)
    assert r.k_pi == 1


def test_e7_needs_5_and_7():
    r = classify_exceptional("E7", 13, None, P23)
    assert r.e_pi == NO
    # q = 421: q - eps = 420 = 2^2 3 5 7
    r = classify_exceptional("E7", 421, None, PrimeSet((2, 3, 5, 7)))
    assert r.k_pi == 1


def test_e6_five_condition():
    # eta = eps needs 5 in pi; q=13: eps=+1, q-1=12
    r = classify_exceptional("E6", 13, 1, P23)
    assert r.e_pi == NO
    r = classify_exceptional("E6", 13, -1, P23)
    assert r.k_pi == 1


def test_3d4_torus():
    r = classify_exceptional("3D4", 13, None, P23)
    assert r.k_pi == 1


# --------------------------------------------------------------------------
# symmetric / alternating


def test_sym_cases():
    assert rep("Sym(7)", (2, 3)).classes[0].structure == "Sym(3) x Sym(4)"
    assert rep("Sym(11)", (2, 3)).e_pi == NO
    assert rep("Sym(7)", (2, 3, 5)).classes[0].structure == "Sym(6)"
    assert rep("Sym(8)", (2, 3)).classes[0].structure == "Sym(4) wr Sym(2)"
    assert rep("Sym(5)", (2, 3)).classes[0].structure == "Sym(4)"
    assert rep("Sym(6)", (2, 3)).e_pi == NO


def test_alt_mirrors_sym():
    for n in range(5, 13):
        for pi in (P23, P235):
            s = classify_sym(n, pi)
            a = classify_alt(n, pi)
            assert s.e_pi == a.e_pi, (n, pi)
            assert s.k_pi == a.k_pi
            if s.e_pi == YES and 2 in pi:
                assert s.classes[0].structure_order == 2 * a.classes[0].structure_order


def test_sym_d_pi():
    assert rep("Sym(7)", (2, 3)).d_pi == NO
    assert rep("Sym(7)", (2, 3, 5, 7)).d_pi == YES  # whole group
    assert rep("Alt(7)", (2, 3)).d_pi == NO


def test_sym_hall_orbit_counts():
    assert sym_hall_case(4, P23).orbit_count == 1
    assert sym_hall_case(5, P23).orbit_count == 2
    assert sym_hall_case(7, P23).orbit_count == 2
    assert sym_hall_case(8, P23).orbit_count == 1
    assert sym_hall_case(7, P235).orbit_count == 2  # point stabilizer
    assert sym_hall_case(7, PrimeSet((2, 3, 5, 7))).orbit_count == 1
    assert sym_hall_case(6, P23) is None


# --------------------------------------------------------------------------
# sporadic


def test_sporadic_table_rows():
    r = classify_sporadic("M11", P23)
    assert r.k_pi == 1 and r.classes[0].structure == "3^2:Q8.2"
    assert r.hall_order == 144
    r = classify_sporadic("M23", P235)
    assert r.k_pi == 2
    r = classify_sporadic("J1", P23)
    assert r.classes[0].structure == "2 x Alt(4)"
    r = classify_sporadic("M23", PrimeSet((2, 3, 5, 7, 11)))
    assert r.k_pi == 1 and r.classes[0].structure == "M22"


def test_sporadic_completeness_no_rows():
    r = classify_sporadic("M12", P23)
    assert r.e_pi == NO
    r = classify_sporadic("Co1", P235)
    assert r.e_pi == NO


def test_sporadic_j1_two_seven():
    r = classify_sporadic("J1", PrimeSet((2, 7)))
    assert r.k_pi == 1 and r.classes[0].structure == "2^3:7"
    assert r.hall_order == 56


def test_sporadic_hall_orders_match_table():
    for (name, gpi), rows in __import__("pihall.classify", fromlist=["x"]).SPORADIC_HALL_TABLE.items():
        spec = validate(parse_group(name))
        expected = pi_part(order(spec).order.value, gpi)
        for s in rows:
            assert structure_order(s) == expected, (name, gpi, s)


# --------------------------------------------------------------------------
# defining characteristic


def test_defining_char_psl_flags():
    r = rep("PSL(3,3)", (2, 3))
    assert r.scope_tag == TAG_DEFINING
    assert r.k_pi == 2
    assert r.hall_order == 432
    r = rep("PSL(5,2)", (2, 3))
    assert r.k_pi == 3
    r = rep("PSL(2,8)", (2, 3, 7))
    assert r.scope_tag == TAG_COVER and r.k_pi == 1


def test_defining_char_borel():
    # PSL(2,4): {2,3}-Hall = point stabilizer = Borel, order 12
    r = rep("PSL(2,4)", (2, 3))
    assert r.scope_tag == TAG_DEFINING
    assert r.k_pi == 1
    assert r.classes[0].case_id == "defining.borel"
    assert r.hall_order == 12
    r = rep("PSL(2,16)", (2, 3, 5))
    assert r.k_pi == 1 and r.hall_order == 240
    # PSL(2,9): pattern matches but the Borel is too small -> unresolved
    r = rep("PSL(2,9)", (2, 3))
    assert r.scope_tag == TAG_DEFINING
    assert r.k_pi is None


def test_defining_char_flag_agrees_with_cross_characteristic_twin():
    # PSL(3,2) and PSL(2,7) are the same simple group; the defining- and
    # cross-characteristic paths must agree on k and the Hall order
    flag = rep("PSL(3,2)", (2, 3))
    cross = rep("PSL(2,7)", (2, 3))
    assert flag.k_pi == cross.k_pi == 2
    assert flag.hall_order == cross.hall_order == 24


def test_defining_char_orthogonal_parabolic():
    r = rep("O+(10,2)", (2, 3, 5, 7))
    assert r.k_pi == 1
    assert r.classes[0].case_id == "defining.parabolic"


def test_defining_char_out_of_scope():
    r = rep("PSp(4,3)", (2, 3, 7))
    assert r.scope_tag == TAG_DEFINING
    assert r.k_pi is None and r.k_bound == BOUND_FULL


def test_borel_index_identity():
    # |S| / |B| must equal prod (q^d_i - 1) / (q-1)^rank, independent of isogeny
    from pihall.classify import _borel_pi_part

    cases = [
        ("PSL(2,9)", (2,), [2]),
        ("PSp(4,3)", (3,), [2, 4]),
        ("PSL(4,3)", (3,), [2, 3, 4]),
        ("G2(3)", (3,), [2, 6]),
    ]
    for text, pi_all, degrees in cases:
        spec = validate(parse_group(text))
        q = spec.q
        full_pi = PrimeSet(prime_spectrum(spec))
        b = _borel_pi_part(spec, full_pi)
        total = order(spec).order.value
        rank = len(degrees)
        expected_index = math.prod(q**d - 1 for d in degrees) // (q - 1) ** rank
        assert total % b == 0
        assert total // b == expected_index, text


# --------------------------------------------------------------------------
# small Ree groups


def test_small_ree_two_seven():
    r = rep("2G2(27)", (2, 7))
    assert r.k_pi == 2
    assert r.scope_tag == TAG_NO_3
    assert {c.structure for c in r.classes} == {"Z(28) : 2", "2^3:7"}
    assert r.hall_order == 56


def test_small_ree_other_pi_is_bounded():
    r = rep("2G2(27)", (2, 13))
    assert r.k_bound == BOUND_NO_3


# --------------------------------------------------------------------------
# induced bounds


def test_kpi_bound_examples():
    b = kpi_bound_almost_simple(parse_group("PSp(10,23)"), P23, "any")
    assert b.bound == (1, 9)
    b = kpi_bound_almost_simple(parse_group("PSL(2,7)"), PrimeSet((3, 7)), "any")
    assert b.bound == BOUND_NO_2
    b = kpi_bound_almost_simple(parse_group("Alt(7)"), P23, "any")
    assert b.exact == 1
    b = kpi_bound_almost_simple(parse_group("PSL(2,7)"), P23, "trivial")
    assert b.exact == 2
    # nonisomorphic Hall subgroups cannot fuse under outer automorphisms
    b = kpi_bound_almost_simple(parse_group("2G2(27)"), PrimeSet((2, 7)), "any")
    assert b.exact == 2
    # an exact socle value caps the induced count
    b = kpi_bound_almost_simple(parse_group("PSL(2,7)"), P23, "any")
    assert b.bound == (0, 1, 2)


# --------------------------------------------------------------------------
# report structure soundness


def sweep_sample_reports():
    reports = []
    for text in [
        "PSL(2,5)", "PSL(2,7)", "PSL(2,11)", "PSL(2,13)", "PSL(2,23)", "PSL(2,25)",
        "SL(2,7)", "SL(2,23)", "SU(3,7)", "SL(3,5)", "SL(4,11)", "SL(11,5)",
        "PSU(4,67)", "Sp(4,7)", "PSp(10,23)", "Sp(10,7)",
        "O(3,7)", "O+(4,7)", "O-(4,7)", "O(5,7)", "O+(6,13)", "O-(6,13)",
        "O(7,173)", "O+(8,173)", "O(9,173)", "O+(8,13)", "O(11,13)", "O-(12,13)",
        "G2(11)", "G2(13)", "F4(13)", "E6(13,-)", "E7(421)", "3D4(13)",
        "Sym(7)", "Sym(8)", "Alt(7)", "M11", "M23", "J1", "2G2(27)",
        "PSL(3,3)", "PSL(5,2)", "O+(10,2)",
    ]:
        for pi in (P23, P235, PrimeSet((2, 3, 7)), PrimeSet((2, 3, 5, 7))):
            reports.append(classify(parse_group(text), pi))
    return reports


def test_descriptor_order_soundness():
    """Each emitted class structure has the pi-part the report promises."""
    for r in sweep_sample_reports():
        for c in r.classes:
            assert pi_part(c.structure_order, r.pi) == r.hall_order, (
                format_group(r.spec), sorted(r.pi), c.case_id, c.structure,
            )
            if not c.structure.startswith("Hall(") and c.case_id not in (
                "trivial.whole_group",
            ):
                assert structure_order(c.structure) == c.structure_order, c


def test_report_invariants_hold_across_sample():
    for r in sweep_sample_reports():
        if r.k_pi is not None:
            assert (r.e_pi == YES) == (r.k_pi >= 1)
            assert sum(c.class_count for c in r.classes) == r.k_pi
            assert (r.c_pi == YES) == (r.k_pi == 1) or r.c_pi == OUT_OF_SCOPE
            if r.d_pi == YES:
                assert r.c_pi == YES
        else:
            assert r.k_bound is not None
        for c in r.classes:
            assert c.class_count >= 1
            assert all(cond.value for cond in c.conditions)


def test_exceptional_always_single_class():
    for text in ["G2(11)", "G2(13)", "F4(13)", "E6(13,-)", "E7(421)", "3D4(13)"]:
        for pi in (P23, PrimeSet((2, 3, 7)), PrimeSet((2, 3, 5, 7))):
            r = classify(parse_group(text), pi)
            if r.k_pi is not None and r.scope_tag == TAG_FULL:
                assert r.k_pi in (0, 1), (text, pi)


def test_symmetric_answers_outside_the_23_regime():
    # the symmetric/alternating classification is complete for every pi
    r = rep("Alt(5)", (2, 5))
    assert r.e_pi == NO and r.scope_tag == TAG_NO_3
    r = rep("Sym(5)", (3, 5))
    assert r.e_pi == NO and r.scope_tag == TAG_NO_2
    r = rep("Sym(7)", (5, 7))
    assert r.e_pi == NO
    r = rep("Sym(9)", (3,))  # Sylow regime caught upstream
    assert r.k_pi == 1 and r.scope_tag == TAG_SMALL
    r = rep("Alt(9)", (2, 3, 5, 7))
    assert r.k_pi == 1  # pi covers pi(G)


def test_full_grid_descriptor_soundness():
    """Every descriptor the default sweep grid ever emits is order-sound."""
    from pihall.cli import DEFAULT_PI_LIST, default_grid_specs, parse_pi, run_sweep

    reports, _ = run_sweep(default_grid_specs(30, 8), [parse_pi(t) for t in DEFAULT_PI_LIST])
    for r in reports:
        for c in r.classes:
            assert pi_part(c.structure_order, r.pi) == r.hall_order, (
                format_group(r.spec), sorted(r.pi), c.case_id, c.structure,
            )
            if not c.structure.startswith("Hall(") and c.case_id != "trivial.whole_group":
                assert structure_order(c.structure) == c.structure_order, c.structure
