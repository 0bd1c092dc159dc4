"""Unit extensions: construction, recognition, states, congruence transfer."""

from __future__ import annotations

import pytest

from gpea import (
    MalformedTableError,
    Partition,
    base_ideal_is_riesz_iff_upward,
    boolean,
    chain,
    classify_subset,
    congruence_suite,
    enumerate_ideals,
    enumerate_unitizing,
    extend_congruence,
    fig1,
    find_morphisms,
    gamma_unitize,
    is_unitizing,
    lift_congruence_biconditional,
    pea_view,
    quotient,
    quotient_unitization,
    recognize_unitization,
    restriction_verdict,
    sim_from_ideal,
    smallest_ideal_comparison,
    two_valued_states,
)
from gpea.catalog import enumerate_gpeas

IDENTITY6 = (0, 1, 2, 3, 4, 5)
SWAP6 = (0, 2, 1, 3, 5, 4)


# ------------------------------------------------------------ twist detection


def test_identity_is_unitizing_exactly_on_weakly_commutative_tables(
    small_pool,
):
    for label, g in small_pool:
        expected = g.flags.weakly_commutative
        assert is_unitizing(g, tuple(range(g.size))) == expected, label


def test_fig1_has_two_unitizing_automorphisms(fig1_algebra):
    assert enumerate_unitizing(fig1_algebra) == [IDENTITY6, SWAP6]


def test_automorphism_failing_definedness_transfer_is_not_unitizing():
    # In this table 1+1 is defined but 3+3 is its only mirror image under
    # the swap, and 3+1 is undefined, so the transfer condition breaks.
    g = enumerate_gpeas(4)[1]
    assert find_morphisms(g, g, "iso") == [(0, 1, 2, 3), (0, 3, 2, 1)]
    assert is_unitizing(g, (0, 3, 2, 1)) is False
    assert enumerate_unitizing(g) == [(0, 1, 2, 3)]


def test_non_automorphism_is_not_unitizing(fig1_algebra):
    assert is_unitizing(fig1_algebra, (0, 1, 2, 4, 3, 5)) is False


def test_antichain_admits_every_zero_fixing_permutation():
    assert len(enumerate_unitizing(enumerate_gpeas(4)[4])) == 6


def test_unitize_rejects_non_unitizing_twist():
    g = enumerate_gpeas(4)[1]
    with pytest.raises(MalformedTableError):
        gamma_unitize(g, (0, 3, 2, 1))


# -------------------------------------------------------------- construction


def test_extension_layout(fig1_algebra):
    ua = gamma_unitize(fig1_algebra, IDENTITY6)
    u = ua.algebra
    assert u.size == 12
    assert ua.unit == 6
    assert ua.base_members == frozenset(range(6))
    assert ua.mirror_members == frozenset(range(6, 12))
    assert [ua.eta(a) for a in range(6)] == list(range(6, 12))
    assert u.name(6) == "η0" and u.name(7) == "ηa" and u.name(11) == "ηb+c"
    assert u.flags.has_unit and u.flags.upward_directed


def test_extension_operation_clauses(fig1_algebra):
    ua = gamma_unitize(fig1_algebra, IDENTITY6)
    u = ua.algebra
    # Base sums are preserved.
    for (a, b), s in fig1_algebra.op.items():
        assert u.value(a, b) == s
    # a + ηb is defined exactly when a <= b, with value η(b minus a).
    assert u.value(1, ua.eta(4)) == ua.eta(3)
    assert u.value(1, ua.eta(5)) is None
    # Mirror elements never compose with each other.
    assert u.value(ua.eta(1), ua.eta(2)) is None
    # The unit is η0 and every element has it as an upper bound.
    assert all(u.le(x, ua.unit) for x in u.elements)


def test_supplement_formulas_encode_the_twist(fig1_algebra):
    for gamma in (IDENTITY6, SWAP6):
        ua = gamma_unitize(fig1_algebra, gamma)
        view = pea_view(ua.algebra)
        for a in range(6):
            assert view.right_supp[a] == ua.eta(a)
            assert view.left_supp[a] == ua.eta(gamma[a])
            assert view.ll(a) == gamma[a]
            assert view.left_supp[ua.eta(a)] == a


def test_base_is_a_normal_maximal_proper_ideal(fig1_algebra):
    ua = gamma_unitize(fig1_algebra, IDENTITY6)
    flags = classify_subset(ua.algebra, ua.base_members)
    assert flags.ideal and flags.normal
    between = [
        members
        for members in enumerate_ideals(ua.algebra)
        if ua.base_members < members and len(members) < ua.algebra.size
    ]
    assert between == []


def test_two_element_extension_is_the_square():
    ua = gamma_unitize(chain(1), (0, 1))
    assert ua.algebra.size == 4
    assert find_morphisms(ua.algebra, boolean(2), "iso")


# ----------------------------------------------------------------- recognition


def test_recognition_roundtrip(fig1_algebra):
    for gamma in (IDENTITY6, SWAP6):
        ua = gamma_unitize(fig1_algebra, gamma)
        rec = recognize_unitization(ua.algebra, ua.base_members)
        assert rec.recognized and bool(rec)
        assert rec.gamma == gamma
        assert rec.extension.algebra.same_table(ua.algebra)
        assert rec.diagnostics == "ok"


def test_recognition_accepts_relabelled_extensions():
    rec = recognize_unitization(boolean(2), {0, 1})
    assert rec.recognized
    assert rec.gamma == (0, 1)
    assert rec.iso is not None


def test_recognition_soft_rejections(fig1_algebra):
    assert not recognize_unitization(fig1_algebra, {0, 3}).recognized
    assert (
        recognize_unitization(fig1_algebra, {0, 3}).diagnostics
        == "carrier has no unit"
    )
    ua = gamma_unitize(fig1_algebra, IDENTITY6)
    # Subset of the wrong size, subset containing the unit, subset missing 0.
    assert not recognize_unitization(ua.algebra, {0, 1, 2}).recognized
    assert not recognize_unitization(ua.algebra, ua.mirror_members).recognized
    assert not recognize_unitization(ua.algebra, {1, 2, 3, 4, 5, 6}).recognized


# ---------------------------------------------------------------------- states


def test_two_valued_state_kernels_on_fig1_extension(fig1_algebra):
    ua = gamma_unitize(fig1_algebra, IDENTITY6)
    states = two_valued_states(ua.algebra)
    kernels = [sorted(s.kernel) for s in states]
    assert kernels == [
        [0, 1, 2, 3, 4, 5],
        [0, 1, 2, 9, 10, 11],
        [0, 1, 3, 4, 8, 11],
        [0, 2, 3, 5, 7, 10],
        [0, 3, 7, 8, 10, 11],
    ]
    for s in states:
        assert s.values[ua.unit] == 1 and s.values[0] == 0


def test_two_valued_state_kernel_on_chain_extension():
    ua = gamma_unitize(chain(2), (0, 1, 2))
    assert [sorted(s.kernel) for s in two_valued_states(ua.algebra)] == [
        [0, 1, 2]
    ]


def test_state_additivity(fig1_algebra):
    ua = gamma_unitize(fig1_algebra, IDENTITY6)
    for s in two_valued_states(ua.algebra):
        for (a, b), c in ua.algebra.op.items():
            assert s.values[a] + s.values[b] == s.values[c]


# ------------------------------------------------------- congruence transfer


def test_extend_congruence_mirrors_base_blocks(fig1_algebra):
    ua = gamma_unitize(fig1_algebra, IDENTITY6)
    assert extend_congruence(ua, Partition.identity(6)) == Partition.identity(
        12
    )
    extended = extend_congruence(ua, sim_from_ideal(fig1_algebra, {0, 3}))
    assert set(extended.blocks) == {
        frozenset(b)
        for b in ({0, 3}, {1, 4}, {2, 5}, {6, 9}, {7, 10}, {8, 11})
    }


def test_lift_biconditional_over_all_base_congruences(fig1_algebra):
    from gpea import congruences

    ua = gamma_unitize(fig1_algebra, IDENTITY6)
    count = 0
    for rel in congruences(fig1_algebra):
        assert lift_congruence_biconditional(ua, rel)
        count += 1
    assert count == 8


def test_suite_on_padded_ideal_is_all_positive(fig1_algebra):
    ua = gamma_unitize(fig1_algebra, IDENTITY6)
    report = congruence_suite(ua, {0, 3})
    assert report.passed
    assert report.equivalent
    assert report.gcr and report.gcr_right_variant and report.forms_agree
    assert report.lift_riesz and report.ideal_riesz_in_extension
    assert report.gcr_triangle
    assert report.upward_all is None  # base is not upward directed


def test_suite_on_unpadded_ideal_shows_the_negative_side(fig1_algebra):
    # {0,a,b} is normal Riesz and twist-closed in the base, yet its
    # relation admits no member padding for the pair (a+c, b+c); the
    # suite's biconditionals all hold, with the padded/Riesz-in-extension
    # verdicts both negative.
    ua = gamma_unitize(fig1_algebra, IDENTITY6)
    report = congruence_suite(ua, {0, 1, 2})
    assert report.passed
    assert report.equivalent
    assert dict(report.conditions) == {
        "lift_c3": True,
        "ideal_riesz_twist_closed": True,
        "relation_twist_c4_c5p": True,
        "lift_full_congruence": True,
    }
    assert report.gcr is False
    assert report.lift_riesz is False
    assert report.ideal_riesz_in_extension is False
    assert report.gcr_triangle  # the biconditional itself still holds


def test_suite_on_upward_base_checks_the_unconditional_clause():
    report = congruence_suite(gamma_unitize(chain(2), (0, 1, 2)), {0, 1, 2})
    assert report.passed and report.upward_all is True
    assert "upward_all=true" in report.lines()


def test_suite_rejects_subsets_outside_its_hypotheses(fig1_algebra):
    ua = gamma_unitize(fig1_algebra, IDENTITY6)
    with pytest.raises(MalformedTableError):
        congruence_suite(ua, {0, 4})  # not an ideal of the base


# --------------------------------------------------- quotient-then-extend


def test_quotient_extension_square_on_the_boolean_table():
    b = boolean(2)
    rel = sim_from_ideal(b, {0, 2})
    q = quotient(b, rel)
    assert q.size == 2 and find_morphisms(q, chain(1), "iso")
    verdict = quotient_unitization(gamma_unitize(b, (0, 1, 2, 3)), rel)
    assert verdict.passed
    assert verdict.gamma_tilde == (0, 1)
    assert verdict.detail == "tables coincide"


def test_quotient_extension_square_on_fig1_blocks(fig1_algebra):
    ua = gamma_unitize(fig1_algebra, IDENTITY6)
    verdict = quotient_unitization(ua, sim_from_ideal(fig1_algebra, {0, 3}))
    assert verdict.passed


def test_quotient_extension_rejects_non_congruences(fig1_algebra):
    ua = gamma_unitize(fig1_algebra, IDENTITY6)
    with pytest.raises(MalformedTableError):
        quotient_unitization(ua, Partition.from_block_of([0, 0, 1, 2, 3, 4]))


# ------------------------------------------------------- ideal transfer facts


def test_base_riesz_iff_upward_on_named_instances(fig1_algebra):
    assert base_ideal_is_riesz_iff_upward(
        gamma_unitize(fig1_algebra, IDENTITY6)
    ) == (False, False)
    assert base_ideal_is_riesz_iff_upward(
        gamma_unitize(chain(2), (0, 1, 2))
    ) == (True, True)


def test_restriction_of_extension_ideals_to_the_base(fig1_algebra):
    assert restriction_verdict(gamma_unitize(fig1_algebra, IDENTITY6)) == (
        True,
        None,
    )
    assert restriction_verdict(gamma_unitize(chain(2), (0, 1, 2))) == (
        True,
        None,
    )


def test_smallest_ideal_comparison_diverges_on_chains():
    # The base of a chain has only its improper whole as a nontrivial
    # normal Riesz ideal, while the extension has two incomparable ones
    # ({0, η-top} and the base), hence no smallest: the two sides of the
    # existence statement genuinely disagree under the improper-included
    # reading and agree under the proper-only reading.
    cmp_default = smallest_ideal_comparison(gamma_unitize(chain(2), (0, 1, 2)))
    assert cmp_default.base_smallest == frozenset({0, 1, 2})
    assert cmp_default.extension_smallest is None
    assert cmp_default.agree is False
    cmp_proper = smallest_ideal_comparison(
        gamma_unitize(chain(2), (0, 1, 2)), include_improper=False
    )
    assert cmp_proper.base_smallest is None
    assert cmp_proper.extension_smallest is None
    assert cmp_proper.agree is True


def test_smallest_ideal_comparison_agrees_on_fig1(fig1_algebra):
    cmp = smallest_ideal_comparison(gamma_unitize(fig1_algebra, IDENTITY6))
    assert cmp.base_smallest is None
    assert cmp.extension_smallest is None
    assert cmp.agree is True
