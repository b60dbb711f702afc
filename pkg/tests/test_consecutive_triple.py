"""Closed-form tests for <a, a+1, a+2> against goldens and the engine."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import golden
from sgp.consecutive_triple import (
    OMEGA,
    TripleSemigroup,
    decompose_triple,
    denumerant_triple,
    factorizations_triple,
    gamma,
    length_triple,
    member_triple,
    monomial_basis,
    presentation_triple,
    s_d_i,
    s_d_ulf,
    s_ell,
    seed,
    ubetti_triple,
    ulf_membership_triple,
    ulf_triple,
)
from sgp.core_semigroup import (
    NotMemberError,
    Semigroup,
    apery,
    betti_elements,
    factorizations,
    length_set,
    length_sets_up_to,
    ulf,
)


def test_rejects_small_a():
    for a in (-1, 0, 1, 2):
        with pytest.raises(ValueError):
            TripleSemigroup(a)


def test_attributes():
    T = TripleSemigroup(10)
    assert T.generators == (10, 11, 12)
    assert T.frob == 49
    assert T.L == 4 and T.D == 3
    assert T.ulf_bound == 60
    T = TripleSemigroup(9)
    assert T.frob == 35
    assert T.L == 4 and T.D == 3
    assert T.ulf_bound == 54
    assert TripleSemigroup(15).ulf_bound == 135


def test_frobenius_matches_engine():
    for a in range(3, 30):
        assert TripleSemigroup(a).frob == Semigroup((a, a + 1, a + 2)).frobenius


# ---------------------------------------------------------------------------
# seed vectors and membership

def test_seed_spot_values():
    sd = seed(10, 43)
    assert sd.phi == (2, 1, 1)
    assert (sd.ell, sd.eps) == (4, 3)
    assert (sd.kappa, sd.xi) == (1, 2)
    assert (sd.iota, sd.c) == (2, -1)
    assert seed(10, 0).phi == (0, 0, 0)
    assert seed(15, 63).phi == (2, 1, 1)


def test_seed_value_identity():
    for a in (3, 9, 10, 15):
        for r in range(0, TripleSemigroup(a).ulf_bound):
            if not member_triple(a, r):
                continue
            sd = seed(a, r)
            lam, mu, eta = sd.phi
            assert lam * a + mu * (a + 1) + eta * (a + 2) == r
            assert lam + mu + eta == sd.ell


def test_membership_matches_engine():
    for a in (3, 4, 7, 12):
        S = Semigroup((a, a + 1, a + 2))
        for r in range(-3, 3 * TripleSemigroup(a).ulf_bound):
            assert member_triple(a, r) == (r >= 0 and r in S), (a, r)


# ---------------------------------------------------------------------------
# factorizations, denumerant, length, decomposition

def test_factorization_spot_values():
    assert set(map(tuple, factorizations_triple(10, 43))) == {
        (2, 1, 1), (1, 3, 0)}
    assert set(map(tuple, factorizations_triple(3, 8))) == {
        (0, 2, 0), (1, 0, 1)}
    for a in (3, 8, 21):
        assert factorizations_triple(a, a + 1) == [(0, 1, 0)]


def test_factorizations_are_the_omega_orbit():
    facs = factorizations_triple(10, 43)
    assert tuple(facs[1]) == tuple(x + w for x, w in zip(facs[0], OMEGA))


def test_factorizations_raise_for_non_member():
    with pytest.raises(NotMemberError):
        factorizations_triple(10, 13)
    with pytest.raises(NotMemberError):
        factorizations_triple(10, -5)


def test_factorizations_delegate_above_threshold():
    # 60 has lengths 5 and 6, so the closed form does not apply and the
    # answer must come back from the engine unchanged
    S = Semigroup((10, 11, 12))
    assert factorizations_triple(10, 60) == factorizations(S, 60)
    assert length_set(S, 60) == [5, 6]


def test_denumerant_spot_values():
    assert denumerant_triple(10, 44) == 3
    assert denumerant_triple(15, 96) == 4
    for a in (3, 10, 17):
        assert denumerant_triple(a, 0) == 1


def test_denumerant_signals_outside_domain():
    with pytest.raises(NotMemberError):
        denumerant_triple(10, 17)
    with pytest.raises(ValueError):
        denumerant_triple(10, 60)


def test_length_spot_values():
    assert length_triple(3, 8) == 2
    assert length_triple(10, 61) == 6
    assert length_triple(10, 109) == 10
    for a in (3, 10, 17):
        assert length_triple(a, 0) == 0


def test_length_signals_two_length_members():
    with pytest.raises(ValueError):
        length_triple(10, 60)
    with pytest.raises(NotMemberError):
        length_triple(10, 13)


def test_length_identity_with_denumerant():
    # ell = 2(delta - 1) + iota on the whole table region
    for a in (4, 9, 10, 15):
        for r in range(TripleSemigroup(a).ulf_bound):
            if member_triple(a, r):
                assert length_triple(a, r) == \
                    2 * (denumerant_triple(a, r) - 1) + seed(a, r).iota


def test_decompose_spot_values():
    d = decompose_triple(10, 43)
    assert (d.d, d.i, d.c) == (2, 2, -1)
    d = decompose_triple(15, 109)
    assert (d.d, d.i, d.c) == (3, 3, -3)
    d = decompose_triple(12, 0)
    assert (d.d, d.i, d.c) == (1, 0, 0)


def test_decompose_reconstructs_r():
    for a in (5, 10, 15):
        for r in range(TripleSemigroup(a).ulf_bound):
            if not member_triple(a, r):
                continue
            d = decompose_triple(a, r)
            assert (a + 1) * (2 * d.d - 2 + d.i) + d.c == r
            assert d.c in gamma(d.i)


def test_decompose_signals_outside_domain():
    with pytest.raises(ValueError):
        decompose_triple(10, 60)
    with pytest.raises(NotMemberError):
        decompose_triple(10, 29)


# ---------------------------------------------------------------------------
# unique-length membership

def test_ulf_membership_matches_engine():
    for a in (3, 6, 9, 14):
        S = Semigroup((a, a + 1, a + 2))
        members = ulf(S)
        top = members[-1] + 2 * a
        table = length_sets_up_to(S, top)
        for r in range(top + 1):
            expected = table[r] is not None and len(table[r]) == 1
            assert ulf_membership_triple(a, r) == expected, (a, r)


def test_ulf_membership_is_constant_time_far_out():
    assert not ulf_membership_triple(10, 10 ** 12)
    assert not ulf_membership_triple(9, 10 ** 12 + 7)


# ---------------------------------------------------------------------------
# gamma and the partition pieces

def test_gamma():
    assert gamma(0) == [0]
    assert gamma(1) == [-1, 0, 1]
    assert gamma(2) == [-2, -1, 1, 2]
    assert gamma(3) == [-3, -2, 2, 3]
    with pytest.raises(ValueError):
        gamma(-1)


def test_s_ell_spot_values():
    assert list(s_ell(10, 2)) == [20, 21, 22, 23, 24]
    assert list(s_ell(10, 6)) == [61, 62, 63, 64, 65, 66, 67, 68, 69]
    assert list(s_ell(9, 5)) == list(range(45, 54))
    assert list(s_ell(9, 9)) == [89]
    for a in (3, 10, 23):
        assert list(s_ell(a, 0)) == [0]
        assert list(s_ell(a, a + 1)) == []
    with pytest.raises(ValueError):
        s_ell(10, -1)


def test_s_ell_rows_group_by_length():
    for a, rows in [(10, golden.BY_LENGTH_A10)]:
        for ell, row in enumerate(rows):
            assert list(s_ell(a, ell)) == row


def test_s_d_i_spot_values():
    assert s_d_i(10, 2, 2) == [42, 43, 45, 46]
    assert s_d_i(15, 4, 1) == [111, 112, 113]
    for a in (3, 11, 20):
        assert s_d_i(a, 1, 0) == [0]
    with pytest.raises(ValueError):
        s_d_i(10, 4, 0)  # d beyond D=3
    with pytest.raises(ValueError):
        s_d_i(10, 3, 1)  # i beyond I_3=0


def test_s_d_ulf_golden():
    for (a, d), expected in golden.S_D_ULF_CASES.items():
        assert set(s_d_ulf(a, d)) == expected
    with pytest.raises(ValueError):
        s_d_ulf(10, 6)
    with pytest.raises(ValueError):
        s_d_ulf(9, 0)


def test_s_d_ulf_rows_group_by_denumerant():
    for a, rows in [(10, golden.BY_DENUMERANT_A10),
                    (9, golden.BY_DENUMERANT_A9)]:
        for row_index, row in enumerate(rows):
            assert sorted(s_d_ulf(a, row_index + 1)) == row


# ---------------------------------------------------------------------------
# the full unique-length set

def test_ulf_triple_equals_apery_form():
    S = Semigroup((10, 11, 12))
    assert [u.r for u in ulf_triple(10)] == apery(S, 60)


def test_ulf_triple_a15_golden():
    assert [u.r for u in ulf_triple(15)] == golden.ULF_A15


def test_ulf_triple_contains_zero():
    for a in (3, 8, 13):
        first = ulf_triple(a)[0]
        assert (first.r, first.lam, first.mu, first.eta) == (0, 0, 0, 0)


def test_ulf_triple_cardinality():
    for a in range(3, 26):
        n = len(ulf_triple(a))
        if a % 2 == 0:
            assert n == (a // 2) * (a + 2)
        else:
            assert n == (a + 1) ** 2 // 2


def test_ulf_triple_coordinates_are_factorizations():
    for a in (6, 9):
        for u in ulf_triple(a):
            assert u.lam * a + u.mu * (a + 1) + u.eta * (a + 2) == u.r
            facs = set(map(tuple, factorizations_triple(a, u.r)))
            assert (u.lam, u.mu, u.eta) in facs


# ---------------------------------------------------------------------------
# Betti classification and presentation

def test_ubetti_spot_values():
    cls = ubetti_triple(10)
    assert cls.balanced == (22,) and cls.unbalanced == (60,)
    cls = ubetti_triple(15)
    assert cls.betti == (32, 135, 136) and cls.unbalanced == (135, 136)
    assert ubetti_triple(9).betti == (20, 54, 55)


def test_ubetti_matches_engine():
    for a in range(3, 18):
        assert ubetti_triple(a) == betti_elements(Semigroup((a, a + 1, a + 2)))


def test_presentation_even():
    pres = presentation_triple(10)
    assert [(tuple(x), tuple(y)) for x, y in pres.relations] == [
        ((0, 2, 0), (1, 0, 1)), ((6, 0, 0), (0, 0, 5))]


def test_presentation_odd():
    # a=3: c=1, three relators with values 8, 9, 10, and each side must be
    # one of the two factorizations of its value
    pres = presentation_triple(3)
    assert len(pres.relations) == 3
    S = Semigroup((3, 4, 5))
    values = []
    for x, y in pres.relations:
        v = S.value(x)
        assert v == S.value(y)
        assert {tuple(x), tuple(y)} == golden.TINY_FACTORIZATIONS[v]
        values.append(v)
    assert sorted(values) == [8, 9, 10]


def test_presentation_relators_balance():
    for a in range(3, 32):
        S = Semigroup((a, a + 1, a + 2))
        rels = presentation_triple(a).relations
        assert len(rels) == (2 if a % 2 == 0 else 3)
        for x, y in rels:
            assert S.value(x) == S.value(y)


def test_presentation_degrees_are_betti_elements():
    for a in (7, 12, 19):
        S = Semigroup((a, a + 1, a + 2))
        degrees = sorted({S.value(x) for x, _ in
                          presentation_triple(a).relations})
        assert degrees == list(ubetti_triple(a).betti)


# ---------------------------------------------------------------------------
# monomial rendering

def test_monomial_spot_values():
    assert monomial_basis(10, 44) == ["x^2z^2", "xy^2z", "y^4"]
    assert monomial_basis(15, 63) == ["x^2yz", "xy^3"]
    for a in (3, 10, 16):
        assert monomial_basis(a, 0) == ["1"]


def test_monomial_superscript_variant():
    assert monomial_basis(10, 44, superscript=True) == ["x²z²", "xy²z", "y⁴"]
    assert monomial_basis(15, 0, superscript=True) == ["1"]


def test_monomial_signals_outside_domain():
    with pytest.raises(NotMemberError):
        monomial_basis(10, 15)
    with pytest.raises(ValueError):
        monomial_basis(10, 60)


# ---------------------------------------------------------------------------
# randomized agreement on the whole unique-length region

@settings(max_examples=25, deadline=None)
@given(a=st.integers(min_value=3, max_value=22),
       data=st.data())
def test_random_members_agree_with_engine(a, data):
    S = Semigroup((a, a + 1, a + 2))
    bound = TripleSemigroup(a).ulf_bound
    r = data.draw(st.integers(min_value=0, max_value=bound - 1))
    if not member_triple(a, r):
        assert r not in S
        return
    facs = factorizations(S, r)
    assert sorted(map(tuple, factorizations_triple(a, r))) == \
        sorted(map(tuple, facs))
    assert denumerant_triple(a, r) == len(facs)
    assert length_triple(a, r) == r // a
