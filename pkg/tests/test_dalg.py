"""Tests for the abstract Δ-algebra: small multiplication tables, unity
formulas, center/radical dimensions, and the homomorphism onto rook sums."""

from fractions import Fraction
from math import comb, factorial

import pytest

from snalg.dalg import (
    DElement,
    associativity_check,
    basis_index,
    basis_pairs,
    center_dim,
    d_dim,
    d_mul,
    quotient_map_check,
    radical_basis,
    radical_dim,
    reference_stats,
    reference_unity,
    stats,
    to_group_algebra,
    unity_find,
)
from snalg.exactla import GF, QQ, SpanBasis
from snalg.groupalg import mul as algebra_mul
from snalg.perm import enumerate_av
from snalg.rook import Subset, nabla


def S(n, *members):
    return Subset(n, members)


def basis(n, b_members, a_members, field=QQ):
    return DElement.basis(n, Subset(n, b_members), Subset(n, a_members), field)


# ---------------------------------------------------------------------------
# basis bookkeeping


def test_dimension_is_central_binomial():
    for n in range(1, 7):
        assert d_dim(n) == comb(2 * n, n)


def test_dimension_counts_avoider_classes():
    # C(2n,n) = (n+1) * Catalan(n), and Catalan(n) counts Av_n(3).
    for n in range(1, 6):
        catalan = len(enumerate_av(n, 3))
        assert d_dim(n) == (n + 1) * catalan


def test_basis_order_by_size_then_lex():
    pairs = basis_pairs(2)
    labels = [(sorted(b.members), sorted(a.members)) for b, a in pairs]
    assert labels == [
        ([], []),
        ([1], [1]),
        ([1], [2]),
        ([2], [1]),
        ([2], [2]),
        ([1, 2], [1, 2]),
    ]


def test_basis_index_round_trip():
    for n in (1, 2, 3):
        for idx, (b, a) in enumerate(basis_pairs(n)):
            assert basis_index(n, b, a) == idx


def test_basis_rejects_mismatched_sizes():
    with pytest.raises(ValueError):
        DElement.basis(2, S(2, 1), S(2, 1, 2))


# ---------------------------------------------------------------------------
# element arithmetic


def test_element_arithmetic_and_vectors():
    x = basis(2, [1], [2]) + 3 * basis(2, [1, 2], [1, 2])
    y = x - basis(2, [1], [2])
    assert y == 3 * basis(2, [1, 2], [1, 2])
    assert (x - x).is_zero()
    assert DElement.from_vector(2, x.to_vector()) == x
    assert str(y) == "3*D({1,2}|{1,2})"
    assert str(DElement.zero(2)) == "0"


def test_mixed_sizes_rejected():
    with pytest.raises(ValueError):
        d_mul(basis(2, [1], [1]), basis(3, [1], [1]))


# ---------------------------------------------------------------------------
# hand multiplication tables


def test_table_n1():
    u = basis(1, [], [])
    v = basis(1, [1], [1])
    assert d_mul(u, u) == u
    assert d_mul(u, v) == u
    assert d_mul(v, u) == u
    assert d_mul(v, v) == v


def test_table_n2():
    u = basis(2, [], [])
    v = {(i, j): basis(2, [i], [j]) for i in (1, 2) for j in (1, 2)}
    w = basis(2, [1, 2], [1, 2])
    assert d_mul(u, u) == 2 * u
    assert d_mul(u, w) == 2 * u
    assert d_mul(w, u) == 2 * u
    assert d_mul(w, w) == 2 * w
    for (i, j), vij in v.items():
        assert d_mul(u, vij) == u
        assert d_mul(vij, u) == u
        assert d_mul(vij, w) == v[(i, 1)] + v[(i, 2)]
        assert d_mul(w, vij) == v[(1, j)] + v[(2, j)]
    for d, c in v:
        for b, a in v:
            expected = v[(d, a)] if b == c else u - v[(d, a)]
            assert d_mul(v[(d, c)], v[(b, a)]) == expected


# ---------------------------------------------------------------------------
# associativity


def test_associativity_exhaustive_small():
    for n in (1, 2, 3):
        rep = associativity_check(n)
        assert rep.passed
        assert rep.context["mode"] == "exhaustive"
        assert rep.data["triples"] == d_dim(n) ** 3


def test_associativity_sampled_n4():
    rep = associativity_check(4, trials=2000, seed=7)
    assert rep.passed
    assert rep.context["mode"] == "sampled"
    assert rep.data["triples"] == 2000


def test_associativity_bad_mode():
    with pytest.raises(ValueError):
        associativity_check(2, mode="fuzzy")


def test_cap_enforced():
    with pytest.raises(ValueError):
        associativity_check(6)
    with pytest.raises(ValueError):
        center_dim(6)


# ---------------------------------------------------------------------------
# unity


def test_unity_n1_is_top_symbol():
    assert unity_find(1) == basis(1, [1], [1]) == reference_unity(1)


def test_unity_n2_closed_form():
    v = {(i, j): basis(2, [i], [j]) for i in (1, 2) for j in (1, 2)}
    w = basis(2, [1, 2], [1, 2])
    expected = Fraction(1, 4) * (
        v[(1, 1)] + v[(2, 2)] - v[(1, 2)] - v[(2, 1)]
    ) + Fraction(1, 2) * w
    assert unity_find(2) == expected == reference_unity(2)


def test_unity_n3_closed_form():
    assert unity_find(3) == reference_unity(3)


def test_unity_is_two_sided_identity():
    e = unity_find(3)
    for idx in (0, 5, 11, 19):
        x = DElement(3, QQ, {idx: QQ.one})
        assert d_mul(e, x) == x
        assert d_mul(x, e) == x
    assert d_mul(e, e) == e


def test_no_unity_over_f2_at_n2():
    assert unity_find(2, GF(2)) is None


def test_unity_over_f5_at_n3_reduces_rational_formula():
    assert unity_find(3, GF(5)) == reference_unity(3, GF(5))


def test_reference_unity_unknown_n():
    with pytest.raises(ValueError):
        reference_unity(4)


# ---------------------------------------------------------------------------
# center and radical


def test_center_dims_small():
    assert center_dim(2) == 3
    assert center_dim(3) == 4


def test_radical_dims_small():
    assert radical_dim(2) == 3
    assert radical_dim(3) == 5
    assert radical_dim(4) == 39


def test_radical_rejects_prime_fields():
    with pytest.raises(ValueError):
        radical_dim(2, GF(2))


def test_radical_n2_explicit_description():
    # The radical is spanned by v12 - v21, v11 - v22 and 2u - (v11+v12+v21+v22):
    # the first two square to the third (up to sign) and the third squares to
    # zero.
    u = basis(2, [], [])
    v = {(i, j): basis(2, [i], [j]) for i in (1, 2) for j in (1, 2)}
    x2 = v[(1, 2)] - v[(2, 1)]
    x3 = v[(1, 1)] - v[(2, 2)]
    z = 2 * u - v[(1, 1)] - v[(1, 2)] - v[(2, 1)] - v[(2, 2)]
    assert d_mul(x2, x2) == z
    assert d_mul(x3, x3) == -1 * z
    assert d_mul(z, z).is_zero()

    computed = radical_basis(2)
    assert len(computed) == 3
    span = SpanBasis(QQ, d_dim(2))
    for x in computed:
        span.insert(x.to_vector())
    assert span.rank() == 3
    for x in (x2, x3, z):
        assert span.contains(x.to_vector())


def test_radical_n2_is_a_nilpotent_ideal():
    computed = radical_basis(2)
    span = SpanBasis(QQ, d_dim(2))
    for x in computed:
        span.insert(x.to_vector())
    generators = [DElement(2, QQ, {i: QQ.one}) for i in range(d_dim(2))]
    for x in computed:
        for g in generators:
            assert span.contains(d_mul(x, g).to_vector())
            assert span.contains(d_mul(g, x).to_vector())
    squares = [d_mul(x, y) for x in computed for y in computed]
    for p in squares:
        assert span.contains(p.to_vector())
        for x in computed:
            assert d_mul(p, x).is_zero()


def test_u_minus_offdiagonals_is_not_in_the_radical():
    # A tempting combination that is *not* radical: u - v12 - v21 squares to
    # v11 + v22 - v12 - v21, which satisfies y*y = 4y, so no power of
    # u - v12 - v21 vanishes.
    u = basis(2, [], [])
    v = {(i, j): basis(2, [i], [j]) for i in (1, 2) for j in (1, 2)}
    x1 = u - v[(1, 2)] - v[(2, 1)]
    y = d_mul(x1, x1)
    assert y == v[(1, 1)] + v[(2, 2)] - v[(1, 2)] - v[(2, 1)]
    assert d_mul(y, y) == 4 * y
    span = SpanBasis(QQ, d_dim(2))
    for x in radical_basis(2):
        span.insert(x.to_vector())
    assert not span.contains(x1.to_vector())


# ---------------------------------------------------------------------------
# homomorphism onto rook sums


def test_to_group_algebra_sends_symbols_to_rook_sums():
    for n in (2, 3):
        for b, a in basis_pairs(n):
            x = DElement.basis(n, b, a)
            assert to_group_algebra(x) == nabla(b, a)


def test_quotient_map_exhaustive_small():
    for n in (2, 3):
        rep = quotient_map_check(n)
        assert rep.passed
        assert rep.data["pairs"] == d_dim(n) ** 2


def test_quotient_map_sampled_n4():
    rep = quotient_map_check(4, trials=60, seed=3)
    assert rep.passed
    assert rep.data["pairs"] == 60


def test_quotient_map_image_rank_is_catalan():
    for n in (2, 3, 4):
        span = SpanBasis(QQ, factorial(n))
        for b, a in basis_pairs(n):
            span.insert(nabla(b, a).to_vector())
        assert span.rank() == len(enumerate_av(n, 3))


# ---------------------------------------------------------------------------
# stats rows


def test_stats_row_n2():
    row = stats(2)
    assert row == {
        "n": 2,
        "dim": 6,
        "center_dim": 3,
        "radical_dim": 3,
        "unity": str(reference_unity(2)),
    }


def test_stats_row_f2_omits_radical():
    row = stats(2, GF(2))
    assert row["radical_dim"] is None
    assert row["unity"] is None


def test_reference_stats_shape():
    rows = reference_stats()
    assert [r["n"] for r in rows] == [2, 3, 4, 5]
    assert [r["dim"] for r in rows] == [6, 20, 70, 252]
    assert [r["center_dim"] for r in rows] == [3, 4, 5, 6]
    assert [r["radical_dim"] for r in rows] == [3, 5, 39, 84]
