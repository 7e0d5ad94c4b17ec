"""The complementary ideals I_k and J_k of the group algebra of S_n.

I_k is spanned by row-to-row sums over set compositions with at most k
blocks; J_k is the two-sided ideal generated by antisymmetrizers of
(k+1)-element subsets.  Both carry triangular bases indexed by
permutations: I_k by the permutations avoiding an increasing (k+1)-pattern
(each basis element has coefficient 1 on its index permutation and support
only lex-below it), J_k by the remaining permutations (coefficient 1 on the
index, support only lex-above).  The verification routines check, in exact
arithmetic, the rank formulas, mutual annihilation, orthogonality, the
direct-sum decomposition when n! is invertible, quotient bases, antipode
stability, and spanning of sampled generators.
"""

from __future__ import annotations

import random
from math import factorial

from snalg.exactla import DenseMatrix, QQ, SpanBasis, span_intersection_dim
from snalg.groupalg import (
    AlgebraElement,
    antipode,
    dot,
    mul,
    permutation_basis,
    sign_twist,
)
from snalg.perm import (
    Permutation,
    enumerate_av,
    enumerate_av_prime,
    erdos_szekeres_decomposition,
    lis_starting_lengths,
)
from snalg.report import Report
from snalg.rook import Subset
from snalg.setdecomp import (
    SetDecomposition,
    act,
    antisymmetrizer,
    random_set_composition,
    row_sum,
    tuple_sum,
)

__all__ = [
    "IdealBasis",
    "BASIS_CAP",
    "VERIFY_CAP",
    "increasing_witness",
    "build_I_basis",
    "build_J_basis",
    "sign_twisted",
    "verify_row_main",
    "orthogonal_complement_check",
    "tuple_sum_span_check",
    "twin_check",
    "mixed_quotient_check",
    "cross_char_intersection",
]

BASIS_CAP = 6
VERIFY_CAP = 5


class IdealBasis:
    """A triangular basis of I_k, J_k, or a sign-twisted copy.

    elements[i] has coefficient +1 on leaders[i]; for kind "I" (and its
    twist) the rest of the support is lex-smaller, for kind "J" lex-greater,
    so the family is linearly independent by inspection.
    """

    __slots__ = ("n", "k", "field", "kind", "elements", "leaders")

    def __init__(self, n, k, field, kind, elements, leaders):
        if kind not in ("I", "J", "sign-twisted-I", "sign-twisted-J"):
            raise ValueError(f"unknown basis kind {kind!r}")
        self.n = n
        self.k = k
        self.field = field
        self.kind = kind
        self.elements = tuple(elements)
        self.leaders = tuple(leaders)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def span(self) -> SpanBasis:
        s = SpanBasis(self.field, factorial(self.n))
        for e in self.elements:
            s.insert(e.to_vector())
        return s

    def __repr__(self) -> str:
        return (
            f"IdealBasis(kind={self.kind}, n={self.n}, k={self.k}, "
            f"size={len(self.elements)})"
        )


def _check_cap(n: int, cap: int) -> None:
    if not 1 <= n <= cap:
        raise ValueError(f"n = {n} outside supported range 1..{cap}")


def increasing_witness(v: Permutation, k: int) -> Subset:
    """The lexicographically smallest (k+1)-element set of positions on
    which v is increasing.  Requires v to contain an increasing subsequence
    of length k+1."""
    n = v.n
    starting = lis_starting_lengths(v)
    picked = []
    need = k + 1
    last_val = 0
    for p in range(1, n + 1):
        if v(p) > last_val and starting[p - 1] >= need:
            picked.append(p)
            last_val = v(p)
            need -= 1
            if need == 0:
                return Subset(n, picked)
    raise ValueError(f"{v.oln} has no increasing subsequence of length {k + 1}")


def build_I_basis(n: int, k: int, field=QQ, cap: int = BASIS_CAP) -> IdealBasis:
    """Triangular basis of I_k: one row-to-row sum per permutation avoiding
    an increasing (k+1)-subsequence, built from its strictly-decreasing
    block decomposition."""
    _check_cap(n, cap)
    elements = []
    leaders = []
    for v in enumerate_av(n, k + 1):
        A = erdos_szekeres_decomposition(v, k)
        B = act(v, A)
        elements.append(row_sum(B, A, field))
        leaders.append(v)
    return IdealBasis(n, k, field, "I", elements, leaders)


def build_J_basis(n: int, k: int, field=QQ, cap: int = BASIS_CAP) -> IdealBasis:
    """Triangular basis of J_k: one element v·∇_U⁻ per permutation v that
    contains an increasing (k+1)-subsequence, with U the deterministic
    smallest witness subset."""
    _check_cap(n, cap)
    elements = []
    leaders = []
    if k < n:
        avoiders = {v.rank() for v in enumerate_av(n, k + 1)}
        for v in permutation_basis(n):
            if v.rank() in avoiders:
                continue
            U = increasing_witness(v, k)
            elements.append(mul(AlgebraElement.from_perm(v, field), antisymmetrizer(U, field)))
            leaders.append(v)
    return IdealBasis(n, k, field, "J", elements, leaders)


def sign_twisted(basis: IdealBasis) -> IdealBasis:
    """Apply the sign-twist to every element; leaders are unchanged."""
    kind = {
        "I": "sign-twisted-I",
        "J": "sign-twisted-J",
        "sign-twisted-I": "I",
        "sign-twisted-J": "J",
    }[basis.kind]
    return IdealBasis(
        basis.n,
        basis.k,
        basis.field,
        kind,
        [sign_twist(e) for e in basis.elements],
        basis.leaders,
    )


def _unit_vector(n_fact: int, r: int, field):
    v = [field.zero] * n_fact
    v[r] = field.one
    return v


def _random_perm(rng: random.Random, n: int) -> Permutation:
    return permutation_basis(n)[rng.randrange(factorial(n))]


def verify_row_main(
    n: int,
    k: int,
    field=QQ,
    trials: int = 25,
    seed: int = 0,
    cap: int = VERIFY_CAP,
) -> Report:
    """Exact verification of the main structure theorem for (I_k, J_k):
    ranks, mutual annihilation, orthogonality, direct sum (when n! is
    invertible), sampled spanning, quotient bases, antipode stability, and
    generation of J_k by a single antisymmetrizer."""
    _check_cap(n, cap)
    rep = Report("verify_row_main", n=n, k=k, field=field.name)
    rng = random.Random(seed)
    n_fact = factorial(n)
    num_av = len(enumerate_av(n, k + 1))

    ibasis = build_I_basis(n, k, field, cap)
    jbasis = build_J_basis(n, k, field, cap)
    ispan = ibasis.span()
    jspan = jbasis.span()
    rep.data["rank_I"] = ispan.rank()
    rep.data["rank_J"] = jspan.rank()

    # (i) ranks match the avoider counts.
    rep.add(
        "ranks",
        ispan.rank() == num_av == len(ibasis)
        and jspan.rank() == n_fact - num_av == len(jbasis),
        note=f"I: {ispan.rank()} (expect {num_av}), J: {jspan.rank()} (expect {n_fact - num_av})",
    )

    # (ii) elementwise products vanish in both orders.
    ok = True
    witness = None
    for i, ei in zip(ibasis.leaders, ibasis.elements):
        for j, ej in zip(jbasis.leaders, jbasis.elements):
            if not mul(ei, ej).is_zero() or not mul(ej, ei).is_zero():
                ok, witness = False, f"I[{i.oln}] vs J[{j.oln}]"
                break
        if not ok:
            break
    rep.add("mutual_annihilation", ok, witness=witness)

    # (iii) dot products vanish.
    ok = True
    witness = None
    for i, ei in zip(ibasis.leaders, ibasis.elements):
        for j, ej in zip(jbasis.leaders, jbasis.elements):
            if dot(ei, ej):
                ok, witness = False, f"I[{i.oln}] vs J[{j.oln}]"
                break
        if not ok:
            break
    rep.add("orthogonality", ok, witness=witness)

    # (iv) direct sum decomposition, valid when n! is invertible.
    if field.characteristic == 0 or factorial(n) % field.characteristic:
        total = ispan.copy()
        for e in jbasis.elements:
            total.insert(e.to_vector())
        inter = span_intersection_dim(ispan, jspan)
        rep.add(
            "direct_sum",
            total.rank() == n_fact and inter == 0,
            note=f"sum rank {total.rank()}, intersection {inter}",
        )
    else:
        rep.skip("direct_sum", f"hypothesis n! invertible fails in {field.name}")

    # (v) sampled spanning families lie in the spans.
    if k >= 1:
        ok = True
        witness = None
        for _ in range(trials):
            A = random_set_composition(rng, n, k)
            w = _random_perm(rng, n)
            B = act(w, A)
            if not ispan.contains(row_sum(B, A, field).to_vector()):
                ok, witness = False, f"row_sum({B}, {A})"
                break
        rep.add("sampled_row_sums_in_I", ok, witness=witness)
    else:
        rep.skip("sampled_row_sums_in_I", "no set compositions with at most 0 blocks")
    if k < n:
        ok = True
        witness = None
        for _ in range(trials):
            U = Subset(n, rng.sample(range(1, n + 1), k + 1))
            v = _random_perm(rng, n)
            elt = mul(AlgebraElement.from_perm(v, field), antisymmetrizer(U, field))
            if not jspan.contains(elt.to_vector()):
                ok, witness = False, f"{v.oln}*antisym({U})"
                break
        rep.add("sampled_generators_in_J", ok, witness=witness)
    else:
        rep.skip("sampled_generators_in_J", f"no (k+1)-subsets of [{n}] for k = {k}")

    # (vi) complementary permutations complete each span to full rank.
    avoider_ranks = {v.rank() for v in ibasis.leaders}
    iquot = ispan.copy()
    for r in range(n_fact):
        if r not in avoider_ranks:
            iquot.insert(_unit_vector(n_fact, r, field))
    jquot = jspan.copy()
    for r in avoider_ranks:
        jquot.insert(_unit_vector(n_fact, r, field))
    rep.add(
        "quotient_bases",
        iquot.rank() == n_fact and jquot.rank() == n_fact,
        note=f"I-completion {iquot.rank()}, J-completion {jquot.rank()}",
    )

    # (vii) the antipode preserves both spans.
    ok = all(ispan.contains(antipode(e).to_vector()) for e in ibasis.elements) and all(
        jspan.contains(antipode(e).to_vector()) for e in jbasis.elements
    )
    rep.add("antipode_stability", ok)

    # (viii) J_k is the two-sided ideal of a single (k+1)-antisymmetrizer.
    if k < n:
        X = Subset(n, range(1, k + 2))
        aX = antisymmetrizer(X, field)
        regen = SpanBasis(field, n_fact)
        ok = True
        witness = None
        target = jspan.rank()
        # Deterministic one-sided products, then random two-sided products
        # until the rank stalls.
        for w in permutation_basis(n):
            we = AlgebraElement.from_perm(w, field)
            for prod, tag in ((mul(we, aX), "left"), (mul(aX, we), "right")):
                vec = prod.to_vector()
                if not jspan.contains(vec):
                    ok, witness = False, f"{tag} product by {w.oln}"
                    break
                regen.insert(vec)
            if not ok or regen.rank() == target:
                break
        stall = 0
        while ok and regen.rank() < target and stall < 2 * n_fact + 50:
            u, v = _random_perm(rng, n), _random_perm(rng, n)
            prod = mul(
                AlgebraElement.from_perm(u, field),
                mul(aX, AlgebraElement.from_perm(v, field)),
            )
            vec = prod.to_vector()
            if not jspan.contains(vec):
                ok, witness = False, f"{u.oln}*antisym({X})*{v.oln}"
                break
            stall = 0 if regen.insert(vec) else stall + 1
        rep.add(
            "single_generator",
            ok and regen.rank() == target,
            note=f"regenerated rank {regen.rank()} of {target}",
            witness=witness,
        )
    else:
        rep.skip("single_generator", f"J_{k} = 0 for k >= n")

    return rep


def orthogonal_complement_check(n: int, k: int, field=QQ, cap: int = VERIFY_CAP) -> Report:
    """span(I_k-basis) equals the orthogonal complement of J_k under the
    bilinear form with orthonormal permutation basis, computed as the
    nullspace of the matrix whose rows are the J-basis vectors."""
    _check_cap(n, cap)
    rep = Report("orthogonal_complement_check", n=n, k=k, field=field.name)
    ibasis = build_I_basis(n, k, field, cap)
    jbasis = build_J_basis(n, k, field, cap)
    ispan = ibasis.span()
    n_fact = factorial(n)
    if jbasis.elements:
        gram = DenseMatrix(field, [e.to_vector() for e in jbasis.elements])
        perp = SpanBasis(field, n_fact)
        for v in gram.nullspace():
            perp.insert(v)
    else:
        perp = SpanBasis(field, n_fact)
        for r in range(n_fact):
            perp.insert(_unit_vector(n_fact, r, field))
    rep.data["rank_I"] = ispan.rank()
    rep.data["rank_Jperp"] = perp.rank()
    rep.add("I_equals_J_perp", ispan == perp)
    return rep


def tuple_sum_span_check(n: int, k: int, field=QQ, cap: int = VERIFY_CAP) -> Report:
    """span{tuple_sum(b, a) : a, b ∈ [n]^k} equals the sign-twist of
    J_{n-k-1}, by exhaustive generation of the tuple sums (k small)."""
    _check_cap(n, cap)
    if k > 2:
        raise ValueError("tuple exhaustion supported for k <= 2 only")
    rep = Report("tuple_sum_span_check", n=n, k=k, field=field.name)
    n_fact = factorial(n)
    jk = n - k - 1
    if jk >= 0:
        tj = sign_twisted(build_J_basis(n, jk, field, cap))
        tjspan = SpanBasis(field, n_fact)
        for e in tj.elements:
            tjspan.insert(e.to_vector())
    else:
        # J_m for negative m is the whole algebra: no avoidance constraint.
        tjspan = SpanBasis(field, n_fact)
        for r in range(n_fact):
            tjspan.insert(_unit_vector(n_fact, r, field))
    tuples = [()]
    for _ in range(k):
        tuples = [t + (x,) for t in tuples for x in range(1, n + 1)]
    tspan = SpanBasis(field, n_fact)
    ok = True
    witness = None
    for a in tuples:
        for b in tuples:
            vec = tuple_sum(b, a, n, field).to_vector()
            if not tjspan.contains(vec):
                ok, witness = False, f"tuple_sum({b}, {a})"
                break
            tspan.insert(vec)
        if not ok:
            break
    rep.data["rank_tuple_span"] = tspan.rank()
    rep.data["rank_twisted_J"] = tjspan.rank()
    rep.add("tuple_sums_inside", ok, witness=witness)
    rep.add("spans_equal", tspan == tjspan)
    return rep


def twin_check(n: int, k: int, field=QQ, cap: int = VERIFY_CAP) -> Report:
    """The residues of permutations outside the decreasing-avoider set
    Av'_n(k+1) also complete I_k to full rank, and both avoider families
    have the same size."""
    _check_cap(n, cap)
    rep = Report("twin_check", n=n, k=k, field=field.name)
    n_fact = factorial(n)
    num_av = len(enumerate_av(n, k + 1))
    primes = {v.rank() for v in enumerate_av_prime(n, k + 1)}
    rep.data["count_Av"] = num_av
    rep.data["count_Av_prime"] = len(primes)
    rep.add("counts_equal", num_av == len(primes))
    total = build_I_basis(n, k, field, cap).span()
    for r in range(n_fact):
        if r not in primes:
            total.insert(_unit_vector(n_fact, r, field))
    rep.add("twin_quotient_basis", total.rank() == n_fact, note=f"rank {total.rank()}")
    return rep


def mixed_quotient_check(n: int, k: int, l: int, field=QQ, cap: int = VERIFY_CAP) -> Report:
    """The permutations in Av'_n(l+1) ∖ Av_n(k+1) index a basis of the
    quotient by I_k + sign_twist(J_l)."""
    _check_cap(n, cap)
    rep = Report("mixed_quotient_check", n=n, k=k, l=l, field=field.name)
    n_fact = factorial(n)
    s = build_I_basis(n, k, field, cap).span()
    for e in sign_twisted(build_J_basis(n, l, field, cap)).elements:
        s.insert(e.to_vector())
    avoiders = {v.rank() for v in enumerate_av(n, k + 1)}
    index_set = sorted(
        v.rank() for v in enumerate_av_prime(n, l + 1) if v.rank() not in avoiders
    )
    rep.data["rank_sum"] = s.rank()
    rep.data["quotient_size"] = len(index_set)
    rep.add(
        "corank_matches",
        s.rank() == n_fact - len(index_set),
        note=f"rank {s.rank()}, expect {n_fact - len(index_set)}",
    )
    total = s.copy()
    for r in index_set:
        total.insert(_unit_vector(n_fact, r, field))
    rep.add("residues_complete", total.rank() == n_fact, note=f"rank {total.rank()}")
    return rep


def cross_char_intersection(n: int, field=QQ, cap: int = VERIFY_CAP) -> int:
    """dim(I₂ ∩ sign_twist(I₂)) over the given field."""
    _check_cap(n, cap)
    ibasis = build_I_basis(n, 2, field, cap)
    ispan = ibasis.span()
    tspan = sign_twisted(ibasis).span()
    return span_intersection_dim(ispan, tspan)
