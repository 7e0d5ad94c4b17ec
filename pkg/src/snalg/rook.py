"""Rectangular rook sums and their product and annihilation laws.

For subsets A, B of [n], the rook sum nabla(B, A) adds every permutation
mapping A onto B, and nabla_tilde(B, A) every permutation mapping A into B.
The product of two rook sums expands by an integer coefficient omega(B, C)
in three equivalent closed forms (product_rule_a/b/c), and the combinations
nabla_D_alpha satisfy a split polynomial annihilation identity driven by
the integers delta(D, C, k).  The kappa family packages the special case
whose minimal polynomial depends only on the sizes (|A|, |B|, |A cap B|)
and generates the table of factored minimal polynomials.
"""

from __future__ import annotations

import random
from functools import lru_cache
from importlib import resources
from itertools import combinations, permutations as _itpermutations
from math import comb, factorial
from typing import Iterable, Iterator, Mapping

from snalg.exactla import QQ
from snalg.groupalg import (
    AlgebraElement,
    MinimalPolynomial,
    element_min_poly,
    mul,
    permutation_basis,
    scale,
)
from snalg.perm import Permutation

__all__ = [
    "Subset",
    "all_subsets",
    "subsets_of_size",
    "nabla",
    "nabla_tilde",
    "omega",
    "delta",
    "delta_tilde",
    "nabla_D_alpha",
    "nabla_alpha_D",
    "delta_D_alpha",
    "triangular_annihilation",
    "kappa",
    "kappa_rows",
    "minpol_table",
    "golden_minpol_rows",
    "MINPOL_TABLE_MAX_N",
    "PRODUCT_RULE_B_MAX_N",
    "product_rule_a",
    "product_rule_b",
    "product_rule_c",
    "product_rule_fuzz",
]

MINPOL_TABLE_MAX_N = 6
PRODUCT_RULE_B_MAX_N = 8


class Subset:
    """A subset of [n] = {1, ..., n}, stored as a bitmask."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, members: Iterable[int] = (), mask: int | None = None):
        self.n = n
        if mask is not None:
            if mask >> n:
                raise ValueError(f"mask has bits above position {n}")
            self.mask = mask
            return
        m = 0
        for i in members:
            if not 1 <= i <= n:
                raise ValueError(f"{i} outside [{n}]")
            m |= 1 << (i - 1)
        self.mask = m

    @classmethod
    def full(cls, n: int) -> "Subset":
        return cls(n, mask=(1 << n) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= self.n and bool(self.mask >> (i - 1) & 1)

    def _coerce(self, other: "Subset") -> None:
        if not isinstance(other, Subset) or other.n != self.n:
            raise ValueError("subsets of different ground sets")

    def __or__(self, other: "Subset") -> "Subset":
        self._coerce(other)
        return Subset(self.n, mask=self.mask | other.mask)

    def __and__(self, other: "Subset") -> "Subset":
        self._coerce(other)
        return Subset(self.n, mask=self.mask & other.mask)

    def __sub__(self, other: "Subset") -> "Subset":
        self._coerce(other)
        return Subset(self.n, mask=self.mask & ~other.mask)

    def __le__(self, other: "Subset") -> bool:
        self._coerce(other)
        return self.mask & ~other.mask == 0

    def complement(self) -> "Subset":
        return Subset(self.n, mask=(1 << self.n) - 1 ^ self.mask)

    def apply(self, w: Permutation) -> "Subset":
        """The image w(self)."""
        if w.n != self.n:
            raise ValueError("permutation size mismatch")
        return Subset(self.n, (w(i) for i in self.members))

    def __eq__(self, other) -> bool:
        return isinstance(other, Subset) and (self.n, self.mask) == (other.n, other.mask)

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.members) + "}"

    def __repr__(self) -> str:
        return f"Subset({self.n}, {list(self.members)!r})"


def subsets_of_size(n: int, k: int) -> Iterator[Subset]:
    """All k-element subsets of [n], members in lex order."""
    for combo in combinations(range(1, n + 1), k):
        yield Subset(n, combo)


def all_subsets(n: int) -> Iterator[Subset]:
    """All subsets of [n], ordered by size then lexicographically."""
    for k in range(n + 1):
        yield from subsets_of_size(n, k)


def _check_same_n(*subsets: Subset) -> int:
    ns = {s.n for s in subsets}
    if len(ns) != 1:
        raise ValueError(f"subsets of mixed ground sets: {sorted(ns)}")
    return ns.pop()


@lru_cache(maxsize=None)
def _nabla_terms(n: int, bmask: int, amask: int) -> tuple[int, ...]:
    """Ranks of the permutations w with w(A) = B (empty if sizes differ)."""
    A = Subset(n, mask=amask)
    B = Subset(n, mask=bmask)
    if A.size != B.size:
        return ()
    apos = [i - 1 for i in A.members]
    acomp = [i - 1 for i in A.complement().members]
    bvals = [j - 1 for j in B.members]
    bcomp = [j - 1 for j in B.complement().members]
    img = [0] * n
    ranks = []
    for pb in _itpermutations(bvals):
        for pos, val in zip(apos, pb):
            img[pos] = val
        for pc in _itpermutations(bcomp):
            for pos, val in zip(acomp, pc):
                img[pos] = val
            ranks.append(Permutation._from_zero(tuple(img)).rank())
    return tuple(sorted(ranks))


@lru_cache(maxsize=None)
def _nabla_tilde_terms(n: int, bmask: int, amask: int) -> tuple[int, ...]:
    """Ranks of the permutations w with w(A) ⊆ B (empty if |A| > |B|)."""
    A = Subset(n, mask=amask)
    B = Subset(n, mask=bmask)
    if A.size > B.size:
        return ()
    apos = [i - 1 for i in A.members]
    acomp = [i - 1 for i in A.complement().members]
    bvals = [j - 1 for j in B.members]
    allvals = set(range(n))
    img = [0] * n
    ranks = []
    for pb in _itpermutations(bvals, A.size):
        for pos, val in zip(apos, pb):
            img[pos] = val
        rest = sorted(allvals.difference(pb))
        for pc in _itpermutations(rest):
            for pos, val in zip(acomp, pc):
                img[pos] = val
            ranks.append(Permutation._from_zero(tuple(img)).rank())
    return tuple(sorted(ranks))


def nabla(B: Subset, A: Subset, field=QQ) -> AlgebraElement:
    """The rook sum of all w with w(A) = B; zero when |A| != |B|."""
    n = _check_same_n(B, A)
    one = field.one
    return AlgebraElement._raw(
        n, field, {r: one for r in _nabla_terms(n, B.mask, A.mask)}
    )


def nabla_tilde(B: Subset, A: Subset, field=QQ) -> AlgebraElement:
    """The rook sum of all w with w(A) ⊆ B; zero when |A| > |B|."""
    n = _check_same_n(B, A)
    one = field.one
    return AlgebraElement._raw(
        n, field, {r: one for r in _nabla_tilde_terms(n, B.mask, A.mask)}
    )


def omega(B: Subset, C: Subset) -> int:
    """|B∩C|! |B∖C|! |C∖B|! |[n]∖(B∪C)|!"""
    n = _check_same_n(B, C)
    both = (B.mask & C.mask).bit_count()
    bonly = (B.mask & ~C.mask).bit_count()
    conly = (C.mask & ~B.mask).bit_count()
    neither = n - both - bonly - conly
    return (
        factorial(both) * factorial(bonly) * factorial(conly) * factorial(neither)
    )


def delta(D: Subset, C: Subset, k: int) -> int:
    """Sum of omega(B, C) (-1)^(k-|B∩C|) C(k, |B∩C|) over k-subsets B of D."""
    _check_same_n(D, C)
    total = 0
    for bmembers in combinations(D.members, k):
        B = Subset(D.n, bmembers)
        j = (B.mask & C.mask).bit_count()
        total += omega(B, C) * (-1) ** (k - j) * comb(k, j)
    return total


def delta_tilde(D: Subset, B: Subset, k: int) -> int:
    """Sum of delta(D, C, k) over |D|-subsets C of B."""
    _check_same_n(D, B)
    return sum(
        delta(D, Subset(D.n, cm), k) for cm in combinations(B.members, D.size)
    )


def _check_product_sizes(D: Subset, C: Subset, B: Subset, A: Subset) -> int:
    n = _check_same_n(D, C, B, A)
    if A.size != B.size:
        raise ValueError(f"|A| = {A.size} != {B.size} = |B|")
    if C.size != D.size:
        raise ValueError(f"|C| = {C.size} != {D.size} = |D|")
    return n


def product_rule_a(D: Subset, C: Subset, B: Subset, A: Subset, field=QQ) -> AlgebraElement:
    """omega(B, C) times the sum of all w with |w(A) ∩ D| = |B ∩ C|."""
    n = _check_product_sizes(D, C, B, A)
    target = (B.mask & C.mask).bit_count()
    w_coeff = field.from_int(omega(B, C))
    if not w_coeff:
        return AlgebraElement.zero(n, field)
    apos = [i - 1 for i in A.members]
    dmask = D.mask
    terms = {}
    for r, w in enumerate(permutation_basis(n)):
        wa = 0
        for i in apos:
            wa |= 1 << w.image0(i)
        if (wa & dmask).bit_count() == target:
            terms[r] = w_coeff
    return AlgebraElement._raw(n, field, terms)


def product_rule_b(D: Subset, C: Subset, B: Subset, A: Subset, field=QQ) -> AlgebraElement:
    """omega(B, C) times the signed binomial combination of nabla(U, V) over
    equal-size pairs U ⊆ D, V ⊆ A."""
    n = _check_product_sizes(D, C, B, A)
    if n > PRODUCT_RULE_B_MAX_N:
        raise ValueError(
            f"subset-pair expansion capped at n = {PRODUCT_RULE_B_MAX_N}, got {n}"
        )
    j0 = (B.mask & C.mask).bit_count()
    w = omega(B, C)
    acc = AlgebraElement.zero(n, field)
    for size in range(min(D.size, A.size) + 1):
        coeff = field.from_int(w * (-1) ** (size - j0) * comb(size, j0))
        if not coeff:
            continue
        for um in combinations(D.members, size):
            U = Subset(n, um)
            for vm in combinations(A.members, size):
                acc = acc + scale(coeff, nabla(U, Subset(n, vm), field))
    return acc


def product_rule_c(D: Subset, C: Subset, B: Subset, A: Subset, field=QQ) -> AlgebraElement:
    """omega(B, C) times the signed binomial combination of nabla_tilde(D, V)
    over V ⊆ A."""
    n = _check_product_sizes(D, C, B, A)
    j0 = (B.mask & C.mask).bit_count()
    w = omega(B, C)
    acc = AlgebraElement.zero(n, field)
    for size in range(A.size + 1):
        coeff = field.from_int(w * (-1) ** (size - j0) * comb(size, j0))
        if not coeff:
            continue
        for vm in combinations(A.members, size):
            acc = acc + scale(coeff, nabla_tilde(D, Subset(n, vm), field))
    return acc


def product_rule_fuzz(n: int, trials: int = 200, seed: int = 0, field=QQ) -> "Report":
    """Each closed form of nabla(D, C) * nabla(B, A) against the direct
    product: every same-size quadruple for n <= 4, seeded samples beyond."""
    from snalg.report import Report

    if not 1 <= n <= PRODUCT_RULE_B_MAX_N:
        raise ValueError(f"n = {n} outside supported range 1..{PRODUCT_RULE_B_MAX_N}")
    exhaustive = n <= 4
    rep = Report(
        "product_rule_fuzz",
        n=n,
        mode="exhaustive" if exhaustive else "sampled",
        field=field.name,
    )
    if exhaustive:
        same_size = [
            (X, Y)
            for size in range(n + 1)
            for X in subsets_of_size(n, size)
            for Y in subsets_of_size(n, size)
        ]
        cases = [
            (D, C, B, A) for D, C in same_size for B, A in same_size
        ]
    else:
        rng = random.Random(seed)
        members = range(1, n + 1)

        def random_pair():
            size = rng.randrange(n + 1)
            return (
                Subset(n, rng.sample(members, size)),
                Subset(n, rng.sample(members, size)),
            )

        cases = []
        for _ in range(trials):
            D, C = random_pair()
            B, A = random_pair()
            cases.append((D, C, B, A))
    rep.data["cases"] = len(cases)
    failures = {"a": None, "b": None, "c": None}
    for D, C, B, A in cases:
        direct = mul(nabla(D, C, field), nabla(B, A, field))
        for label, rule in (
            ("a", product_rule_a),
            ("b", product_rule_b),
            ("c", product_rule_c),
        ):
            if failures[label] is None and rule(D, C, B, A, field) != direct:
                failures[label] = f"D={D} C={C} B={B} A={A}"
    for label in ("a", "b", "c"):
        rep.add(f"rule_{label}", failures[label] is None, witness=failures[label])
    return rep


def _check_alpha(D: Subset, alpha: Mapping[Subset, object]) -> None:
    for C in alpha:
        if C.n != D.n:
            raise ValueError("alpha key over a different ground set")
        if C.size != D.size:
            raise ValueError(
                f"alpha key {C} has size {C.size}, expected |D| = {D.size}"
            )


def nabla_D_alpha(D: Subset, alpha: Mapping[Subset, object], field=QQ) -> AlgebraElement:
    """The combination sum of alpha[C] * nabla(D, C)."""
    _check_alpha(D, alpha)
    acc = AlgebraElement.zero(D.n, field)
    for C, c in alpha.items():
        acc = acc + scale(c, nabla(D, C, field))
    return acc


def nabla_alpha_D(D: Subset, alpha: Mapping[Subset, object], field=QQ) -> AlgebraElement:
    """The mirrored combination sum of alpha[C] * nabla(C, D)."""
    _check_alpha(D, alpha)
    acc = AlgebraElement.zero(D.n, field)
    for C, c in alpha.items():
        acc = acc + scale(c, nabla(C, D, field))
    return acc


def delta_D_alpha(D: Subset, alpha: Mapping[Subset, object], k: int, field=QQ):
    """The scalar sum of alpha[C] * delta(D, C, k)."""
    _check_alpha(D, alpha)
    acc = field.zero
    for C, c in alpha.items():
        acc += field.normalize(c) * field.from_int(delta(D, C, k))
    return field.normalize(acc)


def triangular_annihilation(
    D: Subset, alpha: Mapping[Subset, object], field=QQ, mirrored: bool = False
) -> AlgebraElement:
    """Evaluate (prod over k = 0..|D| of (N - delta_D_alpha(D, alpha, k))) N
    where N = nabla_D_alpha (or its mirror image).  The result is the
    annihilation identity's left side, expected to be zero."""
    N = (nabla_alpha_D if mirrored else nabla_D_alpha)(D, alpha, field)
    one = AlgebraElement.one(D.n, field)
    acc = N
    for k in range(D.size + 1):
        shift = delta_D_alpha(D, alpha, k, field)
        acc = mul(N - scale(shift, one), acc)
    return acc


def kappa(n: int, a: int, b: int, c: int, field=QQ) -> AlgebraElement:
    """The sum of all w with w(A) ∩ B = ∅ for the canonical subsets
    A = {1..a}, B = {a-c+1..a-c+b} with |A ∩ B| = c; equivalently
    nabla_tilde([n] ∖ B, A).  Parameters that admit no such pair of subsets
    yield the zero element."""
    constructible = (
        0 <= c <= min(a, b) and 0 <= a <= n and 0 <= b <= n and a - c + b <= n
    )
    if not constructible:
        return AlgebraElement.zero(n, field)
    A = Subset(n, range(1, a + 1))
    B = Subset(n, range(a - c + 1, a - c + b + 1))
    return nabla_tilde(B.complement(), A, field)


def kappa_rows(n: int) -> Iterator[tuple[int, int, int]]:
    """The (a, b, c) index triples of the minimal polynomial table: the
    all-permutations row (0,0,0) first, then b = 1..n/2, a = b..n-b,
    c = 0..b."""
    yield (0, 0, 0)
    for b in range(1, n // 2 + 1):
        for a in range(b, n - b + 1):
            for c in range(b + 1):
                yield (a, b, c)


def minpol_table(n: int, cap: int = MINPOL_TABLE_MAX_N) -> list[tuple[int, int, int, MinimalPolynomial]]:
    """Rows (a, b, c, minimal polynomial of kappa(n, a, b, c)) over Q."""
    if n < 1:
        raise ValueError("table needs n >= 1")
    if n > cap:
        raise ValueError(f"minimal polynomial table capped at n = {cap}, got {n}")
    rows = []
    for a, b, c in kappa_rows(n):
        poly = element_min_poly(kappa(n, a, b, c))
        rows.append((a, b, c, poly))
    return rows


def golden_minpol_rows(n: int | None = None) -> list[tuple[int, int, int, int, str]]:
    """The frozen reference table as (n, a, b, c, factored-polynomial) rows,
    optionally filtered to a single n."""
    text = resources.files("snalg").joinpath("data/minpol_table.tsv").read_text()
    rows = []
    for line in text.splitlines()[1:]:
        if not line.strip():
            continue
        sn, sa, sb, sc, poly = line.split("\t")
        if n is None or int(sn) == n:
            rows.append((int(sn), int(sa), int(sb), int(sc), poly))
    return rows
