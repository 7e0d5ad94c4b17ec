"""Partitions, tableau counts, tensor-module actions, and annihilator
verification.

The two module families: V_k^{⊗n} with S_n permuting tensor places, and
N_n^{⊗k} with S_n acting diagonally on entries.  Exact rank computations
identify the image of the group algebra in each representation and verify
that the ideals J_k (place action) and the sign-twist of I_{n-k-1} (entry
action) annihilate, with the expected image ranks given by avoider counts.
Young-symmetrizer spans give the per-partition annihilation claims, and the
avoider counting identities are checked against hook-length data.
"""

from __future__ import annotations

from array import array
from math import factorial

from snalg.exactla import QQ, SpanBasis, DenseMatrix
from snalg.groupalg import AlgebraElement, mul, permutation_basis, sign_twist
from snalg.ideals import build_I_basis, build_J_basis
from snalg.perm import (
    Permutation,
    avoids_decr,
    avoids_incr,
    enumerate_av,
    enumerate_av_prime,
)
from snalg.report import Report
from snalg.rook import Subset
from snalg.setdecomp import SetDecomposition, antisymmetrizer, row_sum

__all__ = [
    "Partition",
    "partitions",
    "transpose",
    "f_lambda",
    "syt_count",
    "count_identity_check",
    "two_sided_count_check",
    "ModuleAction",
    "place_action",
    "entry_action",
    "apply_element",
    "annihilator_check_V",
    "annihilator_check_N",
    "specht_annihilation_check",
    "young_symmetrizers",
    "MODULE_DIM_CAP",
    "ANNIHILATOR_CAP",
    "SPECHT_CAP",
]

MODULE_DIM_CAP = 4096
ANNIHILATOR_CAP = 5
SPECHT_CAP = 5


class Partition:
    """A partition: weakly decreasing positive parts.  Serializes as
    "4+2+1" (empty partition as "0")."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("parts must be weakly decreasing")
        self.parts = parts

    @classmethod
    def from_string(cls, s: str) -> "Partition":
        s = s.strip()
        if s == "0" or not s:
            return cls(())
        return cls(int(piece) for piece in s.split("+"))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def first(self) -> int:
        return self.parts[0] if self.parts else 0

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts) if self.parts else "0"

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"


def partitions(n: int) -> list[Partition]:
    """All partitions of n, in lexicographically decreasing part order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []

    def rec(remaining: int, largest: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, largest), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def transpose(lam: Partition) -> Partition:
    """Conjugate partition: column lengths of the diagram."""
    if not lam.parts:
        return Partition(())
    return Partition(
        sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])
    )


def f_lambda(lam: Partition) -> int:
    """Number of standard tableaux of the given shape, by the hook length
    formula."""
    n = lam.n
    if n == 0:
        return 1
    tr = transpose(lam).parts
    product = 1
    for i, row in enumerate(lam.parts):
        for j in range(row):
            product *= row - j + tr[j] - i - 1
    count, rem = divmod(factorial(n), product)
    if rem:
        raise ArithmeticError("hook product does not divide n!")
    return count


def syt_count(lam: Partition) -> int:
    """Independent tableau count by backtracking: place 1, 2, ... into
    cells keeping rows and columns increasing."""
    parts = lam.parts
    rows = len(parts)
    filled = [0] * rows

    def rec(placed: int) -> int:
        if placed == lam.n:
            return 1
        total = 0
        for i in range(rows):
            if filled[i] < parts[i] and (i == 0 or filled[i - 1] > filled[i]):
                filled[i] += 1
                total += rec(placed + 1)
                filled[i] -= 1
        return total

    return rec(0)


def count_identity_check(n: int, k: int) -> bool:
    """|Av_n(k+1)| equals the sums of (f^λ)² over ℓ(λ) ≤ k and over
    λ₁ ≤ k."""
    avoiders = len(enumerate_av(n, k + 1))
    by_length = sum(f_lambda(l) ** 2 for l in partitions(n) if l.length <= k)
    by_width = sum(f_lambda(l) ** 2 for l in partitions(n) if l.first <= k)
    return avoiders == by_length == by_width


def two_sided_count_check(n: int, k: int, l: int) -> bool:
    """|Av_n(k+1) ∩ Av'_n(l+1)| equals the sum of (f^λ)² over partitions
    with ℓ(λ) ≤ k and λ₁ ≤ l."""
    both = sum(
        1
        for w in permutation_basis(n)
        if avoids_incr(w, k + 1) and avoids_decr(w, l + 1)
    )
    expected = sum(
        f_lambda(lam) ** 2
        for lam in partitions(n)
        if lam.length <= k and lam.first <= l
    )
    return both == expected


def _adjacent_word(w: Permutation) -> list[int]:
    """Adjacent transpositions s_{a1}, ..., s_{am} (1-indexed) whose index
    maps, applied in list order, realize the action of w."""
    img = list(w.oln)
    word = []
    i = 0
    while i < len(img) - 1:
        if img[i] > img[i + 1]:
            img[i], img[i + 1] = img[i + 1], img[i]
            word.append(i + 1)
            if i:
                i -= 1
        else:
            i += 1
    return word


class ModuleAction:
    """An S_n action on a d-dimensional module, stored as the index maps
    (with signs) of the n-1 adjacent transpositions and composed on demand
    by factoring permutations into adjacent swaps.

    gen_maps[j][t] is the basis index of s_{j+1}·e_t and gen_signs[j][t]
    the sign, so all matrices are exact 0/±1.  Coxeter relations are
    verified at construction.
    """

    __slots__ = ("n", "dim", "_gen_maps", "_gen_signs", "_cache")

    def __init__(self, n: int, dim: int, gen_maps, gen_signs=None):
        self.n = n
        self.dim = dim
        self._gen_maps = [array("l", m) for m in gen_maps]
        if gen_signs is None:
            gen_signs = [[1] * dim for _ in range(max(n - 1, 0))]
        self._gen_signs = [array("b", s) for s in gen_signs]
        if len(self._gen_maps) != max(n - 1, 0) or len(self._gen_signs) != len(
            self._gen_maps
        ):
            raise ValueError("need one generator per adjacent transposition")
        for m, s in zip(self._gen_maps, self._gen_signs):
            if len(m) != dim or len(s) != dim:
                raise ValueError("generator size mismatch")
            if sorted(m) != list(range(dim)):
                raise ValueError("generator map is not a bijection")
            if any(x not in (1, -1) for x in s):
                raise ValueError("signs must be ±1")
        self._cache: dict[int, tuple[list, list]] = {}
        self._verify_relations()

    def _compose(self, a, b):
        """Index map and signs of (a after b)."""
        amap, asgn = a
        bmap, bsgn = b
        return (
            [amap[x] for x in bmap],
            [bsgn[t] * asgn[bmap[t]] for t in range(self.dim)],
        )

    def _gen(self, j: int):
        return (self._gen_maps[j - 1], self._gen_signs[j - 1])

    def _verify_relations(self) -> None:
        ident = (list(range(self.dim)), [1] * self.dim)

        def eq(a, b):
            return list(a[0]) == list(b[0]) and list(a[1]) == list(b[1])

        for j in range(1, self.n):
            g = self._gen(j)
            if not eq(self._compose(g, g), ident):
                raise ValueError(f"generator {j} is not an involution")
        for j in range(1, self.n - 1):
            g, h = self._gen(j), self._gen(j + 1)
            if not eq(
                self._compose(g, self._compose(h, g)),
                self._compose(h, self._compose(g, h)),
            ):
                raise ValueError(f"braid relation fails at {j}")
        for j in range(1, self.n):
            for i in range(j + 2, self.n):
                g, h = self._gen(j), self._gen(i)
                if not eq(self._compose(g, h), self._compose(h, g)):
                    raise ValueError(f"commutation fails at ({j}, {i})")

    def index_action(self, w: Permutation):
        """(images, signs) for the action of w on basis indices."""
        if w.n != self.n:
            raise ValueError("permutation size mismatch")
        r = w.rank()
        hit = self._cache.get(r)
        if hit is not None:
            return hit
        total = list(range(self.dim))
        signs = [1] * self.dim
        for a in _adjacent_word(w):
            gmap, gsgn = self._gen(a)
            signs = [signs[t] * gsgn[total[t]] for t in range(self.dim)]
            total = [gmap[x] for x in total]
        result = (total, signs)
        self._cache[r] = result
        return result

    def matrix(self, w: Permutation, field=QQ) -> DenseMatrix:
        """The 0/±1 matrix of w in column convention: M e_t = ±e_{w·t}."""
        images, signs = self.index_action(w)
        one = field.one
        minus = field.normalize(-1)
        rows = [[field.zero] * self.dim for _ in range(self.dim)]
        for t in range(self.dim):
            rows[images[t]][t] = one if signs[t] > 0 else minus
        return DenseMatrix(field, rows)

    def vectorized(self, w: Permutation, field=QQ) -> list:
        """Row-major flattening of matrix(w), built sparsely."""
        images, signs = self.index_action(w)
        one = field.one
        minus = field.normalize(-1)
        vec = [field.zero] * (self.dim * self.dim)
        for t in range(self.dim):
            vec[images[t] * self.dim + t] = one if signs[t] > 0 else minus
        return vec

    def __repr__(self) -> str:
        return f"ModuleAction(n={self.n}, dim={self.dim})"


def _check_dim(dim: int) -> None:
    if dim > MODULE_DIM_CAP:
        raise ValueError(f"module dimension {dim} exceeds cap {MODULE_DIM_CAP}")


def place_action(n: int, k: int) -> ModuleAction:
    """S_n permuting the n tensor places of V_k^{⊗n}; basis indexed by
    words in [k]^n (most significant digit = place 1)."""
    if k < 1:
        raise ValueError("need k >= 1")
    dim = k**n
    _check_dim(dim)
    powers = [k ** (n - 1 - i) for i in range(n)]
    gen_maps = []
    for j in range(n - 1):
        m = array("l", range(dim))
        pj, pj1 = powers[j], powers[j + 1]
        for idx in range(dim):
            dj = idx // pj % k
            dj1 = idx // pj1 % k
            m[idx] = idx + (dj1 - dj) * pj + (dj - dj1) * pj1
        gen_maps.append(m)
    return ModuleAction(n, dim, gen_maps)


def entry_action(n: int, k: int) -> ModuleAction:
    """S_n acting diagonally on the entries of words in [n]^k (the basis
    of N_n^{⊗k}): σ·e_{(t₁,…,t_k)} = e_{(σ(t₁),…,σ(t_k))}."""
    if k < 0:
        raise ValueError("need k >= 0")
    dim = n**k
    _check_dim(dim)
    powers = [n ** (k - 1 - i) for i in range(k)]
    gen_maps = []
    for j in range(n - 1):
        m = array("l", range(dim))
        for idx in range(dim):
            new = idx
            for p in powers:
                d = idx // p % n
                if d == j:
                    new += p
                elif d == j + 1:
                    new -= p
            m[idx] = new
        gen_maps.append(m)
    return ModuleAction(n, dim, gen_maps)


def apply_element(action: ModuleAction, a: AlgebraElement) -> DenseMatrix:
    """The matrix Σ_w coeff_a(w)·ρ(w)."""
    if a.n != action.n:
        raise ValueError("element size mismatch")
    field = a.field
    d = action.dim
    rows = [[field.zero] * d for _ in range(d)]
    for w, c in a.items():
        images, signs = action.index_action(w)
        for t in range(d):
            value = c if signs[t] > 0 else -c
            rows[images[t]][t] = field.normalize(rows[images[t]][t] + value)
    return DenseMatrix(field, rows)


def _image_rank(action: ModuleAction, perms, field) -> int:
    span = SpanBasis(field, action.dim * action.dim)
    for w in perms:
        span.insert(action.vectorized(w, field))
    return span.rank()


def annihilator_check_V(n: int, k: int, field=QQ, cap: int = ANNIHILATOR_CAP) -> Report:
    """J_k annihilates the place action on V_k^{⊗n}, and the image of the
    group algebra has rank |Av_n(k+1)|, spanned by the avoider rows alone
    (in both the increasing and decreasing conventions)."""
    if not 1 <= n <= cap:
        raise ValueError(f"n = {n} outside supported range 1..{cap}")
    rep = Report("annihilator_check_V", n=n, k=k, field=field.name)
    action = place_action(n, k)
    jbasis = build_J_basis(n, k, field)

    ok = True
    witness = None
    for v, e in zip(jbasis.leaders, jbasis.elements):
        m = apply_element(action, e)
        if any(any(row) for row in m.rows):
            ok, witness = False, f"J-basis element for {v.oln}"
            break
    rep.add("ideal_annihilates", ok, witness=witness)

    expected = len(enumerate_av(n, k + 1))
    full_rank = _image_rank(action, permutation_basis(n), field)
    rep.data["image_rank"] = full_rank
    rep.add("image_rank", full_rank == expected, note=f"{full_rank} (expect {expected})")

    av_rank = _image_rank(action, enumerate_av(n, k + 1), field)
    avp_rank = _image_rank(action, enumerate_av_prime(n, k + 1), field)
    rep.add(
        "avoider_rows_span",
        av_rank == full_rank == avp_rank,
        note=f"Av rows {av_rank}, Av' rows {avp_rank}",
    )

    rep.add(
        "kernel_image_accounting",
        len(jbasis) + full_rank == factorial(n),
        note=f"rank J = {len(jbasis)}, image = {full_rank}",
    )
    return rep


def annihilator_check_N(n: int, k: int, field=QQ, cap: int = ANNIHILATOR_CAP) -> Report:
    """The sign-twist of I_{n-k-1} annihilates the entry action on
    N_n^{⊗k}, and the image rank is n! - |Av_n(n-k)| with the non-avoider
    rows spanning."""
    if not 1 <= n <= cap:
        raise ValueError(f"n = {n} outside supported range 1..{cap}")
    rep = Report("annihilator_check_N", n=n, k=k, field=field.name)
    action = entry_action(n, k)

    m = n - k - 1
    if m >= 0:
        ibasis = build_I_basis(n, m, field)
        ok = True
        witness = None
        for v, e in zip(ibasis.leaders, ibasis.elements):
            mat = apply_element(action, sign_twist(e))
            if any(any(x) for x in mat.rows):
                ok, witness = False, f"twisted I-basis element for {v.oln}"
                break
        rep.add("ideal_annihilates", ok, witness=witness)
        ideal_rank = len(ibasis)
    else:
        rep.skip("ideal_annihilates", f"I_{m} undefined for negative index; nothing to check")
        ideal_rank = 0

    avoiders = enumerate_av(n, n - k) if n - k >= 1 else []
    expected = factorial(n) - len(avoiders)
    full_rank = _image_rank(action, permutation_basis(n), field)
    rep.data["image_rank"] = full_rank
    rep.add("image_rank", full_rank == expected, note=f"{full_rank} (expect {expected})")

    avoider_ranks = {v.rank() for v in avoiders}
    non_avoiders = [w for w in permutation_basis(n) if w.rank() not in avoider_ranks]
    na_rank = _image_rank(action, non_avoiders, field)
    primes = {v.rank() for v in enumerate_av_prime(n, n - k)} if n - k >= 1 else set()
    non_primes = [w for w in permutation_basis(n) if w.rank() not in primes]
    np_rank = _image_rank(action, non_primes, field)
    rep.add(
        "non_avoider_rows_span",
        na_rank == full_rank == np_rank,
        note=f"S_n∖Av rows {na_rank}, S_n∖Av' rows {np_rank}",
    )

    rep.add(
        "kernel_image_accounting",
        ideal_rank + full_rank == factorial(n),
        note=f"rank twisted-I = {ideal_rank}, image = {full_rank}",
    )
    return rep


def young_symmetrizers(lam: Partition, field=QQ):
    """(a_λ, b_λ) for the row-filled tableau of shape λ: a_λ symmetrizes
    the rows, b_λ antisymmetrizes the columns."""
    n = lam.n
    rows = []
    start = 1
    for p in lam.parts:
        rows.append(list(range(start, start + p)))
        start += p
    row_dec = SetDecomposition.from_members(n, rows)
    a = row_sum(row_dec, row_dec, field)
    b = AlgebraElement.one(n, field)
    tr = transpose(lam).parts
    for j, height in enumerate(tr):
        col = [rows[i][j] for i in range(height)]
        b = mul(b, antisymmetrizer(Subset(n, col), field))
    return a, b


def specht_annihilation_check(n: int, k: int, field=QQ, cap: int = SPECHT_CAP) -> Report:
    """Per partition λ of n: I_k annihilates the Young-symmetrizer span
    when ℓ(λ) > k, and J_k annihilates it when ℓ(λ) ≤ k.  Since both
    ideals are two-sided, annihilating the generator a_λ b_λ is
    equivalent.  The rank of each span 𝒜·a_λ·b_λ is recorded."""
    if not 1 <= n <= cap:
        raise ValueError(f"n = {n} outside supported range 1..{cap}")
    rep = Report("specht_annihilation_check", n=n, k=k, field=field.name)
    ibasis = build_I_basis(n, k, field)
    jbasis = build_J_basis(n, k, field)
    span_ranks = {}
    for lam in partitions(n):
        a, b = young_symmetrizers(lam, field)
        c = mul(a, b)
        span = SpanBasis(field, factorial(n))
        for w in permutation_basis(n):
            span.insert(mul(AlgebraElement.from_perm(w, field), c).to_vector())
        span_ranks[str(lam)] = span.rank()
        if lam.length > k:
            ok = True
            witness = None
            for v, e in zip(ibasis.leaders, ibasis.elements):
                if not mul(e, c).is_zero():
                    ok, witness = False, f"I-basis element for {v.oln}"
                    break
            rep.add(f"I_kills_{lam}", ok, witness=witness)
        else:
            ok = True
            witness = None
            for v, e in zip(jbasis.leaders, jbasis.elements):
                if not mul(e, c).is_zero():
                    ok, witness = False, f"J-basis element for {v.oln}"
                    break
            rep.add(f"J_kills_{lam}", ok, witness=witness)
    rep.data["span_ranks"] = span_ranks
    return rep
