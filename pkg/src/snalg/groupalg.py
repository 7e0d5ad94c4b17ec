"""The group algebra k[S_n] with exact sparse arithmetic.

Elements are sparse maps from permutations (keyed internally by their
lexicographic rank) to nonzero scalars.  Provides the ring operations, the
antipode w -> w^{-1}, the sign twist w -> (-1)^w w, the standard bilinear
form with orthonormal permutation basis, sums over rook boards, and minimal
polynomials over the rationals with integer-root factorization.

Multiplication uses a cached n! x n! composition table for n <= 6 and
composes permutations directly beyond that.
"""

from __future__ import annotations

import json
from array import array
from fractions import Fraction
from math import factorial, gcd
from typing import Iterable, Iterator, Optional, Sequence

from snalg.exactla import QQ, ExtendRequired, min_dependency
from snalg.perm import Permutation, compose
from snalg.perm import inverse as perm_inverse
from snalg.perm import sign as perm_sign

__all__ = [
    "AlgebraElement",
    "add",
    "scale",
    "mul",
    "antipode",
    "sign_twist",
    "coeff_one",
    "dot",
    "board_sum",
    "group_sum",
    "element_min_poly",
    "MinimalPolynomial",
    "MUL_TABLE_MAX_N",
]

MUL_TABLE_MAX_N = 6

_perm_cache: dict[int, list[Permutation]] = {}
_mul_tables: dict[int, list[array]] = {}
_inv_tables: dict[int, array] = {}
_sign_tables: dict[int, array] = {}


def permutation_basis(n: int) -> list[Permutation]:
    """All of S_n in lex order; position in this list == lex rank."""
    if n not in _perm_cache:
        from snalg.perm import all_permutations

        _perm_cache[n] = list(all_permutations(n))
    return _perm_cache[n]


def _mul_table(n: int) -> list[array]:
    """mt[u][v] = rank of (permutation u) composed with (permutation v)."""
    if n not in _mul_tables:
        perms = permutation_basis(n)
        imgs = [bytes(v - 1 for v in p.oln) for p in perms]
        index = {img: r for r, img in enumerate(imgs)}
        pad = bytes(256 - n)
        typecode = "H" if factorial(n) <= 65535 else "L"
        rows = []
        for img_u in imgs:
            table = img_u + pad
            rows.append(array(typecode, (index[img_v.translate(table)] for img_v in imgs)))
        _mul_tables[n] = rows
    return _mul_tables[n]


def _inv_table(n: int) -> array:
    if n not in _inv_tables:
        perms = permutation_basis(n)
        _inv_tables[n] = array("L", (perm_inverse(p).rank() for p in perms))
    return _inv_tables[n]


def _sign_table(n: int) -> array:
    if n not in _sign_tables:
        _sign_tables[n] = array("b", (perm_sign(p) for p in permutation_basis(n)))
    return _sign_tables[n]


class AlgebraElement:
    """A sparse element of k[S_n]; stored coefficients are never zero."""

    __slots__ = ("n", "field", "_terms")

    def __init__(self, n: int, field, terms=None):
        self.n = n
        self.field = field
        data: dict[int, object] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                if isinstance(key, Permutation):
                    if key.n != n:
                        raise ValueError(f"permutation of [{key.n}] in k[S_{n}]")
                    r = key.rank()
                else:
                    r = int(key)
                c = field.normalize(data.get(r, field.zero) + field.normalize(c))
                if c:
                    data[r] = c
                else:
                    data.pop(r, None)
        self._terms = data

    @classmethod
    def _raw(cls, n: int, field, terms: dict) -> "AlgebraElement":
        a = object.__new__(cls)
        a.n = n
        a.field = field
        a._terms = terms
        return a

    @classmethod
    def zero(cls, n: int, field=QQ) -> "AlgebraElement":
        return cls._raw(n, field, {})

    @classmethod
    def one(cls, n: int, field=QQ) -> "AlgebraElement":
        return cls._raw(n, field, {0: field.one})

    @classmethod
    def from_perm(cls, w: Permutation, field=QQ, coeff=None) -> "AlgebraElement":
        c = field.one if coeff is None else field.normalize(coeff)
        return cls._raw(w.n, field, {w.rank(): c} if c else {})

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> Iterator[tuple[Permutation, object]]:
        """(permutation, coefficient) pairs in lex order."""
        perms = permutation_basis(self.n)
        for r in sorted(self._terms):
            yield perms[r], self._terms[r]

    def support(self) -> list[Permutation]:
        perms = permutation_basis(self.n)
        return [perms[r] for r in sorted(self._terms)]

    def coeff(self, w: Permutation) -> object:
        if w.n != self.n:
            raise ValueError("permutation size mismatch")
        return self._terms.get(w.rank(), self.field.zero)

    def to_vector(self) -> list:
        """Coordinates in the permutation basis, indexed by lex rank."""
        vec = [self.field.zero] * factorial(self.n)
        for r, c in self._terms.items():
            vec[r] = c
        return vec

    @classmethod
    def from_vector(cls, n: int, field, vec: Sequence) -> "AlgebraElement":
        terms = {}
        for r, c in enumerate(vec):
            c = field.normalize(c)
            if c:
                terms[r] = c
        return cls._raw(n, field, terms)

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return add(self, other)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return add(self, scale(-1, other))

    def __neg__(self) -> "AlgebraElement":
        return scale(-1, self)

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return scale(other, self)

    def __rmul__(self, other) -> "AlgebraElement":
        return scale(other, self)

    def __pow__(self, k: int) -> "AlgebraElement":
        if k < 0:
            raise ValueError("negative power")
        out = AlgebraElement.one(self.n, self.field)
        for _ in range(k):
            out = mul(out, self)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.n == other.n
            and self.field == other.field
            and self._terms == other._terms
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            s = w.to_string() or "()"
            parts.append(f"{c}*[{s}]" if c != self.field.one else f"[{s}]")
        return " + ".join(parts)

    # -- serialization -----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"perm": w.to_string(), "coeff": self.field.scalar_str(c)}
                for w, c in self.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict, field=QQ) -> "AlgebraElement":
        n = int(obj["n"])
        pairs = [
            (Permutation.from_string(t["perm"]), field.scalar_from_str(t["coeff"]))
            for t in obj["terms"]
        ]
        return cls(n, field, pairs)

    @classmethod
    def from_json(cls, s: str, field=QQ) -> "AlgebraElement":
        return cls.from_json_obj(json.loads(s), field)


def _check_pair(a: AlgebraElement, b: AlgebraElement) -> None:
    if a.n != b.n:
        raise ValueError(f"mixed sizes: S_{a.n} vs S_{b.n}")
    if a.field != b.field:
        raise ValueError(f"mixed fields: {a.field!r} vs {b.field!r}")


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _check_pair(a, b)
    field = a.field
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    terms = dict(big._terms)
    for r, c in small._terms.items():
        s = field.normalize(terms.get(r, field.zero) + c)
        if s:
            terms[r] = s
        else:
            terms.pop(r, None)
    return AlgebraElement._raw(a.n, field, terms)


def scale(c, a: AlgebraElement) -> AlgebraElement:
    field = a.field
    c = field.normalize(c)
    if not c:
        return AlgebraElement.zero(a.n, field)
    terms = {}
    for r, x in a._terms.items():
        y = field.normalize(c * x)
        if y:
            terms[r] = y
    return AlgebraElement._raw(a.n, field, terms)


def _int_terms(a: AlgebraElement) -> tuple[dict[int, int], int]:
    """The terms of a rational element with denominators cleared: a dict of
    integer coefficients and the common denominator."""
    den = 1
    for c in a._terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return {r: c.numerator * (den // c.denominator) for r, c in a._terms.items()}, den


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """The convolution product: sum of coeff_a(u) coeff_b(v) on uv."""
    _check_pair(a, b)
    n, field = a.n, a.field
    if not a._terms or not b._terms:
        return AlgebraElement.zero(n, field)
    if n <= MUL_TABLE_MAX_N:
        # the hot loop runs on plain integers: rational inputs have their
        # denominators cleared first and restored afterwards
        if field.characteristic == 0:
            aterms, aden = _int_terms(a)
            bterms, bden = _int_terms(b)
        else:
            aterms, bterms = a._terms, b._terms
        mt = _mul_table(n)
        out = [0] * factorial(n)
        # smaller support outermost
        if len(aterms) <= len(bterms):
            for ru, ca in aterms.items():
                row = mt[ru]
                for rv, cb in bterms.items():
                    out[row[rv]] += ca * cb
        else:
            for rv, cb in bterms.items():
                for ru, ca in aterms.items():
                    out[mt[ru][rv]] += ca * cb
        if field.characteristic == 0:
            den = aden * bden
            terms = {r: Fraction(c, den) for r, c in enumerate(out) if c}
        else:
            p = field.p
            terms = {}
            for r, c in enumerate(out):
                c %= p
                if c:
                    terms[r] = c
        return AlgebraElement._raw(n, field, terms)
    perms = permutation_basis(n)
    acc: dict[int, object] = {}
    for ru, ca in a._terms.items():
        u = perms[ru]
        for rv, cb in b._terms.items():
            r = compose(u, perms[rv]).rank()
            acc[r] = acc.get(r, 0) + ca * cb
    terms = {}
    for r, c in acc.items():
        c = field.normalize(c)
        if c:
            terms[r] = c
    return AlgebraElement._raw(n, field, terms)


def antipode(a: AlgebraElement) -> AlgebraElement:
    """The linear extension of w -> w^{-1}; an anti-automorphism."""
    inv = _inv_table(a.n)
    return AlgebraElement._raw(a.n, a.field, {inv[r]: c for r, c in a._terms.items()})


def sign_twist(a: AlgebraElement) -> AlgebraElement:
    """The automorphism sending w to (-1)^w w."""
    field = a.field
    signs = _sign_table(a.n)
    terms = {}
    for r, c in a._terms.items():
        terms[r] = c if signs[r] > 0 else field.normalize(-c)
    return AlgebraElement._raw(a.n, field, terms)


def coeff_one(a: AlgebraElement):
    """Coefficient of the identity permutation (lex rank 0)."""
    return a._terms.get(0, a.field.zero)


def dot(a: AlgebraElement, b: AlgebraElement):
    """The bilinear form with the permutations as an orthonormal basis."""
    _check_pair(a, b)
    field = a.field
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    acc = field.zero
    for r, c in small._terms.items():
        d = big._terms.get(r)
        if d is not None:
            acc += c * d
    return field.normalize(acc)


def board_sum(n: int, board: Iterable[tuple[int, int]], field=QQ) -> AlgebraElement:
    """Sum of all w in S_n with (i, w(i)) in the board for every i."""
    allowed: list[list[int]] = [[] for _ in range(n)]
    seen = set()
    for i, j in board:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"square ({i},{j}) outside [{n}]x[{n}]")
        if (i, j) not in seen:
            seen.add((i, j))
            allowed[i - 1].append(j - 1)
    for row in allowed:
        row.sort()
    terms: dict[int, object] = {}
    one = field.one
    img = [0] * n
    used = [False] * n
    def place(i: int) -> None:
        if i == n:
            terms[Permutation._from_zero(tuple(img)).rank()] = one
            return
        for j in allowed[i]:
            if not used[j]:
                used[j] = True
                img[i] = j
                place(i + 1)
                used[j] = False
    place(0)
    return AlgebraElement._raw(n, field, terms)


def group_sum(n: int, field=QQ) -> AlgebraElement:
    """The sum of all of S_n."""
    one = field.one
    return AlgebraElement._raw(n, field, {r: one for r in range(factorial(n))})


# -- minimal polynomials ---------------------------------------------------


def _poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _synthetic_divide(coeffs: Sequence[Fraction], root: Fraction):
    """Divide the polynomial by (x - root); returns (quotient, remainder)."""
    desc = list(reversed(coeffs))
    out = [desc[0]]
    for c in desc[1:]:
        out.append(out[-1] * root + c)
    rem = out.pop()
    return list(reversed(out)), rem


def _divisors(m: int) -> list[int]:
    m = abs(m)
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _find_rational_root(coeffs: Sequence[Fraction]) -> Optional[Fraction]:
    """Some rational root of the polynomial, or None.  Assumes nonzero
    constant term."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    const, lead = ints[0], ints[-1]
    for q in _divisors(lead):
        for p in _divisors(const):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if _poly_eval(coeffs, cand) == 0:
                    return cand
    return None


class MinimalPolynomial:
    """A monic polynomial with rational coefficients, plus its factorization
    into linear factors over Q when it splits."""

    __slots__ = ("coeffs", "factors")

    def __init__(self, coeffs: Sequence[Fraction]):
        coeffs = [Fraction(c) for c in coeffs]
        if not coeffs or coeffs[-1] != 1:
            raise ValueError("polynomial must be monic")
        self.coeffs = tuple(coeffs)
        self.factors = self._factor()

    def _factor(self) -> Optional[tuple[tuple[Fraction, int], ...]]:
        work = list(self.coeffs)
        found: dict[Fraction, int] = {}
        zero_mult = 0
        while len(work) > 1 and work[0] == 0:
            work.pop(0)
            zero_mult += 1
        if zero_mult:
            found[Fraction(0)] = zero_mult
        while len(work) > 1:
            root = _find_rational_root(work)
            if root is None:
                return None
            mult = 0
            while True:
                q, rem = _synthetic_divide(work, root)
                if rem != 0:
                    break
                work = q
                mult += 1
            found[root] = found.get(root, 0) + mult
        return tuple(sorted(found.items(), key=lambda t: t[0], reverse=True))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_split(self) -> bool:
        return self.factors is not None

    def evaluate(self, a: AlgebraElement) -> AlgebraElement:
        """Horner evaluation inside the algebra."""
        out = AlgebraElement.zero(a.n, a.field)
        one = AlgebraElement.one(a.n, a.field)
        for c in reversed(self.coeffs):
            out = mul(out, a) + scale(c, one)
        return out

    def format_factored(self) -> str:
        """Linear factors sorted by root descending, exponents folded,
        e.g. '(x-4)*x^2*(x+2)'."""
        if self.factors is None:
            raise ValueError("polynomial does not split into linear factors")
        parts = []
        for root, mult in self.factors:
            if root == 0:
                base = "x"
            elif root > 0:
                base = f"(x-{root})"
            else:
                base = f"(x+{-root})"
            parts.append(base if mult == 1 else f"{base}^{mult}")
        return "*".join(parts)

    def format_coeffs(self) -> str:
        """Plain polynomial display from the raw coefficients."""
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                mon = ""
            elif k == 1:
                mon = "x"
            else:
                mon = f"x^{k}"
            if not mon:
                body = f"{abs(c)}"
            elif abs(c) == 1:
                body = mon
            else:
                body = f"{abs(c)}*{mon}"
            sign_str = "-" if c < 0 else "+"
            parts.append((sign_str, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign_str, body in parts[1:]:
            out += f" {sign_str} {body}"
        return out

    def __str__(self) -> str:
        return self.format_factored() if self.is_split() else self.format_coeffs()

    def __repr__(self) -> str:
        return f"MinimalPolynomial({list(self.coeffs)!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, MinimalPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)


def element_min_poly(a: AlgebraElement) -> MinimalPolynomial:
    """Minimal monic p in Q[x] with p(a) = 0 in the algebra.  Powers of a
    enter a Krylov sequence until the first linear dependency appears."""
    if a.field.characteristic != 0:
        raise ValueError("minimal polynomials are computed over the rationals")
    vectors = [AlgebraElement.one(a.n, a.field).to_vector()]
    power = AlgebraElement.one(a.n, a.field)
    bound = factorial(a.n) + 1
    while True:
        try:
            dep = min_dependency(vectors, field=a.field)
        except ExtendRequired:
            if len(vectors) >= bound:
                raise AssertionError("no dependency within the algebra dimension")
            power = mul(power, a)
            vectors.append(power.to_vector())
            continue
        return MinimalPolynomial(dep)
