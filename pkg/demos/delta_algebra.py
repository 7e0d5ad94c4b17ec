"""The abstract algebra spanned by the symbols D(B|A).

The symbols D(B|A), indexed by equal-size subset pairs of [n], multiply by
an integer structure rule and realize the rook sums abstractly: sending
D(B|A) to nabla_{B,A} is an algebra map onto the span of the rook sums.
This demo prints the small multiplication tables, the unity elements for
n <= 3, and the dimension / center / radical statistics.

Run:  python3 demos/delta_algebra.py
"""

from snalg.dalg import (
    DElement,
    basis_pairs,
    center_dim,
    d_dim,
    d_mul,
    radical_dim,
    unity_find,
)
from snalg.exactla import GF


def main() -> None:
    n = 2
    names = {}
    for i, (B, A) in enumerate(basis_pairs(n)):
        names[i] = f"D({B}|{A})"
    print(f"multiplication table for n = {n} (dimension {d_dim(n)}):")
    basis = [DElement.basis(n, B, A) for B, A in basis_pairs(n)]
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            print(f"  {names[i]} * {names[j]} = {d_mul(x, y)}")
    print()

    for m in (1, 2, 3):
        e = unity_find(m)
        print(f"unity for n = {m}:")
        print(f"  {e}")
    print()

    e2 = unity_find(2, GF(2))
    print(f"unity for n = 2 over the field with two elements: {e2}")
    print()

    print("dimension / center / radical over the rationals:")
    for m in range(2, 5):
        print(f"  n={m}:  dim {d_dim(m)}, center {center_dim(m)}, radical {radical_dim(m)}")


if __name__ == "__main__":
    main()
