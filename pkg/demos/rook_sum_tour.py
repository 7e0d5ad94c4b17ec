"""A guided tour of rook sums in the group algebra of S_n.

Builds a few rook sums nabla_{B,A}, multiplies them, checks the closed-form
product rules against direct convolution, and prints the minimal-polynomial
table of the canonical elements kappa(a, b, c) for a small n.

Run:  python3 demos/rook_sum_tour.py
"""

from snalg.exactla import QQ
from snalg.groupalg import mul
from snalg.rook import (
    Subset,
    kappa,
    minpol_table,
    nabla,
    product_rule_a,
)


def main() -> None:
    n = 3
    B = Subset(n, (1, 2))
    A = Subset(n, (2, 3))
    x = nabla(B, A)
    print(f"nabla_{{{B}|{A}}} in k[S_{n}]:")
    print(f"  {x}")
    print(f"  support size {len(x.support())} (permutations mapping {A} onto {B})")
    print()

    D, C = Subset(n, (1, 3)), Subset(n, (1, 2))
    left, right = nabla(D, C), nabla(B, A)
    direct = mul(left, right)
    closed = product_rule_a(D, C, B, A)
    print(f"product nabla_{{{D}|{C}}} * nabla_{{{B}|{A}}}:")
    print(f"  direct convolution: {direct}")
    print(f"  closed-form rule:   {closed}")
    print(f"  agree: {direct == closed}")
    print()

    print(f"minimal polynomials of the rook-sum elements kappa(a, b, c), n = {n}:")
    for a, b, c, poly in minpol_table(n):
        elem = kappa(n, a, b, c, QQ)
        print(f"  kappa({a}, {b}, {c})  [{len(elem.support())} terms]  ->  {poly.format_factored()}")


if __name__ == "__main__":
    main()
