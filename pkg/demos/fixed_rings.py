"""Fixed-ring presentations: what the q-twisted Frobenius leaves behind.

The invariant ring of the maximal torus is generated by orbit sums; the fixed
ring imposes one relation per generator, built by pulling the generator back
along Frobenius, applying the q-th Adams operation, and rewriting in the
generator basis.

Run:  python3 demos/fixed_rings.py
"""

from param_atlas import bg_presentation, build_group
from param_atlas.invariant_rings import count_points, dickson_polynomial


def main() -> None:
    for family, n, q in [("GL", 1, 5), ("SL", 2, 3), ("SL", 2, 4), ("U", 2, 3),
                         ("GL", 2, 3), ("GSp", 4, 3)]:
        datum = build_group(family, n)
        pres = bg_presentation(datum, q)
        print(f"\n{datum.name}, q={q}")
        print(pres.canonical_text())

    # For SL_2 the relation is the classical Dickson polynomial minus c:
    # D_q(x + 1/x) = x^q + x^(-q).
    print("\nDickson polynomials D_q(c):")
    for q in (2, 3, 5, 7):
        print(f"  q={q}:", dickson_polynomial(q).canonical_str(["c"]))

    # Counting solutions over a small coefficient field is a finite shadow of
    # the fixed-ring scheme; multiplicity shows up as a gcd with the
    # derivative.
    sl2 = build_group("SL", 2)
    for q, ell in [(3, 5), (2, 7), (8, 7)]:
        rep = count_points(bg_presentation(sl2, q), ell)
        print(f"\nSL2 q={q} over F_{ell}: {rep.points} points"
              f" (gcd degree with derivative: {rep.multiplicity_gcd_degree})")


if __name__ == "__main__":
    main()
