"""Which components come from proper Levi subgroups, and which do not.

A component is covered when some gamma-stable standard Levi sees its class as
regular and its twisted component-group class is reachable from that Levi.
The interesting failures:

  - GSp_4, class (2,2): two components share the class; the non-identity one
    is not reached from the GL_2 Levi.
  - GSp_6, class (4,2): distinguished but not regular, so no Levi works.
  - U_3, class (2,1): no gamma-stable Levi witnesses it at all.

Run:  python3 demos/coverage_tour.py
"""

from param_atlas import ArithmeticContext, build_group, coverage_report, standard_levis


def main() -> None:
    ctx = ArithmeticContext(q=3, ell=5)
    for family, n in [("GL", 4), ("U", 3), ("U", 4), ("GSp", 4), ("GSp", 6)]:
        datum = build_group(family, n)
        stable = [x for x in standard_levis(datum) if x.gamma_stable]
        print(f"\n{datum.name}: {len(stable)} gamma-stable standard Levis")
        for v in coverage_report(datum, ctx):
            mark = "+" if v.covered else "-"
            via = v.witness.describe() if v.witness else v.reason
            print(f"  {mark} {v.entry.label:<4} {str(v.entry.unipotent.partition):<20} {via}")


if __name__ == "__main__":
    main()
