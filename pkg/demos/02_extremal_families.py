"""Walk through the extremal families and the majorization order.

For a fixed n, every unicyclic degree sequence sits between the cycle
sequence and the star-cycle sequence. Fixing the maximum degree or the
pendant count tightens the sandwich. Schur-convex index maps turn those
sequence comparisons into sharp value bounds.
"""

import argparse

from unicyc import (
    balanced_pendant_sequence,
    cycle_sequence,
    degree_sequence,
    evaluate,
    hub_path_sequence,
    hub_pendant_sequence,
    loaded_cycle_sequence,
    m1_alpha,
    majorizes,
    power,
    schur_value,
    star_cycle_sequence,
    verify_schur_monotonicity,
)
from unicyc.extremal import (
    build_cycle,
    build_hub_paths,
    build_hub_pendants,
    build_loaded_cycle,
    build_triangle_star,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=8)
    parser.add_argument("--max-degree", type=int, default=4)
    parser.add_argument("--pendants", type=int, default=3)
    args = parser.parse_args()
    n, d, p = args.n, args.max_degree, args.pendants

    lo, hi = cycle_sequence(n), star_cycle_sequence(n)
    print(f"all unicyclic graphs on n={n} vertices:")
    print(f"  minimum sequence (cycle):      {lo}")
    print(f"  maximum sequence (star-cycle): {hi}")
    print(f"  star-cycle majorizes cycle: {majorizes(hi, lo)}")
    print()

    y, z = hub_path_sequence(n, d), loaded_cycle_sequence(n, d)
    print(f"restricted to maximum degree {d}:")
    print(f"  minimum sequence (hub-paths):    {y}")
    print(f"  maximum sequence (loaded-cycle): {z}")
    print(f"  nesting: cycle <= hub-paths: {majorizes(y, lo)}, "
          f"loaded-cycle <= star-cycle: {majorizes(hi, z)}")
    print()

    a, b = balanced_pendant_sequence(n, p), hub_pendant_sequence(n, p)
    print(f"restricted to {p} pendant vertices:")
    print(f"  minimum sequence (balanced):     {a}")
    print(f"  maximum sequence (hub-pendants): {b}")
    print()

    print("constructions realizing the sequences:")
    for name, g in (
        ("cycle", build_cycle(n)),
        ("triangle star", build_triangle_star(n)),
        (f"hub-paths({n},{d})", build_hub_paths(n, d)),
        (f"loaded-cycle({n},{d})", build_loaded_cycle(n, d)),
        (f"hub-pendants({n},{p})", build_hub_pendants(n, p)),
    ):
        print(f"  {name:>18}: degrees={degree_sequence(g)}, "
              f"M1={evaluate(m1_alpha(2), g)}")
    print()

    # a strictly convex term function turns majorization into ordering
    report = verify_schur_monotonicity(power(2), z, y, "additive")
    print("sum of squared degrees respects the order:")
    print(f"  at loaded-cycle: {report.value_x}")
    print(f"  at hub-paths:    {report.value_y}")
    print(f"  consistent with Schur-convexity: {report.consistent}")
    print(f"  sum over cycle sequence: {schur_value(power(2), lo, 'additive')} "
          "(global minimum)")


if __name__ == "__main__":
    main()
