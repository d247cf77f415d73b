"""Evaluate degree-based indices on a few small graphs.

Shows the exact-arithmetic behavior: integer indices stay Python ints,
reciprocal sums become Fractions, exponential indices go to float.
"""

import argparse
from fractions import Fraction

from unicyc import (
    F,
    Graph,
    ID,
    M1,
    NK,
    NK_STAR,
    WIENER,
    degree_sequence,
    evaluate,
    m1_alpha,
    m2_alpha,
    sei,
    value_mode,
    wiener,
)
from unicyc.extremal import build_cycle, build_triangle_star


def show(name, g):
    print(f"{name}: n={g.n}, m={g.m}, degrees={degree_sequence(g)}")
    for spec in (M1, F, ID, NK, NK_STAR, m1_alpha(-2), m2_alpha(1), sei(2.0), WIENER):
        value = evaluate(spec, g)
        rendered = float(value) if isinstance(value, Fraction) else value
        print(f"  {spec.label:>8} = {rendered}  [{value_mode(value)}]")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=6, help="vertex count")
    args = parser.parse_args()
    n = args.n

    show(f"cycle C_{n}", build_cycle(n))
    show(f"triangle star on {n} vertices", build_triangle_star(n))

    # a hand-made unicyclic graph: square with a 2-path tail
    tail = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)])
    show("square with a tail", tail)

    # Wiener needs distances, not degrees: two graphs with the same
    # degree sequence can differ
    a = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)])
    b = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)])
    assert degree_sequence(a) == degree_sequence(b)
    print("same degree sequence, different Wiener index:")
    print(f"  pendants on adjacent cycle vertices: W = {wiener(a)}")
    print(f"  pendants on opposite cycle vertices: W = {wiener(b)}")


if __name__ == "__main__":
    main()
