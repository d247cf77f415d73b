"""Brute-force the extremal graphs and compare with the closed forms.

Enumerates every unicyclic isomorphism class on n vertices, finds the
optima of several indices, and checks them against the catalog bound
values. The attaining graphs are exactly the predicted families.
"""

import argparse

from unicyc import (
    F,
    ID,
    M1,
    NK,
    NK_STAR,
    catalog_entry,
    count_classes,
    degree_sequence,
    eval_bound,
    extremal_search,
    m1_alpha,
    sei,
)


def search_and_compare(spec, n, lower_id, upper_id, param=None):
    result = extremal_search(spec, n)
    want_lo = eval_bound(catalog_entry(lower_id), n, param=param)
    want_hi = eval_bound(catalog_entry(upper_id), n, param=param)
    lo_mark = "==" if result.minimum == want_lo else "!="
    hi_mark = "==" if result.maximum == want_hi else "!="
    print(f"{result.index_label:>8}: min {result.minimum} {lo_mark} bound {want_lo}, "
          f"max {result.maximum} {hi_mark} bound {want_hi}")
    for side, graphs in (("min", result.minimizers), ("max", result.maximizers)):
        shapes = ", ".join(str(degree_sequence(g)) for g in graphs)
        print(f"          {side} attained by {len(graphs)}: {shapes}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=7, help="vertex count, 4..9")
    args = parser.parse_args()
    n = args.n

    print(f"{count_classes(n)} unicyclic isomorphism classes on n={n}\n")
    search_and_compare(M1, n, "m1-uni-lower", "m1-uni-upper")
    search_and_compare(F, n, "f-uni-lower", "f-uni-upper")
    search_and_compare(ID, n, "id-uni-lower", "id-uni-upper")
    search_and_compare(NK, n, "nk-uni-lower", "nk-uni-upper")
    search_and_compare(NK_STAR, n, "nkstar-uni-lower", "nkstar-uni-upper")
    search_and_compare(m1_alpha(-2), n, "m1a-convex-uni-lower",
                       "m1a-convex-uni-upper", param=-2)
    print()

    # restricted searches: the same machine, smaller classes
    for d in range(3, n):
        result = extremal_search(M1, n, max_degree=d)
        want_lo = eval_bound(catalog_entry("m1-maxdeg-lower"), n, delta=d)
        want_hi = eval_bound(catalog_entry("m1-maxdeg-upper"), n, delta=d)
        status = "ok" if (result.minimum, result.maximum) == (want_lo, want_hi) else "MISMATCH"
        print(f"M1 with max degree {d}: range {result.minimum}..{result.maximum}, "
              f"bounds {want_lo}..{want_hi} [{status}]")
    print()

    a = 2.0
    result = extremal_search(sei(a), n)
    print(f"SEI(a=2) over all classes: {result.minimum:.6g}..{result.maximum:.6g}")
    print(f"  minimizer degrees: {degree_sequence(result.minimizers[0])}")
    print(f"  maximizer degrees: {degree_sequence(result.maximizers[0])}")


if __name__ == "__main__":
    main()
