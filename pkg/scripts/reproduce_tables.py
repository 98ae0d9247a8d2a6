"""Recompute the K_n tables (w_GL and its projection to primitives, C- and p-basis).

Each entry is compared with the published value; mismatches print the
difference computed - published.

    python3 scripts/reproduce_tables.py --max-n 7 --out tables.json
"""

import argparse
import json
import time

from glweight import golden
from glweight.diagrams import make_kn
from glweight.engine import WeightSystem
from glweight.hc import to_p_basis
from glweight.hopf import DiagramValues, primitive_projection


def compute(max_n):
    values = DiagramValues(WeightSystem())
    rows = {}
    for n in range(2, max_n + 1):
        t0 = time.perf_counter()
        d = make_kn(n)
        w = values(d)
        wb = primitive_projection(d).evaluate(values)
        rows[n] = {"wgl_c": w, "wgl_p": to_p_basis(w), "wbar_c": wb, "wbar_p": to_p_basis(wb),
                   "seconds": time.perf_counter() - t0}
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--out", help="write all computed polynomials as JSON")
    ap.add_argument("--quiet", action="store_true", help="only print the comparison lines")
    args = ap.parse_args()

    rows = compute(args.max_n)
    mismatches = 0
    for n, row in rows.items():
        print(f"== K{n}  ({row['seconds']:.2f}s)")
        for name in golden.TABLES:
            got, want = row[name], golden.table(name)[n]
            ok = got == want
            mismatches += not ok
            print(f"  {name:7s} {'agrees' if ok else 'DIFFERS'}")
            if not args.quiet:
                print(f"    {got}")
            if not ok:
                print(f"    computed - published = {got - want}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({str(n): {k: v.to_json_obj() for k, v in row.items() if k != "seconds"}
                       for n, row in rows.items()}, fh, indent=1)
    print(f"{mismatches} mismatching entries")


if __name__ == "__main__":
    main()
