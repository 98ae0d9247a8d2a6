"""Time w_GL(K_n) from an empty cache and report memo growth.

    python3 scripts/benchmark_kn.py --max-n 7 --strategy left --save cache.jsonl
"""

import argparse
import time

from glweight.diagrams import chord_to_perm, make_kn
from glweight.engine import EngineConfig, MemoCache, WeightSystem


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--strategy", choices=("left", "right"), default="left")
    ap.add_argument("--no-early-stop", action="store_true")
    ap.add_argument("--plain-keys", action="store_true", help="memo without rotation dedup")
    ap.add_argument("--save", help="write the final cache as JSON lines")
    args = ap.parse_args()

    cache = MemoCache(rotation_keys=not args.plain_keys)
    ws = WeightSystem(cache, EngineConfig(args.strategy, early_stop=not args.no_early_stop))
    print(f"{'n':>2} {'seconds':>9} {'cache':>8} {'terms':>6}")
    total = 0.0
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        value = ws(chord_to_perm(make_kn(n)))
        dt = time.perf_counter() - t0
        total += dt
        print(f"{n:>2} {dt:9.2f} {len(cache):8d} {len(value):6d}")
    print(f"total {total:.2f}s")
    if args.save:
        cache.save(args.save)


if __name__ == "__main__":
    main()
