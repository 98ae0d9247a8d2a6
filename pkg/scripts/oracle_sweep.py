"""Compare the engine with the brute-force U(gl_N) product-sum over all of S_m.

Also checks centrality and the Harish-Chandra eigenvalue at random weights.

    python3 scripts/oracle_sweep.py --max-m 5 --N 2 3
"""

import argparse
import itertools
import random
import time

from glweight.engine import WeightSystem
from glweight.hc import eigenvalue, to_p_basis
from glweight.oracle import cartan_part, expand_polynomial, is_central, w_direct


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=5)
    ap.add_argument("--N", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--central-max-m", type=int, default=4)
    ap.add_argument("--weights", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    ws = WeightSystem()
    rng = random.Random(args.seed)
    bad = 0
    for N in args.N:
        t0 = time.perf_counter()
        weights = [tuple(rng.randint(-5, 5) for _ in range(N)) for _ in range(args.weights)]
        checked = 0
        for m in range(args.max_m + 1):
            for images in itertools.permutations(range(1, m + 1)):
                direct = w_direct(images, N)
                value = ws(images)
                if expand_polynomial(value, N) != direct:
                    print(f"N={N} {images}: engine and direct sum differ")
                    bad += 1
                if m <= args.central_max_m and not is_central(direct):
                    print(f"N={N} {images}: not central")
                    bad += 1
                proj = cartan_part(direct)
                pform = to_p_basis(value)
                for lam in weights:
                    if proj.evaluate(lam) != eigenvalue(pform, lam):
                        print(f"N={N} {images} at {lam}: eigenvalue mismatch")
                        bad += 1
                checked += 1
        print(f"N={N}: {checked} permutations in {time.perf_counter() - t0:.1f}s")
    print("all agree" if not bad else f"{bad} disagreements")


if __name__ == "__main__":
    main()
