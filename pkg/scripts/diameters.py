"""Diameters of P(n) and Gamma(n-1, n-1, n-2) with timings."""

import argparse
import time

from cayleyspec import build_cayley, build_pancake, diameter
from cayleyspec.quotient import gamma_family_generators


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=7)
    args = parser.parse_args()
    print(f"{'n':>2} {'P(n)':>5} {'Gamma':>6} {'seconds':>8}")
    for n in range(3, args.max_n + 1):
        t0 = time.perf_counter()
        kp = diameter(build_pancake(n))
        kg = diameter(build_cayley(n, gamma_family_generators(n)))
        print(f"{n:>2} {kp:>5} {kg:>6} {time.perf_counter() - t0:>8.2f}")


if __name__ == "__main__":
    main()
