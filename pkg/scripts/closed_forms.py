"""Print B_n and B'_n with their exact eigen-data for a range of n."""

import argparse

import numpy as np

from cayleyspec import gamma_closed_form, pancake_closed_form, perfect_code_multiplicity_bound
from cayleyspec.spectra import matrix_spectrum


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=7)
    args = parser.parse_args()
    np.set_printoptions(linewidth=120)
    for n in range(3, args.max_n + 1):
        cf = pancake_closed_form(n)
        print(f"B_{n} =\n{cf.B}")
        for lam, v in cf.eigenpairs:
            print(f"  {lam:>3}: {v}")
        gf = gamma_closed_form(n)
        print(f"B'_{n} =\n{gf.B}")
        print(f"  certified: {list(gf.certified_eigenvalues)}; numeric: {matrix_spectrum(gf.B).pretty(5)}")
    for n in range(2, min(args.max_n, 6) + 1):
        print(f"P({n}): m(-1) >= {perfect_code_multiplicity_bound(n)}")


if __name__ == "__main__":
    main()
