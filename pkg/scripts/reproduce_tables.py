"""Rank and quotient-spectrum tables for P(4) and Gamma(3,3,2), plus the
per-irrep spectra and the full spectra."""

import argparse

from cayleyspec import VoltageGraph, assemble_regular, gamma_generators, pancake_generators
from cayleyspec.cli import main as cli_main


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--format", choices=["pretty", "json"], default="pretty")
    args = parser.parse_args()
    for title, family in (("P(4)", ["pancake", "4"]), ("Gamma(3,3,2)", ["gamma", "3", "3", "2"])):
        print(f"== {title}")
        cli_main(["spectrum", *family, "--partition", "all", "--format", args.format])
    for title, gens in (("P(4)", pancake_generators(4)), ("Gamma(3,3,2)", gamma_generators(3, 3, 2))):
        print(f"spec {title} = {assemble_regular(VoltageGraph.singleton(gens)).pretty()}")


if __name__ == "__main__":
    main()
