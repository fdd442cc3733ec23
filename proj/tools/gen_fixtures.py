#!/usr/bin/env python3
"""Writes OEIS-style b-files for the crosscheck fixtures.

The sandbox that produced tests/fixtures/ had no network access, so instead of
downloading from oeis.org the terms are generated from each sequence's OEIS
definition. Run with --out DIR to regenerate.
"""

import argparse
import math
import pathlib


def generalized_pentagonal(count):
    # A001318: m(3m-1)/2 for m = 0, 1, -1, 2, -2, ...
    out = [0]
    m = 1
    while len(out) < count:
        out.append(m * (3 * m - 1) // 2)
        out.append(m * (3 * m + 1) // 2)
        m += 1
    return out[:count]


def is_square(n):
    r = math.isqrt(n)
    return r * r == n


def is_triangular(n):
    return is_square(8 * n + 1)


def is_generalized_pentagonal(n):
    # n = m(3m-1)/2 for some integer m  <=>  24n + 1 is a perfect square
    return is_square(24 * n + 1)


SEQUENCES = {
    "A001318": ("Generalized pentagonal numbers: m*(3*m - 1)/2, m = 0, +-1, +-2, +-3, ....",
                lambda k: dict(enumerate(generalized_pentagonal(k)))),
    "A000290": ("The squares: a(n) = n^2.", lambda k: {n: n * n for n in range(k)}),
    "A000217": ("Triangular numbers: a(n) = binomial(n+1,2) = n*(n+1)/2.",
                lambda k: {n: n * (n + 1) // 2 for n in range(k)}),
    "A000122": ("Expansion of Jacobi theta function theta_3(x) = Sum_{m=-oo..oo} x^(m^2).",
                lambda k: {n: (1 if n == 0 else 2 if is_square(n) else 0) for n in range(k)}),
    "A010054": ("a(n) = 1 if n is a triangular number, otherwise 0.",
                lambda k: {n: int(is_triangular(n)) for n in range(k)}),
    "A080995": ("Characteristic function of generalized pentagonal numbers A001318.",
                lambda k: {n: int(is_generalized_pentagonal(n)) for n in range(k)}),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=pathlib.Path, default=pathlib.Path("tests/fixtures"))
    parser.add_argument("--terms", type=int, default=1001)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for seq_id, (title, terms) in SEQUENCES.items():
        path = args.out / f"b{seq_id[1:]}.txt"
        with path.open("w", newline="\n") as f:
            f.write(f"# {seq_id} {title}\n")
            f.write(f"# Generated from the OEIS definition by tools/gen_fixtures.py\n")
            for index, value in sorted(terms(args.terms).items()):
                f.write(f"{index} {value}\n")


if __name__ == "__main__":
    main()
