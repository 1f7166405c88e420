#!/usr/bin/env python3
"""Writes OEIS-style b-files for the sequences the oeis command knows.

The values come from each sequence's defining formula, computed here in
plain Python without the library. Replace a file with the real download
(`qsv oeis --check <id> --fetch`) when network access is available.
"""

import argparse
import pathlib


def a000005(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


def a228441(n):
    # sum over d | n of (-1)^(d + n/d)
    return sum((-1) ** (d + n // d) for d in range(1, n + 1) if n % d == 0)


def a015128_table(upto):
    # coefficients of prod_{k>=1} (1 + q^k)/(1 - q^k)
    c = [0] * (upto + 1)
    c[0] = 1
    for k in range(1, upto + 1):
        for n in range(upto, k - 1, -1):  # times (1 + q^k)
            c[n] += c[n - k]
        for n in range(k, upto + 1):  # over (1 - q^k)
            c[n] += c[n - k]
    return c


SEQUENCES = {
    "A000005": ("d(n), the number of divisors of n", 1, 1000, a000005),
    "A228441": ("sum_{d|n} (-1)^(d + n/d)", 1, 1000, a228441),
    "A015128": ("number of overpartitions of n", 0, 200, None),
}


def write(out_dir, sid):
    name, first, last, f = SEQUENCES[sid]
    values = a015128_table(last) if f is None else None
    path = out_dir / f"b{sid[1:]}.txt"
    with path.open("w") as fh:
        fh.write(f"# {sid}: {name}\n")
        fh.write(f"# n = {first}..{last}, generated by tools/scripts/make_oeis_fixtures.py\n")
        for n in range(first, last + 1):
            fh.write(f"{n} {values[n] if values else f(n)}\n")
    return path


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=pathlib.Path,
                        default=pathlib.Path(__file__).resolve().parents[2] / "data" / "oeis")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for sid in SEQUENCES:
        print(write(args.out, sid))


if __name__ == "__main__":
    main()
