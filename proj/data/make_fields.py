#!/usr/bin/env python3
"""Regenerates fields.tsv: Q, every real quadratic field with disc <= 3200, and the
higher-degree rows listed below. Quadratic zeta values come from Zagier's divisor sum."""
from fractions import Fraction
from math import gcd, isqrt
import sys

QUADRATIC_DISC_MAX = 3200


def sigma1(n):
    total, i = 0, 1
    while i * i <= n:
        if n % i == 0:
            total += i + (n // i if i * i != n else 0)
        i += 1
    return total


def squarefree(n):
    return all(n % (p * p) for p in range(2, isqrt(n) + 1))


def e1(disc):
    x = disc % 2
    total = 0
    while x * x < disc:
        s = sigma1((disc - x * x) // 4)
        total += s if x == 0 else 2 * s
        x += 2
    return total


# (degree, disc, ascending coefficients, zeta, overrides, comment)
HIGHER = [
    (3, 49, "1,-2,-1,1", "1/84", "", None),
    (3, 7825, "-45,-25,0,1", "211/6", "", None),
    (3, 9812, "33,-19,-1,1", "211/4", "", None),
    (3, 13396, "29,-25,-1,1", "211/3", "2:3^1", "index 2; 2 = p^3, N(p) = 2"),
    (4, 725, "1,1,-3,-1,1", "1/60", "", None),
    (4, 1125, "1,4,-4,-1,1", "1/30", "", None),
    (4, 2225, "4,2,-5,-1,1", "1/10",
     "2:1^2,1^2", "index 2 and 2 is a common index divisor; 2 = p1 p2 with N = 4, 4 (2-adic Newton polygon)"),
    (4, 38000, "95,0,-20,0,1", "211/30", "2:2^2", "index 4; 2 = r^2, N(r) = 4"),
    (4, 148889, "51,16,-15,-2,1", "211/3", "2:1^2,1^2", "index 4; 2 = p1 p2 with N = 4, 4"),
    (4, 150057, "7,5,-7,-2,1", "211/3", "", None),
    (5, 1060708, "-17,10,13,-7,-2,1", "211/6", "", None),
    (5, 1459417, "-2,9,11,-7,-2,1", "211/3", "", None),
    (5, 1471216, "-4,8,6,-7,-2,1", "211/3", "2:2^1,3^1",
     "index 2; 2 = p1^2 p2^3 with N = 2, 2 (checked on an odd-index generator)"),
    (5, 1630076, "-12,4,17,-9,-2,1", "211/3", "2:1^3,2^1", "index 2; 2 = p1 p2^2 with N = 8, 2"),
    (5, 1723364, "-11,8,13,-7,-2,1", "211/3", "", None),
    (6, 12694016, "-1,8,16,-2,-8,0,1", "211/6", "", None),
    (6, 15004240, "-17,-26,35,16,-11,-2,1", "211/6", "2:3^2", "index 16; 2 = p^3, N(p) = 4"),
    (6, 15378496, "-1,-6,6,8,-5,-2,1", "211/6", "", None),
    (6, 15700473, "-19,12,39,-2,-12,0,1", "211/6", "2:1^3,1^3", "index 8; 2 = p1 p2 with N = 8, 8"),
    (6, 17386832, "-2,-4,6,10,-4,-3,1", "211/3", "", None),
    (6, 17801408, "3,14,16,-4,-9,0,1", "211/4", "", None),
    (6, 18967381, "-17,-14,20,11,-8,-2,1", "211/4", "", None),
    (6, 22340432, "-1,-5,16,5,-8,-1,1", "211/3", "", None),
    (6, 23556176, "-7,-7,16,5,-8,-1,1", "211/3", "", None),
    (6, 26768537, "-2,1,11,0,-11,-1,1", "211/2", "5:1^1,1^2,1^3",
     "index 5; 5 unramified, residue degrees 1, 2, 3 via a 5-maximal generator"),
    (7, 154050496, "1,-1,-9,13,6,-8,-1,1", "211/6", "", None),
    (7, 225111553, "-1,-8,-8,12,9,-6,-2,1", "211/4", "", None),
    (7, 236583241, "1,-5,-5,16,4,-9,-1,1", "211/3", "13:1^2,1^5",
     "index 13; 13 unramified, residue degrees 2, 5 via a 13-maximal generator"),
    (7, 343318749, "3,0,-17,8,12,-6,-2,1", "211/2", "", None),
]


def quadratic_rows():
    rows = []
    for d in range(2, QUADRATIC_DISC_MAX + 1):
        if not squarefree(d):
            continue
        disc = d if d % 4 == 1 else 4 * d
        if disc > QUADRATIC_DISC_MAX:
            continue
        z = Fraction(e1(disc), 120)
        if d % 4 == 1:
            coeffs = f"{-(d - 1) // 4},-1,1"
        else:
            coeffs = f"{-d},0,1"
        rows.append((disc, f"2\t{disc}\t{coeffs}\t{z.numerator}/{z.denominator}\t"))
    rows.sort()
    return [r for _, r in rows]


def main(out):
    out.write("# genusgate field table\n")
    out.write("# degree\tdisc\tascending coefficients\t|zeta_K(-1)|/2^(d-1)\toverrides p:e^f,...\tflags\n")
    out.write("# degrees listed completely below the root-discriminant bound used by the degree cap\n")
    out.write("#@complete-degrees 1,2,11,12\n")
    out.write("# the rational field\n")
    out.write("1\t1\t0,1\t1/12\t\n")
    out.write(f"# real quadratic fields, disc <= {QUADRATIC_DISC_MAX}; generator x^2 - x - (d-1)/4 or x^2 - d\n")
    for row in quadratic_rows():
        out.write(row + "\n")
    out.write("# higher degree fields; zeta values are ingested, not computed\n")
    for degree, disc, coeffs, zeta, overrides, comment in HIGHER:
        if comment:
            out.write(f"# {disc}: {comment}\n")
        num, den = map(int, zeta.split("/"))
        assert gcd(num, den) == 1
        out.write(f"{degree}\t{disc}\t{coeffs}\t{zeta}\t{overrides}\n")


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else None
    if target:
        with open(target, "w", newline="\n") as f:
            main(f)
    else:
        main(sys.stdout)
