#!/usr/bin/env python3
"""Print diagonal-support tables for a few instructive groups.

For each selected w the table lists every z with N(w, z, z) != 0, the
polynomial, and its degree, then the maximal degree d and its maximizers.
Covers the even dihedral family, the infinite dihedral group under a length
bound, and the full-support elements of A3.

Usage: python scripts/eset_tables.py [max_len]
"""

import sys

from heckeflag import HeckeAlgebra, build_system, e_set


def show(algebra, w, max_len=None):
    rep = e_set(algebra, w, max_len)
    bound = "" if rep.truncation is None else f"  (scanned up to length {rep.truncation})"
    print(f"w = {list(w.word)}{bound}")
    if not rep.members:
        print("  no members within the scan")
        return
    for z, n, deg in rep.members:
        print(f"  z = {str(list(z.word)):<32} N = {str(n):<24} deg {deg}")
    print(f"  d = {rep.d}, maximizers: {[list(z.word) for z in rep.e_prime]}")


def main():
    bound = int(sys.argv[1]) if len(sys.argv) > 1 else 14

    for n in (2, 3):
        label = f"I2({2 * n})"
        system = build_system(label)
        algebra = HeckeAlgebra(system)
        print(f"== {label}: powers of the rotation s1 s2 ==")
        for k in range(1, n + 1):
            show(algebra, system.normal_form([1, 2] * k))
        print()

    system = build_system("I2(inf)")
    algebra = HeckeAlgebra(system)
    print(f"== I2(inf), truncated at {bound} ==")
    for word in ([1, 2], [1, 2, 1, 2], [1, 2, 1], [2, 1, 2]):
        show(algebra, system.normal_form(word), bound)
    print()

    system = build_system("A3")
    algebra = HeckeAlgebra(system)
    print("== A3: full-support elements ==")
    for w in system.elements:
        if system.is_full_support(w):
            show(algebra, w)


if __name__ == "__main__":
    main()
