#!/usr/bin/env python3
"""Counts unlabeled connected simple graphs and connected signed graphs up to
switching and isomorphism by brute force over all labelings."""
import itertools
import sys


def connected(n, edges):
    if n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == u and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return len(seen) == n


def count(n, connected_only=True):
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    subsets = list(itertools.product((0, 1), repeat=n))
    simple, signed = set(), set()
    for labels in itertools.product((0, 1, 2), repeat=len(pairs)):
        edges = [p for p, l in zip(pairs, labels) if l]
        if connected_only and not connected(n, edges):
            continue
        sign = {p: (1 if l == 1 else -1) for p, l in zip(pairs, labels) if l}
        best_simple, best_signed = None, None
        for perm in perms:
            mapped = {tuple(sorted((perm[a], perm[b]))): s for (a, b), s in sign.items()}
            key = tuple(sorted(mapped))
            best_simple = key if best_simple is None or key < best_simple else best_simple
            for sw in subsets:
                k = tuple(sorted((a, b, s * (-1 if sw[a] != sw[b] else 1)) for (a, b), s in mapped.items()))
                best_signed = k if best_signed is None or k < best_signed else best_signed
        simple.add(best_simple)
        signed.add(best_signed)
    return len(simple), len(signed)


if __name__ == "__main__":
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    for n in range(1, top + 1):
        print(n, "connected", *count(n), "all", *count(n, False))
