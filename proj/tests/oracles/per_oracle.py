#!/usr/bin/env python3
"""Pers on the finite-set chart {1, B, Q} with carriers 1 and B, and their exact completion."""
from itertools import product

sizes = {"1": 1, "B": 2, "Q": 4}


def maps(a, b):
    return list(product(range(sizes[b]), repeat=sizes[a]))


def comp(g, f):
    return tuple(g[x] for x in f)


def ident(a):
    return tuple(range(sizes[a]))


def is_per(X, R, r1, r2):
    if not any(comp(r1, d) == ident(X) and comp(r2, d) == ident(X) for d in maps(X, R)):
        return False
    if not any(comp(r1, s) == r2 and comp(r2, s) == r1 for s in maps(R, R)):
        return False
    for A in sizes:
        for u in maps(A, R):
            for v in maps(A, R):
                if comp(r2, u) != comp(r1, v):
                    continue
                if not any(comp(r1, w) == comp(r1, u) and comp(r2, w) == comp(r2, v) for w in maps(A, R)):
                    return False
    return True


pers = [(X, R, a, b) for X in ("1", "B") for R in sizes for a in maps(R, X) for b in maps(R, X) if is_per(X, R, a, b)]


def arrow_classes(P, S):
    (X, R, r1, r2), (Y, T, s1, s2) = P, S
    fs = [f for f in maps(X, Y) if any(comp(s1, t) == comp(f, r1) and comp(s2, t) == comp(f, r2) for t in maps(R, T))]
    reps = []
    for f in fs:
        if not any(any(comp(s1, h) == g and comp(s2, h) == f for h in maps(X, T)) for g in reps):
            reps.append(f)
    return len(reps)


def quotient_size(P):
    X, R, r1, r2 = P
    parent = list(range(sizes[X]))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x
    for i in range(sizes[R]):
        parent[find(r1[i])] = find(r2[i])
    return len({find(x) for x in range(sizes[X])})


print("pers", len(pers))
print("arrows", sum(arrow_classes(P, S) for P in pers for S in pers))
print("quotient_sizes", sorted({quotient_size(P) for P in pers}))
