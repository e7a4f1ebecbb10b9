#!/usr/bin/env python3
"""Set-level oracle for the completion of subsets on {1, B}: setoids and their maps."""
from itertools import product


def partitions(xs):
    if not xs:
        yield []
        return
    head, rest = xs[0], xs[1:]
    for p in partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[head] + p[i]] + p[i + 1:]
        yield [[head]] + p


def relation(p):
    return frozenset((a, b) for blk in p for a in blk for b in blk)


sets = {"1": ["*"], "B": ["b1", "b2"]}
objects = [(n, relation(p)) for n, xs in sets.items() for p in partitions(xs)]


def arrows(src, tgt):
    (xn, rho), (yn, sigma) = src, tgt
    xs, ys = sets[xn], sets[yn]
    fs = [dict(zip(xs, img)) for img in product(ys, repeat=len(xs))]
    fs = [f for f in fs if all((f[a], f[b]) in sigma for a, b in rho)]
    classes = []
    for f in fs:
        if not any(all((f[a], g[b]) in sigma for a, b in rho) for g in classes):
            classes.append(f)
    return classes


n_arrows = sum(len(arrows(s, t)) for s in objects for t in objects)
b_delta = ("B", relation([["b1"], ["b2"]]))
slice_objects = sum(len(arrows(s, b_delta)) for s in objects)
print("objects", len(objects))
print("arrows", n_arrows)
print("slice_objects_over_B_delta", slice_objects)
print("relations_on_B", sum(1 for o in objects if o[0] == "B"))
