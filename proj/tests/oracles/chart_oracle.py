#!/usr/bin/env python3
"""Set-level oracle for the chart of finite sets on 1, B and Q with subset fibers."""
from itertools import product, combinations

sets = {"1": ["*"], "B": ["b1", "b2"], "Q": ["11", "12", "21", "22"]}
names = sorted(sets)


def maps(x, y):
    return [tuple(img) for img in product(range(len(sets[y])), repeat=len(sets[x]))]


def subsets(x):
    n = len(sets[x])
    return [frozenset(i for i in range(n) if m >> i & 1) for m in range(1 << n)]


def pre(f, s):
    return frozenset(i for i, v in enumerate(f) if v in s)


def after(g, f):
    return tuple(g[v] for v in f)


homs = {(x, y): maps(x, y) for x in names for y in names}
print("arrows", sum(len(v) for v in homs.values()))
print("slice_over_B", sum(len(homs[(x, "B")]) for x in names))

# slice over 1: classes of mutual reachability among the three objects
reach = {(x, y): bool(homs[(x, y)]) for x in names for y in names}
classes = {frozenset(y for y in names if reach[(x, y)] and reach[(y, x)]) for x in names}
print("reflection_over_1", len(classes))


def fill_ins(apex, legs, feet, a, targets):
    return [h for h in homs[(a, apex)] if all(after(l, h) == t for l, t in zip(legs, targets))]


def classify(apex, legs, feet):
    strict = True
    for a in names:
        for ts in product(*[homs[(a, f)] for f in feet]):
            n = len(fill_ins(apex, legs, feet, a, ts))
            if n == 0:
                return "not_weak"
            strict = strict and n == 1
    return "strict" if strict else "weak_only"


def weak_products(feet):
    out = []
    for apex in names:
        for legs in product(*[homs[(apex, f)] for f in feet]):
            c = classify(apex, legs, feet)
            if c != "not_weak":
                out.append((apex, c))
    return out


bang_b = homs[("B", "1")][0]
q1 = (0, 0, 1, 1)
q2 = (0, 1, 0, 1)
print("cone_B_bang", classify("B", (bang_b, bang_b), ("1", "1")))
print("cone_Q_q1q2", classify("Q", (q1, q2), ("B", "B")))
print("weak_products_1_1", " ".join(f"{a}:{c}" for a, c in weak_products(("1", "1"))))
print("weak_products_Q_Q", len(weak_products(("Q", "Q"))))


def saturated(apex, legs):
    """Subsets of the apex that are unions of fibres of the joint leg map."""
    key = [tuple(l[i] for l in legs) for i in range(len(sets[apex]))]
    return [s for s in subsets(apex) if all((i in s) == (j in s) for i in range(len(key)) for j in range(len(key)) if key[i] == key[j])]


def rbp(apex, legs, beta):
    for a in names:
        for h, k in combinations(homs[(a, apex)], 2):
            if all(after(l, h) == after(l, k) for l in legs) and pre(h, beta) != pre(k, beta):
                return False
    return True


cone_b = ("B", (bang_b, bang_b))
print("pi_over_B_bang", len(saturated(*cone_b)))
print("pi_over_Q_q1q2", len(saturated("Q", (q1, q2))))
print("rbp_over_B_bang", " ".join(str(sorted(s)) for s in subsets("B") if rbp(*cone_b, s)))
print("rbp_equals_saturated_B_bang", [s for s in subsets("B") if rbp(*cone_b, s)] == saturated(*cone_b))

# adjoints of preimage along B -> 1 between subset lattices
sub_b, sub_1 = subsets("B"), subsets("1")
left = {s: min((t for t in sub_1 if all((s <= pre(bang_b, u)) == (t <= u) for u in sub_1)), key=len) for s in sub_b}
right = {s: max((t for t in sub_1 if all((pre(bang_b, u) <= s) == (u <= t) for u in sub_1)), key=len) for s in sub_b}
print("left_adjoint_preimage", " ".join(f"{sorted(s)}>{sorted(left[s])}" for s in sub_b))
print("right_adjoint_preimage", " ".join(f"{sorted(s)}>{sorted(right[s])}" for s in sub_b))
image_meets = all(frozenset(bang_b[i] for i in s & t) == frozenset(bang_b[i] for i in s) & frozenset(bang_b[i] for i in t) for s in sub_b for t in sub_b)
print("direct_image_meet_preserving", image_meets)

# comprehension of {b1}: points of B that land in it and through which every map into it factors
b1 = frozenset([0])
point_b1 = (0,)
full = all(any(after(point_b1, h) == f for h in homs[(a, "1")]) for a in names for f in homs[(a, "B")] if pre(f, b1) == subsets(a)[-1])
print("comprehension_b1_full", full)
