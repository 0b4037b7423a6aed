"""Dev: pruned enumeration of veering triangulations for N = 3 (and 4).

Canonical-form DFS: faces processed in lex order; the first gluing of
each new tetrahedron is by the identity; prunes on orientability and on
closed edge classes of degree < 4.
"""
import sys
from itertools import permutations, product
sys.path.insert(0, "src")
from veerweave.triangulation import VeeringTriangulation
from veerweave.isosig import encode_isosig_with_taut
from veerweave.errors import VeerweaveError
from veerweave import perm4

ALL_PERMS = list(permutations(range(4)))
EDGE_PAIRS = ((0,1),(0,2),(0,3),(1,2),(1,3),(2,3))


def edge_degree_prune(gl, n):
    """False if some fully-glued edge class has degree < 4."""
    # union-find over (t, e)
    parent = {}
    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x
    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    for t in range(n):
        for f in range(4):
            entry = gl[t][f]
            if entry is None:
                continue
            t2, f2, p = entry
            for e, (i, j) in enumerate(EDGE_PAIRS):
                if f in (i, j):
                    continue
                i2, j2 = sorted((p[i], p[j]))
                e2 = EDGE_PAIRS.index((i2, j2))
                union((t, e), (t2, e2))
    classes = {}
    for t in range(n):
        for e in range(6):
            classes.setdefault(find((t, e)), []).append((t, e))
    for members in classes.values():
        closed = True
        for (t, e) in members:
            i, j = EDGE_PAIRS[e]
            for f in range(4):
                if f not in (i, j) and gl[t][f] is None:
                    closed = False
        if closed and len(members) < 4:
            return False
    return True


def orientable_prune(gl, n):
    sigma = {}
    for t0 in range(n):
        if t0 in sigma:
            continue
        sigma[t0] = 1
        stack = [t0]
        while stack:
            t = stack.pop()
            for f in range(4):
                if gl[t][f] is None:
                    continue
                t2, _, p = gl[t][f]
                want = -sigma[t] * perm4.sign(p)
                if t2 not in sigma:
                    sigma[t2] = want
                    stack.append(t2)
                elif sigma[t2] != want:
                    return False
    return True


def enumerate_gluings(n):
    gl = [[None] * 4 for _ in range(n)]
    touched = [False] * n
    touched[0] = True
    results = []

    def first_open():
        for t in range(n):
            for f in range(4):
                if gl[t][f] is None:
                    return (t, f)
        return None

    def rec():
        slot = first_open()
        if slot is None:
            if orientable_prune(gl, n):
                results.append([row[:] for row in gl])
            return
        t, f = slot
        options = []
        untouched = [u for u in range(n) if not touched[u]]
        if untouched:
            u = untouched[0]
            options.append((u, f, perm4.IDENTITY, True))
        for t2 in range(n):
            if not touched[t2]:
                continue
            for f2 in range(4):
                if gl[t2][f2] is not None or (t2, f2) == (t, f):
                    continue
                for p in ALL_PERMS:
                    if p[f] == f2:
                        options.append((t2, f2, p, False))
        for t2, f2, p, is_new in options:
            gl[t][f] = (t2, f2, p)
            gl[t2][f2] = (t, f, perm4.inverse(p))
            if is_new:
                touched[t2] = True
            if orientable_prune(gl, n) and edge_degree_prune(gl, n):
                rec()
            gl[t][f] = None
            gl[t2][f2] = None
            if is_new:
                touched[t2] = False

    rec()
    return results


def main(n):
    found = {}
    tried = 0
    for gl in enumerate_gluings(n):
        for taut in product(range(3), repeat=n):
            tried += 1
            try:
                tri = VeeringTriangulation(gl, list(taut))
            except VeerweaveError:
                continue
            sig = encode_isosig_with_taut(tri)
            found.setdefault(sig, tri)
    print("n=%d: %d (gluing,taut) validation attempts" % (n, tried))
    print("distinct taut signatures:", sorted(found))
    return found


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 3)
