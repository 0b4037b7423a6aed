"""Dev probe: enumerate small veering triangulations, calibrate conventions."""
import sys
from itertools import permutations, product

sys.path.insert(0, "src")
from veerweave.triangulation import VeeringTriangulation
from veerweave.errors import VeerweaveError


def canonical_gluing_candidates(n):
    """Closed-up gluings of n tetrahedra in rough BFS-normal form:
    face (0,0) glued to (1,0) by the identity when n >= 2."""
    slots = [(t, f) for t in range(n) for f in range(4)]
    perms = list(permutations(range(4)))

    def rec(gl, remaining):
        if not remaining:
            yield [row[:] for row in gl]
            return
        t, f = remaining[0]
        if gl[t][f] is not None:
            yield from rec(gl, remaining[1:])
            return
        for (t2, f2) in remaining:
            if (t2, f2) == (t, f):
                continue
            if gl[t2][f2] is not None:
                continue
            for p in perms:
                if p[f] != f2:
                    continue
                if (t2, f2) == (t, f):
                    continue
                gl[t][f] = (t2, f2, p)
                inv = tuple(sorted(range(4), key=lambda i: p[i]))
                # inverse perm
                invp = [0] * 4
                for i in range(4):
                    invp[p[i]] = i
                gl[t2][f2] = (t, f, tuple(invp))
                yield from rec(gl, remaining[1:])
                gl[t][f] = None
                gl[t2][f2] = None

    gl0 = [[None] * 4 for _ in range(n)]
    if n >= 2:
        gl0[0][0] = (1, 0, (0, 1, 2, 3))
        gl0[1][0] = (0, 0, (0, 1, 2, 3))
    yield from rec(gl0, slots)


def search(n):
    found = []
    count = 0
    for gl in canonical_gluing_candidates(n):
        for taut in product(range(3), repeat=n):
            count += 1
            try:
                tri = VeeringTriangulation(gl, list(taut))
            except VeerweaveError:
                continue
            found.append(tri)
    print("n=%d: %d candidates tried, %d veering structures found" % (n, count, len(found)))
    return found


if __name__ == "__main__":
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    tris = search(n)
    from veerweave.triangulation import emit_native
    seen = {}
    for tri in tris:
        key = emit_native(tri)
        seen.setdefault(key, 0)
        seen[key] += 1
    print("distinct emitted docs:", len(seen))
    for k in list(seen)[:4]:
        print("---")
        print(k)
