"""Taut isomorphism signatures.

A taut signature is "<isosig>_<angle digits>": the standard triangulation
isomorphism signature followed by one digit per tetrahedron (in the
signature's canonical labelling) recording which opposite-edge pair
carries the pi angles (0: 01|23, 1: 02|13, 2: 03|12).

The bare signature encodes, per facet in a breadth-first canonical
order: a 2-bit action (0 boundary, 1 joined to a new tetrahedron with
the identity permutation, 2 joined to an already-seen tetrahedron),
packed three actions per character; then the destination tetrahedron of
every action-2 gluing; then its gluing permutation as an index into the
lexicographic ordering of S4.  Characters are the usual signature
alphabet a-z A-Z 0-9 + -.  The canonical signature is the
lexicographically smallest encoding over all starting tetrahedra and
starting labellings; for the taut signature the angle digits break
remaining ties.
"""

import string

from .errors import FormatError, ValidationError
from . import perm4
from .triangulation import VeeringTriangulation, TAUT_PAIRS

SIG_CHARS = string.ascii_letters + "0123456789+-"
CHAR_VALUE = {ch: i for i, ch in enumerate(SIG_CHARS)}


def _schar(value):
    return SIG_CHARS[value]


def _pack_actions(actions):
    out = []
    for i in range(0, len(actions), 3):
        chunk = actions[i:i + 3]
        val = 0
        for j, a in enumerate(chunk):
            val |= a << (2 * j)
        out.append(_schar(val))
    return "".join(out)


def _encode_from(tri, start, labelling):
    """Signature string for one choice of start tetrahedron and
    labelling (a permutation applied to the start's vertices)."""
    n = tri.n
    image = {start: 0}          # old tet -> new tet
    vertex_map = {start: labelling}  # old tet -> old vertex -> new vertex
    order = [start]
    actions = []
    join_dest = []
    join_gluing = []
    done = set()  # (old tet, old face) slots already accounted for
    pos = 0
    while pos < len(order):
        told = order[pos]
        lab = vertex_map[told]
        inv = perm4.inverse(lab)
        for fnew in range(4):
            fold = inv[fnew]
            if (told, fold) in done:
                continue
            done.add((told, fold))
            t2, f2, p = tri.gluings[told][fold]
            if t2 not in image:
                # new tetrahedron: relabel so the gluing becomes trivial
                image[t2] = len(order)
                vertex_map[t2] = perm4.compose(lab, perm4.inverse(p))
                order.append(t2)
                done.add((t2, f2))
                actions.append(1)
            else:
                done.add((t2, f2))
                actions.append(2)
                join_dest.append(image[t2])
                gl_new = perm4.compose(vertex_map[t2], perm4.compose(p, inv))
                join_gluing.append(perm4.ORDERED_INDEX[gl_new])
        pos += 1
    sig = _schar(n) + _pack_actions(actions)
    sig += "".join(_schar(d) for d in join_dest)
    sig += "".join(_schar(g) for g in join_gluing)
    taut_digits = [None] * n
    for told, tnew in image.items():
        a, _ = TAUT_PAIRS[tri.taut[told]]
        i, j = (0, 1) if a == 0 else ((0, 2) if a == 1 else (0, 3))
        lab = vertex_map[told]
        ii, jj = lab[i], lab[j]
        pair = (min(ii, jj), max(ii, jj))
        digit = {(0, 1): 0, (2, 3): 0, (0, 2): 1, (1, 3): 1, (0, 3): 2, (1, 2): 2}[pair]
        taut_digits[tnew] = digit
    return sig, "".join(str(d) for d in taut_digits)


def encode_isosig(tri):
    """Canonical bare isomorphism signature of the triangulation."""
    return encode_isosig_with_taut(tri).split("_")[0]


def encode_isosig_with_taut(tri):
    """Canonical taut signature "<sig>_<digits>"."""
    if tri.n >= 63:
        raise FormatError("signatures for 63 or more tetrahedra not supported")
    best = None
    for start in range(tri.n):
        for lab in perm4.ORDERED_S4:
            sig, digits = _encode_from(tri, start, lab)
            key = (sig, digits)
            if best is None or key < best:
                best = key
    return "%s_%s" % best


def _decode_bare(sig):
    """Gluing table from a bare isomorphism signature."""
    for ch in sig:
        if ch not in CHAR_VALUE:
            raise FormatError("illegal signature character %r" % ch)
    stream = iter(sig)

    def take():
        try:
            return CHAR_VALUE[next(stream)]
        except StopIteration:
            raise FormatError("signature truncated") from None

    n = take()
    if n == 63:
        raise FormatError("signatures for 63 or more tetrahedra not supported")
    if n == 0:
        raise FormatError("empty triangulation")
    # Pass 1: the action list.  Each join (action 1 or 2) accounts for
    # two facets, so the number of actions is only known while reading.
    actions = []
    packed = []
    accounted = 0
    while accounted < 4 * n:
        if not packed:
            val = take()
            packed.extend((val >> (2 * j)) & 3 for j in range(3))
        a = packed.pop(0)
        actions.append(a)
        if a == 0:
            raise FormatError(
                "signature has boundary facets; need a closed-up ideal triangulation"
            )
        if a == 3:
            raise FormatError("facet action 3 is invalid")
        accounted += 2
    if accounted != 4 * n:
        raise FormatError("facet actions overrun the facet count")
    n_joins = sum(1 for a in actions if a == 2)
    dests = [take() for _ in range(n_joins)]
    gluts = [take() for _ in range(n_joins)]
    if next(stream, None) is not None:
        raise FormatError("trailing characters in signature")
    # Pass 2: replay the canonical facet traversal and apply the joins.
    gl = [[None] * 4 for _ in range(n)]
    next_new = 1
    ai = ji = 0
    for t in range(n):
        for f in range(4):
            if gl[t][f] is not None:
                continue
            if ai >= len(actions):
                raise FormatError("signature truncated")
            a = actions[ai]
            ai += 1
            if a == 1:
                if next_new >= n:
                    raise FormatError("signature joins more tetrahedra than declared")
                gl[t][f] = (next_new, f, perm4.IDENTITY)
                gl[next_new][f] = (t, f, perm4.IDENTITY)
                next_new += 1
            else:
                d, g = dests[ji], gluts[ji]
                ji += 1
                if d >= n or g >= 24:
                    raise FormatError("gluing data out of range")
                p = perm4.ORDERED_S4[g]
                f2 = p[f]
                if gl[d][f2] is not None:
                    raise FormatError("destination facet already glued")
                gl[t][f] = (d, f2, p)
                gl[d][f2] = (t, f, perm4.inverse(p))
    if next_new != n:
        raise FormatError("signature does not connect all tetrahedra")
    if ai != len(actions) or ji != n_joins:
        raise FormatError("unused gluing data in signature")
    for t in range(n):
        for f in range(4):
            if gl[t][f] is None:
                raise FormatError("signature leaves face %d:%d unglued" % (t, f))
    return gl


def decode_taut_isosig(sig):
    """Triangulation from a taut signature.

    Coorientations and colors are not part of the signature; they are
    solved for, and decoding fails if the taut structure does not carry
    a veering structure.
    """
    if "_" not in sig:
        raise FormatError("taut signature needs '_' between signature and angles")
    bare, digits = sig.split("_", 1)
    if not bare or not digits:
        raise FormatError("empty signature or angle part")
    gl = _decode_bare(bare)
    n = len(gl)
    if len(digits) != n:
        raise FormatError("expected %d angle digits, got %d" % (n, len(digits)))
    taut = []
    for ch in digits:
        if ch not in "012":
            raise FormatError("angle digit must be 0, 1 or 2, got %r" % ch)
        taut.append(int(ch))
    try:
        return VeeringTriangulation(gl, taut)
    except ValidationError as err:
        raise ValidationError(err.axiom, err.location,
                              "signature carries no veering structure") from err


def looks_like_signature(text):
    """Heuristic used by the CLI: underscore present, no path separator."""
    return "_" in text and "/" not in text and "\\" not in text
