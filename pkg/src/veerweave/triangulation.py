"""Veering triangulations of cusped oriented 3-manifolds.

A triangulation is given by ideal tetrahedra with face gluings, a taut
angle assignment (per tetrahedron, one of the three opposite-edge pairs
carries the two dihedral angles of size pi), coorientations on the face
classes, and a red/blue coloring of the edge classes.  Coorientations
and colors may be omitted from input; they are then solved for by
constraint propagation, and the run fails if no consistent assignment
exists.

Conventions, fixed once and used by every downstream module:

* Vertices of a tetrahedron are 0..3.  Face i is the face opposite
  vertex i.  A gluing entry for (tet, face) is (tet', face', perm)
  where perm maps vertex labels of tet to labels of tet' and sends
  face i to face' = perm[i].

* Edges of a tetrahedron are indexed 0..5 with vertex pairs
  01, 02, 03, 12, 13, 23.  The taut pair digit d in {0,1,2} puts the
  pi-angles on the opposite pair (01,23) / (02,13) / (03,12).

* With coorientations pointing up, each tetrahedron has two upper
  faces (cooriented out of it) and two lower faces.  The top edge is
  the common edge of the two upper faces; the bottom edge the common
  edge of the lower faces.  Equivalently the two upper faces are the
  ones opposite the bottom edge's endpoints.

* Each tetrahedron carries a *frame* (w, s, e, n): w, e are the ends
  of the bottom edge with w < e; s, n are the ends of the top edge,
  ordered so that the vertex sequence (w, s, e, n) is a positively
  oriented labelling (relative to the coherent orientation of the
  triangulation).  Looking down the coorientation, the equatorial
  square reads w, s, e, n counterclockwise.  The side edges ws and en
  are blue, se and nw are red.  The global red/blue swap corresponds
  to reversing the ambient orientation, so a coloring is forced
  exactly up to that swap.

Class identifiers for edges, faces, cusps, and edge ends are the
lexicographically smallest incidence, rendered "t:i"; this makes every
report deterministic across runs.
"""

from .errors import FormatError, InvalidIdError, ValidationError
from . import perm4

EDGE_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX = {pair: i for i, pair in enumerate(EDGE_PAIRS)}
OPP_EDGE = (5, 4, 3, 2, 1, 0)
# taut digit -> the two edge indices carrying angle pi
TAUT_PAIRS = ((0, 5), (1, 4), (2, 3))
TAUT_NAMES = {"01-23": 0, "02-13": 1, "03-12": 2}
TAUT_LABELS = {v: k for k, v in TAUT_NAMES.items()}

RED = "red"
BLUE = "blue"


def other_color(c):
    return BLUE if c == RED else RED


def edge_of(i, j):
    return EDGE_INDEX[(i, j) if i < j else (j, i)]


def faces_containing_edge(eidx):
    """The two face labels containing edge eidx (the complement pair)."""
    i, j = EDGE_PAIRS[eidx]
    return tuple(k for k in range(4) if k not in (i, j))


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x):
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, x, y):
        self.add(x)
        self.add(y)
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the lexicographically smallest element as the root
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx

    def classes(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


class TetFrame:
    """Frame (w, s, e, n) of one tetrahedron; see the module docstring."""

    __slots__ = ("w", "s", "e", "n")

    def __init__(self, w, s, e, n):
        self.w = w
        self.s = s
        self.e = e
        self.n = n

    @property
    def bottom(self):
        return (self.w, self.e)

    @property
    def top(self):
        return (self.s, self.n)

    @property
    def upper_faces(self):
        # faces opposite the bottom ends are the cooriented-out ones
        return (self.w, self.e)

    @property
    def lower_faces(self):
        return (self.s, self.n)

    def side_color(self, i, j):
        pair = frozenset((i, j))
        if pair in (frozenset((self.w, self.s)), frozenset((self.e, self.n))):
            return BLUE
        if pair in (frozenset((self.s, self.e)), frozenset((self.n, self.w))):
            return RED
        raise ValueError("not a side edge: %s" % (pair,))

    def blue_sides(self):
        return ((self.w, self.s), (self.e, self.n))

    def red_sides(self):
        return ((self.s, self.e), (self.n, self.w))

    def as_tuple(self):
        return (self.w, self.s, self.e, self.n)


class EdgeStack:
    """One side of the stack of tetrahedra along an edge.

    tetrahedra lists (tet, vertex-pair) incidences from bottom to top;
    both stacks of a veering edge are nonempty.
    """

    __slots__ = ("edge", "side", "tetrahedra", "length")

    def __init__(self, edge, side, tetrahedra):
        self.edge = edge
        self.side = side
        self.tetrahedra = tuple(tetrahedra)
        self.length = len(self.tetrahedra)


class TetClassification:
    __slots__ = ("tags",)

    def __init__(self, tags):
        self.tags = tuple(tags)


def fmt_id(t, i):
    return "%d:%d" % (t, i)


class VeeringTriangulation:
    """A validated veering triangulation.

    Immutable after construction; all derived data (classes, frames,
    stacks, boundary objects) may be shared freely between readers.
    """

    def __init__(self, gluings, taut, coorientations=None, colors=None):
        self.n = len(gluings)
        self.gluings = tuple(
            tuple((t2, f2, tuple(p)) for (t2, f2, p) in tet) for tet in gluings
        )
        self.taut = tuple(taut)
        self._validate_structure()
        self._build_classes()
        self._check_angle_sums()
        self._solve_structure(coorientations, colors)
        self._check_transverse_taut()
        self._stacks = {}
        self._star_cache = {}

    # ------------------------------------------------------------------
    # construction helpers

    def _validate_structure(self):
        if self.n < 1:
            raise ValidationError("nonempty triangulation", "document")
        if len(self.taut) != self.n:
            raise FormatError("taut assignment must cover every tetrahedron")
        for d in self.taut:
            if d not in (0, 1, 2):
                raise FormatError("taut pair digit out of range: %r" % (d,))
        for t in range(self.n):
            if len(self.gluings[t]) != 4:
                raise FormatError("tetrahedron %d needs 4 gluing entries" % t)
            for f in range(4):
                t2, f2, p = self.gluings[t][f]
                if not (0 <= t2 < self.n) or not (0 <= f2 < 4):
                    raise ValidationError(
                        "gluing involution", fmt_id(t, f), "target out of range"
                    )
                if sorted(p) != [0, 1, 2, 3]:
                    raise ValidationError(
                        "gluing involution", fmt_id(t, f), "not a permutation"
                    )
                if p[f] != f2:
                    raise ValidationError(
                        "gluing involution",
                        fmt_id(t, f),
                        "permutation does not carry face %d to face %d" % (f, f2),
                    )
                t3, f3, q = self.gluings[t2][f2]
                if (t3, f3) != (t, f) or q != perm4.inverse(p):
                    raise ValidationError(
                        "gluing involution",
                        fmt_id(t, f),
                        "reverse gluing is not the inverse",
                    )
        # connectivity of the quotient 2-complex
        seen = {0}
        frontier = [0]
        while frontier:
            t = frontier.pop()
            for f in range(4):
                t2 = self.gluings[t][f][0]
                if t2 not in seen:
                    seen.add(t2)
                    frontier.append(t2)
        if len(seen) != self.n:
            raise ValidationError("connectedness", "document")

    def _build_classes(self):
        edges = _UnionFind()
        faces = _UnionFind()
        verts = _UnionFind()
        ends = _UnionFind()
        for t in range(self.n):
            for e in range(6):
                edges.add((t, e))
                i, j = EDGE_PAIRS[e]
                ends.add((t, e, i))
                ends.add((t, e, j))
            for f in range(4):
                faces.add((t, f))
            for v in range(4):
                verts.add((t, v))
        for t in range(self.n):
            for f in range(4):
                t2, f2, p = self.gluings[t][f]
                faces.union((t, f), (t2, f2))
                for v in range(4):
                    if v != f:
                        verts.union((t, v), (t2, p[v]))
                for e in range(6):
                    i, j = EDGE_PAIRS[e]
                    if f in (i, j):
                        continue
                    e2 = edge_of(p[i], p[j])
                    edges.union((t, e), (t2, e2))
                    ends.union((t, e, i), (t2, e2, p[i]))
                    ends.union((t, e, j), (t2, e2, p[j]))
        self._edge_uf, self._face_uf = edges, faces
        self._vert_uf, self._end_uf = verts, ends
        self.edge_classes = sorted(edges.classes())
        self.face_classes = sorted(faces.classes())
        self.vertex_classes = sorted(verts.classes())
        self.end_classes = sorted(ends.classes())

    def edge_class(self, t, e):
        return self._edge_uf.find((t, e))

    def face_class(self, t, f):
        return self._face_uf.find((t, f))

    def vertex_class(self, t, v):
        return self._vert_uf.find((t, v))

    def end_class(self, t, e, v):
        return self._end_uf.find((t, e, v))

    def _pi_edges(self, t):
        a, b = TAUT_PAIRS[self.taut[t]]
        return a, b

    def _check_angle_sums(self):
        count = {c: 0 for c in self.edge_classes}
        for t in range(self.n):
            for e in self._pi_edges(t):
                count[self.edge_class(t, e)] += 1
        for c in self.edge_classes:
            if count[c] != 2:
                raise ValidationError(
                    "angle sum",
                    fmt_id(*c),
                    "edge class receives %d pi labels, needs 2" % count[c],
                )

    # -- orientation, coorientation, colors ----------------------------

    def _propagate_orientation(self, sign0):
        sigma = [0] * self.n
        sigma[0] = sign0
        frontier = [0]
        while frontier:
            t = frontier.pop()
            for f in range(4):
                t2, _, p = self.gluings[t][f]
                want = -sigma[t] * perm4.sign(p)
                if sigma[t2] == 0:
                    sigma[t2] = want
                    frontier.append(t2)
                elif sigma[t2] != want:
                    raise ValidationError(
                        "orientability", fmt_id(t, f), "no coherent orientation"
                    )
        return tuple(sigma)

    def _propagate_coorientation(self, first_top):
        """Per-tet choice of which pi-edge is on top, spread across faces.

        Face coorientation consistency means a face is upper on exactly
        one of its two sides.  Returns the per-tet top edge index.
        """
        top = [None] * self.n
        top[0] = first_top
        frontier = [0]
        while frontier:
            t = frontier.pop()
            a, b = self._pi_edges(t)
            bottom = a if top[t] == b else b
            uppers = set(EDGE_PAIRS[bottom])
            for f in range(4):
                t2, f2, p = self.gluings[t][f]
                a2, b2 = self._pi_edges(t2)
                # f2 must be lower in t2 iff f is upper in t
                f_upper = f in uppers
                choices = []
                for cand_top in (a2, b2):
                    cand_bottom = a2 if cand_top == b2 else b2
                    upper2 = f2 in EDGE_PAIRS[cand_bottom]
                    if upper2 != f_upper:
                        choices.append(cand_top)
                if not choices:
                    raise ValidationError(
                        "transverse-taut", fmt_id(t, f), "no consistent coorientation"
                    )
                want = choices[0] if len(choices) == 1 else None
                if want is None:
                    continue
                if top[t2] is None:
                    top[t2] = want
                    frontier.append(t2)
                elif top[t2] != want:
                    raise ValidationError(
                        "transverse-taut", fmt_id(t, f), "coorientation conflict"
                    )
        if any(x is None for x in top):
            raise ValidationError("transverse-taut", "document", "underdetermined")
        return tuple(top)

    def _tops_from_given_coor(self, coor):
        """Derive per-tet top edges from explicit face coorientations.

        coor maps face-class rep -> '+'/'-', '+' meaning the
        coorientation points out of the representative (tet, face).
        """
        top = []
        for t in range(self.n):
            uppers = []
            for f in range(4):
                rep = self.face_class(t, f)
                if rep not in coor:
                    raise FormatError("missing coorientation for face %s" % fmt_id(*rep))
                flag = coor[rep]
                out_of_t = (flag == "+") == ((t, f) == rep)
                if out_of_t:
                    uppers.append(f)
            if len(uppers) != 2:
                raise ValidationError(
                    "transverse-taut",
                    "tet %d" % t,
                    "%d faces cooriented outward, needs 2" % len(uppers),
                )
            topedge = edge_of(*(v for v in range(4) if v not in uppers))
            if topedge not in self._pi_edges(t):
                raise ValidationError(
                    "transverse-taut", "tet %d" % t, "outward faces not above a pi edge"
                )
            top.append(topedge)
        return tuple(top)

    def _frames_from(self, sigma, tops):
        frames = []
        for t in range(self.n):
            a, b = self._pi_edges(t)
            bottom = a if tops[t] == b else b
            w, e = EDGE_PAIRS[bottom]
            c, d = EDGE_PAIRS[tops[t]]
            for s, n in ((c, d), (d, c)):
                par = perm4.sign(tuple((w, s, e, n).index(k) for k in range(4)))
                # (w,s,e,n) must be a positively oriented labelling
                if par == sigma[t]:
                    frames.append(TetFrame(w, s, e, n))
                    break
            else:  # pragma: no cover - parity always realizable
                raise AssertionError("no frame parity match")
        return tuple(frames)

    def _colors_from_frames(self, frames, given):
        colors = {}

        def assign(cls, col, where):
            if cls in colors and colors[cls] != col:
                raise ValidationError(
                    "veering condition",
                    where,
                    "edge %s forced both red and blue" % fmt_id(*cls),
                )
            colors[cls] = col

        for t in range(self.n):
            fr = frames[t]
            for i, j in fr.blue_sides():
                assign(self.edge_class(t, edge_of(i, j)), BLUE, "tet %d" % t)
            for i, j in fr.red_sides():
                assign(self.edge_class(t, edge_of(i, j)), RED, "tet %d" % t)
        for c in self.edge_classes:
            if c not in colors:
                raise ValidationError(
                    "veering condition",
                    fmt_id(*c),
                    "edge is never equatorial, color undetermined",
                )
        if given is not None:
            for c in self.edge_classes:
                if c not in given:
                    raise FormatError("missing color for edge %s" % fmt_id(*c))
                if given[c] != colors[c]:
                    raise ValidationError(
                        "veering condition",
                        fmt_id(*c),
                        "declared %s, structure forces %s" % (given[c], colors[c]),
                    )
        return colors

    def _solve_structure(self, coorientations, colors):
        """Pick orientation and coorientation consistent with the data.

        Both the global orientation and (when unspecified) the
        coorientation have a two-fold freedom; the first combination
        that satisfies the veering axioms is kept, which makes solved
        colors deterministic.
        """
        if coorientations is None:
            top_choices = []
            for first_top in self._pi_edges(0):
                try:
                    top_choices.append(self._propagate_coorientation(first_top))
                except ValidationError:
                    continue
            if not top_choices:
                raise ValidationError(
                    "transverse-taut", "document", "no consistent coorientation"
                )
        else:
            top_choices = [self._tops_from_given_coor(coorientations)]

        last_err = None
        for tops in top_choices:
            for sign0 in (1, -1):
                sigma = self._propagate_orientation(sign0)
                frames = self._frames_from(sigma, tops)
                try:
                    cols = self._colors_from_frames(frames, colors)
                except ValidationError as err:
                    last_err = err
                    continue
                self.sigma = sigma
                self.tops = tops
                self.frames = frames
                self.colors = cols
                return
        raise last_err

    def _check_transverse_taut(self):
        """Every edge class is the top of one tet and the bottom of one."""
        tops = {c: 0 for c in self.edge_classes}
        bottoms = {c: 0 for c in self.edge_classes}
        for t in range(self.n):
            fr = self.frames[t]
            tops[self.edge_class(t, edge_of(*fr.top))] += 1
            bottoms[self.edge_class(t, edge_of(*fr.bottom))] += 1
        for c in self.edge_classes:
            if tops[c] != 1 or bottoms[c] != 1:
                raise ValidationError(
                    "transverse-taut",
                    fmt_id(*c),
                    "edge class is top of %d and bottom of %d tetrahedra"
                    % (tops[c], bottoms[c]),
                )

    # ------------------------------------------------------------------
    # basic queries

    def top_edge(self, t):
        fr = self.frames[t]
        return edge_of(*fr.top)

    def bottom_edge(self, t):
        fr = self.frames[t]
        return edge_of(*fr.bottom)

    def edge_color(self, cls):
        return self.colors[cls]

    def is_upper_face(self, t, f):
        return f in self.frames[t].upper_faces

    def tet_above(self, cls):
        """The tetrahedron having this edge class as its bottom edge."""
        for t in range(self.n):
            if self.edge_class(t, self.bottom_edge(t)) == cls:
                return t
        raise InvalidIdError("no tetrahedron above %s" % (cls,))

    def tet_below(self, cls):
        for t in range(self.n):
            if self.edge_class(t, self.top_edge(t)) == cls:
                return t
        raise InvalidIdError("no tetrahedron below %s" % (cls,))

    def tet_kind(self, t):
        ct = self.colors[self.edge_class(t, self.top_edge(t))]
        cb = self.colors[self.edge_class(t, self.bottom_edge(t))]
        if ct != cb:
            return "toggle"
        return "red-fan" if ct == RED else "blue-fan"

    def classification(self):
        return TetClassification(self.tet_kind(t) for t in range(self.n))

    # ------------------------------------------------------------------
    # edge stars and stacks

    def edge_star(self, cls):
        """Cyclic walk around an edge class.

        Returns a list of (tet, (i, j), entry_face, exit_face) with the
        edge appearing as vertex pair (i, j) of tet, entered from the
        previous incidence through entry_face.
        """
        if cls in self._star_cache:
            return self._star_cache[cls]
        if cls not in set(self.edge_classes):
            raise InvalidIdError("no edge class %r" % (cls,))
        t0, e0 = cls
        pair0 = EDGE_PAIRS[e0]
        k, l = faces_containing_edge(e0)
        walk = []
        t, pair, entry = t0, pair0, l
        while True:
            fexit = next(
                f for f in range(4) if f not in pair and f != entry
            )
            walk.append((t, pair, entry, fexit))
            t2, f2, p = self.gluings[t][fexit]
            pair2 = tuple(sorted((p[pair[0]], p[pair[1]])))
            t, pair, entry = t2, pair2, f2
            if (t, pair, entry) == (t0, pair0, l):
                break
            if len(walk) > 6 * self.n:
                raise ValidationError("angle sum", fmt_id(*cls), "edge star does not close")
        self._star_cache[cls] = walk
        return walk

    def _star_roles(self, cls):
        walk = self.edge_star(cls)
        above = below = None
        for idx, (t, pair, _, _) in enumerate(walk):
            fr = self.frames[t]
            sp = frozenset(pair)
            if sp == frozenset(fr.bottom):
                if above is not None:
                    raise ValidationError("transverse-taut", fmt_id(*cls), "two tops")
                above = idx
            elif sp == frozenset(fr.top):
                if below is not None:
                    raise ValidationError("transverse-taut", fmt_id(*cls), "two bottoms")
                below = idx
        if above is None or below is None:
            raise ValidationError("transverse-taut", fmt_id(*cls), "missing apex")
        return walk, above, below

    def edge_stacks(self, cls):
        """The two stacks along an edge, as (left, right) EdgeStacks."""
        if cls in self._stacks:
            return self._stacks[cls]
        walk, above, below = self._star_roles(cls)
        d = len(walk)
        rot = walk[above:] + walk[:above]  # above-instance at position 0
        b = (below - above) % d
        arc_pred = rot[b + 1:]            # ends adjacent to A via its entry face
        arc_succ = list(reversed(rot[1:b]))  # ends adjacent to A via its exit face
        t_above, _, entryA, exitA = rot[0]
        s_label = self.frames[t_above].s
        if entryA == s_label:
            left_arc, right_arc = arc_pred, arc_succ
        elif exitA == s_label:
            left_arc, right_arc = arc_succ, arc_pred
        else:  # pragma: no cover
            raise AssertionError("above-instance not entered through a lower face")
        left = EdgeStack(cls, "left", [(t, pair) for (t, pair, _, _) in left_arc])
        right = EdgeStack(cls, "right", [(t, pair) for (t, pair, _, _) in right_arc])
        if left.length == 0 or right.length == 0:
            raise ValidationError(
                "nonempty stacks", fmt_id(*cls), "a veering edge has tetrahedra on both sides"
            )
        self._check_stack_pattern(cls, left)
        self._check_stack_pattern(cls, right)
        self._stacks[cls] = (left, right)
        return left, right

    def _check_stack_pattern(self, cls, stack):
        """Bottom-to-top a stack reads toggle, fans, toggle; a lone
        tetrahedron is a fan of the edge's own color, while the middle
        fans of a longer stack take the opposite color."""
        kinds = [self.tet_kind(t) for (t, _) in stack.tetrahedra]
        col = self.colors[cls]
        if stack.length == 1:
            want = "%s-fan" % col
            ok = kinds[0] == want
        else:
            mid = "%s-fan" % other_color(col)
            ok = (
                kinds[0] == "toggle"
                and kinds[-1] == "toggle"
                and all(k == mid for k in kinds[1:-1])
            )
        if not ok:
            raise ValidationError(
                "stack pattern", fmt_id(*cls),
                "%s side reads %s for a %s edge" % (stack.side, kinds, col),
            )

    def max_stack_length(self):
        best = 0
        for c in self.edge_classes:
            l, r = self.edge_stacks(c)
            best = max(best, l.length, r.length)
        return best

    def params(self):
        """(tetrahedron count, max stack length, max ladder multiplicity,
        max ladderpole length), with the rough bounds asserted."""
        from .boundary import boundary_triangulation

        delta = self.max_stack_length()
        nu = lam = 0
        for cusp in self.vertex_classes:
            lad = boundary_triangulation(self, cusp)
            nu = max(nu, lad.multiplicity)
            lam = max(lam, max(lad.lengths))
        n = self.n
        if not (delta <= 2 * n and lam <= 2 * n and nu <= n):
            raise ValidationError(
                "parameter bounds", "document",
                "delta=%d nu=%d lambda=%d exceed 2N/N/2N" % (delta, nu, lam),
            )
        return n, delta, nu, lam

    # ------------------------------------------------------------------
    # face helpers used by graph and surface modules

    def face_lower_tet(self, cls):
        """(tet, face) incidence where the face is an upper face (the
        tetrahedron below the face)."""
        for t, f in self._face_incidences(cls):
            if self.is_upper_face(t, f):
                return t, f
        raise InvalidIdError("no face class %r" % (cls,))

    def face_upper_tet(self, cls):
        for t, f in self._face_incidences(cls):
            if not self.is_upper_face(t, f):
                return t, f
        raise InvalidIdError("no face class %r" % (cls,))

    def _face_incidences(self, cls):
        t, f = cls
        t2, f2, _ = self.gluings[t][f]
        return ((t, f), (t2, f2))

    def face_flap_edge(self, cls):
        """The edge of a face whose sector branches off the other two.

        Computed from both sides; a veering structure always makes the
        two computations agree.
        """
        t, f = self.face_lower_tet(cls)
        fr = self.frames[t]
        topcol = self.colors[self.edge_class(t, self.top_edge(t))]
        sides = fr.blue_sides() if topcol == RED else fr.red_sides()
        flap_below = None
        for i, j in sides:
            if f not in (i, j):
                flap_below = self.edge_class(t, edge_of(i, j))
        t2, f2 = self.face_upper_tet(cls)
        fr2 = self.frames[t2]
        topcol2 = self.colors[self.edge_class(t2, self.top_edge(t2))]
        sides2 = fr2.blue_sides() if topcol2 == RED else fr2.red_sides()
        flap_above = None
        for i, j in sides2:
            if f2 not in (i, j):
                flap_above = self.edge_class(t2, edge_of(i, j))
        if flap_below is None or flap_below != flap_above:
            raise ValidationError(
                "veering condition",
                fmt_id(*cls),
                "branching edge of face disagrees between its two sides",
            )
        return flap_below

    # ------------------------------------------------------------------

    def recolored_swap(self):
        """The same gluing and taut data with red and blue exchanged."""
        coor = {c: None for c in self.face_classes}
        for c in self.face_classes:
            t, f = c
            coor[c] = "+" if self.is_upper_face(t, f) else "-"
        swapped = {c: other_color(col) for c, col in self.colors.items()}
        return VeeringTriangulation(self.gluings, self.taut, coor, swapped)

    def isomorphism_key(self):
        """Canonical form under relabelling, for isomorphism testing."""
        from .isosig import encode_isosig_with_taut

        return encode_isosig_with_taut(self)


# ----------------------------------------------------------------------
# native document format


def parse_native(text):
    """Parse the native triangulation document format.

    Lines (after '#' comment stripping):

        tetrahedra N
        glue T:F T':F' PPPP     one line per gluing, each gluing once
        taut T 01-23|02-13|03-12
        coor T:F +|-            optional, per face class
        color T:E red|blue      optional, per edge class
    """
    n = None
    glue_lines = []
    taut = {}
    coor = {}
    colors = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw = parts[0]
        try:
            if kw == "tetrahedra":
                n = int(parts[1])
            elif kw == "glue":
                a = _parse_slot(parts[1])
                b = _parse_slot(parts[2])
                p = tuple(int(ch) for ch in parts[3])
                if len(p) != 4:
                    raise FormatError("permutation needs 4 characters")
                glue_lines.append((a, b, p))
            elif kw == "taut":
                taut[int(parts[1])] = TAUT_NAMES[parts[2]]
            elif kw == "coor":
                if parts[2] not in ("+", "-"):
                    raise FormatError("coorientation must be + or -")
                coor[_parse_slot(parts[1])] = parts[2]
            elif kw == "color":
                if parts[2] not in (RED, BLUE):
                    raise FormatError("color must be red or blue")
                colors[_parse_slot(parts[1])] = parts[2]
            else:
                raise FormatError("unknown keyword %r" % kw)
        except (IndexError, KeyError, ValueError) as err:
            raise FormatError("line %d: %s" % (lineno, err)) from err
    if n is None:
        raise FormatError("missing 'tetrahedra' line")
    gl = [[None] * 4 for _ in range(n)]
    for (t, f), (t2, f2), p in glue_lines:
        if not (0 <= t < n and 0 <= t2 < n):
            raise FormatError("gluing references missing tetrahedron")
        if gl[t][f] is not None or (gl[t2][f2] is not None and (t, f) != (t2, f2)):
            raise FormatError("face %s glued twice" % fmt_id(t, f))
        gl[t][f] = (t2, f2, p)
        if (t2, f2) != (t, f):
            gl[t2][f2] = (t, f, perm4.inverse(p))
    for t in range(n):
        for f in range(4):
            if gl[t][f] is None:
                raise FormatError("face %s is unglued" % fmt_id(t, f))
    if sorted(taut) != list(range(n)):
        raise FormatError("taut lines must cover tetrahedra 0..%d" % (n - 1))
    taut_list = [taut[t] for t in range(n)]
    tri_probe = VeeringTriangulation(gl, taut_list)  # resolves class reps
    coor_n = _normalize_keyed(coor, tri_probe.face_class, "face") if coor else None
    colors_n = _normalize_keyed(colors, tri_probe.edge_class, "edge") if colors else None
    if coor_n is None and colors_n is None:
        return tri_probe
    return VeeringTriangulation(gl, taut_list, coor_n, colors_n)


def _parse_slot(text):
    t, i = text.split(":")
    return (int(t), int(i))


def _normalize_keyed(mapping, classify, what):
    out = {}
    for (t, i), value in mapping.items():
        try:
            rep = classify(t, i)
        except KeyError as err:
            raise FormatError("unknown %s %s" % (what, fmt_id(t, i))) from err
        if rep in out and out[rep] != value:
            raise FormatError("conflicting values for %s %s" % (what, fmt_id(*rep)))
        out[rep] = value
    return out


def emit_native(tri):
    """Render the canonical native document (inverse of parse_native)."""
    lines = ["tetrahedra %d" % tri.n]
    seen = set()
    for t in range(tri.n):
        for f in range(4):
            if (t, f) in seen:
                continue
            t2, f2, p = tri.gluings[t][f]
            seen.add((t, f))
            seen.add((t2, f2))
            lines.append(
                "glue %s %s %s" % (fmt_id(t, f), fmt_id(t2, f2), "".join(map(str, p)))
            )
    for t in range(tri.n):
        lines.append("taut %d %s" % (t, TAUT_LABELS[tri.taut[t]]))
    for c in tri.face_classes:
        t, f = c
        lines.append("coor %s %s" % (fmt_id(t, f), "+" if tri.is_upper_face(t, f) else "-"))
    for c in tri.edge_classes:
        lines.append("color %s %s" % (fmt_id(*c), tri.colors[c]))
    return "\n".join(lines) + "\n"
