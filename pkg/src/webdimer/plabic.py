"""Plabic graphs in a disk via rotation systems (combinatorial maps).

Conventions, fixed once and certified by the rectangle-graph checks:
boundary vertices are black, labeled 1..n clockwise, with ids -1..-n;
rotation lists are counterclockwise; trips turn to the previous edge in
the rotation at white vertices and to the next edge at black vertices;
the face to the left of a dart is the face-trace orbit containing it.
"""

from __future__ import annotations

import json
from itertools import combinations

WHITE = "w"
BLACK = "b"


class PlabicError(ValueError):
    pass


class PlabicGraph:
    """A disk-embedded bicolored graph with a rotation system.

    colors: internal vertex id (> 0) -> 'w' | 'b'.
    edges: edge id -> (u, v) unordered endpoints (ids; boundary ids < 0).
    rotation: vertex id -> list of incident edge ids in CCW cyclic order
    (boundary vertices may be omitted; they have a single edge).
    """

    def __init__(self, n, colors, edges, rotation):
        self.n = n
        self.colors = dict(colors)
        self.edges = {e: tuple(ends) for e, ends in edges.items()}
        self.rotation = {v: list(r) for v, r in rotation.items()}
        self._faces = None
        self._trips = None
        self._validate()

    # -- construction and validation -------------------------------------

    def _validate(self):
        if self.n < 1:
            raise PlabicError("need at least one boundary vertex")
        incident = {v: [] for v in self.vertices()}
        for e, (u, v) in self.edges.items():
            if u == v:
                raise PlabicError(f"self-loop on vertex {u}")
            for x in (u, v):
                if x not in incident:
                    raise PlabicError(f"edge {e} touches unknown vertex {x}")
                incident[x].append(e)
            if self.color(u) == self.color(v):
                raise PlabicError(f"edge {e} joins two {self.color(u)} vertices")
        self.boundary_edge = {}
        for i in range(1, self.n + 1):
            edges_at = incident[-i]
            if len(edges_at) != 1:
                raise PlabicError(
                    f"boundary vertex {i} has {len(edges_at)} edges, expected 1"
                )
            self.boundary_edge[i] = edges_at[0]
            self.rotation.setdefault(-i, edges_at)
        for v, edges_at in incident.items():
            if v > 0 and not edges_at:
                raise PlabicError(f"internal vertex {v} is dangling (degree 0)")
            rot = self.rotation.get(v)
            if rot is None or sorted(rot) != sorted(edges_at):
                raise PlabicError(f"rotation at vertex {v} does not match incidences")
        self.incident = incident

    def vertices(self):
        return list(self.colors) + [-i for i in range(1, self.n + 1)]

    def color(self, v):
        return BLACK if v < 0 else self.colors[v]

    def ends(self, e):
        return self.edges[e]

    def other_end(self, e, v):
        u, w = self.edges[e]
        return w if u == v else u

    @property
    def type_k(self):
        """k = #internal white - #internal black."""
        w = sum(1 for c in self.colors.values() if c == WHITE)
        b = sum(1 for c in self.colors.values() if c == BLACK)
        return w - b

    # -- rotation helpers --------------------------------------------------

    def _step(self, v, e, direction):
        """Edge after/before e in the CCW rotation at v (direction +1/-1)."""
        rot = self.rotation[v]
        idx = rot.index(e)
        return rot[(idx + direction) % len(rot)]

    # -- faces -------------------------------------------------------------
    #
    # Faces are computed on the graph augmented with the n boundary arcs.
    # Darts are (kind, id, end) with end in {0,1}; arcs get kind 'a' and
    # arc i runs from boundary vertex i to i+1 (clockwise).  The augmented
    # CCW rotation at boundary vertex i is [arc to i+1, arc to i-1, leg].

    def _arc(self, i):
        return i % self.n + 1

    def _dart_ends(self, dart):
        kind, ident, end = dart
        if kind == "e":
            u, v = self.edges[ident]
        else:
            u, v = -ident, -self._arc(ident)
        return (u, v) if end == 1 else (v, u)

    def _out_darts(self, v):
        """CCW-ordered outgoing darts at v, arcs included at the boundary."""
        if v > 0:
            return [
                ("e", e, 1 if self.edges[e][0] == v else 0) for e in self.rotation[v]
            ]
        i = -v
        prev = (i - 2) % self.n + 1  # the arc running from i-1 to i
        leg = self.boundary_edge[i]
        leg_dart = ("e", leg, 1 if self.edges[leg][0] == v else 0)
        return [("a", i, 1), ("a", prev, 0), leg_dart]

    def _face_next(self, dart):
        """Next dart along the face to the left of `dart`."""
        _, head = self._dart_ends(dart)
        rev = (dart[0], dart[1], 1 - dart[2])
        rot = self._out_darts(head)
        idx = rot.index(rev)
        return rot[(idx - 1) % len(rot)]

    def _all_darts(self):
        darts = []
        for e in self.edges:
            darts.append(("e", e, 0))
            darts.append(("e", e, 1))
        for i in range(1, self.n + 1):
            darts.append(("a", i, 0))
            darts.append(("a", i, 1))
        return darts

    def faces(self):
        """List of faces; each face is the tuple of darts on its boundary
        (face kept to the left).  The outer face (all arcs, no graph edges)
        is excluded.  Cached."""
        if self._faces is not None:
            return self._faces
        seen = set()
        orbits = []
        for d in self._all_darts():
            if d in seen:
                continue
            orbit = []
            cur = d
            while cur not in seen:
                seen.add(cur)
                orbit.append(cur)
                cur = self._face_next(cur)
            orbits.append(tuple(orbit))
        inner = [f for f in orbits if any(kind == "e" for kind, _, _ in f)]
        outer = [f for f in orbits if all(kind == "a" for kind, _, _ in f)]
        if len(outer) != 1:
            raise PlabicError("disk embedding is inconsistent (outer face count != 1)")
        # Euler check counting the outer region: V - E + F = 2.
        V = len(self.colors) + self.n
        E = len(self.edges) + self.n
        if V - E + len(inner) + 1 != 2:
            raise PlabicError("rotation system violates the Euler relation")
        self._faces = inner
        return inner

    def face_of_dart(self):
        """Map dart -> face index (face to the left of the dart)."""
        table = {}
        for idx, face in enumerate(self.faces()):
            for d in face:
                table[d] = idx
        return table

    # -- trips ---------------------------------------------------------------

    def trips(self):
        """Trip from every boundary vertex: lists of edge-darts ('e', e, end).

        Rule of the road: previous edge in CCW rotation at white vertices
        (maximal left turn), next at black (maximal right).  Cached.
        """
        if self._trips is not None:
            return self._trips
        trips = {}
        for i in range(1, self.n + 1):
            e = self.boundary_edge[i]
            u, v = self.edges[e]
            dart = ("e", e, 1 if u == -i else 0)
            path = [dart]
            guard = 4 * len(self.edges) + 4
            while True:
                tail, head = self._dart_ends(path[-1])
                if head < 0:
                    break
                step = -1 if self.color(head) == WHITE else +1
                _, cur_edge, _ = path[-1]
                nxt = self._step(head, cur_edge, step)
                nu, nv = self.edges[nxt]
                path.append(("e", nxt, 1 if nu == head else 0))
                if len(path) > guard:
                    raise PlabicError(f"trip from {i} does not terminate")
            trips[i] = path
        self._trips = trips
        return trips

    def trip_permutation(self):
        """pi with pi(i) = endpoint of the trip started at i, as a dict."""
        return {i: -self._dart_ends(path[-1])[1] for i, path in self.trips().items()}

    # -- face labels -----------------------------------------------------------

    def face_labels(self):
        """Map face index -> k-subset of [n] (frozenset).

        i is in the label of f iff f lies to the left of the trip ending
        at i; computed by flood fill away from the trip's own edges.
        """
        faces = self.faces()
        dart_face = self.face_of_dart()
        # adjacency of faces across each graph edge
        across = {}
        for e in self.edges:
            f0 = dart_face[("e", e, 0)]
            f1 = dart_face[("e", e, 1)]
            across[e] = (f0, f1)
        pi = self.trip_permutation()
        start_of_trip_ending_at = {pi[i]: i for i in range(1, self.n + 1)}
        if len(start_of_trip_ending_at) != self.n:
            raise PlabicError("trip permutation is not a bijection")
        labels = {idx: set() for idx in range(len(faces))}
        for target in range(1, self.n + 1):
            trip = self.trips()[start_of_trip_ending_at[target]]
            trip_edges = set()
            for _, e, _ in trip:
                if e in trip_edges:
                    raise PlabicError(
                        f"not reduced: trip ending at {target} repeats edge {e}"
                    )
                trip_edges.add(e)
            left = {dart_face[d] for d in trip}
            right = {dart_face[(d[0], d[1], 1 - d[2])] for d in trip}
            stack = list(left)
            region = set(left)
            while stack:
                f = stack.pop()
                for e, (f0, f1) in across.items():
                    if e in trip_edges:
                        continue
                    if f0 == f and f1 not in region:
                        region.add(f1)
                        stack.append(f1)
                    elif f1 == f and f0 not in region:
                        region.add(f0)
                        stack.append(f0)
            if region & (right - left):
                raise PlabicError(
                    f"not reduced: trip ending at {target} does not separate the disk"
                )
            for f in region:
                labels[f].add(target)
        k = self.type_k
        for f, lab in labels.items():
            if len(lab) != k:
                raise PlabicError(
                    f"face {f} received label of size {len(lab)}, expected {k}"
                )
        return {f: frozenset(lab) for f, lab in labels.items()}

    def boundary_face_labels(self):
        """Labels of the n faces adjacent to the boundary arcs, keyed by the
        arc (i, i+1) they touch."""
        dart_face = self.face_of_dart()
        labels = self.face_labels()
        out = {}
        for i in range(1, self.n + 1):
            for end in (0, 1):
                f = dart_face.get(("a", i, end))
                if f is not None and f < len(self.faces()):
                    kinds = {k for k, _, _ in self.faces()[f]}
                    if "e" in kinds:
                        out[(i, self._arc(i))] = labels[f]
        return out

    # -- (de)serialization ---------------------------------------------------

    def to_json(self):
        return {
            "n": self.n,
            "vertices": [{"id": v, "color": c} for v, c in sorted(self.colors.items())],
            "edges": [{"id": e, "ends": list(ends)} for e, ends in sorted(self.edges.items())],
            "boundary": [self.boundary_edge[i] for i in range(1, self.n + 1)],
            "rotation": {str(v): list(r) for v, r in sorted(self.rotation.items()) if v > 0},
        }

    @classmethod
    def from_json(cls, data):
        colors = {item["id"]: item["color"] for item in data["vertices"]}
        edges = {item["id"]: tuple(item["ends"]) for item in data["edges"]}
        rotation = {int(v): list(r) for v, r in data.get("rotation", {}).items()}
        g = cls(data["n"], colors, edges, rotation)
        want = {i + 1: e for i, e in enumerate(data["boundary"])}
        if want != g.boundary_edge:
            raise PlabicError("boundary list disagrees with edge incidences")
        return g

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def dump(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1)


def _cyclic_intervals(k, n):
    return {frozenset((s + t) % n + 1 for t in range(k)) for s in range(n)}


def certify_rectangle(g: PlabicGraph, k: int, n: int):
    """Certify that g is the reduced top cell of type (k,n): trip permutation
    i -> i+k, k(n-k)+1 faces, boundary faces labeled by the n cyclically
    consecutive k-subsets."""
    if g.type_k != k:
        raise PlabicError(f"type is {g.type_k}, expected {k}")
    pi = g.trip_permutation()
    for i in range(1, n + 1):
        want = (i + k - 1) % n + 1
        if pi[i] != want:
            raise PlabicError(f"trip permutation sends {i} to {pi[i]}, expected {want}")
    nfaces = len(g.faces())
    if nfaces != k * (n - k) + 1:
        raise PlabicError(f"{nfaces} faces, expected {k * (n - k) + 1}")
    boundary = set(g.boundary_face_labels().values())
    if boundary != _cyclic_intervals(k, n):
        raise PlabicError("boundary face labels are not the cyclic k-intervals")
    return True


def make_rectangle_graph(k: int, n: int) -> PlabicGraph:
    """The standard grid-shaped reduced top cell plabic graph of type (k,n).

    Built from the k x (n-k) lattice-path network: one white/black pair per
    cell, wires moving through rows and columns, source legs on one side and
    sink legs on the other, with bivalent whites making the coloring proper.
    The construction is certified (trips, face count, boundary labels) before
    being returned.
    """
    if not 1 <= k < n:
        raise PlabicError(f"need 1 <= k < n, got (k, n) = ({k}, {n})")
    g = make_claw_graph(n) if k == 1 else _build_rectangle(k, n)
    certify_rectangle(g, k, n)
    return g


def make_claw_graph(n: int) -> PlabicGraph:
    """Single internal white vertex attached to every boundary vertex."""
    c = 1
    edges = {i: (-i, c) for i in range(1, n + 1)}
    # CCW around the center visits the clockwise boundary labels in reverse.
    rotation = {c: [1] + list(range(n, 1, -1))}
    return PlabicGraph(n, {c: WHITE}, edges, rotation)


def _build_rectangle(k, n):
    # Lattice-path layout: k rows of cells entered from the right boundary
    # (labels 1..k, top to bottom), n-k columns exiting at the bottom
    # (labels k+1..n, right to left).  Cell (i,j) holds a black vertex on
    # its right and a white on its left; wires run leftward along rows and
    # downward along columns.
    m = n - k
    colors = {}
    edges = {}
    rotation = {}
    eid = [0]

    def add_edge(u, v):
        eid[0] += 1
        edges[eid[0]] = (u, v)
        return eid[0]

    W = lambda i, j: 10 * (i * 100 + j) + 1
    B = lambda i, j: 10 * (i * 100 + j) + 2
    S = lambda i: 10 * i + 3  # bivalent white on the source leg of row i

    for i in range(1, k + 1):
        for j in range(1, m + 1):
            colors[W(i, j)] = WHITE
            colors[B(i, j)] = BLACK

    pair = {}
    left = {}
    down = {}
    for i in range(1, k + 1):
        for j in range(1, m + 1):
            pair[i, j] = add_edge(B(i, j), W(i, j))
            if j > 1:
                left[i, j] = add_edge(W(i, j), B(i, j - 1))
            if i > 1:
                down[i, j] = add_edge(W(i - 1, j), B(i, j))

    leg = {}
    for i in range(1, k + 1):
        colors[S(i)] = WHITE
        leg_out = add_edge(-i, S(i))
        leg_in = add_edge(S(i), B(i, m))
        rotation[S(i)] = [leg_out, leg_in]
        leg[("src", i)] = leg_in
    for j in range(1, m + 1):
        leg[("snk", j)] = add_edge(W(k, j), -(n + 1 - j))

    # CCW rotations from the layout (x = j rightward, y = -i downward).
    for i in range(1, k + 1):
        for j in range(1, m + 1):
            in_right = left[i, j + 1] if j < m else leg[("src", i)]
            rot_b = [in_right]
            if i > 1:
                rot_b.append(down[i, j])
            rot_b.append(pair[i, j])
            rotation[B(i, j)] = rot_b
            rot_w = [pair[i, j]]
            if j > 1:
                rot_w.append(left[i, j])
            rot_w.append(down[i + 1, j] if i < k else leg[("snk", j)])
            rotation[W(i, j)] = rot_w

    return PlabicGraph(n, colors, edges, rotation)
