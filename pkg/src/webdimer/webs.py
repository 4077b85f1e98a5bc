"""SL_r webs and tensor diagrams.

A web stores its combinatorial embedding: counterclockwise rotation lists at
internal vertices and, for each boundary vertex, its incident edges ordered
counterclockwise (equivalently: fanning from the side of label i-1 around to
the side of label i+1).  Boundary vertices are black with ids -1..-n, labels
running clockwise.  Edge multiplicities m(e) >= 1 must sum to r at every
internal vertex.

Label sets on edges are represented as bitmasks over [r] throughout the
labeling search.
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import combinations

from .tableaux import Tableau

WHITE = "w"
BLACK = "b"


class WebError(ValueError):
    pass


def mask_of(subset):
    return sum(1 << (x - 1) for x in subset)


def unmask(mask):
    return tuple(i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1)


@lru_cache(maxsize=None)
def masks_of_size(r, size):
    """All size-subsets of [r] as masks, ordered by their sorted tuple."""
    return tuple(mask_of(c) for c in combinations(range(1, r + 1), size))


class Web:
    """A bicolored boundary-anchored graph with edge multiplicities."""

    def __init__(self, r, n, colors, edges, mult, rotation, boundary):
        self.r = r
        self.n = n
        self.colors = dict(colors)
        self.edges = {e: tuple(ends) for e, ends in edges.items()}
        self.mult = {e: int(mult.get(e, 1)) for e in self.edges}
        self.rotation = {v: list(rot) for v, rot in rotation.items()}
        self.boundary = {i: list(boundary.get(i, [])) for i in range(1, n + 1)}
        self._validate()

    def _validate(self):
        if self.r < 1:
            raise WebError("r must be >= 1")
        incident = {v: [] for v in self.colors}
        for i in range(1, self.n + 1):
            incident[-i] = []
        for e, (u, v) in self.edges.items():
            if u == v:
                raise WebError(f"self-loop on vertex {u}")
            for x in (u, v):
                if x not in incident:
                    raise WebError(f"edge {e} touches unknown vertex {x}")
                incident[x].append(e)
            if self.color(u) == self.color(v):
                raise WebError(f"edge {e} joins two {self.color(u)} vertices")
            if self.mult[e] < 1:
                raise WebError(f"edge {e} has multiplicity {self.mult[e]}")
        for v, c in self.colors.items():
            total = sum(self.mult[e] for e in incident[v])
            if total != self.r:
                raise WebError(
                    f"internal vertex {v} has multiplicity sum {total}, expected {self.r}"
                )
            rot = self.rotation.get(v)
            if rot is None or sorted(rot) != sorted(incident[v]):
                raise WebError(f"rotation at vertex {v} does not match incidences")
        for i in range(1, self.n + 1):
            if sorted(self.boundary[i]) != sorted(incident[-i]):
                raise WebError(f"boundary list at {i} does not match incidences")
        self.incident = incident

    # -- basic structure ---------------------------------------------------

    def color(self, v):
        return BLACK if v < 0 else self.colors[v]

    def degree(self):
        """lambda: multiplicity sum at each boundary vertex."""
        return tuple(
            sum(self.mult[e] for e in self.boundary[i]) for i in range(1, self.n + 1)
        )

    def plucker_degree(self):
        total = sum(self.degree())
        if total % self.r:
            raise WebError("degree total not divisible by r")
        return total // self.r

    def is_semistandard(self):
        return all(self.mult[e] == 1 for i in range(1, self.n + 1) for e in self.boundary[i])

    def is_dual_semistandard(self):
        return all(len(self.boundary[i]) <= 1 for i in range(1, self.n + 1))

    def is_standard(self):
        return self.is_semistandard() and self.is_dual_semistandard()

    def other_end(self, e, v):
        u, w = self.edges[e]
        return w if u == v else u

    # -- planarity ----------------------------------------------------------

    def _out_darts(self, v):
        if v > 0:
            return [("e", e, 1 if self.edges[e][0] == v else 0) for e in self.rotation[v]]
        i = -v
        prev = (i - 2) % self.n + 1
        out = [("a", i, 1), ("a", prev, 0)]
        for e in self.boundary[i]:
            out.append(("e", e, 1 if self.edges[e][0] == v else 0))
        return out

    def _dart_ends(self, dart):
        kind, ident, end = dart
        if kind == "e":
            u, v = self.edges[ident]
        else:
            u, v = -ident, -(ident % self.n + 1)
        return (u, v) if end == 1 else (v, u)

    def _face_orbits(self):
        darts = []
        for e in self.edges:
            darts.append(("e", e, 0))
            darts.append(("e", e, 1))
        for i in range(1, self.n + 1):
            darts.append(("a", i, 0))
            darts.append(("a", i, 1))
        seen = set()
        orbits = []
        for d in darts:
            if d in seen:
                continue
            orbit = []
            cur = d
            while cur not in seen:
                seen.add(cur)
                orbit.append(cur)
                _, head = self._dart_ends(cur)
                rev = (cur[0], cur[1], 1 - cur[2])
                rot = self._out_darts(head)
                cur = rot[(rot.index(rev) - 1) % len(rot)]
            orbits.append(tuple(orbit))
        return orbits

    @property
    def is_planar(self):
        """True iff the rotation system embeds in the disk with the given
        boundary order (Euler count, outer region included)."""
        orbits = self._face_orbits()
        V = len(self.colors) + self.n
        E = len(self.edges) + self.n
        return V - E + len(orbits) == 2

    def internal_faces(self):
        """Faces whose boundary uses no disk arc; lists of darts."""
        return [
            f
            for f in self._face_orbits()
            if all(kind == "e" for kind, _, _ in f)
        ]

    # -- labeling search -----------------------------------------------------

    def _edge_order(self):
        """Edges in BFS order from the boundary (unreached edges appended)."""
        order = []
        seen_e = set()
        seen_v = set()
        queue = []
        for i in range(1, self.n + 1):
            for e in self.boundary[i]:
                if e not in seen_e:
                    seen_e.add(e)
                    order.append(e)
                    queue.append(self.other_end(e, -i))
        while queue:
            v = queue.pop(0)
            if v in seen_v or v < 0:
                continue
            seen_v.add(v)
            for e in self.rotation[v]:
                if e not in seen_e:
                    seen_e.add(e)
                    order.append(e)
                    queue.append(self.other_end(e, v))
        for e in self.edges:
            if e not in seen_e:
                order.append(e)
        return order

    def _search_labelings(self, fixed, on_complete, limit=None):
        """Backtrack over consistent labelings.

        fixed: edge id -> mask for preassigned edges (boundary condition).
        on_complete(assign) is called per labeling; search stops when it
        returns False or `limit` completions are reached.  Returns the
        number of completions.
        """
        full = (1 << self.r) - 1
        order = [e for e in self._edge_order() if e not in fixed]
        used = {v: 0 for v in self.colors}
        remaining = {v: self.r for v in self.colors}
        assign = dict(fixed)
        for e, mask in fixed.items():
            if bin(mask).count("1") != self.mult[e]:
                raise WebError(f"fixed label on edge {e} has wrong size")
            for x in self.edges[e]:
                if x > 0:
                    if used[x] & mask:
                        return 0
                    used[x] |= mask
                    remaining[x] -= self.mult[e]
        for v in self.colors:
            if remaining[v] == 0 and used[v] != full:
                return 0
        count = [0]

        def rec(idx):
            if idx == len(order):
                count[0] += 1
                if on_complete is not None and on_complete(dict(assign)) is False:
                    return False
                return not (limit is not None and count[0] >= limit)
            e = order[idx]
            m = self.mult[e]
            ends = [x for x in self.edges[e] if x > 0]
            for mask in masks_of_size(self.r, m):
                ok = True
                for x in ends:
                    if used[x] & mask:
                        ok = False
                        break
                if not ok:
                    continue
                for x in ends:
                    used[x] |= mask
                    remaining[x] -= m
                if all(remaining[x] > 0 or used[x] == full for x in ends):
                    assign[e] = mask
                    if rec(idx + 1) is False:
                        for x in ends:
                            used[x] &= ~mask
                            remaining[x] += m
                        return False
                    del assign[e]
                for x in ends:
                    used[x] &= ~mask
                    remaining[x] += m
            return True

        rec(0)
        return count[0]

    def _fixed_from_condition(self, condition):
        """Boundary condition -> {leg edge: mask}; condition is a sequence of
        iterables of labels, one per boundary vertex."""
        if len(condition) != self.n:
            raise WebError(f"condition has {len(condition)} parts, expected {self.n}")
        if not self.is_dual_semistandard():
            raise WebError("boundary conditions need a dual semistandard web")
        fixed = {}
        for i in range(1, self.n + 1):
            part = tuple(sorted(condition[i - 1]))
            legs = self.boundary[i]
            if not legs:
                if part:
                    raise WebError(f"nonempty label at bare boundary vertex {i}")
                continue
            e = legs[0]
            if len(part) != self.mult[e] or len(set(part)) != len(part):
                raise WebError(
                    f"label {part} at boundary {i} does not match multiplicity {self.mult[e]}"
                )
            fixed[e] = mask_of(part)
        return fixed


def count_labelings(web: Web, condition) -> int:
    """a(S;W): the number of consistent labelings with boundary condition S."""
    return web._search_labelings(web._fixed_from_condition(condition), None)


def enumerate_labelings(web: Web, condition):
    """All consistent labelings, each a map edge id -> tuple of labels."""
    out = []
    web._search_labelings(
        web._fixed_from_condition(condition),
        lambda a: out.append({e: unmask(m) for e, m in a.items()}),
    )
    return out


def word_of_condition(web: Web, condition):
    return tuple(x for part in condition for x in sorted(part))


def sign_of_word(word) -> int:
    inv = sum(
        1 for a in range(len(word)) for b in range(a + 1, len(word)) if word[a] > word[b]
    )
    return -1 if inv % 2 else 1


def word_and_sign(web: Web):
    """Lexicographically smallest word with a(S;W) > 0, its condition S_W,
    and sign(S_W).  Raises for a zero invariant diagram."""
    lam = web.degree()
    if not web.is_dual_semistandard():
        raise WebError("word is defined via dual semistandard webs; unclasp first")
    chosen = []
    fixed = {}
    for i in range(1, web.n + 1):
        if lam[i - 1] == 0:
            chosen.append(())
            continue
        e = web.boundary[i][0]
        for mask in masks_of_size(web.r, lam[i - 1]):
            trial = dict(fixed)
            trial[e] = mask
            if web._search_labelings(trial, None, limit=1):
                fixed[e] = mask
                chosen.append(unmask(mask))
                break
        else:
            raise WebError("zero invariant diagram: no consistent labeling exists")
    condition = tuple(chosen)
    word = word_of_condition(web, condition)
    return word, condition, sign_of_word(word)


def evaluate_invariant(web: Web, condition) -> int:
    """W(E_S) = sign(S) a(S;W) for a dual semistandard web."""
    count = count_labelings(web, condition)
    if count == 0:
        return 0
    return sign_of_word(word_of_condition(web, condition)) * count


def tableau_of_web(web: Web) -> Tableau:
    """T(W): row j holds the boundary positions whose label set contains j."""
    _, condition, _ = word_and_sign(web)
    rows = []
    for j in range(1, web.r + 1):
        row = sorted(i for i in range(1, web.n + 1) for x in condition[i - 1] if x == j)
        rows.append(row)
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise WebError("boundary word content is not rectangular")
    return Tableau(rows)


def has_fork(web: Web, i: int, j: int) -> bool:
    """True iff boundary vertices i and j are each joined by a single edge
    to a common internal vertex."""
    if len(web.boundary[i]) != 1 or len(web.boundary[j]) != 1:
        return False
    ei, ej = web.boundary[i][0], web.boundary[j][0]
    return web.other_end(ei, -i) == web.other_end(ej, -j)


def fork_pairs(web: Web):
    return {
        (i, j)
        for i in range(1, web.n + 1)
        for j in range(i + 1, web.n + 1)
        if has_fork(web, i, j)
    }


# -- Fomin-Pylyavskyy sign convention (r = 3) --------------------------------

def _fp_vertex_sign(web, v, assign):
    """Sign of the label cycle read clockwise around v (+1 for an even
    permutation of (1,2,3)); stored rotations are CCW, so read reversed."""
    labels = []
    for e in reversed(web.rotation[v]):
        lab = unmask(assign[e])
        if len(lab) != 1:
            raise WebError("FP sign needs trivalent diagrams with simple edges")
        labels.append(lab[0])
    if len(labels) != 3:
        raise WebError("FP sign needs trivalent vertices")
    a, b, c = labels
    return 1 if (a, b, c) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1


def _require_fp(web):
    if web.r != 3:
        raise WebError("FP convention is for SL_3 tensor diagrams")
    if not web.is_standard():
        raise WebError("FP convention needs a standard tensor diagram")
    if any(m != 1 for m in web.mult.values()):
        raise WebError("FP convention needs simple edges")


def evaluate_fp(web: Web, condition) -> int:
    """T^FP(E_S): number of consistent labelings counted with FP signs."""
    _require_fp(web)
    total = [0]

    def add(assign):
        s = 1
        for v in web.colors:
            s *= _fp_vertex_sign(web, v, assign)
        total[0] += s

    web._search_labelings(web._fixed_from_condition(condition), add)
    return total[0]


def evaluate_fp_at_point(web: Web, matrix):
    """State sum of the FP invariant on column vectors: matrix is 3 x n,
    entries exact rationals; boundary vertex i contributes its column."""
    _require_fp(web)
    lam = web.degree()
    total = [0]

    def add(assign):
        s = 1
        for v in web.colors:
            s *= _fp_vertex_sign(web, v, assign)
        prod = s
        for i in range(1, web.n + 1):
            if lam[i - 1]:
                (label,) = unmask(assign[web.boundary[i][0]])
                prod *= matrix[label - 1][i - 1]
        total[0] += prod

    web._search_labelings({}, add)
    return total[0]


# -- geometric moves -----------------------------------------------------------

def rotate_web(web: Web) -> Web:
    """Counterclockwise rotation by 2 pi / n: new label i carries old i+1."""
    remap = {}
    for j in range(1, web.n + 1):
        new = (j - 2) % web.n + 1  # old j sits at new j-1
        remap[-j] = -new
    edges = {
        e: tuple(remap.get(x, x) for x in ends) for e, ends in web.edges.items()
    }
    boundary = {i: web.boundary[i % web.n + 1] for i in range(1, web.n + 1)}
    return Web(web.r, web.n, web.colors, edges, web.mult, web.rotation, boundary)


def reflect_web(web: Web) -> Web:
    """Reflection about the axis between boundary vertices n and 1."""
    remap = {-j: -(web.n + 1 - j) for j in range(1, web.n + 1)}
    edges = {e: tuple(remap.get(x, x) for x in ends) for e, ends in web.edges.items()}
    rotation = {v: list(reversed(rot)) for v, rot in web.rotation.items()}
    boundary = {
        i: list(reversed(web.boundary[web.n + 1 - i])) for i in range(1, web.n + 1)
    }
    return Web(web.r, web.n, web.colors, edges, web.mult, rotation, boundary)


# -- clasping ------------------------------------------------------------------

def unclasp(web: Web):
    """Split every boundary vertex into one vertex per incident edge,
    preserving planarity.  Returns (standard web, groups) where groups[i]
    lists the new labels that came from old vertex i+1."""
    if not web.is_semistandard():
        raise WebError("unclasp needs a semistandard web (simple boundary edges)")
    groups = []
    new_boundary = {}
    edges = dict(web.edges)
    pos = 0
    remap = {}
    for i in range(1, web.n + 1):
        legs = web.boundary[i]
        group = []
        for e in legs:
            pos += 1
            group.append(pos)
            new_boundary[pos] = [e]
            remap[(i, e)] = pos
        groups.append(group)
    total = pos
    for i in range(1, web.n + 1):
        for e in web.boundary[i]:
            u, v = edges[e]
            new_label = remap[(i, e)]
            edges[e] = tuple(-new_label if x == -i else x for x in (u, v))
    out = Web(web.r, total, web.colors, edges, web.mult, web.rotation, new_boundary)
    return out, groups


def clasp(web: Web, grouping) -> Web:
    """Merge runs of consecutive boundary vertices; grouping is a composition
    of n (lengths of the clockwise runs starting at vertex 1)."""
    if sum(grouping) != web.n or any(g < 1 for g in grouping):
        raise WebError("grouping must be a composition of n with positive parts")
    edges = dict(web.edges)
    new_boundary = {}
    start = 1
    for new_label, size in enumerate(grouping, start=1):
        legs = []
        for old in range(start, start + size):
            for e in web.boundary[old]:
                legs.append(e)
                u, v = edges[e]
                edges[e] = tuple(-new_label if x == -old else x for x in (u, v))
        new_boundary[new_label] = legs
        start += size
    return Web(web.r, len(grouping), web.colors, edges, web.mult, web.rotation, new_boundary)


def boundary_condition_of_clasped(web: Web, groups, unclasped_condition):
    """S_X(i) as the multiset union over the unclasped labels (kept sorted)."""
    out = []
    for group in groups:
        merged = []
        for pos in group:
            merged.extend(unclasped_condition[pos - 1])
        out.append(tuple(sorted(merged)))
    return tuple(out)


# -- canonical form --------------------------------------------------------------

def canonical_key(web: Web) -> str:
    """Canonical serialization up to boundary-anchored isomorphism respecting
    the rotation system.  Webs compare equal iff their keys match."""
    canon = {}

    def visit(v, entry_edge):
        if v in canon:
            return ["@", canon[v]]
        canon[v] = len(canon)
        rot = web.rotation[v]
        idx = rot.index(entry_edge)
        out = [web.color(v), len(rot)]
        for t in range(1, len(rot)):
            e = rot[(idx + t) % len(rot)]
            u = web.other_end(e, v)
            if u < 0:
                out.append([web.mult[e], "b", -u])
            else:
                out.append([web.mult[e], visit(u, e)])
        return out

    roots = []
    for i in range(1, web.n + 1):
        for e in web.boundary[i]:
            roots.append([i, web.mult[e], visit(web.other_end(e, -i), e)])
    if len(canon) != len(web.colors):
        raise WebError("web has components not attached to the boundary")
    return json.dumps([web.r, web.n, roots], separators=(",", ":"))


def webs_equal(a: Web, b: Web) -> bool:
    return canonical_key(a) == canonical_key(b)


# -- (de)serialization ------------------------------------------------------------

def web_to_json(web: Web):
    return {
        "r": web.r,
        "n": web.n,
        "vertices": [{"id": v, "color": c} for v, c in sorted(web.colors.items())],
        "edges": [
            {"id": e, "ends": list(ends), "mult": web.mult[e]}
            for e, ends in sorted(web.edges.items())
        ],
        "boundary": [web.boundary[i] for i in range(1, web.n + 1)],
        "rotation": {str(v): rot for v, rot in sorted(web.rotation.items())},
    }


def web_from_json(data) -> Web:
    colors = {item["id"]: item["color"] for item in data["vertices"]}
    edges = {item["id"]: tuple(item["ends"]) for item in data["edges"]}
    mult = {item["id"]: item.get("mult", 1) for item in data["edges"]}
    rotation = {int(v): list(rot) for v, rot in data["rotation"].items()}
    boundary = {i + 1: list(legs) for i, legs in enumerate(data["boundary"])}
    return Web(data["r"], data["n"], colors, edges, mult, rotation, boundary)


# -- small constructors used throughout the tests --------------------------------

def tripod(labels, n=None, r=3) -> Web:
    """White vertex joined to three boundary vertices; the SL_3 web of a
    Plucker coordinate."""
    i, j, k = sorted(labels)
    n = n or k
    colors = {1: WHITE}
    edges = {1: (-i, 1), 2: (-j, 1), 3: (-k, 1)}
    # CCW around the center runs against the clockwise boundary labels.
    rotation = {1: [1, 3, 2]}
    boundary = {i: [1], j: [2], k: [3]}
    return Web(r, n, colors, edges, {}, rotation, boundary)


def sl2_arc_web(matching, n) -> Web:
    """Disjoint arcs with one white midpoint each; matching is a set of
    pairs of boundary labels."""
    colors = {}
    edges = {}
    rotation = {}
    boundary = {}
    eid = 0
    for idx, (a, b) in enumerate(sorted(tuple(sorted(p)) for p in matching), start=1):
        colors[idx] = WHITE
        eid += 1
        edges[eid] = (-a, idx)
        boundary.setdefault(a, []).append(eid)
        e1 = eid
        eid += 1
        edges[eid] = (-b, idx)
        boundary.setdefault(b, []).append(eid)
        rotation[idx] = [e1, eid]
        boundary.setdefault(b, [])
    return Web(2, n, colors, edges, {}, rotation, boundary)
