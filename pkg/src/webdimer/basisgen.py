"""Rotation-invariant web bases.

SL_2 basis webs are non-crossing matchings (one white midpoint per arc).
SL_3 basis webs are grown from standard tableaux through their arc diagram:
match each 2 to the nearest free 1 on its left and each 3 to the nearest
free 2, draw the arcs as semicircles, put a trivalent white vertex at every
2, and resolve each arc crossing into a white/black pair.  Crossing points
are ordered along arcs by exact rational x-coordinates.  The construction
is certified by the round-trip, non-ellipticity, count, and unique-labeling
checks in the test suite rather than against any published pseudocode.
"""

from __future__ import annotations

from fractions import Fraction

from .tableaux import Tableau, syt_enumerate, yamanouchi_word
from .webs import BLACK, WHITE, Web, WebError


def _stack_match(word, opener, closer):
    """Arcs (a, b) pairing each `closer` with the nearest free `opener`."""
    stack = []
    arcs = []
    for pos, letter in enumerate(word, start=1):
        if letter == opener:
            stack.append(pos)
        elif letter == closer:
            if not stack:
                raise WebError("word is not a Yamanouchi word")
            arcs.append((stack.pop(), pos))
    return arcs


def sl2_basis(n: int) -> list[Web]:
    """The Catalan(n/2) non-crossing matchings, ordered by the 2 x n/2
    standard tableaux that index them (row 1 = openers)."""
    if n % 2 or n < 2:
        raise WebError("SL_2 basis needs an even number of boundary vertices")
    if n > 16:
        raise WebError("refusing n > 16")
    webs = []
    for t in syt_enumerate(2, n // 2):
        arcs = _stack_match(yamanouchi_word(t), 1, 2)
        webs.append(_matching_web(arcs, n))
    return webs


def _matching_web(arcs, n):
    colors = {}
    edges = {}
    rotation = {}
    boundary = {i: [] for i in range(1, n + 1)}
    eid = 0
    for vid, (a, b) in enumerate(sorted(arcs), start=1):
        colors[vid] = WHITE
        eid += 1
        edges[eid] = (-a, vid)
        boundary[a].append(eid)
        eid += 1
        edges[eid] = (-b, vid)
        boundary[b].append(eid)
        rotation[vid] = [eid - 1, eid]
    return Web(2, n, colors, edges, {}, rotation, boundary)


def _crossing_x(arc_a, arc_b):
    """Exact x-coordinate where the semicircles over arc_a and arc_b meet."""
    c1 = Fraction(arc_a[0] + arc_a[1], 2)
    r1 = Fraction(arc_a[1] - arc_a[0], 2)
    c2 = Fraction(arc_b[0] + arc_b[1], 2)
    r2 = Fraction(arc_b[1] - arc_b[0], 2)
    return (c1 * c1 - r1 * r1 - c2 * c2 + r2 * r2) / (2 * (c1 - c2))


def _interleaved(a, b):
    x1, x2 = a
    y1, y2 = b
    return x1 < y1 < x2 < y2 or y1 < x1 < y2 < x2


def sl3_growth(t: Tableau) -> Web:
    """The non-elliptic standard SL_3 web whose tableau is t (shape 3 x k)."""
    if t.rows != 3:
        raise WebError("sl3_growth needs a 3-row tableau")
    if not t.is_standard():
        raise WebError("sl3_growth needs a standard tableau")
    word = yamanouchi_word(t)
    n = len(word)
    arcs12 = _stack_match(word, 1, 2)
    arcs23 = _stack_match(word, 2, 3)

    colors = {}
    rotation = {}
    next_vid = [0]

    def new_vertex(color):
        next_vid[0] += 1
        colors[next_vid[0]] = color
        return next_vid[0]

    centers = {}  # 2-position -> white tripod vertex
    for _, p in arcs12:
        centers[p] = new_vertex(WHITE)

    # crossings: a 12-arc and a 23-arc cross iff their spans interleave
    crossings = []  # records (x, arc12, arc23, qv, pv); q joins the Y-sides
    per_arc12 = {a: [] for a in arcs12}
    per_arc23 = {b: [] for b in arcs23}
    for a in arcs12:
        for b in arcs23:
            if _interleaved(a, b):
                qv = new_vertex(BLACK)
                pv = new_vertex(WHITE)
                rec = (_crossing_x(a, b), a, b, qv, pv)
                crossings.append(rec)
                per_arc12[a].append(rec)
                per_arc23[b].append(rec)
    for lst in per_arc12.values():
        lst.sort(key=lambda rec: rec[0])
    for lst in per_arc23.values():
        lst.sort(key=lambda rec: rec[0])

    edges = {}
    eid = [0]

    def add_edge(u, v):
        eid[0] += 1
        edges[eid[0]] = (u, v)
        return eid[0]

    boundary = {i: [] for i in range(1, n + 1)}
    # chain along each 12-arc: boundary end at the left, tripod at the right
    a_yside = {}  # (crossing id) -> edge toward the 12-arc's tripod
    a_bside = {}
    for a in arcs12:
        x1, x2 = a
        v = centers[x2]
        chain = per_arc12[a]
        if not chain:
            e = add_edge(-x1, v)
            boundary[x1].append(e)
            arc12_end = e
        else:
            e = add_edge(-x1, chain[0][4])
            boundary[x1].append(e)
            a_bside[id(chain[0])] = e
            for rec, nxt in zip(chain, chain[1:]):
                e = add_edge(rec[3], nxt[4])
                a_yside[id(rec)] = e
                a_bside[id(nxt)] = e
            arc12_end = add_edge(chain[-1][3], v)
            a_yside[id(chain[-1])] = arc12_end
        per_arc12[a] = (chain, arc12_end)

    b_yside = {}
    b_bside = {}
    for b in arcs23:
        y2, y3 = b
        v = centers[y2]
        chain = per_arc23[b]
        if not chain:
            e = add_edge(v, -y3)
            boundary[y3].append(e)
            arc23_end = e
        else:
            arc23_end = add_edge(v, chain[0][3])
            b_yside[id(chain[0])] = arc23_end
            for rec, nxt in zip(chain, chain[1:]):
                e = add_edge(rec[4], nxt[3])
                b_bside[id(rec)] = e
                b_yside[id(nxt)] = e
            e = add_edge(chain[-1][4], -y3)
            boundary[y3].append(e)
            b_bside[id(chain[-1])] = e
        per_arc23[b] = (chain, arc23_end)

    # legs and tripod rotations; rotation lists are page-clockwise, which is
    # counterclockwise in the disk whose labels run clockwise
    for p, v in centers.items():
        leg = add_edge(-p, v)
        boundary[p].append(leg)
        arc12 = next(a for a in arcs12 if a[1] == p)
        arc23 = next(b for b in arcs23 if b[0] == p)
        rotation[v] = [per_arc12[arc12][1], per_arc23[arc23][1], leg]

    for rec in crossings:
        _, a, b, qv, pv = rec
        qp = add_edge(qv, pv)
        # case (a): the 12-arc starts left of the 23-arc
        case_a = a[0] < b[0]
        ay, by = a_yside[id(rec)], b_yside[id(rec)]
        ab, bb = a_bside[id(rec)], b_bside[id(rec)]
        rotation[qv] = [qp, ay, by] if case_a else [qp, by, ay]
        rotation[pv] = [qp, ab, bb] if case_a else [qp, bb, ab]

    return Web(3, n, colors, edges, {}, rotation, boundary)


def is_non_elliptic(web: Web) -> bool:
    """True iff every internal face has at least six sides."""
    return all(len(face) >= 6 for face in web.internal_faces())


def sl3_basis(lam) -> list[Web]:
    """Kuperberg's non-elliptic basis for degree (1^n), n in {3, 6, 9, 12},
    in tableau order."""
    lam = tuple(lam)
    n = len(lam)
    if lam != (1,) * n or n not in (3, 6, 9, 12):
        raise WebError(f"unsupported degree {lam}; need (1^n) with n in 3,6,9,12")
    return [sl3_growth(t) for t in syt_enumerate(3, n // 3)]
