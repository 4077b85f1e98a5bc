"""r-dimer covers, edge and face weights, boundary measurement, and the
(twisted) tensor invariants attached to a weighted plabic graph.

Covers are enumerated by backtracking over edges in id order, so the output
is ordered lexicographically by multiplicity vector; tests diff these lists.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations

from .plabic import WHITE, PlabicError, PlabicGraph
from .plucker import PluckerError, PluckerPoly
from .webs import Web, canonical_key


class DimerError(ValueError):
    pass


class Network:
    """A plabic graph with a nonzero rational weight on every edge."""

    def __init__(self, graph: PlabicGraph, weights):
        self.graph = graph
        self.weights = {}
        for e in graph.edges:
            if e not in weights:
                raise DimerError(f"edge {e} has no weight")
            w = Fraction(weights[e])
            if w == 0:
                raise DimerError(f"edge {e} has zero weight")
            self.weights[e] = w

    @classmethod
    def unit(cls, graph):
        return cls(graph, {e: Fraction(1) for e in graph.edges})

    def to_json(self):
        data = self.graph.to_json()
        data["weights"] = {str(e): str(w) for e, w in sorted(self.weights.items())}
        return data

    @classmethod
    def from_json(cls, data):
        graph = PlabicGraph.from_json(data)
        return cls(graph, {int(e): Fraction(w) for e, w in data["weights"].items()})


class DimerCover:
    """Multiset of edges: multiplicity r at internal vertices, lambda_i at
    boundary vertex i."""

    __slots__ = ("graph", "r", "lam", "mult")

    def __init__(self, graph, r, lam, mult):
        self.graph = graph
        self.r = r
        self.lam = tuple(lam)
        self.mult = {e: m for e, m in mult.items() if m}

    def multiplicity_vector(self):
        return tuple(self.mult.get(e, 0) for e in sorted(self.graph.edges))

    def __eq__(self, other):
        return (
            isinstance(other, DimerCover)
            and self.graph is other.graph
            and self.r == other.r
            and self.mult == other.mult
        )

    def __hash__(self):
        return hash((id(self.graph), self.r, tuple(sorted(self.mult.items()))))

    def __repr__(self):
        return f"DimerCover(r={self.r}, mult={dict(sorted(self.mult.items()))})"


def enumerate_dimer_covers(graph: PlabicGraph, r: int, lam) -> list[DimerCover]:
    """All covers in D_{r,lambda}(graph), in lex order on multiplicity
    vectors (edge ids ascending).  Empty when infeasible."""
    lam = tuple(lam)
    if len(lam) != graph.n or any(x < 0 for x in lam):
        raise DimerError("lambda must be a nonnegative vector of length n")
    if r < 1:
        raise DimerError("r must be >= 1")
    fixed = {}
    for i in range(1, graph.n + 1):
        e = graph.boundary_edge[i]
        if lam[i - 1] > r:
            return []
        fixed[e] = lam[i - 1]
    edge_ids = sorted(graph.edges)
    free = [e for e in edge_ids if e not in fixed]
    need = {v: r for v in graph.colors}
    capacity = {v: 0 for v in graph.colors}
    for e in edge_ids:
        cap = fixed[e] if e in fixed else r
        for x in graph.edges[e]:
            if x > 0:
                capacity[x] += cap
    for e, m in fixed.items():
        for x in graph.edges[e]:
            if x > 0:
                need[x] -= m
                capacity[x] -= fixed[e]
    if any(m < 0 for m in need.values()):
        return []

    out = []
    mult = dict(fixed)

    def rec(idx):
        if idx == len(free):
            if all(m == 0 for m in need.values()):
                out.append(DimerCover(graph, r, lam, dict(mult)))
            return
        e = free[idx]
        ends = [x for x in graph.edges[e] if x > 0]
        top = min([r] + [need[x] for x in ends])
        for m in range(0, top + 1):
            for x in ends:
                need[x] -= m
                capacity[x] -= r
            if all(0 <= need[x] <= capacity[x] for x in ends):
                mult[e] = m
                rec(idx + 1)
                del mult[e]
            for x in ends:
                need[x] += m
                capacity[x] += r
        return

    # capacity bookkeeping: after deciding edge e, the remaining slack at its
    # endpoints drops by r (the maximum the edge could still have carried).
    rec(0)
    return out


def edge_weight(network: Network, cover: DimerCover) -> Fraction:
    """Product of edge weights with multiplicity."""
    if cover.graph is not network.graph:
        raise DimerError("cover belongs to a different graph")
    out = Fraction(1)
    for e, m in cover.mult.items():
        out *= network.weights[e] ** m
    return out


def boundary_measurement(network: Network):
    """The Plucker vector {I: sum of edge weights of D_{1,delta^I}}.

    The underlying graph must be a reduced top cell of type (k, n)."""
    graph = network.graph
    k = graph.type_k
    n = graph.n
    pi = graph.trip_permutation()
    if any(pi[i] != (i + k - 1) % n + 1 for i in range(1, n + 1)):
        raise DimerError("boundary measurement needs a reduced top cell graph")
    values = {}
    for I in combinations(range(1, n + 1), k):
        lam = tuple(1 if i in I else 0 for i in range(1, n + 1))
        total = Fraction(0)
        for cover in enumerate_dimer_covers(graph, 1, lam):
            total += edge_weight(network, cover)
        values[I] = total
    return values


def _face_data(graph: PlabicGraph):
    """Per face: (label, #white vertices on its boundary, non-boundary edges)."""
    labels = graph.face_labels()
    data = []
    for idx, face in enumerate(graph.faces()):
        whites = set()
        edges = set()
        for kind, ident, _ in face:
            if kind != "e":
                continue
            u, v = graph.edges[ident]
            for x in (u, v):
                if x > 0 and graph.color(x) == WHITE:
                    whites.add(x)
            if u > 0 and v > 0:
                edges.add(ident)
        data.append((labels[idx], len(whites), edges))
    return data


def face_weight(graph: PlabicGraph, cover: DimerCover) -> PluckerPoly:
    """The Laurent monomial prod_f D_{I_f}^(r W_f - D_f - r), W_f the white
    vertices bordering f and D_f the multiplicity of non-boundary edges of f
    in the cover."""
    k = graph.type_k
    mono = {}
    for label, w_f, edges in _face_data(graph):
        d_f = sum(cover.mult.get(e, 0) for e in edges)
        exp = cover.r * w_f - d_f - cover.r
        if exp:
            I = tuple(sorted(label))
            mono[I] = mono.get(I, 0) + exp
    return PluckerPoly(k, graph.n, {tuple(sorted(mono.items())): Fraction(1)})


def weblike_subgraph(cover: DimerCover) -> Web:
    """The SL_r web carried by a cover: its edges with multiplicities, the
    rotation orders inherited from the plabic graph."""
    graph = cover.graph
    colors = dict(graph.colors)
    edges = {}
    mult = {}
    boundary = {i: [] for i in range(1, graph.n + 1)}
    for e, m in cover.mult.items():
        u, v = graph.edges[e]
        edges[e] = (u, v)
        mult[e] = m
        for x in (u, v):
            if x < 0:
                boundary[-x].append(e)
    rotation = {}
    for v in colors:
        rotation[v] = [e for e in graph.rotation[v] if e in edges]
    # drop internal vertices not met by the cover (impossible for r >= 1,
    # but harmless to guard)
    used = {x for e in edges for x in graph.edges[e] if x > 0}
    colors = {v: c for v, c in colors.items() if v in used}
    rotation = {v: r for v, r in rotation.items() if v in used}
    return Web(cover.r, graph.n, colors, edges, mult, rotation, boundary)


class WebCombination:
    """A formal rational combination of webs, merged by canonical key."""

    def __init__(self, terms=()):
        self.terms = {}
        for coeff, web in terms:
            self.add(coeff, web)

    def add(self, coeff, web):
        coeff = Fraction(coeff)
        if coeff == 0:
            return
        key = canonical_key(web)
        if key in self.terms:
            cur, w = self.terms[key]
            cur += coeff
            if cur == 0:
                del self.terms[key]
            else:
                self.terms[key] = (cur, w)
        else:
            self.terms[key] = (coeff, web)

    def items(self):
        """(coefficient, web) pairs, deterministic order."""
        return [self.terms[k] for k in sorted(self.terms)]

    def total_mass(self):
        return sum((c for c, _ in self.terms.values()), Fraction(0))

    def __len__(self):
        return len(self.terms)

    def scaled(self, factor):
        out = WebCombination()
        for c, w in self.terms.values():
            out.add(c * Fraction(factor), w)
        return out

    def to_json(self):
        from .webs import web_to_json

        return [{"coeff": str(c), "web": web_to_json(w)} for c, w in self.items()]

    @classmethod
    def from_json(cls, data):
        from .webs import web_from_json

        out = cls()
        for item in data:
            out.add(Fraction(item["coeff"]), web_from_json(item["web"]))
        return out


def web_r(network: Network, lam) -> WebCombination:
    """Web_r(N; lambda): edge-weighted sum of the webs of all r-dimer covers."""
    lam = tuple(lam)
    r = _infer_r(network.graph, lam)
    combo = WebCombination()
    for cover in enumerate_dimer_covers(network.graph, r, lam):
        combo.add(edge_weight(network, cover), weblike_subgraph(cover))
    return combo


def web_r_twisted(network: Network, lam) -> WebCombination:
    """Web_r^tau(N; lambda): same sum with face weights evaluated at the
    boundary measurement point of N."""
    lam = tuple(lam)
    r = _infer_r(network.graph, lam)
    values = boundary_measurement(network)
    combo = WebCombination()
    for cover in enumerate_dimer_covers(network.graph, r, lam):
        fwt = face_weight(network.graph, cover)
        try:
            coeff = fwt.evaluate_pluckers(values)
        except PluckerError as exc:
            raise DimerError(f"twist undefined at this network: {exc}") from exc
        combo.add(coeff, weblike_subgraph(cover))
    return combo


def _infer_r(graph, lam):
    k = graph.type_k
    total = sum(lam)
    if k <= 0 or total % k:
        raise DimerError(f"|lambda| = {total} is not a multiple of the type {k}")
    return total // k
