"""Bigraphs, bipartite quivers, and the dictionary between them.

A *bigraph* is a pair of simple undirected graphs (Gamma, Delta) on one
common vertex set, sharing no edges, with every edge joining vertices of
opposite color eps in {0, 1}.  A *quiver* is a directed multigraph without
loops or directed 2-cycles.  Directing the Gamma edges from color 0 to
color 1 and the Delta edges from color 1 to color 0 turns a bigraph into a
bipartite quiver; the translation is invertible on simple quivers.

Vertex ids are opaque strings.  All iteration is in sorted id order so
every derived object (matrices, JSON, dumps) is reproducible byte for
byte.  Instances are immutable; all operations return new values.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache


class BigraphFormatError(ValueError):
    """Invalid bigraph data.  `code` is a stable machine-readable tag."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


def _norm_edge(u: str, v: str) -> tuple[str, str]:
    if u == v:
        raise BigraphFormatError("SELF_LOOP", f"edge ({u},{v}) is a loop")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Bigraph:
    """Immutable bigraph.  Use `Bigraph.make` which validates invariants."""

    eps: tuple[tuple[str, int], ...]          # sorted (vertex, color) pairs
    gamma: frozenset[tuple[str, str]]         # normalized undirected edges
    delta: frozenset[tuple[str, str]]

    @staticmethod
    def make(eps: dict[str, int],
             gamma: 'set[tuple[str, str]] | list',
             delta: 'set[tuple[str, str]] | list') -> "Bigraph":
        g = frozenset(_norm_edge(u, v) for u, v in gamma)
        d = frozenset(_norm_edge(u, v) for u, v in delta)
        if len(g) != len(list(gamma)) or len(d) != len(list(delta)):
            raise BigraphFormatError("DUPLICATE_EDGE", "repeated edge in one color")
        shared = g & d
        if shared:
            raise BigraphFormatError("SHARED_EDGE", f"edges in both colors: {sorted(shared)}")
        for u, v in g | d:
            if u not in eps or v not in eps:
                raise BigraphFormatError("UNKNOWN_VERTEX", f"edge ({u},{v}) uses undeclared vertex")
            if eps[u] == eps[v]:
                raise BigraphFormatError("MONOCHROME_EDGE", f"edge ({u},{v}) joins two color-{eps[u]} vertices")
        for v, e in eps.items():
            if e not in (0, 1):
                raise BigraphFormatError("BAD_COLOR", f"eps[{v}] = {e}")
        return Bigraph(tuple(sorted(eps.items())), g, d)

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.eps)

    def color(self, v: str) -> int:
        return self.eps_map[v]

    @property
    def eps_map(self) -> dict[str, int]:
        return dict(self.eps)

    def gamma_neighbors(self, v: str) -> tuple[str, ...]:
        return _adjacency(self)[0][v]

    def delta_neighbors(self, v: str) -> tuple[str, ...]:
        return _adjacency(self)[1][v]

    def to_json(self) -> str:
        payload = {
            "vertices": [{"id": v, "eps": e} for v, e in self.eps],
            "gamma": [list(e) for e in sorted(self.gamma)],
            "delta": [list(e) for e in sorted(self.delta)],
        }
        return json.dumps(payload, indent=2, sort_keys=False)


@lru_cache(maxsize=512)
def _adjacency(g: Bigraph):
    ga = {v: [] for v in g.vertices}
    da = {v: [] for v in g.vertices}
    for u, v in g.gamma:
        ga[u].append(v)
        ga[v].append(u)
    for u, v in g.delta:
        da[u].append(v)
        da[v].append(u)
    return ({v: tuple(sorted(ns)) for v, ns in ga.items()},
            {v: tuple(sorted(ns)) for v, ns in da.items()})


def bigraph_from_json(text: str) -> Bigraph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BigraphFormatError("BAD_JSON", str(exc)) from exc
    try:
        raw_vertices = payload["vertices"]
        gamma = [tuple(e) for e in payload["gamma"]]
        delta = [tuple(e) for e in payload["delta"]]
    except (KeyError, TypeError) as exc:
        raise BigraphFormatError("BAD_SCHEMA", f"missing field: {exc}") from exc
    eps: dict[str, int] = {}
    for entry in raw_vertices:
        vid = entry["id"]
        if vid in eps:
            raise BigraphFormatError("DUPLICATE_ID", f"vertex id {vid!r} repeated")
        eps[vid] = entry["eps"]
    return Bigraph.make(eps, gamma, delta)


@dataclass(frozen=True)
class Quiver:
    """Directed multigraph without loops or 2-cycles; arrows form a multiset."""

    vertex_set: tuple[str, ...]
    arrows: tuple[tuple[str, str], ...]       # sorted multiset of (src, dst)

    @staticmethod
    def make(vertices, arrows) -> "Quiver":
        vs = tuple(sorted(set(vertices)))
        vset = set(vs)
        counts = Counter(tuple(a) for a in arrows)
        for (u, v), _ in counts.items():
            if u == v:
                raise ValueError(f"loop at {u}")
            if u not in vset or v not in vset:
                raise ValueError(f"arrow ({u},{v}) uses undeclared vertex")
            if counts.get((v, u)):
                raise ValueError(f"2-cycle between {u} and {v}")
        return Quiver(vs, tuple(sorted(counts.elements())))

    def arrow_counts(self) -> Counter:
        return Counter(self.arrows)

    def reversed(self) -> "Quiver":
        return Quiver(self.vertex_set, tuple(sorted((v, u) for u, v in self.arrows)))


def quiver_from_bigraph(g: Bigraph) -> Quiver:
    """Direct Gamma edges 0->1 and Delta edges 1->0."""
    eps = g.eps_map
    arrows = []
    for u, v in g.gamma:
        arrows.append((u, v) if eps[u] == 0 else (v, u))
    for u, v in g.delta:
        arrows.append((u, v) if eps[u] == 1 else (v, u))
    return Quiver.make(g.vertices, arrows)


def bigraph_from_quiver(q: Quiver, eps: dict[str, int]) -> Bigraph:
    """Inverse of `quiver_from_bigraph` for the given bipartition."""
    check_bipartition(q, eps)
    counts = q.arrow_counts()
    if any(c > 1 for c in counts.values()):
        raise BigraphFormatError("MULTI_ARROW", "bigraphs are simple; arrow multiplicity > 1")
    gamma, delta = [], []
    for u, v in counts:
        (gamma if eps[u] == 0 else delta).append((u, v))
    return Bigraph.make(eps, gamma, delta)


def check_bipartition(q: Quiver, eps: dict[str, int]) -> None:
    for v in q.vertex_set:
        if eps.get(v) not in (0, 1):
            raise ValueError(f"no color for vertex {v}")
    for u, v in q.arrows:
        if eps[u] == eps[v]:
            raise ValueError(f"arrow ({u},{v}) joins two color-{eps[u]} vertices")


def find_bipartition(q: Quiver) -> dict[str, int]:
    """2-color the underlying graph (least vertex of each component gets 0)."""
    adj: dict[str, set[str]] = {v: set() for v in q.vertex_set}
    for u, v in q.arrows:
        adj[u].add(v)
        adj[v].add(u)
    eps: dict[str, int] = {}
    for start in q.vertex_set:
        if start in eps:
            continue
        eps[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in sorted(adj[u]):
                if w not in eps:
                    eps[w] = 1 - eps[u]
                    stack.append(w)
                elif eps[w] == eps[u]:
                    raise ValueError("quiver is not bipartite")
    return eps


def mutate(q: Quiver, v: str) -> Quiver:
    """Quiver mutation at v: compose paths through v, reverse at v, cancel 2-cycles."""
    if v not in q.vertex_set:
        raise ValueError(f"unknown vertex {v}")
    counts = q.arrow_counts()
    new = Counter()
    for (u, w), c in counts.items():
        if u == v or w == v:
            new[(w, u)] += c              # reverse arrows incident to v
        else:
            new[(u, w)] += c
    into = [(u, c) for (u, w), c in counts.items() if w == v]
    outof = [(w, c) for (u, w), c in counts.items() if u == v]
    for u, cu in into:
        for w, cw in outof:
            new[(u, w)] += cu * cw        # one new arrow per path u -> v -> w
    for (u, w) in list(new):
        if u < w and new.get((w, u)):
            k = min(new[(u, w)], new[(w, u)])
            new[(u, w)] -= k
            new[(w, u)] -= k
    arrows = tuple(sorted(Counter({a: c for a, c in new.items() if c}).elements()))
    return Quiver(q.vertex_set, arrows)


def mutate_color(q: Quiver, eps: dict[str, int], color: int) -> Quiver:
    """Mutate simultaneously at every vertex of the given color.

    Vertices of one color are pairwise non-adjacent in a bipartite quiver,
    so the composition order does not matter.
    """
    check_bipartition(q, eps)
    out = q
    for v in q.vertex_set:
        if eps[v] == color:
            out = mutate(out, v)
    return out


def is_recurrent(q: Quiver, eps: dict[str, int]) -> bool:
    """True iff mutating either color class only reverses all arrows."""
    rev = q.reversed()
    return mutate_color(q, eps, 0) == rev and mutate_color(q, eps, 1) == rev


def adjacency_matrix(edges, order: tuple[str, ...]) -> list[list[int]]:
    index = {v: i for i, v in enumerate(order)}
    n = len(order)
    mat = [[0] * n for _ in range(n)]
    for u, v in edges:
        mat[index[u]][index[v]] += 1
        mat[index[v]][index[u]] += 1
    return mat


def commutator(g: Bigraph) -> list[list[int]]:
    """A_Gamma A_Delta - A_Delta A_Gamma in sorted vertex order; zero iff recurrent."""
    order = g.vertices
    a = adjacency_matrix(g.gamma, order)
    b = adjacency_matrix(g.delta, order)
    n = len(order)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai, bi = a[i], b[i]
        for j in range(n):
            s = 0
            for k in range(n):
                s += ai[k] * b[k][j] - bi[k] * a[k][j]
            out[i][j] = s
    return out


def is_zero_matrix(mat: list[list[int]]) -> bool:
    return all(all(x == 0 for x in row) for row in mat)


def connected_components(vertices, edges) -> list[tuple[str, ...]]:
    """Components of an undirected graph, each sorted, listed by least vertex."""
    adj: dict[str, set[str]] = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen: set[str] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps
