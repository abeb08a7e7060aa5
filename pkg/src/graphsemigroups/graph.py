"""Finite simple graphs, their Laplacian, and connectivity invariants.

Vertices are the integers ``0 .. n-1``.  A :class:`Graph` is immutable and
hashable, so it can key caches in the divisor modules.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import BadParameter, DisconnectedGraph, InputError


@dataclass(frozen=True)
class Graph:
    """Finite, simple, undirected graph on vertices ``0 .. n-1``.

    Parameters
    ----------
    n : int
        Number of vertices, at least 2.
    edges : iterable of pairs
        Unordered vertex pairs. Stored as a frozenset of ``(min, max)``.
    """

    n: int
    edges: frozenset
    adjacency: tuple = field(init=False, repr=False, compare=False)

    def __init__(self, n, edges=()):
        if not isinstance(n, int) or n < 2:
            raise BadParameter(f"graph needs n >= 2 vertices, got {n!r}")
        normalized = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {u}-{v} out of range for n={n}")
            normalized.add((min(u, v), max(u, v)))
        nbrs = [[] for _ in range(n)]
        for u, v in normalized:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normalized))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))

    def neighbors(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return len(self.adjacency[v])

    @property
    def degrees(self):
        return tuple(len(a) for a in self.adjacency)

    @property
    def num_edges(self):
        return len(self.edges)

    def sorted_edges(self):
        return sorted(self.edges)

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    def is_connected(self):
        return len(_reachable(self, 0, frozenset())) == self.n

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def _reachable(g, start, removed):
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in seen and w not in removed:
                seen.add(w)
                queue.append(w)
    return seen


def components(g, removed=frozenset()):
    """Connected components of ``g`` minus the vertex set ``removed``."""
    removed = frozenset(removed)
    left = [v for v in range(g.n) if v not in removed]
    seen = set()
    out = []
    for v in left:
        if v in seen:
            continue
        comp = _reachable(g, v, removed)
        seen |= comp
        out.append(frozenset(comp))
    return out


def require_connected(g):
    if not g.is_connected():
        raise DisconnectedGraph("graph is not connected")


def distances_from(g, source):
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


# --------------------------------------------------------------------------
# Laplacian, genus, canonical divisor


def build_laplacian(g):
    """Exact integer Laplacian ``D - A`` as a tuple of row tuples."""
    rows = []
    for v in range(g.n):
        row = [0] * g.n
        row[v] = g.degree(v)
        for w in g.adjacency[v]:
            row[w] = -1
        rows.append(tuple(row))
    return tuple(rows)


def genus(g):
    """Cycle rank ``|E| - |V| + 1`` of a connected graph."""
    require_connected(g)
    return g.num_edges - g.n + 1


def canonical_divisor(g):
    return tuple(d - 2 for d in g.degrees)


# --------------------------------------------------------------------------
# Connectivity


def edge_connectivity(g):
    """Global minimum edge cut via Stoer-Wagner on unit weights."""
    require_connected(g)
    weights = {v: {} for v in range(g.n)}
    for u, v in g.edges:
        weights[u][v] = 1
        weights[v][u] = 1
    best = None
    active = list(range(g.n))
    while len(active) > 1:
        # maximum adjacency ordering
        start = active[0]
        order = [start]
        attach = {v: weights[start].get(v, 0) for v in active if v != start}
        cut_of_phase = 0
        while attach:
            nxt = max(attach, key=lambda v: (attach[v], -v))
            cut_of_phase = attach.pop(nxt)
            order.append(nxt)
            for w, c in weights[nxt].items():
                if w in attach:
                    attach[w] += c
        s, t = order[-2], order[-1]
        if best is None or cut_of_phase < best:
            best = cut_of_phase
        # merge t into s
        for w, c in weights[t].items():
            if w == s:
                continue
            weights[s][w] = weights[s].get(w, 0) + c
            weights[w][s] = weights[w].get(s, 0) + c
            del weights[w][t]
        weights[s].pop(t, None)
        del weights[t]
        active.remove(t)
    return best


def vertex_connectivity(g, max_n=12):
    """Exact vertex connectivity by exhaustive vertex-subset removal.

    Exponential in ``n``; refuses graphs with more than ``max_n`` vertices.
    Complete graphs get ``n - 1`` by convention.
    """
    require_connected(g)
    if g.n > max_n:
        raise BadParameter(f"vertex_connectivity is brute force; n={g.n} > {max_n}")
    delta = min(g.degrees)
    for size in range(1, delta):
        for subset in itertools.combinations(range(g.n), size):
            if len(components(g, subset)) >= 2:
                return size
    # kappa <= lambda <= delta, and no smaller separator exists
    return delta


def algebraic_connectivity(g):
    """Second-smallest Laplacian eigenvalue."""
    require_connected(g)
    lap = np.array(build_laplacian(g), dtype=float)
    eig = np.linalg.eigvalsh(lap)
    return float(eig[1])


def cut_vertices(g):
    require_connected(g)
    return frozenset(v for v in range(g.n) if len(components(g, {v})) >= 2)


def components_of(g, v):
    """Vertex sets of the components of ``G - v``, sorted by least element."""
    return sorted(components(g, {v}), key=min)


@dataclass(frozen=True)
class ConnectivityReport:
    edge_connectivity: int
    vertex_connectivity: int
    min_degree: int
    algebraic_connectivity: float
    cut_vertices: frozenset
    components_after_removal: dict
    is_complete: bool = False

    def chain_holds(self, tol=1e-6):
        """Check ``lambda_2 <= kappa <= lambda <= delta``.

        The ``lambda_2 <= kappa`` leg is skipped for complete graphs, where
        ``lambda_2 = n > n - 1 = kappa``.
        """
        spectral = self.is_complete or self.algebraic_connectivity <= self.vertex_connectivity + tol
        return spectral and self.vertex_connectivity <= self.edge_connectivity <= self.min_degree

    def to_json(self):
        return {
            "edge_connectivity": self.edge_connectivity,
            "vertex_connectivity": self.vertex_connectivity,
            "min_degree": self.min_degree,
            "algebraic_connectivity": self.algebraic_connectivity,
            "cut_vertices": sorted(self.cut_vertices),
            "components_after_removal": {
                str(v): [sorted(c) for c in comps]
                for v, comps in sorted(self.components_after_removal.items())
            },
        }


def connectivity_report(g):
    cuts = cut_vertices(g)
    return ConnectivityReport(
        edge_connectivity=edge_connectivity(g),
        vertex_connectivity=vertex_connectivity(g),
        min_degree=min(g.degrees),
        algebraic_connectivity=algebraic_connectivity(g),
        cut_vertices=cuts,
        components_after_removal={v: components_of(g, v) for v in sorted(cuts)},
        is_complete=g.num_edges == g.n * (g.n - 1) // 2,
    )


# --------------------------------------------------------------------------
# Families


class Family(NamedTuple):
    """A generated graph together with its distinguished vertex ``P``."""

    graph: Graph
    P: int
    name: str


def _check(cond, msg):
    if not cond:
        raise BadParameter(msg)


def path(n):
    _check(n >= 2, "path needs n >= 2")
    return Family(Graph(n, [(i, i + 1) for i in range(n - 1)]), 0, f"path:{n}")


def star(n):
    """Star on ``n`` vertices: hub 0 joined to leaves ``1 .. n-1``."""
    _check(n >= 2, "star needs n >= 2")
    return Family(Graph(n, [(0, i) for i in range(1, n)]), 0, f"star:{n}")


def prufer_decode(seq, n):
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return edges


def random_tree(n, seed, rng=None):
    """Uniform labelled tree from a seeded Prufer sequence."""
    _check(n >= 2, "random_tree needs n >= 2")
    rng = rng or random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Family(Graph(n, prufer_decode(seq, n)), 0, f"random_tree:{n},{seed}")


def random_connected(n, seed, p=0.4, rng=None):
    """Seeded random tree plus each remaining pair added with probability ``p``."""
    _check(n >= 2, "random_connected needs n >= 2")
    rng = rng or random.Random(seed)
    tree = random_tree(n, seed, rng=rng).graph
    edges = set(tree.edges)
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < p:
            edges.add((u, v))
    return Family(Graph(n, edges), 0, f"random_connected:{n},{seed}")


def cycle(k):
    _check(k >= 3, "cycle needs k >= 3")
    return Family(Graph(k, [(i, (i + 1) % k) for i in range(k)]), 0, f"cycle:{k}")


def unicyclic(k, pendant_spec=()):
    """Cycle ``0 .. k-1`` with pendant vertices.

    ``pendant_spec[i]`` is the parent of new vertex ``k + i``; parents may be
    cycle vertices or earlier pendants, so arbitrary pendant trees can be
    grown.  ``P`` is the first degree-two cycle vertex, or 0 if none.
    """
    _check(k >= 3, "unicyclic needs a cycle of length >= 3")
    edges = [(i, (i + 1) % k) for i in range(k)]
    for i, parent in enumerate(pendant_spec):
        _check(0 <= parent < k + i, f"pendant parent {parent} not yet defined")
        edges.append((parent, k + i))
    g = Graph(k + len(pendant_spec), edges)
    P = next((v for v in range(k) if g.degree(v) == 2), 0)
    name = f"unicyclic:{k}" + "".join(f",{p}" for p in pendant_spec)
    return Family(g, P, name)


def complete(n):
    _check(n >= 2, "complete needs n >= 2")
    return Family(Graph(n, itertools.combinations(range(n), 2)), 0, f"complete:{n}")


def wheel(m):
    """Wheel with hub ``P = 0`` and rim cycle ``1 .. m``; ``n = m + 1``."""
    _check(m >= 3, "wheel needs a rim of length >= 3")
    edges = [(0, i) for i in range(1, m + 1)]
    edges += [(i, i % m + 1) for i in range(1, m + 1)]
    return Family(Graph(m + 1, edges), 0, f"wheel:{m}")


def bridged(g1, g2):
    """New vertex ``P = 0`` joined by one edge to vertex 0 of each part.

    ``g1`` and ``g2`` are graphs or generator spec strings; they occupy
    vertices ``1 .. n1`` and ``n1+1 .. n1+n2``.
    """
    parts = [from_spec(x).graph if isinstance(x, str) else x for x in (g1, g2)]
    edges = []
    offset = 1
    for part in parts:
        edges += [(u + offset, v + offset) for u, v in part.edges]
        edges.append((0, offset))
        offset += part.n
    names = [x if isinstance(x, str) else f"graph{x.n}" for x in (g1, g2)]
    return Family(Graph(offset, edges), 0, f"bridged:{names[0]},{names[1]}")


def clique_plus_pendant(m):
    """``K_m`` on ``0 .. m-1`` with pendant ``m`` attached to ``P = 0``."""
    _check(m >= 2, "clique_plus_pendant needs m >= 2")
    edges = list(itertools.combinations(range(m), 2)) + [(0, m)]
    return Family(Graph(m + 1, edges), 0, f"clique_plus_pendant:{m}")


def tree_canonical_form(g):
    """Isomorphism-invariant string of a tree (AHU encoding from its center)."""
    leaves = [v for v in range(g.n) if g.degree(v) <= 1]
    deg = list(g.degrees)
    remaining = g.n
    layer = leaves
    removed = set()
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            removed.add(v)
            for w in g.adjacency[v]:
                if w not in removed:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = [v for v in range(g.n) if v not in removed]

    def encode(v, parent):
        kids = sorted(encode(w, v) for w in g.adjacency[v] if w != parent)
        return "(" + "".join(kids) + ")"

    if len(centers) == 1:
        return encode(centers[0], -1)
    a, b = centers
    return min(encode(a, -1), encode(b, -1))


def all_trees(n):
    """One representative of every isomorphism class of trees on ``n`` vertices."""
    _check(n >= 2, "all_trees needs n >= 2")
    if n == 2:
        return [Family(Graph(2, [(0, 1)]), 0, "tree:2#0")]
    seen = {}
    for seq in itertools.product(range(n), repeat=n - 2):
        g = Graph(n, prufer_decode(seq, n))
        key = tree_canonical_form(g)
        if key not in seen:
            seen[key] = g
    return [Family(g, 0, f"tree:{n}#{i}") for i, (_, g) in enumerate(sorted(seen.items()))]


GENERATORS = {
    "path": path,
    "star": star,
    "random_tree": random_tree,
    "random_connected": random_connected,
    "cycle": cycle,
    "triangle": lambda: cycle(3),
    "unicyclic": lambda k, *pend: unicyclic(k, pend),
    "complete": complete,
    "wheel": wheel,
    "bridged": bridged,
    "clique_plus_pendant": clique_plus_pendant,
}


def from_spec(spec):
    """Build a family instance from ``name:arg,arg``.

    Examples: ``complete:4``, ``wheel:4``, ``unicyclic:4,0,0,5``,
    ``bridged:triangle,cycle:4``, ``random_tree:6,3``.
    """
    name, _, rest = spec.strip().partition(":")
    name = name.replace("-", "_")
    if name not in GENERATORS:
        raise BadParameter(f"unknown generator {name!r}; choose from {sorted(GENERATORS)}")
    if name == "bridged":
        a, sep, b = rest.partition(",")
        if not sep:
            raise BadParameter("bridged needs two comma-separated part specs")
        fam = bridged(a.strip(), b.strip())
        return fam._replace(name=f"bridged:{a.strip()},{b.strip()}")
    args = []
    if rest:
        try:
            args = [int(x) for x in rest.split(",")]
        except ValueError as exc:
            raise BadParameter(f"bad integer argument in {spec!r}") from exc
    try:
        fam = GENERATORS[name](*args)
    except TypeError as exc:
        raise BadParameter(f"wrong number of arguments for {name!r}") from exc
    return fam._replace(name=spec.strip())


# --------------------------------------------------------------------------
# Edge-list text format


def parse_edge_list(text):
    """Parse ``n`` on the first line then one ``u v`` pair per line.

    ``#`` starts a comment.  Loops and duplicate edges are rejected.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise InputError("empty edge list")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise InputError(f"first line must be the vertex count, got {lines[0]!r}") from exc
    edges = []
    seen = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise InputError(f"non-integer vertex in {line!r}") from exc
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


def format_edge_list(g):
    out = [str(g.n)]
    out += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(out) + "\n"
