"""Frustration graphs, line graphs of multigraphs and root reconstruction.

Graphs are stored as a list of int bit-rows (bit j of row i set iff i ~ j).
The line graph convention is the one for multigraphs: two edge instances are
adjacent iff they share exactly one endpoint, so parallel edges are
non-adjacent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .gf2 import QuadraticForm, bits_of


@dataclass(frozen=True)
class Graph:
    m: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.m:
            raise ValueError("row count does not match vertex count")
        for i, row in enumerate(rows):
            if (row >> i) & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in bits_of(row):
                if j >= self.m or not (rows[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, m: int, edges) -> "Graph":
        rows = [0] * m
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(m, tuple(rows))

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def neighbors(self, i: int) -> List[int]:
        return bits_of(self.rows[i])

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(self.m) for j in bits_of(self.rows[i] >> (i + 1) << (i + 1))]

    def induced(self, vertices: Sequence[int]) -> "Graph":
        pos = {v: k for k, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in bits_of(self.rows[v]):
                if u in pos:
                    row |= 1 << pos[u]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    def adjacency_lists(self) -> List[List[int]]:
        return [self.neighbors(i) for i in range(self.m)]


@dataclass(frozen=True)
class MultiGraph:
    """Loopless multigraph; ``edges`` holds (u, v, multiplicity) with u < v."""

    k: int
    edges: Tuple[Tuple[int, int, int], ...]

    def __post_init__(self):
        for u, v, mult in self.edges:
            if u == v or mult < 1 or not (0 <= u < self.k and 0 <= v < self.k):
                raise ValueError(f"bad edge ({u}, {v}, {mult})")

    @classmethod
    def from_instances(cls, k: int, instances: Sequence[Tuple[int, int]]) -> "MultiGraph":
        counts: Dict[Tuple[int, int], int] = {}
        for u, v in instances:
            key = (min(u, v), max(u, v))
            counts[key] = counts.get(key, 0) + 1
        return cls(k, tuple((u, v, c) for (u, v), c in sorted(counts.items())))

    def instances(self) -> List[Tuple[int, int]]:
        out = []
        for u, v, mult in self.edges:
            out += [(u, v)] * mult
        return out


@dataclass
class RootCertificate:
    """A root multigraph with edge instance ``vertex_to_edge[i]`` for vertex i of the input."""

    root: MultiGraph
    vertex_to_edge: List[Tuple[int, int]] = field(default_factory=list)
    verified: bool = False


def frustration_graph(vectors: Sequence[int], form: QuadraticForm) -> Graph:
    """Graph of f on ``vectors``: i ~ j iff f(v_i, v_j) = 1."""
    return Graph(len(vectors), tuple(form.gram(vectors)))


def connected_components(g: Graph) -> List[List[int]]:
    seen = 0
    comps = []
    for s in range(g.m):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(bits_of(comp))
    return comps


def instance_line_graph(instances: Sequence[Tuple[int, int]], k: int) -> Graph:
    at = [0] * k
    for i, (u, v) in enumerate(instances):
        at[u] |= 1 << i
        at[v] |= 1 << i
    # instances at exactly one endpoint of (u, v); parallels sit at both
    return Graph(len(instances), tuple(at[u] ^ at[v] for u, v in instances))


def line_graph(d: MultiGraph) -> Tuple[Graph, List[Tuple[int, int]]]:
    order = d.instances()
    return instance_line_graph(order, d.k), order


def _bfs_order(g: Graph) -> List[int]:
    order = [0]
    seen = 1
    k = 0
    while k < len(order):
        for u in bits_of(g.rows[order[k]] & ~seen):
            seen |= 1 << u
            order.append(u)
        k += 1
    return order


def _simple_roots(h: Graph) -> List[List[Tuple[int, int]]]:
    """All simple graphs R (up to relabeling) with L(R) = h, h connected.

    Vertices are added in BFS order. A new vertex with processed neighbours N
    becomes an edge xy where x is an endpoint of some edge in N, the edges at
    x lie in N, and the edges at y are exactly the rest of N (y is a fresh
    vertex when nothing is left). Every consistent choice is kept; by
    Whitney's theorem only a bounded number survive.
    """
    order = _bfs_order(h)
    first = order[0]
    # state: (ends: dict vertex -> (x, y), inc: list of int masks of incident h-vertices)
    states = [({first: (0, 1)}, [1 << first, 1 << first])]
    processed = 1 << first
    for v in order[1:]:
        nbrs = h.rows[v] & processed
        out = {}
        for ends, inc in states:
            u = (nbrs & -nbrs).bit_length() - 1
            for x in ends[u]:
                ex = inc[x]
                if ex & ~nbrs:
                    continue
                rest = nbrs & ~ex
                if rest == 0:
                    ys = [len(inc)]
                else:
                    u2 = (rest & -rest).bit_length() - 1
                    ys = [y for y in ends[u2] if inc[y] == rest]
                for y in ys:
                    new_inc = list(inc)
                    if y == len(inc):
                        new_inc.append(0)
                    new_inc[x] |= 1 << v
                    new_inc[y] |= 1 << v
                    new_ends = dict(ends)
                    new_ends[v] = (x, y)
                    key = frozenset(new_inc)
                    if key not in out:
                        out[key] = (new_ends, new_inc)
        if not out:
            return []
        states = list(out.values())
        processed |= 1 << v
    roots = []
    for ends, inc in states:
        roots.append([ends[i] for i in range(h.m)])
    return roots


def _relabel(instances: List[Tuple[int, int]]) -> Tuple[int, List[Tuple[int, int]]]:
    """Number root vertices by first appearance; normalise each pair to u < v."""
    label: Dict[int, int] = {}
    out = []
    for u, v in instances:
        for x in (u, v):
            if x not in label:
                label[x] = len(label)
        a, b = label[u], label[v]
        out.append((min(a, b), max(a, b)))
    return len(label), out


def _fold_four(instances: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """Map a root on 4 vertices to one on 3 with the same line graph.

    Vertex 3 is removed: pairs avoiding it are kept, and {i, 3} becomes the
    complementary pair of {0, 1, 2} minus {i}, i.e. a parallel edge there.
    """
    out = []
    for u, v in instances:
        if v == 3:
            a, b = [x for x in (0, 1, 2) if x != u]
            out.append((a, b))
        else:
            out.append((u, v))
    return out


def recognize_root(g: Graph) -> Optional[RootCertificate]:
    """Root multigraph of a connected graph, or None if it is not a line graph.

    Non-adjacent vertices with equal neighbourhoods are collapsed to one
    (they become parallel edges), the collapsed graph is rooted as the line
    graph of a simple graph, classes are re-expanded, a 4-vertex root is
    folded to 3 vertices, and the result is checked by recomputing its line
    graph. The returned root never has exactly 4 vertices.
    """
    if g.m == 0:
        return None
    if g.m == 1:
        root = MultiGraph(2, ((0, 1, 1),))
        return RootCertificate(root, [(0, 1)], verified=True)
    classes: Dict[int, List[int]] = {}
    for i in range(g.m):
        classes.setdefault(g.rows[i], []).append(i)
    groups = sorted(classes.values())
    cls_of = [0] * g.m
    for c, members in enumerate(groups):
        for i in members:
            cls_of[i] = c
    h = g if len(groups) == g.m else g.induced([members[0] for members in groups])
    if len(connected_components(h)) != 1:
        return None
    candidates = _simple_roots(h)
    scored = []
    for cand in candidates:
        k, inst = _relabel([cand[cls_of[i]] for i in range(g.m)])
        scored.append((k == 4, k, inst))
    scored.sort()
    for _, k, inst in scored:
        if k == 4:
            inst = _fold_four(inst)
            k = 3
        lg = instance_line_graph(inst, k)
        if lg.rows == g.rows:
            return RootCertificate(MultiGraph.from_instances(k, inst), inst, verified=True)
    return None


def iso_small(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by backtracking; both graphs must have <= 8 vertices."""
    if g1.m > 8 or g2.m > 8:
        raise ValueError("iso_small handles at most 8 vertices")
    if g1.m != g2.m:
        return False
    m = g1.m
    d1 = [g1.degree(i) for i in range(m)]
    d2 = [g2.degree(i) for i in range(m)]
    if sorted(d1) != sorted(d2):
        return False
    order = sorted(range(m), key=lambda i: -d1[i])
    image = [-1] * m
    used = [False] * m

    def extend(pos: int) -> bool:
        if pos == m:
            return True
        u = order[pos]
        for w in range(m):
            if used[w] or d2[w] != d1[u]:
                continue
            ok = True
            for prev in order[:pos]:
                if g1.has_edge(u, prev) != g2.has_edge(w, image[prev]):
                    ok = False
                    break
            if ok:
                image[u] = w
                used[w] = True
                if extend(pos + 1):
                    return True
                used[w] = False
        image[u] = -1
        return False

    return extend(0)
