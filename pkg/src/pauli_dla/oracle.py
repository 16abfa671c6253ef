"""Brute-force semantics used to check the classifier.

Everything here works directly on point sets of NO(V, Q): closure under
elliptic lines, the commutator graph, Cartan splits and the catalog of the
32 forbidden frustration graphs.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as _sparse_components

from .gf2 import Echelon, QuadraticForm
from .graphs import Graph, iso_small

DEFAULT_CAP = 10**6
_DENSE_BITS = 24


class ClosureCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ClosureSet:
    form: QuadraticForm
    points: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, v: int) -> bool:
        return v in self.as_set()

    @cached_property
    def members(self) -> frozenset:
        return frozenset(self.points)

    def as_set(self) -> frozenset:
        return self.members


@dataclass
class CartanSplit:
    functional: int
    l_part: List[int]
    m_part: List[int]
    valid: bool
    counterexample: Optional[Tuple[int, int]] = None


def _check_points(gens: Sequence[int], form: QuadraticForm) -> None:
    for v in gens:
        if form.q(v) != 1 or form.in_radical(v):
            raise ValueError(f"{v:#x} is not a point of NO(V, Q)")


def _np_parity(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x) & 1


def closure(gens: Sequence[int], form: QuadraticForm, cap: int = DEFAULT_CAP) -> ClosureSet:
    """Least set containing ``gens`` and closed under elliptic lines.

    Breadth-first: every point, once dequeued, is paired with all points
    found before it, and the third point of each line is appended.
    """
    _check_points(gens, form)
    points = list(dict.fromkeys(gens))
    if len(points) > cap:
        raise ClosureCapExceeded(f"closure exceeds cap {cap}")
    if form.dim <= 63:
        return ClosureSet(form, tuple(_closure_np(points, form, cap)))
    return ClosureSet(form, tuple(_closure_py(points, form, cap)))


def _closure_py(points: List[int], form: QuadraticForm, cap: int) -> List[int]:
    f = form.f
    seen = set(points)
    head = 0
    while head < len(points):
        u = points[head]
        for j in range(head):
            w = points[j]
            if f(u, w):
                x = u ^ w
                if x not in seen:
                    seen.add(x)
                    points.append(x)
                    if len(points) > cap:
                        raise ClosureCapExceeded(f"closure exceeds cap {cap}")
        head += 1
    return points


def _closure_np(points: List[int], form: QuadraticForm, cap: int) -> List[int]:
    P = np.uint64(form.pair_mask)
    s = np.uint64(form.shift)
    buf = np.zeros(max(64, 2 * len(points)), dtype=np.uint64)
    buf[: len(points)] = points
    size = len(points)
    dense = form.dim <= _DENSE_BITS
    if dense:
        table = np.zeros(1 << form.dim, dtype=bool)
        table[buf[:size]] = True
    else:
        seen = set(points)
    head = 0
    while head < size:
        u = buf[head]
        prev = buf[:head]
        mask = _np_parity(((u & P) & (prev >> s)) ^ ((prev & P) & (u >> s))).astype(bool)
        if mask.any():
            cand = u ^ prev[mask]
            if dense:
                cand = np.unique(cand)
                fresh = cand[~table[cand]]
                table[fresh] = True
            else:
                fresh_list = []
                for x in cand.tolist():
                    if x not in seen:
                        seen.add(x)
                        fresh_list.append(x)
                fresh = np.array(fresh_list, dtype=np.uint64)
            if len(fresh):
                if size + len(fresh) > cap:
                    raise ClosureCapExceeded(f"closure exceeds cap {cap}")
                if size + len(fresh) > len(buf):
                    grown = np.zeros(2 * (size + len(fresh)), dtype=np.uint64)
                    grown[:size] = buf[:size]
                    buf = grown
                buf[size : size + len(fresh)] = fresh
                size += len(fresh)
        head += 1
    return [int(x) for x in buf[:size]]


def _tree_order(vecs: Sequence[int], form: QuadraticForm) -> List[int]:
    """Order in which every vector after the first anticommutes with an earlier one."""
    order = [0]
    left = list(range(1, len(vecs)))
    while left:
        for pos, i in enumerate(left):
            if any(form.f(vecs[i], vecs[j]) for j in order):
                order.append(i)
                del left[pos]
                break
        else:
            raise ValueError("tree generators are not connected")
    return order


def enumerate_T(tree_gens: Sequence[int], k: int, form: QuadraticForm) -> ClosureSet:
    """Points generated by the edges of a spanning tree on ``k`` vertices.

    Edges are added so that each one hangs a new leaf on the current tree;
    adding edge e to S means adding e and e + v for every v in S with
    f(v, e) = 1. The result must have exactly C(k, 2) points.
    """
    _check_points(tree_gens, form)
    if k < 2 or len(tree_gens) != k - 1:
        raise ValueError(f"a spanning tree on {k} vertices has {k - 1} edges, got {len(tree_gens)}")
    pts: List[int] = []
    for i in _tree_order(tree_gens, form):
        e = tree_gens[i]
        pts = pts + [e] + [e ^ v for v in pts if form.f(v, e)]
    if len(set(pts)) != len(pts) or len(pts) != math.comb(k, 2):
        raise AssertionError(f"expected {math.comb(k, 2)} points, got {len(set(pts))}: input is not a tree")
    return ClosureSet(form, tuple(pts))


def commutator_graph(gens: Sequence[int], n: int) -> List[List[int]]:
    """Components of the commutator graph on all points of NO(V, Q), n <= 6.

    p ~ q iff q = p + g for a generator g with f(p, g) = 1.
    """
    if n > 6:
        raise ValueError("commutator_graph materialises 4^n - 1 points; n must be <= 6")
    form = QuadraticForm.pauli(n)
    _check_points(gens, form)
    allv = np.arange(1 << form.dim, dtype=np.uint64)
    P, s = np.uint64(form.pair_mask), np.uint64(form.shift)
    L = np.uint64(form.linear_mask)
    qv = (np.bitwise_count((allv & P) & (allv >> s)) + np.bitwise_count(allv & L)) & 1
    pts = allv[(qv == 1) & (allv != np.uint64(1 << (2 * n)))]
    index = np.full(1 << form.dim, -1, dtype=np.int64)
    index[pts] = np.arange(len(pts))
    rows, cols = [], []
    for g in gens:
        gg = np.uint64(g)
        anti = _np_parity(((pts & P) & (gg >> s)) ^ ((gg & P) & (pts >> s))).astype(bool)
        src = pts[anti]
        rows.append(index[src])
        cols.append(index[src ^ gg])
    if rows:
        r = np.concatenate(rows)
        c = np.concatenate(cols)
    else:
        r = c = np.zeros(0, dtype=np.int64)
    adj = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(len(pts), len(pts)))
    _, labels = _sparse_components(adj, directed=False)
    groups: Dict[int, List[int]] = {}
    for p, lab in zip(pts.tolist(), labels.tolist()):
        groups.setdefault(lab, []).append(p)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def cartan_split(points: Sequence[int], functional: int, form: QuadraticForm) -> CartanSplit:
    """Split a closed point set by the hyperplane ker(functional) and check it by exhaustion.

    Brackets of two points on the same side must land in the l part, mixed
    brackets in the m part.
    """
    pts = list(points)
    l_part = [p for p in pts if (p & functional).bit_count() % 2 == 0]
    m_part = [p for p in pts if (p & functional).bit_count() % 2 == 1]
    if pts and not l_part:
        warnings.warn("hyperplane does not meet the point set", stacklevel=2)
    l_set, m_set = set(l_part), set(m_part)
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            if not form.f(p, q):
                continue
            target = l_set if ((p in l_set) == (q in l_set)) else m_set
            if p ^ q not in target:
                return CartanSplit(functional, l_part, m_part, False, (p, q))
    return CartanSplit(functional, l_part, m_part, True)


@dataclass(frozen=True)
class ForbiddenGraph:
    graph: Graph
    basis: Tuple[int, ...]


def _minus_six_points() -> Tuple[QuadraticForm, List[int]]:
    form = QuadraticForm.elliptic_sum(3)
    return form, [v for v in range(1, 64) if form.q(v) == 1]


def _invariant(g: Graph) -> Tuple:
    degs = sorted(g.degree(i) for i in range(g.m))
    tri = sum(1 for i, j in g.edges() for k in range(j + 1, g.m) if g.has_edge(i, k) and g.has_edge(j, k))
    return (len(g.edges()), tuple(degs), tri)


@lru_cache(maxsize=1)
def _catalog() -> Tuple[ForbiddenGraph, ...]:
    form, pts = _minus_six_points()
    idx = {p: i for i, p in enumerate(pts)}
    adj = [sum(1 << idx[q] for q in pts if form.f(p, q)) for p in pts]
    # isometries act transitively on points, so every class has a basis through pts[0]
    labeled: Dict[Tuple[int, ...], Tuple[int, ...]] = {}

    def grow(chosen: List[int], ech: Echelon, start: int) -> None:
        if len(chosen) == 6:
            rows = tuple(sum(1 << b for b in range(6) if (adj[chosen[a]] >> chosen[b]) & 1) for a in range(6))
            labeled.setdefault(rows, tuple(pts[c] for c in chosen))
            return
        for c in range(start, len(pts)):
            trial = Echelon(ech.basis)
            if trial.add(pts[c]):
                grow(chosen + [c], trial, c + 1)

    first = Echelon([pts[0]])
    grow([0], first, 1)
    classes: Dict[Tuple, List[ForbiddenGraph]] = {}
    for rows, basis in sorted(labeled.items()):
        g = Graph(6, rows)
        if not g.is_connected():
            continue
        bucket = classes.setdefault(_invariant(g), [])
        if not any(iso_small(g, other.graph) for other in bucket):
            bucket.append(ForbiddenGraph(g, basis))
    out = [fg for key in sorted(classes) for fg in classes[key]]
    if len(out) != 32 or any(fg.graph.m != 6 or not fg.graph.is_connected() for fg in out):
        raise AssertionError(f"expected 32 connected forbidden graphs, found {len(out)}")
    return tuple(out)


def catalog_forbidden() -> List[Graph]:
    """The 32 connected frustration graphs of bases of a nondegenerate 6-space of minus type."""
    return [fg.graph for fg in _catalog()]


def catalog_realizations() -> List[ForbiddenGraph]:
    """Catalog graphs together with a basis (in the 6-bit model space) realizing each."""
    return list(_catalog())


def model_to_pauli(v: int) -> int:
    """Isometry of the 6-bit minus-type model space into V for n = 3.

    Coordinates (2j, 2j+1) go to the elliptic plane spanned by iX_j, iZ_j.
    """
    n = 3
    out = 0
    for j in range(3):
        if (v >> (2 * j)) & 1:
            out ^= (1 << j) | (1 << (2 * n))
        if (v >> (2 * j + 1)) & 1:
            out ^= (1 << (n + j)) | (1 << (2 * n))
    return out


@dataclass
class VerificationReport:
    passed: bool
    closure_size: Optional[int] = None
    total_dim: Optional[int] = None
    details: List[str] = field(default_factory=list)
    status: str = "verified"


def verify_classification(gens: Sequence[int], classification, form: QuadraticForm, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Check a Classification against brute-force closure.

    ``gens`` are the generator vectors in the order the classifier saw them
    (component reports index into it). Checks: total size equals total
    dimension; per component, every equivalence class has 2^r points and
    the number of classes is the simple summand's dimension; every generator
    lies in the closure.
    """
    from .classifier import equiv_classes

    rep = VerificationReport(passed=True, total_dim=classification.total_dim)
    try:
        full = closure(gens, form, cap)
    except ClosureCapExceeded:
        return VerificationReport(passed=False, total_dim=classification.total_dim, status="unverified",
                                  details=[f"closure exceeds cap {cap}"])
    rep.closure_size = len(full)
    if len(full) != classification.total_dim:
        rep.passed = False
        rep.details.append(f"dimension mismatch: classified {classification.total_dim} != closure {len(full)}")
    members = full.as_set()
    for v in gens:
        if v not in members:
            rep.passed = False
            rep.details.append(f"generator {v:#x} missing from closure")
    for ci, comp in enumerate(classification.components):
        vecs = [gens[i] for i in comp.vector_indices]
        part = closure(vecs, form, cap)
        classes = equiv_classes(list(part.points), form)
        sizes = {len(c) for c in classes}
        s = comp.summand
        if len(part) != s.total_dim:
            rep.passed = False
            rep.details.append(f"component {ci}: closure {len(part)} != {s.total_dim} for {s.label}")
        if sizes != {s.copies}:
            rep.passed = False
            rep.details.append(f"component {ci}: class sizes {sorted(sizes)} != copies {s.copies}")
        if len(classes) != s.dimension:
            rep.passed = False
            rep.details.append(f"component {ci}: {len(classes)} classes != dim {s.label} = {s.dimension}")
    if not rep.passed:
        rep.status = "mismatch"
    return rep
