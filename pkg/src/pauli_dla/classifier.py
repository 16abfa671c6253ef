"""Isomorphism type of the Lie algebra generated by a set of Pauli strings.

Pipeline: vectors in V, frustration graph, connected components; each
component is either the line graph of a multigraph on k vertices (a sum of
copies of so(k)) or not (a sum of copies of su, so or sp of a power of two,
read off from a hyperbolic basis of its span).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

from . import oracle
from .gf2 import (
    Echelon,
    QuadraticForm,
    analyze_radical,
    rank,
    space_type,
    symplectic_gram_schmidt,
)
from .graphs import RootCertificate, connected_components, frustration_graph, recognize_root
from .pauli import InvalidGeneratorError, PauliString, generator_vectors

SU, SO_POW2, SP, SO_N = "SU", "SO_POW2", "SP", "SO_N"

# closure is quadratic in its size; above this many predicted points the
# exact boundary test settles the 4 | k standard case instead
RESOLVE_CAP = 4096


def _pow2_text(k: int) -> str:
    return str(2**k) if k <= 20 else f"2^{k}"


@dataclass(frozen=True, order=True)
class Summand:
    """2^r copies of one simple (or abelian) algebra.

    SU k: su(2^k); SO_POW2 k: so(2^k); SP k: sp(2^(k-1)) inside su(2^k);
    SO_N k: so(k).
    """

    kind: str
    k: int
    r: int = 0

    @property
    def dimension(self) -> int:
        k = self.k
        if self.kind == SU:
            return 4**k - 1
        if self.kind == SO_POW2:
            return 2 ** (k - 1) * (2**k - 1)
        if self.kind == SP:
            return 2 ** (k - 1) * (2**k + 1)
        if self.kind == SO_N:
            return k * (k - 1) // 2
        raise ValueError(f"unknown summand kind {self.kind!r}")

    @property
    def copies(self) -> int:
        return 2**self.r

    @property
    def total_dim(self) -> int:
        return self.copies * self.dimension

    @property
    def name(self) -> str:
        if self.kind == SU:
            return f"su({_pow2_text(self.k)})"
        if self.kind == SO_POW2:
            return f"so({_pow2_text(self.k)})"
        if self.kind == SP:
            return f"sp({_pow2_text(self.k - 1)})"
        k = self.k
        if k > 2**20 and k & (k - 1) == 0:
            return f"so(2^{k.bit_length() - 1})"
        return f"so({k})"

    @property
    def label(self) -> str:
        if self.r == 0:
            return self.name
        if self.r <= 3:
            return " ⊕ ".join([self.name] * self.copies)
        return f"2^{self.r}·{self.name}"


@dataclass
class ComponentReport:
    generators: List[int]
    branch: str
    summand: Summand
    diagnostics: Dict[str, object] = field(default_factory=dict)
    vector_indices: List[int] = field(default_factory=list)


@dataclass
class Classification:
    components: List[ComponentReport]
    canonical: List[Summand]
    total_dim: int
    n: int = 0

    @property
    def label(self) -> str:
        return render(self.canonical)


def render(summands: Sequence[Summand], alias_abelian: bool = False) -> str:
    parts = []
    for s in summands:
        text = s.label
        if alias_abelian and s.kind == SO_N and s.k == 2:
            text = text.replace("so(2)", "u(1)")
        parts.append(text)
    return " ⊕ ".join(parts) if parts else "0"


def _rewrite(s: Summand) -> Summand:
    if s.kind == SO_N:
        if s.k == 3:
            return Summand(SU, 1, s.r)
        if s.k == 4:
            return Summand(SU, 1, s.r + 1)
        if s.k == 5:
            return Summand(SP, 2, s.r)
        if s.k == 6:
            return Summand(SU, 2, s.r)
    if s.kind == SP and s.k == 1:
        return Summand(SU, 1, s.r)
    if s.kind == SO_POW2:
        return Summand(SO_N, 2**s.k, s.r)
    return s


def canonicalize(c: Classification) -> Classification:
    """Apply so(3)=su(2), so(4)=2su(2), so(5)=sp(2), so(6)=su(4), sp(1)=su(2).

    so(2^k) is written as so(m) so that equal algebras get equal summands.
    """
    out = []
    for s in c.canonical:
        while True:
            t = _rewrite(s)
            if t == s:
                break
            s = t
        out.append(s)
    out.sort(key=lambda s: (-s.dimension, s.kind, s.k, s.r))
    return replace(c, canonical=out, total_dim=sum(s.total_dim for s in out))


def spanning_tree(instances: Sequence[Tuple[int, int]], k: int) -> List[int]:
    """Indices of a spanning tree, scanning edge instances in index order."""
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree = []
    for i, (u, v) in enumerate(instances):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            tree.append(i)
    return tree


def _quotient_embedding(vecs: Sequence[int], instances: Sequence[Tuple[int, int]], k: int) -> bool:
    """True when the points sit in the quotient of the standard embedding.

    In standard coordinates the generator of edge {a, b} is {a, b} plus a
    tag from the radical. The embedding is the quotient iff some relation
    sum_{e in F} v_e = 0 among the actual vectors has every root vertex of
    odd degree in F, i.e. iff the all-ones vector of the root lies in the
    image of the relation space under the boundary map.
    """
    ech = Echelon(vecs)
    boundaries = []
    for rel in ech.kernel:
        b = 0
        i = 0
        while rel:
            if rel & 1:
                u, v = instances[i]
                b ^= (1 << u) ^ (1 << v)
            rel >>= 1
            i += 1
        boundaries.append(b)
    return Echelon(boundaries).contains((1 << k) - 1)


def classify_line_component(
    vecs: Sequence[int], cert: RootCertificate, form: QuadraticForm, cap: int = RESOLVE_CAP
) -> ComponentReport:
    """so(k) summands for a component whose frustration graph is a line graph."""
    if not cert.verified:
        raise ValueError("root certificate is not verified")
    k = cert.root.k
    if k == 4:
        raise ValueError("root on 4 vertices must be folded first")
    inst = cert.vertex_to_edge
    tree = spanning_tree(inst, k)
    dim_w = rank(vecs)
    dim_w0 = rank([vecs[i] for i in tree])
    d = dim_w - dim_w0
    diag: Dict[str, object] = {
        "omega_size": k,
        "dim_W": dim_w,
        "dim_W0": dim_w0,
        "tree": tree,
        "resolved_by": "Formula",
    }
    r = d
    if k % 4 == 0 and dim_w0 == k - 1:
        tree_vecs = [vecs[i] for i in tree]
        info = analyze_radical(symplectic_gram_schmidt(tree_vecs, form))
        r0 = info.isotropic_radical[0]
        diag["r0"] = r0
        pairs = math.comb(k, 2)
        if pairs <= cap:
            s0 = oracle.enumerate_T(tree_vecs, k, form).as_set()
            diag["generator_in_r0_coset"] = any((v ^ r0) in s0 for v in vecs)
        predicted = pairs * 2**d
        resolved = False
        if predicted <= cap:
            try:
                size = len(oracle.closure(vecs, form, cap=2 * predicted))
            except oracle.ClosureCapExceeded:
                size = None
            if size is not None:
                ratio = size // pairs
                if size % pairs or ratio & (ratio - 1):
                    raise AssertionError(f"closure of size {size} is not C({k},2) times a power of two")
                r = ratio.bit_length() - 1
                diag["resolved_by"] = "Closure"
                resolved = True
        if not resolved:
            r = d + 1 if _quotient_embedding(vecs, inst, k) else d
    diag["omega_prime_size"] = r
    return ComponentReport([], "Line", Summand(SO_N, k, r), diag)


def classify_natural_component(vecs: Sequence[int], form: QuadraticForm) -> ComponentReport:
    """su/so/sp summands read off a hyperbolic basis of the span."""
    h = symplectic_gram_schmidt(vecs, form)
    info = analyze_radical(h)
    k = len(h.pairs)
    diag: Dict[str, object] = {
        "dim_W": h.dim,
        "rad_f_dim": info.rad_f_dim,
        "rad_q_dim": info.rad_q_dim,
        "resolved_by": "Formula",
    }
    if info.anisotropic:
        diag["form_type"] = "odd"
        summand = Summand(SU, k, info.rad_f_dim - 1)
    else:
        t = space_type(h)
        diag["form_type"] = t
        summand = Summand(SO_POW2 if t == "+" else SP, k, info.rad_f_dim)
    return ComponentReport([], "Natural", summand, diag)


def classify_vectors(vecs: Sequence[int], form: QuadraticForm, cap: int = RESOLVE_CAP) -> Classification:
    """Classify distinct generator vectors (points of NO(V, Q))."""
    if not vecs:
        raise InvalidGeneratorError("no generators given")
    for v in vecs:
        if form.in_radical(v):
            raise InvalidGeneratorError(f"{v:#x} lies in the radical of f")
        if form.q(v) != 1:
            raise InvalidGeneratorError(f"{v:#x} is not anti-Hermitian (Q = 0)")
    g = frustration_graph(vecs, form)
    reports = []
    for comp in connected_components(g):
        cvecs = [vecs[i] for i in comp]
        if len(comp) == 1:
            rep = ComponentReport([], "Isolated", Summand(SO_N, 2, 0), {"omega_size": 2, "omega_prime_size": 0, "dim_W": 1, "dim_W0": 1})
        else:
            cert = recognize_root(g.induced(comp))
            if cert is not None:
                rep = classify_line_component(cvecs, cert, form, cap)
            else:
                rep = classify_natural_component(cvecs, form)
        rep.vector_indices = list(comp)
        rep.generators = list(comp)
        reports.append(rep)
    raw = [r.summand for r in reports]
    c = Classification(reports, raw, sum(s.total_dim for s in raw), n=(form.dim - 1) // 2)
    return canonicalize(c)


def classify(generators: Sequence[PauliString], strict: bool = False, cap: int = RESOLVE_CAP) -> Classification:
    """Classify the Lie algebra generated by Pauli strings.

    Hermitian strings are lifted to i times themselves unless ``strict``;
    duplicates (equal up to sign) are merged. Component ``generators`` refer
    to positions in the input list.
    """
    vecs, first = generator_vectors(generators, strict)
    n = generators[0].n
    c = classify_vectors(vecs, QuadraticForm.pauli(n), cap)
    for rep in c.components:
        rep.generators = [first[i] for i in rep.vector_indices]
    return c


def equiv_classes(points: Sequence[int], form: QuadraticForm) -> List[List[int]]:
    """Partition points by p ~ q iff p + q lies in Rad(Q) of their span.

    Returns lists of indices into ``points``, ordered by first element.
    """
    info = analyze_radical(symplectic_gram_schmidt(points, form))
    rad = Echelon(info.isotropic_radical)
    classes: Dict[int, List[int]] = {}
    for i, p in enumerate(points):
        classes.setdefault(rad.canonical(p), []).append(i)
    return sorted(classes.values(), key=lambda c: c[0])


def _is_minus_six(vecs: Sequence[int], form: QuadraticForm) -> bool:
    h = symplectic_gram_schmidt(vecs, form)
    if len(h.pairs) != 3 or h.radical:
        return False
    return space_type(h) == "-"


def _connected(vecs: Sequence[int], form: QuadraticForm) -> bool:
    return len(connected_components(frustration_graph(vecs, form))) == 1


def forbidden_witness(vecs: Sequence[int], form: QuadraticForm) -> Optional[Tuple[int, ...]]:
    """Lexicographically first 6-subset generating NO(W, Q_W), W nondegenerate of minus type.

    The subset must be independent, have a connected frustration graph (a
    disconnected one generates a direct sum instead) and span a minus-type
    space. Depth-first over increasing index tuples; a branch is cut as soon
    as a chosen vector is dependent on the earlier ones.
    """
    m = len(vecs)
    if m < 6:
        return None

    def search(chosen: List[int], ech: Echelon, start: int) -> Optional[Tuple[int, ...]]:
        if len(chosen) == 6:
            six = [vecs[i] for i in chosen]
            return tuple(chosen) if _is_minus_six(six, form) and _connected(six, form) else None
        for i in range(start, m - (5 - len(chosen))):
            if ech.contains(vecs[i]):
                continue
            nxt = Echelon(ech.basis + [vecs[i]])
            hit = search(chosen + [i], nxt, i + 1)
            if hit is not None:
                return hit
        return None

    return search([], Echelon(), 0)


@dataclass
class FullGeneration:
    full: bool
    connected: bool
    spans: bool
    witness: bool
    classification: Classification


def check_generates_full(generators: Sequence[PauliString], n: Optional[int] = None, strict: bool = False) -> FullGeneration:
    """Whether the generators give all of su(2^n), with the three structural criteria."""
    n = generators[0].n if n is None else n
    vecs, _ = generator_vectors(generators, strict)
    form = QuadraticForm.pauli(n)
    c = classify_vectors(vecs, form)
    g = frustration_graph(vecs, form)
    comps = connected_components(g)
    connected = len(comps) == 1
    spans = rank(vecs) == 2 * n + 1
    if connected and len(vecs) <= 24:
        witness = forbidden_witness(vecs, form) is not None
    else:
        # the witness exists exactly on components that are not line graphs
        witness = any(len(cp) >= 6 and recognize_root(g.induced(cp)) is None for cp in comps)
    full = c.canonical == [Summand(SU, n, 0)]
    return FullGeneration(full, connected, spans, witness, c)
