"""Linear algebra over GF(2) on int bitsets.

Vectors are plain Python ints: bit ``i`` is coordinate ``i``. CPython stores
ints as arrays of machine digits, so XOR/AND below are word-parallel and the
elimination loops cost O(rank) big-int operations per inserted vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple


def parity(x: int) -> int:
    return x.bit_count() & 1


def bits_of(x: int) -> List[int]:
    """Positions of the set bits of ``x`` in increasing order."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


@dataclass(frozen=True)
class QuadraticForm:
    """A quadratic form Q with polar form f on GF(2)^dim.

    Q(v) = sum_i v_i v_{i+shift} (i in ``pair_mask``) + parity(v & linear_mask),
    f(u, v) = sum_i (u_i v_{i+shift} + v_i u_{i+shift}).

    The Pauli space on n qubits uses pairs (j, n+j) and the radical
    coordinate 2n as the only linear term.
    """

    dim: int
    pair_mask: int
    shift: int
    linear_mask: int = 0

    @classmethod
    def pauli(cls, n: int) -> "QuadraticForm":
        return cls(dim=2 * n + 1, pair_mask=(1 << n) - 1, shift=n, linear_mask=1 << (2 * n))

    @classmethod
    def elliptic_sum(cls, pairs: int) -> "QuadraticForm":
        """Orthogonal sum of ``pairs`` elliptic planes on coordinates (2i, 2i+1)."""
        mask = int("01" * pairs, 2) if pairs else 0
        return cls(dim=2 * pairs, pair_mask=mask, shift=1, linear_mask=(1 << (2 * pairs)) - 1)

    @property
    def radical_mask(self) -> int:
        """Coordinates outside every f-pair; v is in Rad(f) iff v lies inside them."""
        paired = self.pair_mask | (self.pair_mask << self.shift)
        return ((1 << self.dim) - 1) & ~paired

    def in_radical(self, v: int) -> bool:
        return v & ~self.radical_mask == 0

    def f(self, u: int, v: int) -> int:
        s, m = self.shift, self.pair_mask
        return (((u & m) & (v >> s)) ^ ((v & m) & (u >> s))).bit_count() & 1

    def q(self, v: int) -> int:
        return (((v & self.pair_mask) & (v >> self.shift)).bit_count() + (v & self.linear_mask).bit_count()) & 1

    def gram(self, vectors: Sequence[int]) -> List[int]:
        """Gram matrix of f as bit rows: bit j of row i is f(v_i, v_j)."""
        s, m = self.shift, self.pair_mask
        lo = [v & m for v in vectors]
        hi = [(v >> s) & m for v in vectors]
        rows = [0] * len(vectors)
        for i in range(len(vectors)):
            li, hi_i = lo[i], hi[i]
            row = rows[i]
            for j in range(i + 1, len(vectors)):
                if ((li & hi[j]) ^ (lo[j] & hi_i)).bit_count() & 1:
                    row |= 1 << j
                    rows[j] |= 1 << i
            rows[i] = row
        return rows


class Echelon:
    """Incremental semi-echelon basis with lowest-bit pivots.

    Every stored row has a distinct pivot (its lowest set bit). Each row also
    carries a combination mask over the indices of the inserted vectors, so
    membership queries can return coordinates and dependent insertions yield
    kernel vectors.
    """

    def __init__(self, vectors: Iterable[int] = ()):
        self.rows: dict = {}
        self.combos: dict = {}
        self.basis: List[int] = []
        self.kernel: List[int] = []
        self._count = 0
        for v in vectors:
            self.add(v)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v: int, combo: int = 0) -> Tuple[int, int]:
        rows, combos = self.rows, self.combos
        while v:
            low = v & -v
            row = rows.get(low)
            if row is None:
                break
            v ^= row
            combo ^= combos[low]
        return v, combo

    def add(self, v: int) -> bool:
        """Insert ``v``; return True when it increased the rank."""
        idx = self._count
        self._count += 1
        r, combo = self._reduce(v, 1 << idx)
        if r:
            low = r & -r
            self.rows[low] = r
            self.combos[low] = combo
            self.basis.append(v)
            return True
        if v:
            self.kernel.append(combo)
        else:
            self.kernel.append(1 << idx)
        return False

    def contains(self, v: int) -> bool:
        return self._reduce(v)[0] == 0

    def coordinates(self, v: int) -> Optional[List[int]]:
        """Coefficients over the inserted vectors expressing ``v``, or None."""
        r, combo = self._reduce(v)
        if r:
            return None
        return [(combo >> i) & 1 for i in range(self._count)]

    def canonical(self, v: int) -> int:
        """Unique representative of the coset v + span (all pivot bits cleared)."""
        for low in sorted(self.rows):
            if v & low:
                v ^= self.rows[low]
        return v


def reduce(vectors: Sequence[int]) -> Echelon:
    return Echelon(vectors)


def rank(vectors: Iterable[int]) -> int:
    return Echelon(vectors).rank


def independent_subset(vectors: Sequence[int]) -> List[int]:
    """Indices of a maximal independent subset, greedy in input order."""
    ech = Echelon()
    return [i for i, v in enumerate(vectors) if ech.add(v)]


@dataclass
class HyperbolicBasis:
    """f-hyperbolic basis of a subspace: pairs (v_i, w_i) plus a basis of Rad(f)."""

    form: QuadraticForm
    pairs: List[Tuple[int, int]] = field(default_factory=list)
    radical: List[int] = field(default_factory=list)

    @property
    def pair_q(self) -> List[Tuple[int, int, int]]:
        q = self.form.q
        return [(q(v), q(w), q(v ^ w)) for v, w in self.pairs]

    @property
    def radical_q(self) -> List[int]:
        return [self.form.q(r) for r in self.radical]

    @property
    def dim(self) -> int:
        return 2 * len(self.pairs) + len(self.radical)

    def vectors(self) -> List[int]:
        out = []
        for v, w in self.pairs:
            out += [v, w]
        return out + list(self.radical)


def symplectic_gram_schmidt(vectors: Sequence[int], form: QuadraticForm) -> HyperbolicBasis:
    """Hyperbolic basis of span(vectors).

    The first unpaired vector in input order is paired with the first later
    vector it is not f-orthogonal to; both are then projected out of the
    remaining vectors. Vectors left without a partner lie in Rad(f_W).
    """
    f = form.f
    work = [v for v in vectors if v]
    pairs = []
    leftovers = []
    while work:
        v = work[0]
        partner = None
        for j in range(1, len(work)):
            if f(v, work[j]):
                partner = j
                break
        if partner is None:
            leftovers.append(v)
            work = work[1:]
            continue
        w = work[partner]
        pairs.append((v, w))
        rest = []
        for j in range(1, len(work)):
            if j == partner:
                continue
            u = work[j]
            if f(u, w):
                u ^= v
            if f(work[j], v):
                u ^= w
            if u:
                rest.append(u)
        work = rest
    ech = Echelon()
    radical = [r for r in leftovers if ech.add(r)]
    return HyperbolicBasis(form=form, pairs=pairs, radical=radical)


@dataclass(frozen=True)
class RadicalInfo:
    rad_f_dim: int
    rad_q_dim: int
    anisotropic: bool
    radical: Tuple[int, ...]

    @property
    def isotropic_radical(self) -> Tuple[int, ...]:
        """Basis of Rad(Q): the rebased radical minus its anisotropic vector."""
        if self.anisotropic:
            return tuple(r for r in self.radical[1:])
        return self.radical


def analyze_radical(h: HyperbolicBasis) -> RadicalInfo:
    """Dimensions of Rad(f) and Rad(Q) on the span of ``h``.

    Q is linear on Rad(f). When some radical vector is anisotropic the basis
    is rebased so that exactly one vector (moved to the front) has Q = 1.
    """
    q = h.form.q
    rad = list(h.radical)
    anchor = None
    for i, r in enumerate(rad):
        if q(r):
            anchor = i
            break
    if anchor is None:
        return RadicalInfo(len(rad), len(rad), False, tuple(rad))
    a = rad[anchor]
    rebased = [a] + [r ^ a if q(r) else r for i, r in enumerate(rad) if i != anchor]
    return RadicalInfo(len(rad), len(rad) - 1, True, tuple(rebased))


def pair_is_elliptic(qv: int, qw: int, qvw: int) -> bool:
    return qv == 1 and qw == 1 and qvw == 1


def space_type(h: HyperbolicBasis) -> str:
    """'+' or '-' for the nondegenerate part of span(h).

    Only defined when Q vanishes on Rad(f); otherwise the quotient by Rad(Q)
    is odd-dimensional and has no +/- type.
    """
    if analyze_radical(h).anisotropic:
        raise ValueError("space_type is undefined: the f-radical contains an anisotropic vector")
    elliptic = sum(pair_is_elliptic(*t) for t in h.pair_q)
    return "-" if elliptic % 2 else "+"


def nonsingular_count(dim: int, kind: str) -> int:
    """Number of vectors with Q = 1 in a nondegenerate space.

    kind is '+' or '-' for even ``dim``, 'odd' for odd ``dim`` (the single
    anisotropic radical vector excluded).
    """
    if kind == "odd":
        m = (dim - 1) // 2
        return 4 ** m - 1
    m = dim // 2
    if kind == "+":
        return 2 ** (2 * m - 1) - 2 ** (m - 1)
    return 2 ** (2 * m - 1) + 2 ** (m - 1)
