"""Generator families used as benchmarks and fixtures."""

from __future__ import annotations

import random
from typing import Iterable, List, Optional, Sequence, Tuple

from .pauli import PauliString


def _x(n: int, j: int) -> PauliString:
    return PauliString(n, 1 << j, 0, 1)


def _z(n: int, qubits: Iterable[int]) -> PauliString:
    b = 0
    for j in qubits:
        b |= 1 << j
    return PauliString(n, 0, b, 1)


def qaoa_graph(n: int, edges: Sequence[Tuple[int, int]]) -> List[PauliString]:
    """iX_j for every vertex, then iZ_u Z_v for every edge (vertices 0-based)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = [_x(n, j) for j in range(n)]
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"bad edge ({u}, {v}) for n={n}")
        out.append(_z(n, (u, v)))
    return out


def qaoa_path(n: int) -> List[PauliString]:
    return qaoa_graph(n, [(j, j + 1) for j in range(n - 1)])


def qaoa_cycle(n: int) -> List[PauliString]:
    if n < 3:
        raise ValueError("a cycle needs n >= 3")
    return qaoa_graph(n, [(j, j + 1) for j in range(n - 1)] + [(0, n - 1)])


def parity_basis(n: int, subsets: Sequence[Iterable[int]]) -> List[PauliString]:
    """iX_j, iZ_j for every qubit plus iZ_S for each subset S (0-based qubits).

    iZ_S has Q = 1 for every S, so the extra strings are anti-Hermitian.
    """
    out = []
    for j in range(n):
        out += [_x(n, j), _z(n, (j,))]
    for s in subsets:
        s = list(s)
        if not s or any(not 0 <= j < n for j in s):
            raise ValueError(f"bad subset {s} for n={n}")
        out.append(_z(n, s))
    return out


def random_generators(n: int, m: int, rng: Optional[random.Random] = None) -> List[PauliString]:
    """m uniform anti-Hermitian Pauli strings on n qubits, none a multiple of the identity."""
    rng = rng or random.Random()
    out = []
    while len(out) < m:
        a, b = rng.getrandbits(n), rng.getrandbits(n)
        if a == 0 and b == 0:
            continue
        c = ((a & b).bit_count() + 1) & 1
        out.append(PauliString(n, a, b, c + 2 * rng.getrandbits(1)))
    return out
