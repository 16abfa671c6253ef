"""Pauli strings, their phases, and the quadratic space V = Pi_n / {+1, -1}.

A Pauli string on n qubits is stored as ``i^c * prod_j X_j^{a_j} Z_j^{b_j}``
with ``a``, ``b`` int bitsets (qubit ``j`` at bit ``j``, qubit 1 is bit 0) and
``c`` taken mod 4. The letter Y is ``iXZ``.

Its image in V is the (2n+1)-bit int ``a | b << n | (c mod 2) << 2n``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .gf2 import QuadraticForm

_PHASES = {"": 0, "+": 0, "i": 1, "+i": 1, "-": 2, "-i": 3}
_PHASE_TEXT = ["", "i", "-", "-i"]


class PauliError(ValueError):
    """Malformed Pauli string input."""


class InvalidGeneratorError(ValueError):
    """A Pauli string that cannot serve as a Lie algebra generator."""


@dataclass(frozen=True)
class PauliString:
    n: int
    a: int
    b: int
    c: int = 0

    def __post_init__(self):
        mask = (1 << self.n) - 1
        if self.n < 1 or self.a & ~mask or self.b & ~mask:
            raise PauliError(f"bit masks do not fit {self.n} qubits")
        object.__setattr__(self, "c", self.c % 4)

    def __mul__(self, other: "PauliString") -> "PauliString":
        return multiply(self, other)

    def __str__(self) -> str:
        return render_pauli(self)

    @property
    def square_sign(self) -> int:
        """+1 or -1 with p*p = square_sign * identity."""
        return -1 if ((self.a & self.b).bit_count() + self.c) & 1 else 1

    @property
    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 0


@dataclass(frozen=True)
class PauliVector:
    """Image of a Pauli string in V; ``bits`` laid out as (a | b | r)."""

    n: int
    bits: int

    @property
    def a(self) -> int:
        return self.bits & ((1 << self.n) - 1)

    @property
    def b(self) -> int:
        return (self.bits >> self.n) & ((1 << self.n) - 1)

    @property
    def r(self) -> int:
        return (self.bits >> (2 * self.n)) & 1

    @property
    def q(self) -> int:
        return QuadraticForm.pauli(self.n).q(self.bits)

    def coords(self) -> Tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(2 * self.n + 1))

    def __add__(self, other: "PauliVector") -> "PauliVector":
        _check_n(self, other)
        return PauliVector(self.n, self.bits ^ other.bits)

    def __str__(self) -> str:
        c = self.coords()
        n = self.n
        return "({}|{}|{})".format("".join(map(str, c[:n])), "".join(map(str, c[n : 2 * n])), c[2 * n])


def _check_n(p, q):
    if p.n != q.n:
        raise ValueError(f"qubit counts differ: {p.n} != {q.n}")


def parse_pauli(text: str, n: Optional[int] = None) -> PauliString:
    """Parse e.g. ``"XYZ"``, ``"-iZZ"`` or ``"i.X."``; '.' is accepted for I."""
    s = text.strip()
    k = 0
    while k < len(s) and s[k] in "+-i":
        k += 1
    prefix, word = s[:k], s[k:]
    if prefix not in _PHASES:
        raise PauliError(f"bad phase prefix {prefix!r} in {text!r}")
    if not word:
        raise PauliError(f"empty Pauli word in {text!r}")
    if n is None:
        n = len(word)
    elif len(word) > n:
        raise PauliError(f"{text!r} has {len(word)} letters, more than n={n}")
    a = b = 0
    c = _PHASES[prefix]
    for j, ch in enumerate(word.upper()):
        if ch in "I.":
            continue
        if ch == "X":
            a |= 1 << j
        elif ch == "Z":
            b |= 1 << j
        elif ch == "Y":
            a |= 1 << j
            b |= 1 << j
            c += 1
        else:
            raise PauliError(f"unknown letter {ch!r} in {text!r}")
    return PauliString(n, a, b, c)


def render_pauli(p: PauliString) -> str:
    letters = []
    ys = 0
    for j in range(p.n):
        x, z = (p.a >> j) & 1, (p.b >> j) & 1
        if x and z:
            letters.append("Y")
            ys += 1
        else:
            letters.append("X" if x else "Z" if z else "I")
    return _PHASE_TEXT[(p.c - ys) % 4] + "".join(letters)


def multiply(p: PauliString, q: PauliString) -> PauliString:
    _check_n(p, q)
    # moving Z^{b_p} past X^{a_q} costs (-1)^{b_p . a_q}
    c = p.c + q.c + 2 * (p.b & q.a).bit_count()
    return PauliString(p.n, p.a ^ q.a, p.b ^ q.b, c)


def anticommute(p: PauliString, q: PauliString) -> bool:
    _check_n(p, q)
    return bool(((p.a & q.b).bit_count() + (p.b & q.a).bit_count()) & 1)


def commutator(p: PauliString, q: PauliString) -> Optional[PauliString]:
    """The bracket (pq - qp)/2: ``pq`` if p, q anticommute, else None."""
    if anticommute(p, q):
        return multiply(p, q)
    return None


def to_vector(p: PauliString) -> PauliVector:
    return PauliVector(p.n, p.a | (p.b << p.n) | ((p.c & 1) << (2 * p.n)))


def from_vector(v: PauliVector) -> PauliString:
    return PauliString(v.n, v.a, v.b, v.r)


def eval_forms(u: PauliVector, v: PauliVector) -> Tuple[int, int, int]:
    """(f(u, v), Q(u), Q(v))."""
    _check_n(u, v)
    form = QuadraticForm.pauli(u.n)
    return form.f(u.bits, v.bits), form.q(u.bits), form.q(v.bits)


def generator_vector(p: PauliString, strict: bool = False) -> int:
    """Vector of ``p`` as a generator of a subalgebra of su(2^n).

    Hermitian strings (Q = 0) are multiplied by i, with a warning, unless
    ``strict`` is set. Multiples of the identity are rejected.
    """
    if p.is_identity:
        raise InvalidGeneratorError(f"{render_pauli(p)} is a multiple of the identity")
    v = to_vector(p).bits
    if QuadraticForm.pauli(p.n).q(v) == 0:
        if strict:
            raise InvalidGeneratorError(f"{render_pauli(p)} is Hermitian; use i*{render_pauli(p)}")
        warnings.warn(f"lifting Hermitian {render_pauli(p)} to i*{render_pauli(p)}", stacklevel=3)
        v ^= 1 << (2 * p.n)
    return v


def generator_vectors(paulis: Sequence[PauliString], strict: bool = False) -> Tuple[List[int], List[int]]:
    """Deduplicated generator vectors and, for each, the first input index."""
    if not paulis:
        raise InvalidGeneratorError("no generators given")
    n = paulis[0].n
    seen = {}
    for i, p in enumerate(paulis):
        if p.n != n:
            raise ValueError(f"qubit counts differ: {n} != {p.n}")
        v = generator_vector(p, strict)
        seen.setdefault(v, i)
    return list(seen), list(seen.values())


def parse_many(tokens: Iterable[str], n: Optional[int] = None) -> List[PauliString]:
    words = list(tokens)
    if n is None:
        n = max(len(w.lstrip("+-i")) for w in words)
    return [parse_pauli(w, n) for w in words]
