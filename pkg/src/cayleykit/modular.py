"""Structures living inside Z_n: power orbits and tables on residue subsets."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NotClosed
from .magma import CayleyTable

ADD = "add"
MUL = "mul"


@dataclass(frozen=True)
class OrbitSummary:
    """Eventual periodicity of a, a^2, a^3, ... mod n.

    ``tail`` is the first exponent whose residue comes back, ``period`` the
    gap until it does, so a^(tail+period) = a^tail and ``residues`` lists
    a^1 .. a^(tail+period-1), all distinct.
    """

    base: int
    modulus: int
    tail: int
    period: int
    residues: tuple[int, ...]

    @property
    def cycle(self) -> tuple[int, ...]:
        return self.residues[self.tail - 1:]

    def power(self, k: int) -> int:
        """a^k mod n for k >= 1, read off the orbit."""
        if k < 1:
            raise ValueError("exponents start at 1")
        if k <= len(self.residues):
            return self.residues[k - 1]
        return self.residues[self.tail - 1 + (k - self.tail) % self.period]


def power_orbit(a: int, n: int) -> OrbitSummary:
    if n < 1:
        raise ValueError("modulus must be positive")
    a %= n
    first = {}
    residues = []
    x = a % n
    k = 1
    while x not in first:
        first[x] = k
        residues.append(x)
        x = x * a % n
        k += 1
    tail = first[x]
    return OrbitSummary(a, n, tail, k - tail, tuple(residues))


def _table(labels: list[int], n: int, law: str) -> CayleyTable:
    if law == ADD:
        f = lambda x, y: (x + y) % n  # noqa: E731
    elif law == MUL:
        f = lambda x, y: x * y % n  # noqa: E731
    else:
        raise ValueError(f"unknown law {law!r}")
    pos = {lab: i for i, lab in enumerate(labels)}
    body = []
    escaped = []
    for x in labels:
        row = []
        for y in labels:
            p = f(x, y)
            if p in pos:
                row.append(pos[p])
            else:
                escaped.append((x, y, p))
        body.append(tuple(row))
    if escaped:
        raise NotClosed(escaped, op="+" if law == ADD else "*")
    return CayleyTable(tuple(labels), tuple(body))


def generated_mul_semigroup(a: int, n: int) -> CayleyTable:
    """The cyclic semigroup {a, a^2, ...} inside (Z_n, *), in order of first appearance."""
    return _table(list(power_orbit(a, n).residues), n, MUL)


def zn_table(subset: Iterable[int], n: int, law: str = MUL) -> CayleyTable:
    """Cayley table of a residue subset under + or * mod n.

    Sets are laid out in ascending order; any other iterable keeps its order
    (duplicates dropped).
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    if isinstance(subset, (set, frozenset)):
        labels = sorted(subset)
    else:
        labels = list(dict.fromkeys(subset))
    if not labels:
        raise ValueError("empty subset")
    bad = [x for x in labels if not 0 <= x < n]
    if bad:
        raise ValueError(f"residues out of range [0, {n}): {bad}")
    return _table(labels, n, law)

