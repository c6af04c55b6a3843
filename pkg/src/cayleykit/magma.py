"""Finite sets with one binary operation, stored as Cayley tables.

Elements are indices 0..size-1 internally; integer labels (residues, say)
are only used when tables are built or reported.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .closure import generating_set
from .errors import DuplicateLabel, EmptySubset, NotClosed, ShapeMismatch


@dataclass(frozen=True, eq=False)
class CayleyTable:
    labels: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.labels)
        if n < 1:
            raise ShapeMismatch("a table needs at least one element")
        seen = set()
        for lab in self.labels:
            if lab in seen:
                raise DuplicateLabel(lab)
            seen.add(lab)
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise ShapeMismatch(f"entries must be {n}x{n}")
        for row in self.entries:
            for v in row:
                if not 0 <= v < n:
                    raise ShapeMismatch(f"entry index {v} out of range")

    @property
    def size(self) -> int:
        return len(self.labels)

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.entries, dtype=np.intp).reshape(self.size, self.size)
        a.flags.writeable = False
        return a

    @cached_property
    def _index(self) -> dict[int, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: int) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"{label} is not an element of this table") from None

    def __contains__(self, label) -> bool:
        return label in self._index

    def mul(self, x: int, y: int) -> int:
        """Product of two labels, as a label."""
        return self.labels[self.entries[self.index(x)][self.index(y)]]

    def rows(self) -> list[list[int]]:
        """The table body in labels."""
        L = self.labels
        return [[L[v] for v in row] for row in self.entries]

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self.labels == other.labels and self.entries == other.entries

    def __hash__(self):
        return hash((self.labels, self.entries))

    def __repr__(self):
        return f"CayleyTable(labels={list(self.labels)}, rows={self.rows()})"


def new_table(labels: Sequence[int], entries: Sequence[Sequence[int]]) -> CayleyTable:
    """Build a table from labels and a body written in labels."""
    labels = tuple(int(x) for x in labels)
    if not labels:
        raise ShapeMismatch("no elements")
    index = {}
    for i, lab in enumerate(labels):
        if lab in index:
            raise DuplicateLabel(lab)
        index[lab] = i
    n = len(labels)
    if len(entries) != n or any(len(row) != n for row in entries):
        raise ShapeMismatch(f"expected a {n}x{n} body for {n} labels")
    body = []
    missing = []
    for i, row in enumerate(entries):
        out = []
        for j, v in enumerate(row):
            k = index.get(int(v))
            if k is None:
                missing.append((labels[i], labels[j], int(v)))
                k = 0
            out.append(k)
        body.append(tuple(out))
    if missing:
        raise NotClosed(missing)
    return CayleyTable(labels, tuple(body))


def from_indices(labels: Sequence[int], arr) -> CayleyTable:
    """Wrap an index matrix (list of lists or ndarray) without label translation."""
    return CayleyTable(tuple(int(x) for x in labels), tuple(tuple(int(v) for v in row) for row in arr))


# -- axioms -----------------------------------------------------------------

def associativity_counterexample(t: CayleyTable) -> Optional[tuple[int, int, int]]:
    """Return labels (x, y, z) with (xy)z != x(yz), or None.

    Light's test: it is enough to check every x, y against each middle
    element g of a generating set, since the set of middles that associate
    with everything is closed under the operation.
    """
    a = t.array
    for g in generating_set(t.entries):
        left = a[a[:, g], :]   # (x*g)*y
        right = a[:, a[g, :]]  # x*(g*y)
        bad = np.argwhere(left != right)
        if bad.size:
            x, y = bad[0]
            L = t.labels
            return L[x], L[g], L[y]
    return None


def is_associative(t: CayleyTable) -> bool:
    return associativity_counterexample(t) is None


def is_commutative(t: CayleyTable) -> bool:
    a = t.array
    return bool((a == a.T).all())


def identity_index(t: CayleyTable) -> Optional[int]:
    """Index of the two-sided identity, if there is one (it is unique)."""
    a = t.array
    r = np.arange(t.size)
    hits = np.flatnonzero((a == r[None, :]).all(axis=1) & (a == r[:, None]).all(axis=0))
    return int(hits[0]) if hits.size else None


def idempotent_indices(t: CayleyTable) -> list[int]:
    a = t.array
    return [int(i) for i in np.flatnonzero(np.diagonal(a) == np.arange(t.size))]


def _all_invertible(a: np.ndarray, e: int) -> bool:
    hit = a == e
    if not hit.any(axis=1).all():
        return False
    inv = hit.argmax(axis=1)
    return bool((a[inv, np.arange(len(a))] == e).all())


# -- classification -----------------------------------------------------------

class Kind(enum.Enum):
    MAGMA = "magma"
    SEMIGROUP = "semigroup"
    COMMUTATIVE_SEMIGROUP = "commutative semigroup"
    MONOID = "monoid"
    COMMUTATIVE_MONOID = "commutative monoid"
    GROUP = "group"
    ABELIAN_GROUP = "abelian group"

    def __str__(self):
        return self.value

    @property
    def is_group(self) -> bool:
        return self in (Kind.GROUP, Kind.ABELIAN_GROUP)


# (axiom level, commutativity axiom); Magma has neither associativity nor more
_AXIOMS = {
    Kind.MAGMA: (0, False),
    Kind.SEMIGROUP: (1, False),
    Kind.COMMUTATIVE_SEMIGROUP: (1, True),
    Kind.MONOID: (2, False),
    Kind.COMMUTATIVE_MONOID: (2, True),
    Kind.GROUP: (3, False),
    Kind.ABELIAN_GROUP: (3, True),
}


@dataclass(frozen=True)
class StructureClass:
    kind: Kind
    identity: Optional[int]
    idempotents: frozenset
    commutative: bool


def classify_magma(t: CayleyTable) -> StructureClass:
    """Strongest kind the table satisfies, with its identity and idempotents."""
    comm = is_commutative(t)
    e = identity_index(t)
    idem = frozenset(t.labels[i] for i in idempotent_indices(t))
    ident = t.labels[e] if e is not None else None
    if not is_associative(t):
        return StructureClass(Kind.MAGMA, ident, idem, comm)
    if e is None:
        kind = Kind.COMMUTATIVE_SEMIGROUP if comm else Kind.SEMIGROUP
    elif _all_invertible(t.array, e):
        kind = Kind.ABELIAN_GROUP if comm else Kind.GROUP
    else:
        kind = Kind.COMMUTATIVE_MONOID if comm else Kind.MONOID
    return StructureClass(kind, ident, idem, comm)


def is_refinement(c1: Kind, c2: Kind) -> bool:
    """True when c2 strictly refines c1: it keeps every axiom of c1 and adds at least one."""
    l1, k1 = _AXIOMS[c1]
    l2, k2 = _AXIOMS[c2]
    return l1 <= l2 and (k2 or not k1) and (l1, k1) != (l2, k2)


# -- substructures -------------------------------------------------------------

def restrict(t: CayleyTable, subset: Iterable[int]) -> CayleyTable:
    """Induced table on a closed subset, keeping the ambient carrier order."""
    want = set(subset)
    if not want:
        raise EmptySubset("empty subset")
    stray = want.difference(t.labels)
    if stray:
        raise ValueError(f"not elements of the table: {sorted(stray)}")
    idx = [i for i, lab in enumerate(t.labels) if lab in want]
    pos = {i: k for k, i in enumerate(idx)}
    body = []
    escaped = []
    for i in idx:
        row = []
        for j in idx:
            p = t.entries[i][j]
            if p not in pos:
                escaped.append((t.labels[i], t.labels[j], t.labels[p]))
            else:
                row.append(pos[p])
        body.append(tuple(row))
    if escaped:
        raise NotClosed(escaped)
    return CayleyTable(tuple(t.labels[i] for i in idx), tuple(body))
