"""Finite rings given by an addition table and a multiplication table.

Rings here need not have a multiplicative unity (the multiples of 6 mod 60
don't), so "ring" means rng unless a unity is found.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .closure import bits, closed_subsets, to_mask
from .embed import BRUTE_FORCE_LIMIT, Reason, SpecialVerdict, _is_proper
from .errors import (
    AddNotAbelianGroup,
    MulNotAssociative,
    NotClosed,
    NotDistributive,
    ShapeMismatch,
    TooLarge,
)
from .magma import (
    CayleyTable,
    Kind,
    associativity_counterexample,
    classify_magma,
    identity_index,
    is_commutative,
    new_table,
    restrict,
)
from .modular import ADD, MUL, zn_table

MAX_SUBGROUPS = 4096


@dataclass(frozen=True)
class RingTable:
    add: CayleyTable
    mul: CayleyTable
    zero: int

    @property
    def labels(self) -> tuple[int, ...]:
        return self.add.labels

    @property
    def size(self) -> int:
        return self.add.size


def _distributivity_counterexample(add: CayleyTable, mul: CayleyTable):
    A, M = add.array, mul.array
    n = len(A)
    step = max(1, 2_000_000 // (n * n))
    MT = M.T
    for lo in range(0, n, step):
        xs = slice(lo, min(n, lo + step))
        # x*(y+z) against x*y + x*z
        lhs = M[xs][:, A]
        rhs = A[M[xs][:, :, None], M[xs][:, None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            x, y, z = bad[0]
            return (lo + x, y, z), "left"
        # (y+z)*x against y*x + z*x
        lhs = MT[xs][:, A]
        rhs = A[MT[xs][:, :, None], MT[xs][:, None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            x, y, z = bad[0]
            return (lo + x, y, z), "right"
    return None


def ring_from_tables(add: CayleyTable, mul: CayleyTable) -> RingTable:
    """Check the ring axioms on two tables over the same carrier."""
    if add.labels != mul.labels:
        raise ShapeMismatch("addition and multiplication tables have different carriers")
    cls = classify_magma(add)
    if cls.kind is not Kind.ABELIAN_GROUP:
        raise AddNotAbelianGroup(f"addition is only a {cls.kind}")
    bad = associativity_counterexample(mul)
    if bad is not None:
        raise MulNotAssociative(bad)
    hit = _distributivity_counterexample(add, mul)
    if hit is not None:
        (x, y, z), side = hit
        L = add.labels
        raise NotDistributive((L[x], L[y], L[z]), side)
    return RingTable(add, mul, cls.identity)


def new_ring(labels: Sequence[int], add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]]) -> RingTable:
    return ring_from_tables(new_table(labels, add), new_table(labels, mul))


def zn_ring(n: int, divisor: int = 1) -> RingTable:
    """The multiples of ``divisor`` in Z_n, with + and * mod n."""
    if n < 1 or divisor < 1 or n % divisor:
        raise ValueError(f"divisor {divisor} does not divide {n}")
    carrier = list(range(0, n, divisor))
    return ring_from_tables(zn_table(carrier, n, ADD), zn_table(carrier, n, MUL))


def restrict_ring(rt: RingTable, subset: Iterable[int]) -> RingTable:
    subset = set(subset)
    try:
        add = restrict(rt.add, subset)
    except NotClosed as exc:
        raise NotClosed(exc.offenders, op="+") from None
    return RingTable(add, restrict(rt.mul, subset), rt.zero)


# -- classification -------------------------------------------------------------

class RingKind(enum.Enum):
    RNG = "rng"
    COMMUTATIVE_RNG = "commutative rng"
    UNITAL_RING = "unital ring"
    COMMUTATIVE_UNITAL_RING = "commutative unital ring"
    FIELD = "field"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class RingClass:
    kind: RingKind
    unity: Optional[int]
    commutative: bool


def classify_ring(rt: RingTable) -> RingClass:
    comm = is_commutative(rt.mul)
    u = identity_index(rt.mul)
    if u is None:
        return RingClass(RingKind.COMMUTATIVE_RNG if comm else RingKind.RNG, None, comm)
    unity = rt.labels[u]
    M = rt.mul.array
    z = rt.add.index(rt.zero)
    nonzero = np.arange(rt.size) != z
    if comm and rt.size >= 2 and (M[nonzero] == u).any(axis=1).all():
        return RingClass(RingKind.FIELD, unity, comm)
    kind = RingKind.COMMUTATIVE_UNITAL_RING if comm else RingKind.UNITAL_RING
    return RingClass(kind, unity, comm)


# -- embedded fields -----------------------------------------------------------

@dataclass(frozen=True)
class FieldWitness:
    carrier: frozenset
    zero: int
    unity: int

    @property
    def order(self) -> int:
        return len(self.carrier)

    @property
    def identity(self) -> int:
        return self.unity

    def sort_key(self):
        return (-self.order, sorted(self.carrier))


def additive_subgroups(rt: RingTable, max_count: int = MAX_SUBGROUPS) -> list[int]:
    """All subgroups of (carrier, +) as index bitsets.

    Every subgroup of a finite abelian group is a sum of cyclic subgroups,
    so the lattice is grown from {0} by adding one cyclic subgroup at a time.
    """
    A = rt.add.array
    z = rt.add.index(rt.zero)
    cyclic = {}
    for x in range(rt.size):
        orbit = [z]
        y = x
        while y != z:
            orbit.append(y)
            y = int(A[y, x])
        cyclic.setdefault(to_mask(orbit), np.array(orbit))
    start = 1 << z
    seen = {start}
    frontier = [start]
    while frontier:
        h = frontier.pop()
        hidx = np.array(bits(h))
        for c, cidx in cyclic.items():
            if not c & ~h:
                continue
            k = to_mask(np.unique(A[np.ix_(hidx, cidx)]).tolist())
            if k not in seen:
                seen.add(k)
                if len(seen) > max_count:
                    raise TooLarge(f"more than {max_count} additive subgroups")
                frontier.append(k)
    return sorted(seen)


def embedded_fields(rt: RingTable, max_candidates: int = MAX_SUBGROUPS) -> list[FieldWitness]:
    """Proper subsets of the ring that are fields under the same + and *, largest first."""
    u = identity_index(rt.mul)
    unit = rt.labels[u] if u is not None else None
    M = rt.mul.array
    L = rt.labels
    found = []
    for h in additive_subgroups(rt, max_candidates):
        idx = bits(h)
        carrier = frozenset(L[i] for i in idx)
        if len(idx) < 2 or not _is_proper(carrier, L, unit):
            continue
        inside = np.zeros(rt.size, dtype=bool)
        inside[idx] = True
        if not inside[M[np.ix_(idx, idx)]].all():
            continue
        sub = restrict_ring(rt, carrier)
        cls = classify_ring(sub)
        if cls.kind is RingKind.FIELD:
            found.append(FieldWitness(carrier, rt.zero, cls.unity))
    return sorted(found, key=FieldWitness.sort_key)


def _field_unity(add, mul, z: int, members: list[int]) -> Optional[int]:
    # direct scan of the field axioms not inherited from the ambient ring
    if len(members) < 2:
        return None
    for u in members:
        if all(mul[u][x] == x and mul[x][u] == x for x in members):
            break
    else:
        return None
    if u == z:
        return None
    for x in members:
        for y in members:
            if mul[x][y] != mul[y][x]:
                return None
        if x != z and not any(mul[x][y] == u for y in members):
            return None
    return u


def brute_force_fields(rt: RingTable, limit: int = BRUTE_FORCE_LIMIT) -> list[FieldWitness]:
    """Exhaustive counterpart of :func:`embedded_fields` over all subsets of the carrier."""
    if rt.size > limit:
        raise TooLarge(f"{rt.size} elements exceeds the exhaustive limit of {limit}")
    add, mul = rt.add.entries, rt.mul.entries
    L = rt.labels
    z = rt.add.index(rt.zero)
    u = identity_index(rt.mul)
    unit = L[u] if u is not None else None
    found = []
    for mask in closed_subsets([add, mul], rt.size):
        members = bits(mask)
        carrier = frozenset(L[i] for i in members)
        if not _is_proper(carrier, L, unit):
            continue
        one = _field_unity(add, mul, z, members)
        if one is not None:
            found.append(FieldWitness(carrier, rt.zero, L[one]))
    return sorted(found, key=FieldWitness.sort_key)


# -- ideals and the special predicates -----------------------------------------------

def is_ideal(ambient: RingTable, subset: Iterable[int]) -> bool:
    """Additive subgroup absorbing multiplication from both sides."""
    subset = set(subset)
    if not subset or not subset <= set(ambient.labels):
        return False
    idx = [ambient.add.index(x) for x in subset]
    inside = np.zeros(ambient.size, dtype=bool)
    inside[idx] = True
    A, M = ambient.add.array, ambient.mul.array
    if not inside[A[np.ix_(idx, idx)]].all():
        return False
    return bool(inside[M[:, idx]].all() and inside[M[idx, :]].all())


def is_special_ring(rt: RingTable, *, exhaustive: bool = False, limit: int = BRUTE_FORCE_LIMIT) -> SpecialVerdict:
    """A ring that is not a field but has a proper subset which is one."""
    if classify_ring(rt).kind is RingKind.FIELD:
        return SpecialVerdict(False, (), Reason.IS_ALREADY_TARGET_KIND)
    found = brute_force_fields(rt, limit) if exhaustive else embedded_fields(rt)
    if not found:
        return SpecialVerdict(False, (), Reason.NO_WITNESS)
    return SpecialVerdict(True, tuple(found), Reason.WITNESSED)


def is_special_subring(ambient: RingTable, subset: Iterable[int], **kw) -> SpecialVerdict:
    """``subset`` is a special ring lying properly inside the special ring ``ambient``."""
    subset = set(subset)
    stray = subset.difference(ambient.labels)
    if stray:
        raise ValueError(f"not elements of the ring: {sorted(stray)}")
    u = identity_index(ambient.mul)
    unit = ambient.labels[u] if u is not None else None
    if not _is_proper(subset, ambient.labels, unit):
        return SpecialVerdict(False, (), Reason.NOT_PROPER)
    inner = is_special_ring(restrict_ring(ambient, subset), **kw)
    if not inner.special:
        return inner
    if not is_special_ring(ambient, **kw).special:
        return SpecialVerdict(False, (), Reason.AMBIENT_NOT_SPECIAL)
    return inner


def is_special_ideal(ambient: RingTable, subset: Iterable[int], **kw) -> SpecialVerdict:
    """An ideal of ``ambient`` that is not a field but properly contains one."""
    subset = set(subset)
    if not is_ideal(ambient, subset):
        return SpecialVerdict(False, (), Reason.NOT_IDEAL)
    return is_special_ring(restrict_ring(ambient, subset), **kw)
