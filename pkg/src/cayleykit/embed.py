"""Groups sitting inside finite semigroups, and the special semigroup/monoid tests."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .closure import bits, closed_subsets
from .errors import NotAssociative, NotIdempotent, NotMonoid, TooLarge
from .magma import (
    CayleyTable,
    associativity_counterexample,
    classify_magma,
    identity_index,
)

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class GroupWitness:
    carrier: frozenset
    identity: int

    @property
    def order(self) -> int:
        return len(self.carrier)

    def sort_key(self):
        return (-self.order, sorted(self.carrier))


class Reason(enum.Enum):
    WITNESSED = "witnessed"
    IS_ALREADY_TARGET_KIND = "is already the target kind"
    NO_WITNESS = "no witness"
    NOT_PROPER = "not a proper subset"
    NOT_IDEAL = "not an ideal"
    AMBIENT_NOT_SPECIAL = "ambient ring is not special"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SpecialVerdict:
    special: bool
    witnesses: tuple
    reason: Reason

    def __post_init__(self):
        assert self.special == bool(self.witnesses)

    @property
    def witness(self):
        return self.witnesses[0] if self.witnesses else None


def _require_associative(t: CayleyTable):
    bad = associativity_counterexample(t)
    if bad is not None:
        raise NotAssociative(bad)


def _is_proper(carrier, labels, unit: Optional[int]) -> bool:
    # "proper": not empty, not everything, not just the unit element
    return 0 < len(carrier) < len(labels) and not (unit is not None and carrier == {unit})


def _max_subgroup(t: CayleyTable, e: int) -> GroupWitness:
    a = t.array
    local = np.unique(a[a[e, :], e])  # e*x*e
    sub = a[np.ix_(local, local)]
    has_inverse = ((sub == e) & (sub.T == e)).any(axis=1)
    L = t.labels
    return GroupWitness(frozenset(L[i] for i in local[has_inverse]), L[e])


def maximal_subgroup_at(t: CayleyTable, e: int) -> GroupWitness:
    """Largest subgroup of t whose identity is the idempotent label ``e``.

    These are the units of the local monoid eTe.
    """
    _require_associative(t)
    i = t.index(e)
    if t.entries[i][i] != i:
        raise NotIdempotent(f"{e}*{e} = {t.mul(e, e)}, not {e}")
    return _max_subgroup(t, i)


def embedded_groups(t: CayleyTable, min_order: int = 1) -> list[GroupWitness]:
    """One maximal subgroup per idempotent, largest first."""
    _require_associative(t)
    a = t.array
    found = []
    for i in np.flatnonzero(np.diagonal(a) == np.arange(t.size)):
        w = _max_subgroup(t, int(i))
        if w.order >= min_order:
            found.append(w)
    return sorted(found, key=GroupWitness.sort_key)


def _group_identity(rows, members: list[int]) -> Optional[int]:
    # identity of the induced operation on members if it is a group, else None
    for e in members:
        if all(rows[e][x] == x and rows[x][e] == x for x in members):
            break
    else:
        return None
    for x in members:
        if not any(rows[x][y] == e and rows[y][x] == e for y in members):
            return None
    return e


def brute_force_groups(t: CayleyTable, max_size: int, limit: int = BRUTE_FORCE_LIMIT) -> list[GroupWitness]:
    """Every subset of at most ``max_size`` elements forming a group.

    Exhaustive over all subsets of the carrier; refuses carriers above
    ``limit`` elements.
    """
    _require_associative(t)
    if t.size > limit:
        raise TooLarge(f"{t.size} elements exceeds the exhaustive limit of {limit}")
    rows = t.entries
    L = t.labels
    out = []
    for mask in closed_subsets([rows], t.size):
        members = bits(mask)
        if not members or len(members) > max_size:
            continue
        e = _group_identity(rows, members)
        if e is not None:
            out.append(GroupWitness(frozenset(L[i] for i in members), L[e]))
    return sorted(out, key=GroupWitness.sort_key)


def maximal_witnesses(witnesses) -> list:
    """Witnesses whose carrier is not strictly inside another one's."""
    ws = list(witnesses)
    return [w for w in ws if not any(w.carrier < v.carrier for v in ws)]


def _special(t: CayleyTable, min_order: int, exhaustive: bool, limit: int) -> SpecialVerdict:
    cls = classify_magma(t)
    if cls.kind.is_group:
        return SpecialVerdict(False, (), Reason.IS_ALREADY_TARGET_KIND)
    if exhaustive:
        pool = [w for w in brute_force_groups(t, t.size, limit)
                if w.order >= min_order and _is_proper(w.carrier, t.labels, cls.identity)]
        found = maximal_witnesses(pool)
    else:
        found = [w for w in embedded_groups(t, min_order)
                 if _is_proper(w.carrier, t.labels, cls.identity)]
    if not found:
        return SpecialVerdict(False, (), Reason.NO_WITNESS)
    return SpecialVerdict(True, tuple(found), Reason.WITNESSED)


def is_special_semigroup(t: CayleyTable, min_order: int = 2, *, exhaustive: bool = False,
                         limit: int = BRUTE_FORCE_LIMIT) -> SpecialVerdict:
    """A semigroup that is not a group but has a proper subset which is one.

    ``min_order`` sets the smallest group that counts; 1 admits the
    singleton {e} at any idempotent other than the unit. ``exhaustive``
    swaps the idempotent-based search for full subset enumeration.
    """
    _require_associative(t)
    return _special(t, min_order, exhaustive, limit)


def is_special_monoid(t: CayleyTable, min_order: int = 2, *, exhaustive: bool = False,
                      limit: int = BRUTE_FORCE_LIMIT) -> SpecialVerdict:
    _require_associative(t)
    if identity_index(t) is None:
        raise NotMonoid("table has no two-sided identity")
    return _special(t, min_order, exhaustive, limit)
