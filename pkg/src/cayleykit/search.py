"""Batch scans over Z_n for special semigroups, rings and ideals.

Findings are written one JSON object per line with a fixed key order, so two
scans of the same range produce byte-identical files whatever the worker
count.
"""
from __future__ import annotations

import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from .embed import BRUTE_FORCE_LIMIT, is_special_semigroup
from .errors import InvalidSpec, SinkFailure
from .magma import classify_magma
from .modular import generated_mul_semigroup
from .rings import classify_ring, is_special_ideal, is_special_ring, restrict_ring, zn_ring

SEMIGROUP = "special-semigroup"
RING = "special-ring"
IDEAL = "special-ideal"
KINDS = (SEMIGROUP, RING, IDEAL)

WORD_MAX = 2**63 - 1


@dataclass(frozen=True)
class SearchSpec:
    kind: str
    n_range: tuple[int, int]
    a_range: Optional[tuple[int, int]] = None
    min_group_order: int = 2
    exhaustive: bool = False
    max_size: int = BRUTE_FORCE_LIMIT  # carrier bound for the exhaustive finders

    def validate(self):
        if self.kind not in KINDS:
            raise InvalidSpec(f"unknown scan kind {self.kind!r}")
        lo, hi = self.n_range
        if not 1 <= lo <= hi <= WORD_MAX:
            raise InvalidSpec(f"bad modulus range {lo}..{hi}")
        if self.a_range is not None:
            lo, hi = self.a_range
            if not 0 <= lo <= hi <= WORD_MAX:
                raise InvalidSpec(f"bad generator range {lo}..{hi}")
        if self.min_group_order < 1:
            raise InvalidSpec("min_group_order must be at least 1")
        if self.max_size < 1:
            raise InvalidSpec("max_size must be positive")


@dataclass(frozen=True)
class Finding:
    kind: str
    n: int
    param: str  # "a" (generator) or "d" (divisor)
    value: int
    carrier: tuple[int, ...]
    witness: tuple[int, ...]
    witness_identity: int
    classification: str

    def sort_key(self):
        return (self.n, self.value)

    def to_record(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            self.param: self.value,
            "carrier": list(self.carrier),
            "witness": list(self.witness),
            "witness_identity": self.witness_identity,
            "classification": self.classification,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "Finding":
        param = "a" if "a" in rec else "d"
        return cls(rec["kind"], rec["n"], param, rec[param], tuple(rec["carrier"]),
                   tuple(rec["witness"]), rec["witness_identity"], rec["classification"])


def _finding(kind, n, param, value, carrier, verdict, classification) -> Finding:
    w = verdict.witness
    return Finding(kind, n, param, value, tuple(sorted(carrier)), tuple(sorted(w.carrier)),
                   w.identity, str(classification))


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n) if n % d == 0]


def _semigroups_at(n: int, spec: SearchSpec) -> list[Finding]:
    lo, hi = spec.a_range if spec.a_range is not None else (0, n - 1)
    out = []
    for a in range(lo, min(hi, n - 1) + 1):
        t = generated_mul_semigroup(a, n)
        v = is_special_semigroup(t, spec.min_group_order, exhaustive=spec.exhaustive, limit=spec.max_size)
        if v.special:
            out.append(_finding(SEMIGROUP, n, "a", a, t.labels, v, classify_magma(t).kind))
    return out


def _rings_at(n: int, spec: SearchSpec) -> list[Finding]:
    out = []
    for d in _divisors(n):
        rt = zn_ring(n, d)
        v = is_special_ring(rt, exhaustive=spec.exhaustive, limit=spec.max_size)
        if v.special:
            out.append(_finding(RING, n, "d", d, rt.labels, v, classify_ring(rt).kind))
    return out


def _ideals_at(n: int, spec: SearchSpec) -> list[Finding]:
    out = []
    if n < 2:
        return out
    whole = zn_ring(n)
    for d in _divisors(n):
        carrier = range(0, n, d)
        v = is_special_ideal(whole, carrier, exhaustive=spec.exhaustive, limit=spec.max_size)
        if v.special:
            kind = classify_ring(restrict_ring(whole, carrier)).kind
            out.append(_finding(IDEAL, n, "d", d, carrier, v, kind))
    return out


_SCANNERS = {SEMIGROUP: _semigroups_at, RING: _rings_at, IDEAL: _ideals_at}


def _scan_one(job) -> list[Finding]:
    n, spec = job
    return _SCANNERS[spec.kind](n, spec)


def scan(spec: SearchSpec, workers: int = 1) -> list[Finding]:
    """Run a scan over spec.n_range; ``workers > 1`` farms moduli out to processes."""
    spec.validate()
    lo, hi = spec.n_range
    jobs = [(n, spec) for n in range(lo, hi + 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        parts = [_scan_one(j) for j in jobs]
    found = [f for part in parts for f in part]
    found.sort(key=Finding.sort_key)
    return found


def _expect(spec: SearchSpec, kind: str):
    if spec.kind != kind:
        raise InvalidSpec(f"expected a {kind} spec, got {spec.kind!r}")


def scan_special_semigroups(spec: SearchSpec, workers: int = 1) -> list[Finding]:
    _expect(spec, SEMIGROUP)
    return scan(spec, workers)


def scan_special_rings(spec: SearchSpec, workers: int = 1) -> list[Finding]:
    _expect(spec, RING)
    return scan(spec, workers)


def scan_special_ideals(spec: SearchSpec, workers: int = 1) -> list[Finding]:
    _expect(spec, IDEAL)
    return scan(spec, workers)


def reverify(f: Finding, min_group_order: int = 2) -> bool:
    """Recompute the finding from (kind, n, a/d) and compare every field."""
    spec = SearchSpec(f.kind, (f.n, f.n), (f.value, f.value) if f.param == "a" else None,
                      min_group_order=min_group_order)
    if f.kind == SEMIGROUP:
        again = _semigroups_at(f.n, spec)
    else:
        again = [g for g in _SCANNERS[f.kind](f.n, spec) if g.value == f.value]
    return again == [f]


def encode_findings(findings: Iterable[Finding]) -> bytes:
    return b"".join(
        json.dumps(f.to_record(), separators=(",", ":")).encode("utf-8") + b"\n" for f in findings)


def emit_findings(findings: Iterable[Finding], sink) -> int:
    """Write findings as JSON lines to a binary (or text) sink; returns the count."""
    findings = list(findings)
    data = encode_findings(findings)
    try:
        if isinstance(sink, io.TextIOBase):
            sink.write(data.decode("utf-8"))
        else:
            sink.write(data)
        sink.flush()
    except (OSError, ValueError) as exc:
        raise SinkFailure(f"could not write findings: {exc}") from exc
    return len(findings)


def read_findings(data: bytes | str) -> list[Finding]:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return [Finding.from_record(json.loads(line)) for line in data.splitlines() if line.strip()]
