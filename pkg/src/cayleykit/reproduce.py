"""Re-derive the mod-60 worked examples and compare them to stored golden files.

The golden files in ``fixtures/`` were typed in by hand from the printed
tables and stated results; nothing in them is generated by this package.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Optional

from .embed import is_special_semigroup
from .formats import format_table
from .magma import restrict
from .modular import generated_mul_semigroup, power_orbit
from .rings import classify_ring, is_special_ring, restrict_ring, zn_ring

A, N = 18, 60


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    expected: Any
    actual: Any


def _table_text(path: Path) -> str:
    keep = [" ".join(line.split()) for line in path.read_text(encoding="utf-8").splitlines()
            if line.strip() and not line.lstrip().startswith("#")]
    return "\n".join(keep) + "\n"


def _json(path: Path) -> dict:
    return json.loads(path.read_text(encoding="utf-8"))


def _sg_powers() -> set[int]:
    orbit = power_orbit(A, N)
    return {orbit.power(k) for k in range(2, 6)}


def check_sg_table(d: Path):
    actual = format_table(restrict(generated_mul_semigroup(A, N), _sg_powers()))
    return _table_text(d / "sg.tbl"), actual


def check_ss_table(d: Path):
    return _table_text(d / "ss.tbl"), format_table(generated_mul_semigroup(A, N))


def check_orbit(d: Path):
    want = _json(d / "orbit.json")
    o = power_orbit(A, N)
    return want, {"a": o.base, "n": o.modulus, "residues": list(o.residues), "tail": o.tail, "period": o.period}


def check_field_m(d: Path):
    want = _json(d / "field_m.json")
    m = restrict_ring(zn_ring(N), _sg_powers() | {0})
    cls = classify_ring(m)
    return want, {"n": N, "carrier": sorted(m.labels), "kind": str(cls.kind), "zero": m.zero, "unity": cls.unity}


def check_special_ring(d: Path):
    want = _json(d / "special_ring.json")
    sr = zn_ring(N, 6)
    v = is_special_ring(sr)
    return want, {"n": N, "carrier": list(sr.labels), "special": v.special,
                  "witnesses": [sorted(w.carrier) for w in v.witnesses]}


def check_special_semigroup(d: Path):
    want = _json(d / "special_semigroup.json")
    want = {**want, "witness": sorted(want["witness"])}
    v = is_special_semigroup(generated_mul_semigroup(A, N), 2)
    w = v.witness
    return want, {"a": A, "n": N, "special": v.special,
                  "witness": sorted(w.carrier) if w else None, "identity": w.identity if w else None}


CHECKS: list[tuple[str, Callable]] = [
    ("sg-table", check_sg_table),
    ("ss-table", check_ss_table),
    ("orbit-18-60", check_orbit),
    ("field-m", check_field_m),
    ("special-ring-sr", check_special_ring),
    ("special-semigroup-ss", check_special_semigroup),
]


def default_fixtures() -> Path:
    return Path(str(resources.files("cayleykit") / "fixtures"))


def verify_paper(fixtures: Optional[Path] = None) -> list[CheckResult]:
    d = Path(fixtures) if fixtures is not None else default_fixtures()
    out = []
    for name, fn in CHECKS:
        try:
            expected, actual = fn(d)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            out.append(CheckResult(name, False, f"unreadable golden file: {exc}", None))
            continue
        out.append(CheckResult(name, expected == actual, expected, actual))
    return out
