import io
import json

import pytest

from cayleykit import InvalidSpec, SinkFailure
from cayleykit.search import (
    IDEAL,
    RING,
    SEMIGROUP,
    Finding,
    SearchSpec,
    emit_findings,
    encode_findings,
    read_findings,
    reverify,
    scan,
    scan_special_ideals,
    scan_special_rings,
    scan_special_semigroups,
)

KEYS_A = ["kind", "n", "a", "carrier", "witness", "witness_identity", "classification"]


def test_semigroup_scan_finds_18_mod_60():
    found = scan_special_semigroups(SearchSpec(SEMIGROUP, (60, 60), (2, 59)))
    hit = [f for f in found if f.value == 18]
    assert len(hit) == 1
    f = hit[0]
    assert f.n == 60 and f.param == "a"
    assert f.carrier == (12, 18, 24, 36, 48)
    assert f.witness == (12, 24, 36, 48) and f.witness_identity == 36
    assert f.classification == "commutative semigroup"


def test_semigroup_scan_small_moduli_empty():
    assert scan_special_semigroups(SearchSpec(SEMIGROUP, (2, 3))) == []


def test_semigroup_scan_generator_range_outside_modulus():
    assert scan_special_semigroups(SearchSpec(SEMIGROUP, (60, 60), (70, 80))) == []


def test_ring_scan_60():
    found = scan_special_rings(SearchSpec(RING, (60, 60)))
    f = next(f for f in found if f.value == 6)
    assert f.param == "d" and f.witness == (0, 12, 24, 36, 48) and f.witness_identity == 36
    assert f.classification == "commutative rng"


def test_ring_scan_prime_and_4():
    assert scan_special_rings(SearchSpec(RING, (7, 7))) == []
    assert scan_special_rings(SearchSpec(RING, (4, 4))) == []


def test_ideal_scan_60():
    found = scan_special_ideals(SearchSpec(IDEAL, (60, 60)))
    by_d = {f.value: f for f in found}
    assert by_d[6].witness == (0, 12, 24, 36, 48)
    assert 12 not in by_d  # 12Z_60 is itself a field
    assert 30 not in by_d


def test_sorted_by_n_then_parameter():
    found = scan(SearchSpec(SEMIGROUP, (10, 40)))
    assert found == sorted(found, key=lambda f: (f.n, f.value))
    assert len(found) > 10


@pytest.mark.parametrize("spec", [
    SearchSpec("special-field", (2, 3)),
    SearchSpec(SEMIGROUP, (0, 3)),
    SearchSpec(SEMIGROUP, (5, 3)),
    SearchSpec(SEMIGROUP, (2, 3), (-1, 4)),
    SearchSpec(SEMIGROUP, (2, 3), min_group_order=0),
    SearchSpec(RING, (2, 2**64)),
])
def test_invalid_specs(spec):
    with pytest.raises(InvalidSpec):
        scan(spec)


def test_kind_mismatch():
    with pytest.raises(InvalidSpec):
        scan_special_rings(SearchSpec(SEMIGROUP, (2, 3)))


def test_emit_line_format():
    found = scan_special_semigroups(SearchSpec(SEMIGROUP, (60, 60), (18, 18)))
    buf = io.BytesIO()
    assert emit_findings(found, buf) == 1
    line = buf.getvalue().decode()
    assert line.endswith("\n") and line.count("\n") == 1
    assert '"kind":"special-semigroup","n":60,"a":18' in line
    assert list(json.loads(line)) == KEYS_A


def test_emit_ring_keys():
    found = scan_special_rings(SearchSpec(RING, (60, 60)))
    for line in encode_findings(found).decode().splitlines():
        assert list(json.loads(line)) == ["kind", "n", "d", "carrier", "witness", "witness_identity",
                                          "classification"]


def test_emit_empty_and_deterministic():
    buf = io.BytesIO()
    assert emit_findings([], buf) == 0 and buf.getvalue() == b""
    found = scan(SearchSpec(RING, (2, 40)))
    a, b = io.BytesIO(), io.BytesIO()
    emit_findings(found, a)
    emit_findings(found, b)
    assert a.getvalue() == b.getvalue()


def test_emit_text_sink():
    found = scan(SearchSpec(RING, (60, 60)))
    buf = io.StringIO()
    emit_findings(found, buf)
    assert buf.getvalue().encode() == encode_findings(found)


def test_sink_failure():
    fh = io.BytesIO()
    fh.close()
    with pytest.raises(SinkFailure):
        emit_findings([], fh)

    class Broken(io.RawIOBase):
        def write(self, b):
            raise OSError("disk full")

    with pytest.raises(SinkFailure):
        emit_findings(scan(SearchSpec(RING, (60, 60))), Broken())


def test_roundtrip_records():
    found = scan(SearchSpec(IDEAL, (2, 60)))
    assert read_findings(encode_findings(found)) == found


def test_parallel_scan_is_identical():
    for spec in (SearchSpec(SEMIGROUP, (2, 45)), SearchSpec(RING, (2, 60))):
        assert encode_findings(scan(spec, workers=1)) == encode_findings(scan(spec, workers=2))


def test_findings_reverify():
    for spec in (SearchSpec(SEMIGROUP, (2, 50)), SearchSpec(RING, (2, 80)), SearchSpec(IDEAL, (2, 80))):
        for f in scan(spec):
            assert reverify(f)


def test_reverify_rejects_tampered():
    f = scan(SearchSpec(RING, (60, 60)))[0]
    bad = Finding(f.kind, f.n, f.param, f.value, f.carrier, (0, 20, 40), 40, f.classification)
    assert reverify(f) and not reverify(bad)


@pytest.mark.parametrize("kind", [SEMIGROUP, RING, IDEAL])
def test_complete_against_exhaustive_rescan(kind):
    fast = scan(SearchSpec(kind, (1, 30)))
    slow = scan(SearchSpec(kind, (1, 30), exhaustive=True, max_size=30))
    assert fast == slow


def test_exhaustive_scan_respects_limit():
    from cayleykit import TooLarge
    with pytest.raises(TooLarge):
        scan(SearchSpec(RING, (25, 25), exhaustive=True))
