"""Command-line front end.

Exit status: 0 on success, 1 when the input is mathematically unusable
(not closed, not associative, unreadable file, ...), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
from pathlib import Path

from . import search as srch
from .embed import is_special_monoid, is_special_semigroup
from .errors import AlgebraError, TooLarge
from .formats import parse_ring, parse_table, render_table
from .magma import associativity_counterexample, classify_magma
from .modular import generated_mul_semigroup, power_orbit
from .reproduce import verify_paper
from .rings import classify_ring, embedded_fields, is_ideal, is_special_ideal, is_special_ring, zn_ring

WORD_MAX = srch.WORD_MAX
MAX_TABLE = 2000  # largest generated semigroup `zn gen` will tabulate
MAX_RING = 400    # largest carrier `zn ring` will validate


class Usage(Exception):
    pass


def _int_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo_i, hi_i


def _modulus(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 1 <= n <= WORD_MAX:
        raise argparse.ArgumentTypeError(f"modulus must lie in 1..{WORD_MAX}")
    return n


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise Usage(message)


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS,
                     help="output format (default text)")

    p = _Parser(prog="cayleykit", description="Finite Cayley-table algebra and special structures.",
                parents=[fmt])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    an = sub.add_parser("analyze", help="analyze a table or ring file", parents=[fmt])
    an_sub = an.add_subparsers(dest="what", required=True, parser_class=_Parser)
    t = an_sub.add_parser("table", parents=[fmt], help="Cayley table file")
    t.add_argument("file", type=Path)
    t.add_argument("--min-order", type=_positive, default=2)
    r = an_sub.add_parser("ring", parents=[fmt], help="ring file (add: / mul: sections)")
    r.add_argument("file", type=Path)

    zn = sub.add_parser("zn", help="structures inside Z_n", parents=[fmt])
    zn_sub = zn.add_subparsers(dest="what", required=True, parser_class=_Parser)
    o = zn_sub.add_parser("orbit", parents=[fmt], help="tail and period of a^k mod n")
    o.add_argument("a", type=_nonneg)
    o.add_argument("n", type=_modulus)
    g = zn_sub.add_parser("gen", parents=[fmt], help="semigroup generated by a under * mod n")
    g.add_argument("a", type=_nonneg)
    g.add_argument("n", type=_modulus)
    g.add_argument("--min-order", type=_positive, default=2)
    rg = zn_sub.add_parser("ring", parents=[fmt], help="the ring dZ_n")
    rg.add_argument("n", type=_modulus)
    rg.add_argument("--divisor", type=_positive, default=1)

    se = sub.add_parser("search", help="scan Z_n for special structures", parents=[fmt])
    se_sub = se.add_subparsers(dest="what", required=True, parser_class=_Parser)
    for name, help_ in (("semigroups", "cyclic subsemigroups of (Z_n, *)"),
                        ("rings", "the rings dZ_n"), ("ideals", "the ideals dZ_n of Z_n")):
        s = se_sub.add_parser(name, parents=[fmt], help=help_)
        s.add_argument("--n", dest="n_range", type=_int_range, required=True, metavar="LO..HI")
        if name == "semigroups":
            s.add_argument("--a", dest="a_range", type=_int_range, metavar="LO..HI")
            s.add_argument("--min-order", type=_positive, default=2)
        s.add_argument("--out", type=Path)
        s.add_argument("--workers", type=_positive, default=1)
        s.add_argument("--exhaustive", action="store_true",
                       help="use full subset enumeration instead of the fast finders")

    v = sub.add_parser("verify-paper", parents=[fmt], help="re-derive the mod-60 worked examples")
    v.add_argument("--fixtures", type=Path, help="directory of golden files (default: bundled)")
    return p


# -- rendering helpers -------------------------------------------------------------

def _set(labels) -> str:
    return "{" + " ".join(map(str, labels)) + "}"


def _in_order(carrier, labels):
    return [x for x in labels if x in carrier]


def _verdict_json(v, labels):
    return {"special": v.special, "reason": str(v.reason),
            "witnesses": [{"carrier": _in_order(w.carrier, labels), "identity": w.identity}
                          for w in v.witnesses]}


def _verdict_text(name, v, labels, unit="identity") -> list[str]:
    if not v.special:
        return [f"{name}: no ({v.reason})"]
    out = [f"{name}: yes"]
    out += [f"  witness {_set(_in_order(w.carrier, labels))} {unit} {w.identity}" for w in v.witnesses]
    return out


def _ident(x) -> str:
    return "no identity" if x is None else f"identity {x}"


# -- subcommands --------------------------------------------------------------------

def _table_report(t, min_order):
    cls = classify_magma(t)
    doc = {"labels": list(t.labels), "rows": t.rows(), "kind": str(cls.kind), "identity": cls.identity,
           "idempotents": sorted(cls.idempotents), "commutative": cls.commutative,
           "associative": cls.kind.value != "magma"}
    lines = [f"{cls.kind}; {_ident(cls.identity)}",
             "idempotents: " + " ".join(map(str, _in_order(cls.idempotents, t.labels)))]
    lines.append(render_table(t).rstrip("\n"))
    if cls.kind.value == "magma":
        x, y, z = associativity_counterexample(t)
        doc["counterexample"] = [x, y, z]
        lines.append(f"not associative: ({x}*{y})*{z} != {x}*({y}*{z})")
        return doc, lines
    v = is_special_semigroup(t, min_order)
    doc["special_semigroup"] = _verdict_json(v, t.labels)
    lines += _verdict_text("special semigroup", v, t.labels)
    if cls.identity is not None:
        v = is_special_monoid(t, min_order)
        doc["special_monoid"] = _verdict_json(v, t.labels)
        lines += _verdict_text("special monoid", v, t.labels)
    return doc, lines


def _ring_report(rt):
    cls = classify_ring(rt)
    fields = embedded_fields(rt)
    v = is_special_ring(rt)
    doc = {"labels": list(rt.labels), "kind": str(cls.kind), "zero": rt.zero, "unity": cls.unity,
           "embedded_fields": [{"carrier": sorted(f.carrier), "unity": f.unity} for f in fields],
           "special_ring": _verdict_json(v, sorted(rt.labels))}
    unity = "no unity" if cls.unity is None else f"unity {cls.unity}"
    lines = [f"{cls.kind}; zero {rt.zero}; {unity}", "elements: " + " ".join(map(str, rt.labels))]
    if fields:
        lines += [f"embedded field {_set(sorted(f.carrier))} unity {f.unity}" for f in fields]
    else:
        lines.append("embedded fields: none")
    lines += _verdict_text("special ring", v, sorted(rt.labels), "unity")
    return doc, lines


def cmd_analyze(args):
    text = args.file.read_text(encoding="utf-8")
    if args.what == "table":
        return _table_report(parse_table(text), args.min_order)
    return _ring_report(parse_ring(text))


def cmd_zn(args):
    if args.what == "orbit":
        o = power_orbit(args.a, args.n)
        a, n = o.base, o.modulus
        doc = {"a": a, "n": n, "residues": list(o.residues), "tail": o.tail, "period": o.period}
        lines = ["residues: " + " ".join(map(str, o.residues)), f"tail: {o.tail}", f"period: {o.period}",
                 f"{a}^{o.tail} = {a}^{o.tail + o.period} (mod {n})"]
        return doc, lines
    if args.what == "gen":
        o = power_orbit(args.a, args.n)
        if len(o.residues) > MAX_TABLE:
            raise TooLarge(f"semigroup has {len(o.residues)} elements; limit is {MAX_TABLE}")
        doc, lines = _table_report(generated_mul_semigroup(args.a, args.n), args.min_order)
        return {"a": o.base, "n": o.modulus, **doc}, [f"<{o.base}> in (Z_{o.modulus}, *)", *lines]
    n, d = args.n, args.divisor
    if n % d:
        raise AlgebraError(f"divisor {d} does not divide {n}")
    if n // d > MAX_RING:
        raise TooLarge(f"ring has {n // d} elements; limit is {MAX_RING}")
    rt = zn_ring(n, d)
    doc, lines = _ring_report(rt)
    whole = zn_ring(n) if d != 1 else rt
    ideal = is_ideal(whole, rt.labels)
    vi = is_special_ideal(whole, rt.labels)
    doc = {"n": n, "divisor": d, **doc, "ideal": ideal, "special_ideal": _verdict_json(vi, sorted(rt.labels))}
    lines = [f"{d}Z_{n}", *lines, f"ideal of Z_{n}: {'yes' if ideal else 'no'}",
             *_verdict_text("special ideal", vi, sorted(rt.labels), "unity")]
    return doc, lines


def cmd_search(args, out):
    kind = {"semigroups": srch.SEMIGROUP, "rings": srch.RING, "ideals": srch.IDEAL}[args.what]
    spec = srch.SearchSpec(kind, args.n_range, getattr(args, "a_range", None),
                           min_group_order=getattr(args, "min_order", 2), exhaustive=args.exhaustive)
    found = srch.scan(spec, workers=args.workers)
    if args.out is not None:
        try:
            with open(args.out, "wb") as fh:
                count = srch.emit_findings(found, fh)
        except OSError as exc:
            raise srch.SinkFailure(str(exc)) from exc
        return {"count": count, "out": str(args.out)}, [f"{count} findings written to {args.out}"]
    if args.format == "json":
        return {"count": len(found), "findings": [f.to_record() for f in found]}, None
    out.write(srch.encode_findings(found).decode("utf-8"))
    return None, []


def cmd_verify(args):
    results = verify_paper(args.fixtures)
    passed = sum(r.passed for r in results)
    doc = {"checks": [{"name": r.name, "pass": r.passed, "expected": r.expected, "actual": r.actual}
                      for r in results], "passed": passed, "total": len(results)}
    lines = []
    for r in results:
        if r.passed:
            lines.append(f"PASS {r.name}")
        else:
            lines.append(f"FAIL {r.name}: expected {r.expected!r}, actual {r.actual!r}")
    lines.append(f"{passed}/{len(results)} PASS")
    return doc, lines, 0 if passed == len(results) else 1


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except Usage:
        return 2
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 2
    args.format = getattr(args, "format", "text")
    code = 0
    try:
        if args.command == "analyze":
            doc, lines = cmd_analyze(args)
        elif args.command == "zn":
            doc, lines = cmd_zn(args)
        elif args.command == "search":
            doc, lines = cmd_search(args, out)
        else:
            doc, lines, code = cmd_verify(args)
    except srch.InvalidSpec as exc:
        print(f"error: {exc}", file=err)
        return 2
    except (AlgebraError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    if args.format == "json":
        if doc is not None:
            out.write(json.dumps(doc, sort_keys=False) + "\n")
    elif lines:
        out.write("\n".join(lines) + "\n")
    return code


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
