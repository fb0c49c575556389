"""Command-line front end: build systems, emit artifacts, run audits.

Every subcommand is deterministic byte-for-byte for a fixed request.
Exit codes: 0 on success and all-pass audits, 1 on audit failures or
oracle mismatches, 2 on usage or domain errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .crystal import (
    crystal_to_dot,
    crystal_to_json,
    dominant_monomial,
    generate_crystal,
    ls_paths,
)
from .errors import LsplactoError
from .plactic import (
    audit_report,
    build_rules,
    normalize,
    rules_to_json,
    word_weight,
)
from .exact import format_rational
from .rootsystem import SUPPORTED, build_root_system, weyl_dim
from .typea import cross_check


def _parse_shape(text: str, rank: int) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    try:
        shape = tuple(int(p) for p in parts)
    except ValueError:
        raise LsplactoError(f"shape {text!r} is not a comma-separated integer list")
    if len(shape) != rank:
        raise LsplactoError(f"shape {text!r} has {len(shape)} entries, expected {rank}")
    if any(c < 0 for c in shape):
        raise LsplactoError(f"shape {text!r} has a negative entry")
    return shape


def _parse_word(system, text: str) -> tuple[str, ...]:
    """Generator ids separated by spaces, or bare box digits in type A."""
    text = text.strip()
    if not text:
        return ()
    if " " in text or "." in text:
        return tuple(text.split())
    if system.rs.label == "A" and text.isdigit():
        from .typea import box_to_monomial

        m = box_to_monomial(system.rs, text)
        return tuple(system.table.lookup_id(1, p) for _, p in m.factors)
    return tuple(text.split())


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _cmd_info(args) -> int:
    rs = build_root_system(args.type, args.rank)
    data = {
        "type": rs.label,
        "rank": rs.rank,
        "cartan": [list(row) for row in rs.cartan],
        "symmetrizer": list(rs.symmetrizer),
        "positive_coroots": len(rs.positive_coroots),
    }
    if args.format == "json":
        _emit(_json_text(data), args.output)
    else:
        lines = [f"{rs.label}{rs.rank}: rank {rs.rank}"]
        lines.append("cartan: " + "; ".join(" ".join(map(str, r)) for r in rs.cartan))
        lines.append("symmetrizer: " + " ".join(map(str, rs.symmetrizer)))
        lines.append(f"positive coroots: {len(rs.positive_coroots)}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_crystal(args) -> int:
    rs = build_root_system(args.type, args.rank)
    shape = _parse_shape(args.shape, rs.rank)
    graph = generate_crystal(rs, dominant_monomial(rs, shape))
    if args.format == "dot":
        _emit(crystal_to_dot(graph), args.output)
    elif args.format == "json":
        _emit(_json_text(crystal_to_json(graph)), args.output)
    else:
        _emit(
            f"{rs.label}{rs.rank} shape {shape}: "
            f"{len(graph.vertices)} vertices, {len(graph.edges)} edges\n",
            args.output,
        )
    return 0


def _cmd_generators(args) -> int:
    rs = build_root_system(args.type, args.rank)
    system = build_rules(rs)
    data = rules_to_json(system)
    if args.format == "json":
        payload = {"system": data["system"], "generators": data["generators"]}
        _emit(_json_text(payload), args.output)
    else:
        lines = []
        for g in data["generators"]:
            end = "(" + ", ".join(g["weight"]) + ")"
            lines.append(f"{g['id']}  endpoint {end}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_rules(args) -> int:
    rs = build_root_system(args.type, args.rank)
    system = build_rules(rs)
    if args.format == "json":
        _emit(_json_text(rules_to_json(system)), args.output)
    else:
        lines = []
        for rule in system.rules.values():
            lines.append(" ".join(rule.lhs) + " -> " + " ".join(rule.rhs))
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_normalize(args) -> int:
    rs = build_root_system(args.type, args.rank)
    system = build_rules(rs)
    word = _parse_word(system, args.word)
    normal = normalize(system, word)
    if args.format == "json":
        data = {
            "input": list(word),
            "normal_form": list(normal),
            "weight": [format_rational(c) for c in word_weight(system, normal)],
        }
        _emit(_json_text(data), args.output)
    else:
        _emit((" ".join(normal) if normal else "(empty)") + "\n", args.output)
    return 0


def _cmd_check(args) -> int:
    rs = build_root_system(args.type, args.rank)
    system = build_rules(rs)
    report = audit_report(rs, system, jobs=args.jobs)
    ok = report["termination"]["pass"] and report["confluence"]["pass"]
    if args.format == "json":
        _emit(_json_text(report), args.output)
    else:
        term, conf = report["termination"], report["confluence"]
        lines = [
            f"{rs.label}{rs.rank} termination: "
            f"{'PASS' if term['pass'] else 'FAIL'} "
            f"({term['rules_checked']} rules, max rhs {term['max_rhs_length']})",
            f"{rs.label}{rs.rank} confluence: "
            f"{'PASS' if conf['pass'] else 'FAIL'} "
            f"({conf['triples_checked']} triples)",
        ]
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if ok else 1


def _shapes_up_to(rank: int, total: int):
    def rec(prefix, remaining, slots):
        if slots == 0:
            yield tuple(prefix)
            return
        for c in range(remaining + 1):
            yield from rec(prefix + [c], remaining - c, slots - 1)

    for shape in rec([], total, rank):
        yield shape


def _cmd_verify_dims(args) -> int:
    rs = build_root_system(args.type, args.rank)
    rows = []
    ok = True
    for shape in sorted(_shapes_up_to(rs.rank, args.max_sum)):
        expected = weyl_dim(rs, shape)
        graph = generate_crystal(rs, dominant_monomial(rs, shape))
        match = len(graph.vertices) == expected
        ok = ok and match
        rows.append(
            {"shape": list(shape), "dim": expected, "vertices": len(graph.vertices),
             "match": match}
        )
    if args.format == "json":
        _emit(
            _json_text({"system": {"type": rs.label, "rank": rs.rank}, "rows": rows,
                        "pass": ok}),
            args.output,
        )
    else:
        lines = [
            f"{r['shape']}: dim {r['dim']}, vertices {r['vertices']}, "
            f"{'ok' if r['match'] else 'MISMATCH'}"
            for r in rows
        ]
        lines.append("PASS" if ok else "FAIL")
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if ok else 1


def _cmd_oracle_compare(args) -> int:
    if args.type != "A":
        raise LsplactoError("oracle-compare is defined for type A only")
    rs = build_root_system(args.type, args.rank)
    report = cross_check(rs, rs.rank + 1, args.max_len)
    ok = not report["mismatches"]
    if args.format == "json":
        _emit(_json_text(report), args.output)
    else:
        _emit(
            f"A{rs.rank} words<=len {args.max_len}: {report['words']} words, "
            f"{report['classes_knuth']} Knuth classes, "
            f"{report['classes_path_model']} path classes, "
            f"{len(report['mismatches'])} mismatches\n",
            args.output,
        )
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lsplacto",
        description="Littelmann path crystals and column plactic presentations",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, shape=False, word=False):
        p.add_argument("--type", required=True, choices=sorted(SUPPORTED),
                       help="root system type letter")
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--format", default="text", choices=["json", "dot", "text"])
        p.add_argument("--output", default=None, help="write to file instead of stdout")
        if shape:
            p.add_argument("--shape", required=True,
                           help="comma-separated dominant coordinates")
        if word:
            p.add_argument("--word", required=True,
                           help='generator ids ("w1.0 w2.1") or type-A box digits')
        return p

    common(sub.add_parser("info", help="root system summary"))
    common(sub.add_parser("crystal", help="generate one crystal graph"), shape=True)
    common(sub.add_parser("generators", help="the column generator table"))
    common(sub.add_parser("rules", help="the full rewriting system"))
    common(sub.add_parser("normalize", help="rewrite a word to normal form"),
           word=True)
    check = common(sub.add_parser("check", help="termination and confluence audits"))
    check.add_argument("--jobs", type=int, default=1)
    verify = common(sub.add_parser("verify-dims",
                                   help="crystal sizes against the dimension formula"))
    verify.add_argument("--max-sum", type=int, default=3)
    oracle = common(sub.add_parser("oracle-compare",
                                   help="type-A Knuth congruence cross-check"))
    oracle.add_argument("--max-len", type=int, default=3)
    return parser


_DISPATCH = {
    "info": _cmd_info,
    "crystal": _cmd_crystal,
    "generators": _cmd_generators,
    "rules": _cmd_rules,
    "normalize": _cmd_normalize,
    "check": _cmd_check,
    "verify-dims": _cmd_verify_dims,
    "oracle-compare": _cmd_oracle_compare,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.subcommand](args)
    except LsplactoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
