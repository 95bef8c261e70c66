"""Command-line front end.

    stronga analyze EXPR [--method fast|oracle] [--json|--text] [--file PATH]
    stronga check EXPR [--mode auto|full|sampled] [--seed N]
    stronga verify ID|all [--max-size N] [--depth N] [--seed N] [--list-corpus]
    stronga search converse-3.1 [--max-size N] [--depth N] [--seed N]

Exit codes: 0 success, 1 a verified statement failed, 2 usage or parse
error, 3 resource cap exceeded, 4 degenerate (zero ring) input, 5 search hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from .deciders import CONVENTION_NOTE, has_property_a, has_strong_property_a
from .errors import DEFAULT_CAPS, DegenerateRingError, ResourceCapError, RingError
from .expr import ElaborationError, ExprSyntaxError, build_ring
from .harness import ANALOGS, CHECK_IDS, CorpusSpec, generate_corpus, run_checks, search_duplication_converse
from .ideals import all_ideals
from .ring import check_ring_axioms, is_local, is_reduced

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP, EXIT_DEGENERATE, EXIT_HIT = 0, 1, 2, 3, 4, 5
LIST_LIMIT = 64


def analyze(text: str, method: str = "fast") -> dict:
    t0 = time.perf_counter()
    R = build_ring(text)
    R.require_nonzero()
    zd = np.flatnonzero(R.zero_divisor_mask()).tolist()
    a = has_property_a(R, method)
    sa = has_strong_property_a(R, method)
    zero_divisors = {"count": len(zd)}
    if len(zd) <= LIST_LIMIT:
        zero_divisors["elements"] = [R.format(x) for x in zd]
    return {
        "ring": R.descriptor,
        "size": R.size,
        "units_count": int(R.units_mask().sum()),
        "zero_divisors": zero_divisors,
        "ideals_count": len(all_ideals(R)),
        "is_local": is_local(R),
        "is_reduced": is_reduced(R),
        "is_A": a.to_dict(),
        "is_strong_A": sa.to_dict(),
        "convention_note": CONVENTION_NOTE,
        "caps": DEFAULT_CAPS.to_dict(),
        "timing": {"seconds": round(time.perf_counter() - t0, 6)},
    }


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, (ExprSyntaxError, ElaborationError)):
        return EXIT_USAGE
    if isinstance(exc, ResourceCapError):
        return EXIT_CAP
    if isinstance(exc, DegenerateRingError):
        return EXIT_DEGENERATE
    return EXIT_USAGE


def _emit(payload, as_json: bool, text_lines) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        for line in text_lines(payload):
            print(line)


def _analysis_lines(rep: dict):
    if "error" in rep:
        yield f"{rep.get('expression', '?')}: error: {rep['error']}"
        return
    yield f"ring: {rep['ring']}  (|R| = {rep['size']})"
    yield f"  units: {rep['units_count']}  zero-divisors: {rep['zero_divisors']['count']}  ideals: {rep['ideals_count']}"
    yield f"  local: {rep['is_local']}  reduced: {rep['is_reduced']}"
    for key, label in (("is_A", "(A)"), ("is_strong_A", "strong (A)")):
        r = rep[key]
        w = r["witness"]
        extra = f"  witness generators {{{', '.join(w['generators'])}}}" if not r["verdict"] else ""
        yield f"  {label}: {r['verdict']}  [{r['method']}]{extra}"
    yield f"  note: {rep['convention_note']}"


def cmd_analyze(args) -> int:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            exprs = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    else:
        exprs = list(args.expr)
    if not exprs:
        print("analyze: no expression given", file=sys.stderr)
        return EXIT_USAGE
    reports, code = [], EXIT_OK
    for text in exprs:
        try:
            reports.append(analyze(text, args.method))
        except RingError as exc:
            c = _exit_code(exc)
            code = code or c
            reports.append({"expression": text, "error": str(exc), "exit_code": c})
            print(f"error: {exc}", file=sys.stderr)
    payload = reports[0] if len(reports) == 1 else reports
    if args.json:
        _emit(payload, True, None)
    else:
        for rep in reports:
            for line in _analysis_lines(rep):
                print(line)
    return code


def cmd_check(args) -> int:
    try:
        R = build_ring(args.expr)
    except RingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code(exc)
    rep = check_ring_axioms(R, mode=args.mode, seed=args.seed).to_dict()
    _emit(rep, args.json, lambda r: [f"{r['ring']}: {'ok' if r['ok'] else 'FAILED'} ({r['mode']})"]
          + [f"  {k}: counterexample {v}" for k, v in r["failures"].items()])
    return EXIT_OK if rep["ok"] else EXIT_FAIL


def _corpus(args) -> tuple[CorpusSpec, list]:
    spec = CorpusSpec(max_size=args.max_size, depth=args.depth, seed=args.seed, sample=args.sample,
                      moduli=tuple(args.moduli) if args.moduli else CorpusSpec.moduli)
    return spec, generate_corpus(spec)


def _list_corpus(corpus, as_json: bool) -> int:
    names = [R.descriptor for R in corpus]
    _emit(names, as_json, lambda ns: ns)
    return EXIT_OK


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    try:
        spec, corpus = _corpus(args)
        if args.list_corpus:
            return _list_corpus(corpus, args.json)
        results = run_checks(args.check, corpus, args.max_size, args.method)
    except RingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code(exc)
    ids = CHECK_IDS if args.check == "all" else (args.check,)
    failures = [r for r in results if not r.holds]
    payload = {
        "verify": args.check,
        "corpus": spec.to_dict(),
        "corpus_size": len(corpus),
        "method": args.method,
        "analogs": {i: ANALOGS[i] for i in ids},
        "results": [r.to_dict() for r in results],
        "summary": {"instances": len(results), "holds": len(results) - len(failures), "failures": len(failures)},
        "timing": {"seconds": round(time.perf_counter() - t0, 6)},
    }

    def lines(p):
        yield f"verify {p['verify']}: {p['summary']['holds']}/{p['summary']['instances']} instances hold"
        for r in p["results"]:
            if not r["holds"] or args.verbose:
                yield f"  [{'ok' if r['holds'] else 'FAIL'}] {r['check']} {r['instance']}"
        for i, text in p["analogs"].items():
            yield f"  finite analog ({i}): {text}"

    _emit(payload, args.json, lines)
    return EXIT_OK if not failures else EXIT_FAIL


def cmd_search(args) -> int:
    t0 = time.perf_counter()
    try:
        spec, corpus = _corpus(args)
        if args.list_corpus:
            return _list_corpus(corpus, args.json)
        report = search_duplication_converse(corpus, args.max_size, args.method)
    except RingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code(exc)
    payload = report.to_dict()
    payload["corpus"] = spec.to_dict()
    payload["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}

    def lines(p):
        yield f"search {p['search']}: {p['result']} ({p['instances_examined']} instances)"
        for h in p["hits"]:
            yield f"  hit: {h['duplication']}"

    _emit(payload, args.json, lines)
    return EXIT_HIT if report.found else EXIT_OK


def _output_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="json", action="store_true", default=True, help="JSON output (default)")
    g.add_argument("--text", dest="json", action="store_false", help="human-readable output")


def _corpus_flags(p: argparse.ArgumentParser, max_size: int) -> None:
    p.add_argument("--max-size", type=int, default=max_size, help="largest ring built or examined")
    p.add_argument("--depth", type=int, default=2, help="construction depth of the corpus")
    p.add_argument("--seed", type=int, default=0, help="seed for --sample")
    p.add_argument("--sample", type=int, help="keep a seeded random subset of this many corpus rings")
    p.add_argument("--moduli", type=int, nargs="+", help="base moduli n for Z/n (default 2..32)")
    p.add_argument("--method", choices=("fast", "oracle"), default="fast")
    p.add_argument("--list-corpus", action="store_true", help="print the corpus and exit")
    _output_flags(p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stronga", description="Property (A) and strong (A) on finite rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one ring expression")
    p.add_argument("expr", nargs="*")
    p.add_argument("--file", help="read expressions from a file, one per line")
    p.add_argument("--method", choices=("fast", "oracle"), default="fast")
    _output_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="check the ring axioms of an expression")
    p.add_argument("expr")
    p.add_argument("--mode", choices=("auto", "full", "sampled"), default="auto")
    p.add_argument("--seed", type=int, default=0)
    _output_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="replay the transfer statements over a corpus")
    p.add_argument("check", choices=CHECK_IDS + ("all",))
    p.add_argument("-v", "--verbose", action="store_true")
    _corpus_flags(p, 256)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="search the corpus for counterexamples")
    p.add_argument("target", choices=("converse-3.1",))
    _corpus_flags(p, 256)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
