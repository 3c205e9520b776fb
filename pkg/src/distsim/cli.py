"""Command-line front door: build stores, score pairs, list measures, emit
evaluation reports and neighbor lists, or serve the HTTP API.

Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 usage error, 2 data or measure error. Query subcommands run in-process
against a store file by default; pass --server to route them through a
running service instead. Every printed result is the serialization of the
corresponding library call; no math happens here.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Sequence

import httpx

from .cooccur import build_windowed, ingest_triples, load_store, read_triples, save_store
from .errors import DistsimError, InvalidParameterError, NotFoundError
from .evaluation import (
    EvalReport,
    ScoredPair,
    SkippedPair,
    load_gold,
    neighbors,
    render_report_tsv,
    report_to_dict,
    score_pairs,
)
from .measures import (
    KldMode,
    MeasureSpec,
    SupportMode,
    SymmetrizeMode,
    evaluate_pair,
    get_measure,
    list_measures,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

STORE_ENV = "DISTSIM_STORE"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse default exits 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_store_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--store",
        help=f"store file path (default: ${STORE_ENV})",
    )
    parser.add_argument("--server", help="base URL of a running distsim service")


def _add_measure_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--measure", default="cosine")
    parser.add_argument("--assoc", choices=("cp", "pmi"), default=None)
    parser.add_argument("--log-base", type=float, default=math.e)
    parser.add_argument("--alpha", type=float, default=0.99)
    parser.add_argument("--gamma", type=float, default=0.5)
    parser.add_argument("--beta", type=float, default=0.5)
    parser.add_argument("--relations", help="comma-separated relation filter")
    parser.add_argument("--symmetrize", choices=("none", "max", "avg"), default="none")
    parser.add_argument("--support", choices=("union", "intersection"), default="union")
    parser.add_argument("--kld-mode", choices=("strict", "error_free"), default="strict")


def build_parser() -> _Parser:
    parser = _Parser(prog="distsim")
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="build a store from a corpus or triple file")
    source = build.add_mutually_exclusive_group(required=True)
    source.add_argument("--corpus", help="UTF-8 text, one document per line")
    source.add_argument("--triples", help="head<TAB>rel<TAB>dep<TAB>count file")
    build.add_argument("--out", required=True, help="store file to write")
    build.add_argument("--window", type=int, default=2)

    sim = sub.add_parser("sim", help="score one word pair")
    sim.add_argument("word1")
    sim.add_argument("word2")
    _add_store_flags(sim)
    _add_measure_flags(sim)

    near = sub.add_parser("neighbors", help="top-k nearest words")
    near.add_argument("word")
    near.add_argument("--top-k", type=int, default=10)
    _add_store_flags(near)
    _add_measure_flags(near)

    ev = sub.add_parser("eval", help="score gold pairs and correlate with ratings")
    ev.add_argument("--gold", required=True, help="word1<TAB>word2<TAB>rating file")
    ev.add_argument("--format", choices=("tsv", "json"), default="tsv")
    ev.add_argument("--strict", action="store_true",
                    help="fail (exit 2) if any pair is skipped")
    _add_store_flags(ev)
    _add_measure_flags(ev)

    sub.add_parser("list-measures", help="print the measure catalog").add_argument(
        "--server", help="base URL of a running distsim service"
    )

    serve = sub.add_parser("serve", help="run the HTTP service over a store")
    serve.add_argument("--store", help=f"store file path (default: ${STORE_ENV})")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


def _spec_from_args(args: argparse.Namespace) -> MeasureSpec:
    try:
        get_measure(args.measure)
    except NotFoundError:
        table = _measure_table(_local_measure_rows())
        raise _UsageError(f"unknown measure {args.measure!r}; valid measures:\n{table}")
    symmetrize = None if args.symmetrize == "none" else SymmetrizeMode(args.symmetrize)
    try:
        return MeasureSpec(
            measure=args.measure,
            association=args.assoc,
            log_base=args.log_base,
            alpha=args.alpha,
            gamma=args.gamma,
            beta=args.beta,
            support_mode=SupportMode(args.support),
            kld_mode=KldMode(args.kld_mode),
            symmetrize=symmetrize,
        )
    except InvalidParameterError as exc:
        raise _UsageError(str(exc)) from None


def _relations_from_args(args: argparse.Namespace) -> list[str] | None:
    if not args.relations:
        return None
    names = [name for name in args.relations.split(",") if name]
    if not names:
        raise _UsageError("--relations must name at least one relation")
    return names


def _store_path(args: argparse.Namespace) -> str:
    path = args.store or os.environ.get(STORE_ENV)
    if not path:
        raise _UsageError(f"no store given: pass --store or set ${STORE_ENV}")
    return path


def _options_payload(args: argparse.Namespace) -> dict:
    return {
        "measure": args.measure,
        "association": args.assoc,
        "log_base": args.log_base,
        "alpha": args.alpha,
        "gamma": args.gamma,
        "beta": args.beta,
        "support": args.support,
        "kld_mode": args.kld_mode,
        "symmetrize": None if args.symmetrize == "none" else args.symmetrize,
        "relations": _relations_from_args(args),
    }


def _request(server: str, method: str, path: str, payload: dict | None = None) -> dict:
    url = server.rstrip("/") + path
    try:
        response = httpx.request(method, url, json=payload, timeout=30.0)
    except httpx.HTTPError as exc:
        raise DistsimError(f"cannot reach {url}: {exc}") from None
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        raise DistsimError(f"server error {response.status_code}: {detail}")
    return response.json()


def _cmd_build(args: argparse.Namespace) -> int:
    if args.corpus is not None:
        if args.window < 1:
            raise _UsageError(f"--window must be >= 1, got {args.window}")
        with open(args.corpus, encoding="utf-8") as handle:
            store = build_windowed((line.rstrip("\n") for line in handle), args.window)
    else:
        store = ingest_triples(read_triples(args.triples))
    save_store(store, args.out)
    print(
        f"wrote {args.out}: {len(store.vocab)} words, "
        f"{len(store.pair_counts)} pair entries",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_sim(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    relations = _relations_from_args(args)
    if args.server:
        payload = {"word1": args.word1, "word2": args.word2,
                   "options": _options_payload(args)}
        value = float(_request(args.server, "POST", "/sim", payload)["value"])
    else:
        store = load_store(_store_path(args))
        value = evaluate_pair(store, args.word1, args.word2, spec, relations).value
    print(repr(value))
    return EXIT_OK


def _cmd_neighbors(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    relations = _relations_from_args(args)
    if args.top_k < 1:
        raise _UsageError(f"--top-k must be >= 1, got {args.top_k}")
    if args.server:
        payload = {"target": args.word, "k": args.top_k,
                   "options": _options_payload(args)}
        entries = _request(args.server, "POST", "/neighbors", payload)["neighbors"]
        ranked = [(e["word"], float(e["value"])) for e in entries]
    else:
        store = load_store(_store_path(args))
        ranked = neighbors(store, args.word, spec, args.top_k, relations)
    for word, value in ranked:
        print(f"{word}\t{value!r}")
    return EXIT_OK


def _cmd_eval(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    relations = _relations_from_args(args)
    gold = load_gold(args.gold)
    if args.server:
        payload = {
            "pairs": [{"word1": w1, "word2": w2, "rating": r} for w1, w2, r in gold.pairs],
            "options": _options_payload(args),
        }
        data = _request(args.server, "POST", "/eval", payload)
        report = EvalReport(
            measure=data["measure"],
            scored_pairs=tuple(ScoredPair(**p) for p in data["scored_pairs"]),
            spearman=data["spearman"],
            pearson=data["pearson"],
            skipped=tuple(SkippedPair(**s) for s in data["skipped"]),
        )
    else:
        store = load_store(_store_path(args))
        report = score_pairs(store, gold, spec, relations)
    if args.strict and report.skipped:
        for skip in report.skipped:
            print(f"skipped: {skip.word1} {skip.word2}: {skip.reason}", file=sys.stderr)
        print(f"error: {len(report.skipped)} pair(s) skipped in strict mode",
              file=sys.stderr)
        return EXIT_DATA
    if args.format == "json":
        print(json.dumps(report_to_dict(report), sort_keys=True))
    else:
        sys.stdout.write(render_report_tsv(report))
    return EXIT_OK


def _local_measure_rows() -> list[dict]:
    rows = []
    for info in list_measures():
        rows.append({
            "id": info.id,
            "polarity": info.polarity.value,
            "symmetric": info.symmetric,
            "associations": list(info.associations),
            "default_association": info.default_association,
            "parameters": list(info.parameters),
            "compositional": info.compositional,
            "aliases": list(info.aliases),
            "description": info.description,
        })
    return rows


def _measure_table(rows: list[dict]) -> str:
    header = ["measure", "polarity", "sym", "assoc", "pcm", "parameters", "aliases"]
    table = [header]
    for row in rows:
        assoc = ",".join(
            a + ("*" if a == row["default_association"] else "")
            for a in row["associations"]
        )
        table.append([
            row["id"],
            row["polarity"],
            "yes" if row["symmetric"] else "no",
            assoc,
            row["compositional"] or "-",
            ",".join(row["parameters"]) or "-",
            ",".join(row["aliases"]) or "-",
        ])
    widths = [max(len(line[col]) for line in table) for col in range(len(header))]
    lines = []
    for line in table:
        lines.append(
            "  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
        )
    return "\n".join(lines)


def _cmd_list_measures(args: argparse.Namespace) -> int:
    if getattr(args, "server", None):
        rows = _request(args.server, "GET", "/measures")
    else:
        rows = _local_measure_rows()
    print(_measure_table(rows))
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    path = args.store or os.environ.get(STORE_ENV)
    if not path:
        raise _UsageError(f"no store given: pass --store or set ${STORE_ENV}")
    store = load_store(path)
    print(f"serving {path}: {len(store.vocab)} words on "
          f"{args.host}:{args.port}", file=sys.stderr)
    uvicorn.run(create_app(store), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


_DISPATCH = {
    "build": _cmd_build,
    "sim": _cmd_sim,
    "neighbors": _cmd_neighbors,
    "eval": _cmd_eval,
    "list-measures": _cmd_list_measures,
    "serve": _cmd_serve,
}


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except _UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DistsimError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
