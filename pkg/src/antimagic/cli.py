"""Command line front end.

Subcommands: ``generate`` (emit a labeling as JSON, TSV, or DOT, optionally
streamed), ``verify`` (check a labeling file), ``properties`` (structural sum
orderings), ``search`` (exhaustive or random oracle over small graphs), and
``bench`` (streaming verification with resource accounting).

Exit codes: 0 success / antimagic, 1 not antimagic or a failed property,
2 invalid input, 3 unparseable file, 4 size refusal.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys

from .errors import FormatError, InvalidParameterError, SizeRefusalError
from .families import FAMILIES, LATTICE, PRISM, FamilySpec, build_graph
from .formats import (
    labeling_to_dot,
    labeling_to_json,
    labeling_tsv_lines,
    parse_labeling,
)
from .labelings import label
from .oracle import exhaustive_search, random_search
from .stream import DEFAULT_CHUNK_TARGET, StreamStats, iter_labeled_edges, stream_verify
from .verification import check_antimagic, check_paper_properties

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2
EXIT_UNPARSEABLE = 3
EXIT_REFUSED = 4


def _spec_from(family, m, n):
    if family in (LATTICE, PRISM):
        if n is None:
            raise InvalidParameterError(f"{family} takes two sizes: m and n")
        spec = FamilySpec(family, m, n)
    else:
        if n is not None:
            raise InvalidParameterError(f"{family} takes a single size m")
        spec = FamilySpec(family, m)
    spec.validate()
    return spec


def _open_output(path):
    if path is None or path == "-":
        return contextlib.nullcontext(sys.stdout)
    base = os.environ.get("ANTIMAGIC_OUTPUT_DIR")
    if base and not os.path.isabs(path):
        path = os.path.join(base, path)
    return open(path, "w", encoding="utf-8")


def _read_input(path):
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _cmd_generate(args):
    spec = _spec_from(args.family, args.m, args.n)
    if args.by_label and args.format != "tsv":
        raise InvalidParameterError("--by-label applies to tsv output only")
    if args.stream:
        if args.format != "tsv":
            raise InvalidParameterError("--stream emits tsv only")
        if spec.family not in (LATTICE, PRISM):
            raise InvalidParameterError("--stream covers lattice and prism specs only")
    with _open_output(args.output) as out:
        if args.stream:
            for r1, c1, r2, c2, value in iter_labeled_edges(spec, by_label=args.by_label):
                out.write(f"{r1}\t{c1}\t{r2}\t{c2}\t{value}\n")
        else:
            lab = label(spec)
            if args.format == "json":
                out.write(labeling_to_json(lab))
            elif args.format == "tsv":
                for line in labeling_tsv_lines(lab, by_label=args.by_label):
                    out.write(line + "\n")
            else:
                out.write(labeling_to_dot(lab))
    return EXIT_OK


def _cmd_verify(args):
    lab = parse_labeling(_read_input(args.input))
    verdict = check_antimagic(lab)
    if args.format == "json":
        print(json.dumps(verdict.to_json_dict(), indent=2))
    else:
        for line in verdict.to_text_lines():
            print(line)
    return EXIT_OK if verdict.antimagic else EXIT_NEGATIVE


def _cmd_properties(args):
    if args.input is not None:
        if args.family is not None:
            raise InvalidParameterError("give either a family spec or --input, not both")
        lab = parse_labeling(_read_input(args.input))
        spec = lab.graph.spec
        if spec is None:
            raise InvalidParameterError("input has no family header; properties need one")
    else:
        if args.family is None or args.m is None:
            raise InvalidParameterError("properties needs a family and size, or --input")
        spec = _spec_from(args.family, args.m, args.n)
        lab = label(spec)
    report = check_paper_properties(spec, lab)
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        for line in report.to_text_lines():
            print(line)
    return EXIT_OK if report.all_passed else EXIT_NEGATIVE


def _cmd_search(args):
    spec = _spec_from(args.family, args.m, args.n)
    graph = build_graph(spec)
    if args.random is not None:
        if args.prune:
            raise InvalidParameterError("--prune applies to exhaustive search only")
        result = random_search(graph, args.random, args.seed)
        mode = "random"
    else:
        result = exhaustive_search(graph, reference=label(spec), prune=args.prune)
        mode = "exhaustive-pruned" if args.prune else "exhaustive"
    first = None
    if result.first_antimagic is not None:
        assignment = result.first_antimagic.assignment
        first = [[*u, *v, assignment[(u, v)]] for u, v in result.first_antimagic.graph.edges]
    doc = {
        "family": spec.family,
        "m": spec.m,
        "n": spec.n if spec.family in (LATTICE, PRISM) else None,
        "vertices": spec.vertex_count(),
        "edges": spec.edge_count(),
        "mode": mode,
        "trials": args.random,
        "seed": args.seed if args.random is not None else None,
        "total_labelings_checked": result.total_labelings_checked,
        "antimagic_count": result.antimagic_count,
        "contains_constructed": result.contains_constructed,
        "first_antimagic": first,
    }
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def _cmd_bench(args):
    spec = _spec_from(args.family, args.m, args.n)
    stats = StreamStats()
    verdict = stream_verify(spec, chunk_target=args.chunk_target, stats=stats)
    for line in verdict.to_text_lines():
        print(line)
    print(f"edges labeled: {stats.edges_labeled}")
    print(f"sums checked: {stats.sums_checked}")
    print(f"peak live values: {stats.peak_live_values}")
    print(f"spill files: {stats.spill_files}")
    print(f"elapsed seconds: {stats.elapsed_seconds:.3f}")
    return EXIT_OK if verdict.antimagic else EXIT_NEGATIVE


def _add_spec_arguments(sub, optional=False):
    if optional:
        sub.add_argument("family", nargs="?", choices=FAMILIES, default=None)
        sub.add_argument("m", nargs="?", type=int, default=None)
    else:
        sub.add_argument("family", choices=FAMILIES)
        sub.add_argument("m", type=int)
    sub.add_argument("n", nargs="?", type=int, default=None)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="antimagic",
        description="Constructive antimagic edge labelings of paths, cycles, grids, and prisms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a labeling")
    _add_spec_arguments(gen)
    gen.add_argument("--format", choices=("json", "tsv", "dot"), default="json")
    gen.add_argument("--stream", action="store_true", help="closed-form tsv, no materialization")
    gen.add_argument("--by-label", action="store_true", help="order tsv rows by label")
    gen.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    gen.set_defaults(handler=_cmd_generate)

    ver = sub.add_parser("verify", help="check a labeling file (JSON or TSV, - for stdin)")
    ver.add_argument("input", nargs="?", default="-")
    ver.add_argument("--format", choices=("text", "json"), default="text")
    ver.set_defaults(handler=_cmd_verify)

    props = sub.add_parser("properties", help="check structural sum orderings")
    _add_spec_arguments(props, optional=True)
    props.add_argument("--input", default=None, help="labeling file with a family header")
    props.add_argument("--format", choices=("text", "json"), default="text")
    props.set_defaults(handler=_cmd_properties)

    search = sub.add_parser("search", help="oracle search over all or random labelings")
    _add_spec_arguments(search)
    search.add_argument("--random", type=int, default=None, metavar="TRIALS")
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--prune", action="store_true", help="skip provably dead subtrees")
    search.set_defaults(handler=_cmd_search)

    bench = sub.add_parser("bench", help="streaming verification with resource accounting")
    _add_spec_arguments(bench)
    bench.add_argument("--chunk-target", type=int, default=DEFAULT_CHUNK_TARGET)
    bench.set_defaults(handler=_cmd_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INVALID
    try:
        return args.handler(args)
    except BrokenPipeError:
        return EXIT_OK
    except InvalidParameterError as exc:
        print(f"antimagic: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except FormatError as exc:
        print(f"antimagic: {exc}", file=sys.stderr)
        return EXIT_UNPARSEABLE
    except SizeRefusalError as exc:
        print(f"antimagic: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except OSError as exc:
        print(f"antimagic: {exc}", file=sys.stderr)
        return EXIT_INVALID


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
