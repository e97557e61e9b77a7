"""Command-line interface: ``classgraph <command> ...``.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .constructions import FAMILIES, construct
from .core import conjugacy_classes_in, normal_subgroups
from .errors import ClassGraphError, InputError
from .fp import DEFAULT_MAX_COSETS, realize_text
from .graphs import PrimeGraph, build_class_graph
from .group import FiniteGroup, Subgroup
from .harness import CorpusSpec, corpus_ok, default_spec, run_corpus, run_golden_examples, verify_pair


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _resolve_normal(G: FiniteGroup, ref: str) -> tuple[Subgroup, str]:
    if ref.lstrip("-").isdigit():
        normals = normal_subgroups(G)
        k = int(ref)
        if not 0 <= k < len(normals):
            raise InputError(f"normal subgroup index {k} out of range 0..{len(normals) - 1}")
        return normals[k], f"N{k}"
    path, _, name = ref.partition("#")
    N = io.subgroup_from_json(G, io.read_json(path), name or None)
    return N, name or Path(path).stem


def cmd_construct(args) -> int:
    G, subs = construct(args.family, p=args.p, n=args.n, s=args.s, m=args.m)
    _emit(io.dumps(io.group_to_json(G)), args.output)
    sidecar = args.subgroups or (str(Path(args.output).with_suffix("")) + ".subgroups.json" if args.output else None)
    if sidecar:
        io.write_json(sidecar, io.subgroups_to_json(G, subs))
    print(f"{G.label}: order {G.order}; subgroups {', '.join(f'{k}={v.order}' for k, v in sorted(subs.items())) or '-'}",
          file=sys.stderr)
    return 0


def cmd_fp_realize(args) -> int:
    text = args.presentation
    candidate = Path(text)
    if len(text) < 4096 and candidate.is_file():
        text = candidate.read_text(encoding="utf-8")
    G = realize_text(text, max_cosets=args.max_cosets, label=args.label)
    _emit(io.dumps(io.group_to_json(G)), args.output)
    print(f"{G.label}: order {G.order}", file=sys.stderr)
    return 0


def cmd_normals(args) -> int:
    G = io.load_group(args.group)
    rows = []
    for k, N in enumerate(normal_subgroups(G)):
        sizes = sorted(c.size for c in conjugacy_classes_in(G, N))
        rows.append({"index": k, "order": N.order, "class_sizes": sizes, "elements": N.sorted.tolist()})
    if args.json:
        io.write_json(args.json, rows)
    for r in rows:
        print(f"{r['index']}\torder={r['order']}\tclass_sizes={r['class_sizes']}")
    return 0


def cmd_graph(args) -> int:
    G = io.load_group(args.group)
    N, _ = _resolve_normal(G, args.normal)
    graph = build_class_graph(G, N)
    prime = PrimeGraph(c.size for c in conjugacy_classes_in(G, N))
    if args.dot:
        Path(args.dot).write_text(graph.to_dot(), encoding="utf-8")
    if args.prime_dot:
        Path(args.prime_dot).write_text(prime.to_dot(), encoding="utf-8")
    report = {"class_graph": graph.to_json(), "prime_graph": prime.to_json()}
    if args.json:
        io.write_json(args.json, report)
    print(f"vertices={graph.n_vertices} components={graph.n_components} diameters={graph.diameters} "
          f"complete={graph.complete} primes={prime.vertices}")
    return 0


def cmd_verify(args) -> int:
    G = io.load_group(args.group)
    N, name = _resolve_normal(G, args.normal)
    rep = verify_pair(G, N, pair_id=f"{G.label}/{name}")
    if args.json:
        io.write_json(args.json, rep.to_json())
    for c in rep.checks:
        print(f"{c.as_dict()['status']:8s} {c.name}")
    print(f"{rep.pair_id}: {rep.status}")
    return 0 if rep.status == "pass" else 1


def cmd_corpus_run(args) -> int:
    spec = CorpusSpec.from_json(io.read_json(args.spec)) if args.spec else default_spec()
    report = run_corpus(spec, jobs=args.jobs, timings=args.timings)
    _emit(io.dumps(report), args.json)
    s = report["summary"]
    print(f"pairs={s['n_pairs']} pass={s['status']['pass']} fail={s['status']['fail']} "
          f"skipped={s['status']['skipped']} failing_checks={s['failing_checks']}", file=sys.stderr)
    return 0 if corpus_ok(report) else 1


def cmd_examples(args) -> int:
    results = run_golden_examples()
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name} {r.details}")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="classgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named group family")
    p.add_argument("family", choices=sorted(FAMILIES))
    for flag in ("p", "n", "s", "m"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("-o", "--output", help="group JSON (default stdout)")
    p.add_argument("--subgroups", help="sidecar JSON for distinguished subgroups")
    p.set_defaults(func=cmd_construct)

    fp = sub.add_parser("fp", help="finitely presented groups")
    fpsub = fp.add_subparsers(dest="fp_command", required=True)
    p = fpsub.add_parser("realize", help="Todd-Coxeter over the trivial subgroup")
    p.add_argument("--presentation", required=True, help="file or inline text")
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    p.add_argument("--label", default="fp")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fp_realize)

    p = sub.add_parser("normals", help="list normal subgroups with indices")
    p.add_argument("group")
    p.add_argument("--json")
    p.set_defaults(func=cmd_normals)

    p = sub.add_parser("graph", help="class graph and prime graph of (G, N)")
    p.add_argument("group")
    p.add_argument("--normal", required=True, help="index, subgroup file, or sidecar FILE#NAME")
    p.add_argument("--dot")
    p.add_argument("--prime-dot")
    p.add_argument("--json")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run every check on (G, N)")
    p.add_argument("group")
    p.add_argument("--normal", required=True)
    p.add_argument("--json")
    p.set_defaults(func=cmd_verify)

    corpus = sub.add_parser("corpus", help="corpus sweeps")
    csub = corpus.add_subparsers(dest="corpus_command", required=True)
    p = csub.add_parser("run")
    p.add_argument("--spec")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", help="report path (default stdout)")
    p.add_argument("--timings", action="store_true", help="include per-pair seconds (not reproducible)")
    p.set_defaults(func=cmd_corpus_run)

    ex = sub.add_parser("examples", help="golden examples")
    esub = ex.add_subparsers(dest="examples_command", required=True)
    p = esub.add_parser("reproduce")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ClassGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
