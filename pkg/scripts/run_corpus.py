"""Run the verification sweep and write the JSON report.

    python scripts/run_corpus.py --out report.json [--spec spec.json] [--jobs 2]
"""

import argparse
import sys

from classgraph import io
from classgraph.harness import CorpusSpec, corpus_ok, default_spec, run_corpus


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--spec", help="corpus spec JSON (default: built-in corpus)")
    ap.add_argument("--out", default="corpus_report.json")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    spec = CorpusSpec.from_json(io.read_json(args.spec)) if args.spec else default_spec()
    report = run_corpus(spec, jobs=args.jobs)
    with open(args.out, "w") as fh:
        fh.write(io.dumps(report))
    s = report["summary"]
    print(f"pairs: {s['n_pairs']}  status: {s['status']}")
    print(f"verdicts: {s['verdicts']}")
    print(f"max connected diameter: {s['max_connected_diameter']}")
    for name, count in s["failing_checks"].items():
        print(f"  failing {name}: {count}")
    for c in s["corpus_checks"]:
        print(f"  corpus {c['check']}: {c['status']}")
    return 0 if corpus_ok(report) else 1


if __name__ == "__main__":
    sys.exit(main())
