"""List corpus pairs whose checks fail, with witnesses, plus the diameter profile.

    python scripts/survey_failures.py [--report corpus_report.json]
"""

import argparse
from collections import Counter

from classgraph import io
from classgraph.harness import run_corpus


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--report", help="reuse an existing report instead of rerunning")
    args = ap.parse_args()
    report = io.read_json(args.report) if args.report else run_corpus()

    diam = Counter()
    for p in report["pairs"]:
        cg = p.get("class_graph")
        if cg and cg["n_components"] == 1:
            diam[cg["diameters"][0]] += 1
        for c in p["checks"]:
            if c["status"] == "fail":
                print(f"{p['pair']:<28} {p['fingerprint']}  {c['check']}")
                print(f"    {c['witness']}")
    print("connected diameters:", dict(sorted(diam.items())))
    print("far-class pairs:", [p["pair"] for p in report["pairs"]
                               if any(c["check"] == "far_M_abelian_primes" and c["status"] == "pass"
                                      for c in p["checks"])])


if __name__ == "__main__":
    main()
