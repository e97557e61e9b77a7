"""Recompute the worked examples and print one line each."""

import sys

from classgraph.harness import run_golden_examples


def main() -> int:
    results = run_golden_examples()
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}")
        for k, v in r.details.items():
            print(f"    {k}: {v}")
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
