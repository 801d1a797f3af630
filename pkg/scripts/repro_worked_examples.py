#!/usr/bin/env python3
"""Recompute all golden worked examples and print their reports."""

import json
import sys

from coxex.repro import EXAMPLES, run_example


def main() -> int:
    failed = 0
    for example_id in sorted(EXAMPLES):
        result = run_example(example_id)
        print(f"== {example_id} ==")
        print(json.dumps(result.to_json_dict(), indent=1, sort_keys=True))
        if not result.ok:
            failed += 1
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
