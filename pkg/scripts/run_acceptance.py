#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Run every identity sweep at desk scale and print one summary line per sweep.

Full reports are written to reports/<name>.json. Exit code is 1 if any sweep
fails (the sign2 report fails only on the halved-exponent formula).
"""

import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from config import DEFAULT_JOBS, PROJECT_ROOT, log
from groups import parse_group
from identities import (
    report_sign2,
    verify_color_products,
    verify_main,
    verify_main2,
    verify_rr,
    verify_rr_general,
)


def sweeps(jobs: int):
    z2, z3, z6 = parse_group("Z2"), parse_group("Z3"), parse_group("Z6ex")
    v4, s3 = parse_group("V4"), parse_group("S3")
    yield "rr-Z2", lambda: verify_rr(5, z2, jobs=jobs)
    yield "rr-Z3", lambda: verify_rr(3, z3, jobs=jobs)
    yield "rr-general-S3", lambda: verify_rr_general(3, s3, jobs=jobs)
    for a in (1, 5, 2, 3):
        yield f"main-Z6-a{a}", lambda a=a: verify_main(2, z6, (a,), jobs=jobs)
    yield "main-V4-c", lambda: verify_main(3, v4, (1, 1), jobs=jobs)
    for a in (0, 1):
        yield f"main2-S3-a{a}", lambda a=a: verify_main2(3, s3, (a,), jobs=jobs)
    for spec, n in (("Z2", 4), ("Z3", 4), ("Z4", 4), ("Z2xZ2", 4), ("Z5", 3), ("Z6", 3)):
        model = parse_group(spec)
        yield f"rt-{spec}", lambda model=model, n=n: verify_color_products(n, model, jobs=jobs)
    yield "sign2", lambda: report_sign2(5)


def main() -> int:
    jobs = int(sys.argv[1]) if len(sys.argv) > 1 else DEFAULT_JOBS
    out_dir = PROJECT_ROOT / "reports"
    out_dir.mkdir(exist_ok=True)
    failed = []
    started = time.perf_counter()
    for name, run in sweeps(jobs):
        report = run()
        (out_dir / f"{name}.json").write_text(
            json.dumps(report.to_dict(), ensure_ascii=False, indent=2), encoding="utf-8"
        )
        print(f"{name:<16} {report.verdict:<5} cases={report.cases:<6} "
              f"failures={len(report.failures):<4} {report.elapsed:.2f}s")
        if not report.passed:
            failed.append(name)
    log("DONE", f"{len(failed)} failing sweep(s) in {time.perf_counter() - started:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
