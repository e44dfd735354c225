#!/usr/bin/env python3
"""Run the full default verification suite and print every report.

Equivalent to `griess verify all`; exits 1 if anything fails.
"""

import sys
import time

from griess.verify import run_target

t0 = time.perf_counter()
reports = run_target("all")
ok = all(r.passed for r in reports)
for r in reports:
    print(r.format_text())
print(f"\noverall: {'PASS' if ok else 'FAIL'} "
      f"({len(reports)} reports, {time.perf_counter() - t0:.1f}s)")
sys.exit(0 if ok else 1)
