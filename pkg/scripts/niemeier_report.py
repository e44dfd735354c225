#!/usr/bin/env python3
"""Print the rank-24 catalog with exact counts, build the associative
subalgebra for every type-A entry, and summarize both table checks."""

import time

from griess.niemeier import (catalog, lemma_4_2_subalgebra,
                             table1_consistency, table2_consistency)
from griess.ratio import q_str

print(f"{'name':10s} {'k':>2} {'h':>3} {'count':>24}  mass")
for e in catalog():
    print(f"{e.name:10s} {e.k:2d} {e.coxeter or 0:3d} {e.count:24d}  "
          f"{q_str(e.mass)}")

print("\nassociative subalgebras (type-A entries):")
for e in catalog():
    if e.is_leech or any(c.family != "A" for c in e.components):
        continue
    t0 = time.perf_counter()
    rep = lemma_4_2_subalgebra(e)
    print(f"  {e.name:8s} dimension {rep.checks['dimension']:3d} = 24+{e.k:<2d}"
          f"  associative={rep.checks['associative']}"
          f"  ({time.perf_counter() - t0:.1f}s)")

for con in (table1_consistency(), table2_consistency()):
    n_ok = sum(1 for _, ok, _ in con.clauses if ok)
    print(f"\n{con.target}: {n_ok}/{len(con.clauses)} clauses pass "
          f"-> {'PASS' if con.passed else 'FAIL'}")
