#!/usr/bin/env python3
"""Tabulate the idempotent central charges of the chain decomposition for
A_1 through A_24: the discrete-series values plus the parafermion tail."""

from griess.ratio import q_str
from griess.rootalgebra import build_A, coset_chain_decompose
from griess.rootsys import build

for l in range(1, 25):
    dec = coset_chain_decompose(build_A(build(f"A{l}")))
    charges = ", ".join(q_str(c) for c in dec.charges)
    print(f"A_{l:<2d}: {charges}")
