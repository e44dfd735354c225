"""Exact linear algebra over the rationals and over GF(2).

QMatrix is a dense matrix of rationals with exact rank / kernel / solve.
Two independent elimination routines are provided (plain rational Gauss and
fraction-free Bareiss) so ranks can be cross-checked.  F2Matrix packs rows
as bitmasks.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .ratio import ONE, Q, ZERO


class QMatrix:
    """Immutable dense rational matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        ent = tuple(tuple(Q(x) for x in row) for row in entries)
        if ent and any(len(r) != len(ent[0]) for r in ent):
            raise ValueError("ragged rows")
        object.__setattr__(self, "entries", ent)
        object.__setattr__(self, "rows", len(ent))
        object.__setattr__(self, "cols", len(ent[0]) if ent else 0)

    def __setattr__(self, *a):
        raise AttributeError("QMatrix is immutable")

    def __eq__(self, other):
        return isinstance(other, QMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "QMatrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    def mul_vector(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((r[j] * v[j] for j in range(self.cols)), ZERO) for r in self.entries]

    def transpose(self) -> "QMatrix":
        return QMatrix(list(zip(*self.entries))) if self.rows else QMatrix([])

    def rref(self) -> tuple[list[list], list[int]]:
        """Reduced row echelon form; returns (rows, pivot column indices)."""
        m = [list(r) for r in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = ONE / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        return m, pivots

    def rank(self) -> int:
        """Exact rank via rational Gaussian elimination."""
        return len(self.rref()[1])

    def rank_bareiss(self) -> int:
        """Exact rank via fraction-free Bareiss elimination (cross-check)."""
        # Clear denominators row by row; scaling rows does not change rank.
        m = [[0] * self.cols for _ in range(self.rows)]
        for i, row in enumerate(self.entries):
            d = 1
            for x in row:
                d = d * x.denominator // _gcd(d, x.denominator)
            m[i] = [int(x * d) for x in row]
        rank = 0
        prev = 1
        rows, cols = len(m), self.cols
        r = 0
        for c in range(cols):
            pr = next((i for i in range(r, rows) if m[i][c] != 0), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            for i in range(r + 1, rows):
                for j in range(c + 1, cols):
                    m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
                m[i][c] = 0
            prev = m[r][c]
            rank += 1
            r += 1
            if r == rows:
                break
        return rank

    def kernel_basis(self) -> list[list]:
        """Basis of the right null space; each v satisfies M v = 0 exactly."""
        m, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [ZERO] * self.cols
            v[fc] = ONE
            for r, pc in enumerate(pivots):
                v[pc] = -m[r][fc]
            basis.append(v)
        return basis

    def solve(self, rhs: Sequence) -> list | None:
        """One exact solution of M x = rhs, or None if inconsistent."""
        if len(rhs) != self.rows:
            raise ValueError("dimension mismatch")
        aug = QMatrix([list(r) + [Q(b)] for r, b in zip(self.entries, rhs)])
        m, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [ZERO] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = m[r][self.cols]
        return x


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class SparseSolver:
    """Incremental sparse exact elimination for large linear systems.

    Equations are sparse dicts col -> coefficient plus a rhs.  Rows are kept
    reduced against each other, so feeding can stop as soon as the rank
    reaches the number of unknowns.
    """

    def __init__(self, n: int):
        self.n = n
        self.pivot_rows: dict[int, tuple[dict, object]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def add_equation(self, row: dict, rhs) -> bool:
        """Reduce and insert one equation.  Returns False on inconsistency."""
        row = {c: Q(v) for c, v in row.items() if v != 0}
        rhs = Q(rhs)
        # Pivot rows are mutually reduced, so each reduction introduces only
        # non-pivot columns and a single pass suffices.
        for c in sorted(set(row) & set(self.pivot_rows)):
            if c not in row:
                continue
            prow, prhs = self.pivot_rows[c]
            f = row[c]
            for pc, pv in prow.items():
                row[pc] = row.get(pc, ZERO) - f * pv
                if row[pc] == 0:
                    del row[pc]
            rhs -= f * prhs
        row = {c: v for c, v in row.items() if v != 0}
        if not row:
            return rhs == 0
        pc = min(row)
        inv = ONE / row[pc]
        row = {c: v * inv for c, v in row.items()}
        rhs *= inv
        for oc, (orow, orhs) in list(self.pivot_rows.items()):
            if pc in orow:
                f = orow[pc]
                for c, v in row.items():
                    orow[c] = orow.get(c, ZERO) - f * v
                    if orow[c] == 0:
                        del orow[c]
                self.pivot_rows[oc] = (orow, orhs - f * rhs)
        self.pivot_rows[pc] = (row, rhs)
        return True

    def solution(self) -> list | None:
        """The unique solution if rank == n, else None."""
        if self.rank != self.n:
            return None
        x = [ZERO] * self.n
        for c, (_, rhs) in self.pivot_rows.items():
            x[c] = rhs
        return x


class F2Matrix:
    """Matrix over GF(2); each row stored as a bitmask (bit j = column j)."""

    __slots__ = ("rows", "cols", "bits")

    def __init__(self, cols: int, rows_bits: Iterable[int]):
        object.__setattr__(self, "cols", cols)
        bits = tuple(int(b) for b in rows_bits)
        if any(b >> cols for b in bits):
            raise ValueError("row exceeds column count")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "rows", len(bits))

    def __setattr__(self, *a):
        raise AttributeError("F2Matrix is immutable")

    def rref_bits(self) -> list[int]:
        """Reduced rows with distinct leading bits, highest bit first."""
        basis: list[int] = []
        for b in self.bits:
            for p in basis:
                b = min(b, b ^ p)
            if b:
                basis.append(b)
                basis.sort(reverse=True)
        # Back-substitute so each pivot occurs in exactly one row.
        for i, p in enumerate(basis):
            hi = p.bit_length() - 1
            for j in range(len(basis)):
                if j != i and (basis[j] >> hi) & 1:
                    basis[j] ^= p
        return sorted(basis, reverse=True)

    def rank(self) -> int:
        return len(self.rref_bits())

    def row_space_members(self) -> Iterable[int]:
        """All 2^rank vectors of the row space.  Guarded against blow-up."""
        if self.rows > 24:
            raise ValueError("row space enumeration limited to 24 rows")
        basis = self.rref_bits()
        for mask in range(1 << len(basis)):
            v = 0
            for i, b in enumerate(basis):
                if (mask >> i) & 1:
                    v ^= b
            yield v


def f2_row_space_members(m: F2Matrix) -> list[int]:
    return list(m.row_space_members())
