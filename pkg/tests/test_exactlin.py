from griess.exactlin import F2Matrix, QMatrix, SparseSolver, f2_row_space_members
from griess.ratio import Q

import pytest


class TestQMatrix:
    def test_rank_of_identity(self):
        assert QMatrix.identity(5).rank() == 5

    def test_rank_of_zero(self):
        assert QMatrix.zero(3, 4).rank() == 0

    def test_rank_with_dependent_row(self):
        m = QMatrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
        assert m.rank() == 2
        assert m.rank_bareiss() == 2

    def test_rank_bareiss_with_fractions(self):
        m = QMatrix([[Q(1, 2), Q(1, 3)], [Q(1, 5), Q(2, 15)]])
        assert m.rank() == m.rank_bareiss() == 1

    def test_kernel_annihilates(self):
        m = QMatrix([[1, 2, 3], [4, 5, 6]])
        basis = m.kernel_basis()
        assert len(basis) == 1
        assert m.mul_vector(basis[0]) == [0, 0]

    def test_solve_unique(self):
        m = QMatrix([[2, 0], [1, 3]])
        x = m.solve([4, 8])
        assert x is not None
        assert m.mul_vector(x) == [4, 8]

    def test_solve_inconsistent(self):
        m = QMatrix([[1, 1], [1, 1]])
        assert m.solve([1, 2]) is None

    def test_solve_underdetermined_picks_a_solution(self):
        m = QMatrix([[1, 1, 1]])
        x = m.solve([3])
        assert m.mul_vector(x) == [3]

    def test_transpose_rank_invariant(self):
        m = QMatrix([[1, 2], [3, 4], [5, 6]])
        assert m.rank() == m.transpose().rank()

    def test_immutable(self):
        m = QMatrix([[1]])
        with pytest.raises(AttributeError):
            m.rows = 2

    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            QMatrix([[1, 2], [3]])


class TestSparseSolver:
    def test_matches_dense_solve(self):
        m = QMatrix([[2, 1, 0], [0, 1, 4], [1, 0, 1]])
        rhs = [Q(5), Q(9), Q(3)]
        solver = SparseSolver(3)
        for row, b in zip(m.entries, rhs):
            assert solver.add_equation(
                {j: v for j, v in enumerate(row) if v != 0}, b)
        assert solver.solution() == m.solve(rhs)

    def test_redundant_equation_consistent(self):
        solver = SparseSolver(2)
        assert solver.add_equation({0: 1, 1: 1}, 2)
        assert solver.add_equation({0: 2, 1: 2}, 4)
        assert solver.rank == 1
        assert solver.solution() is None

    def test_inconsistent_detected(self):
        solver = SparseSolver(2)
        assert solver.add_equation({0: 1, 1: 1}, 2)
        assert not solver.add_equation({0: 1, 1: 1}, 3)

    def test_rank_stops_growing(self):
        solver = SparseSolver(2)
        solver.add_equation({0: 1}, 1)
        solver.add_equation({1: 3}, 6)
        assert solver.rank == 2
        assert solver.solution() == [1, 2]


class TestF2Matrix:
    def test_rank(self):
        m = F2Matrix(3, [0b101, 0b011, 0b110])
        assert m.rank() == 2

    def test_rref_unique_pivots(self):
        m = F2Matrix(4, [0b1100, 0b0110, 0b1010])
        reduced = m.rref_bits()
        highs = [b.bit_length() - 1 for b in reduced]
        assert len(set(highs)) == len(reduced)

    def test_row_space_size(self):
        m = F2Matrix(3, [0b101, 0b011])
        members = f2_row_space_members(m)
        assert len(set(members)) == 4

    def test_row_space_guard(self):
        m = F2Matrix(30, [1 << i for i in range(30)])
        with pytest.raises(ValueError):
            list(m.row_space_members())

    def test_row_exceeding_cols_rejected(self):
        with pytest.raises(ValueError):
            F2Matrix(2, [0b100])
