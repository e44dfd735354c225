import pytest

from griess.rootsys import SimpleType, build, dot, parse_spec

from conftest import system


class TestParseSpec:
    def test_single(self):
        assert parse_spec("A2") == [SimpleType("A", 2)]

    def test_power(self):
        assert parse_spec("A1^24") == [SimpleType("A", 1)] * 24

    def test_star_and_sum(self):
        out = parse_spec("A2*12+E6")
        assert out == [SimpleType("A", 2)] * 12 + [SimpleType("E", 6)]

    @pytest.mark.parametrize("bad", ["X9", "A0", "D3", "E9", "", "A2^"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_spec(bad)


class TestCounts:
    @pytest.mark.parametrize("spec,l,N,h", [
        ("A1", 1, 1, 2), ("A2", 2, 3, 3), ("A3", 3, 6, 4),
        ("D4", 4, 12, 6), ("D5", 5, 20, 8), ("E6", 6, 36, 12),
        ("E7", 7, 63, 18), ("E8", 8, 120, 30),
    ])
    def test_simple(self, spec, l, N, h):
        rs = system(spec)
        assert (rs.l, rs.N) == (l, N)
        assert rs.h_per_component == [h]
        assert 2 * rs.N == sum(c.rank * c.coxeter for c in rs.components)

    def test_semisimple_blocks(self):
        rs = system("A1+A2")
        assert rs.l == 3 and rs.N == 4
        for i in rs.component_root_slices[0]:
            for j in rs.component_root_slices[1]:
                assert rs.rel[i][j] == 2


class TestGeometry:
    @pytest.mark.parametrize("spec", ["A3", "D4", "E6"])
    def test_norms_and_inner_products(self, spec):
        rs = system(spec)
        for i, r in enumerate(rs.positive_roots):
            assert dot(r, r) == 2
            for j in range(i + 1, rs.N):
                assert dot(r, rs.positive_roots[j]) in (-1, 0, 1)

    def test_delta_partition_covers(self):
        rs = system("D4")
        for alpha in rs.positive_roots:
            d0, d1, d2 = rs.delta_partition(alpha)
            assert len(d0) == 1 and d0[0] == alpha
            assert len(d0) + len(d1) + len(d2) == rs.N

    @pytest.mark.parametrize("spec", ["A2", "A4", "D4", "E6"])
    def test_delta1_size(self, spec):
        rs = system(spec)
        h = rs.components[0].coxeter
        for alpha in rs.positive_roots:
            assert len(rs.delta_partition(alpha)[1]) == 2 * h - 4

    def test_triple_symmetric(self):
        rs = system("A2")
        a, b = rs.positive_roots[0], rs.positive_roots[1]
        g = rs.triple(a, b)
        assert rs.triple(b, a) == g
        # any two of the three determine the remaining one
        assert rs.triple(a, g) == b
        assert rs.triple(b, g) == a

    def test_triple_rejects_orthogonal(self):
        rs = system("A1^2")
        with pytest.raises(ValueError):
            rs.triple(rs.positive_roots[0], rs.positive_roots[1])


class TestChain:
    def test_subsystem_chain_lengths(self):
        chain = system("A3").subsystem_chain()
        assert [c.N for c in chain] == [1, 3, 6]

    def test_chain_roots_nested(self):
        from griess.ratio import ZERO
        chain = system("A5").subsystem_chain()
        for small, big in zip(chain, chain[1:]):
            padded = {r + (ZERO,) for r in small.positive_roots}
            assert padded <= set(big.positive_roots)

    def test_chain_requires_simple_type_a(self):
        with pytest.raises(ValueError):
            system("D4").subsystem_chain()
        with pytest.raises(ValueError):
            system("A1^2").subsystem_chain()


def test_spec_string_roundtrip():
    for spec in ("A2", "D4", "A1^24", "A2^12"):
        assert build(spec).spec_string() == spec


def test_e7_e6_are_e8_subsystems():
    e8 = {r for r in system("E8").positive_roots}
    for spec, n in (("E7", 63), ("E6", 36)):
        rs = system(spec)
        assert rs.N == n
        assert all(r in e8 for r in rs.positive_roots)
