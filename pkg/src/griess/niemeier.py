"""The 24 even unimodular rank-24 lattice types and their counting layer.

Covers: the catalog (components, common Coxeter number, masses), the
associative subalgebras of dimension 24+k obtained by pushing the chain
idempotents into the weight-2 algebra, the isotropic-extension product
formula with a brute-force check on small plus-type quadratic spaces over
GF(2), and the consistency identities for the two data tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .algebra import DecompositionReport
from .bplus import build_bplus, build_phi
from .exactlin import QMatrix
from .ratio import Q, ZERO, q_parse, q_str
from .rootalgebra import build_A, coset_chain_decompose, delta, \
    generalized_chain_decompose
from .rootsys import RootSystem, build, parse_spec

CO1_ORDER = 2**21 * 3**9 * 5**4 * 7**2 * 11 * 13 * 23


@dataclass(frozen=True)
class NiemeierEntry:
    name: str
    components: tuple  # SimpleType, with multiplicity
    mass: object  # rational

    @property
    def is_leech(self) -> bool:
        return not self.components

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def coxeter(self) -> int | None:
        return self.components[0].coxeter if self.components else None

    @property
    def count(self) -> int:
        """Number of rescaled copies inside the Leech lattice."""
        c = self.mass * CO1_ORDER
        assert c.denominator == 1
        return int(c)

    def root_system(self) -> RootSystem:
        if self.is_leech:
            raise ValueError("the Leech entry has an empty root system")
        return RootSystem(list(self.components))


def _data(name: str) -> dict:
    with resources.files("griess.data").joinpath(name).open() as f:
        return json.load(f)


def catalog() -> list[NiemeierEntry]:
    """All 24 entries, with rank/Coxeter invariants verified at load."""
    entries = []
    for raw in _data("niemeier.json")["entries"]:
        comps = tuple(t for spec in raw["components"] for t in parse_spec(spec))
        e = NiemeierEntry(raw["name"], comps, q_parse(raw["mass"]))
        if comps:
            if sum(t.rank for t in comps) != 24:
                raise AssertionError(f"{e.name}: component ranks must sum to 24")
            if len({t.coxeter for t in comps}) != 1:
                raise AssertionError(f"{e.name}: Coxeter numbers must agree")
        entries.append(e)
    if len(entries) != 24:
        raise AssertionError("catalog must have 24 entries")
    return entries


def catalog_entry(name: str) -> NiemeierEntry:
    for e in catalog():
        if e.name == name:
            return e
    raise KeyError(name)


def lemma_4_2_subalgebra(entry: NiemeierEntry,
                         chains: dict[int, list[list[int]]] | None = None,
                         ) -> DecompositionReport:
    """The associative subalgebra of dimension 24+k inside the weight-2
    algebra of the entry's root system.

    Per component of rank l the chain decomposition yields l+1 idempotents;
    their images under the isometric map are checked for linear
    independence and the span for associativity.  Components of type D/E
    need an explicit chain of simple-root index subsets in `chains`
    (keyed by component position); the map has a kernel there, so a dead
    or dependent image aborts with an error rather than being projected.
    """
    if entry.is_leech:
        raise ValueError("the Leech entry carries no root-system subalgebra")
    rs = entry.root_system()
    ra = build_A(rs)
    non_a = [i for i, c in enumerate(rs.components) if c.family != "A"]
    if non_a and not chains:
        raise ValueError(
            f"components {non_a} are not of type A; supply chains for them")
    if not non_a:
        dec = coset_chain_decompose(ra)
    else:
        # Assemble one global nested chain component by component: fully
        # grow each component's chain before starting the next, ending at
        # the full simple-root set, then peel idempotents off the identity.
        chain: list[list[int]] = []
        acc: list[int] = []
        for ci, comp in enumerate(rs.components):
            sl = list(rs.component_simple_slices[ci])
            if comp.family == "A":
                steps = [sl[:i] for i in range(1, comp.rank + 1)]
            else:
                steps = [list(s) for s in (chains or {}).get(ci, [])]
                if not steps or sorted(steps[-1]) != sorted(sl):
                    steps = steps + [sl]
            for s in steps:
                chain.append(acc + s)
            acc = acc + sl
        dec = generalized_chain_decompose(ra, chain)
    bp = build_bplus(rs)
    phi = build_phi(ra, bp)
    images = [phi.apply(e) for e in dec.idempotents]
    if any(e.is_zero() for e in images):
        raise AssertionError("an idempotent dies under the isometric map")
    expected_dim = 24 + entry.k
    if len(images) != expected_dim:
        raise AssertionError(
            f"expected {expected_dim} idempotents, got {len(images)}")
    if not bp.alg.is_associative_span(images):
        raise AssertionError("image span is not associative")
    charges = [e.central_charge() for e in images]
    return DecompositionReport(
        images, charges, f"{entry.name}: images in the weight-2 algebra",
        {"dimension": expected_dim, "associative": True})


# -- quadratic spaces over GF(2) ------------------------------------------


@dataclass(frozen=True)
class F2QuadSpace:
    """Plus-type quadratic space of even dimension 2m over GF(2).

    Hyperbolic basis: q(x) = sum over i of x_{2i} x_{2i+1} (mod 2).
    """

    dim: int

    def __post_init__(self):
        if self.dim % 2 or self.dim <= 0:
            raise ValueError("dimension must be even and positive")

    @property
    def witt_index(self) -> int:
        return self.dim // 2

    def q(self, v: int) -> int:
        total = 0
        for i in range(self.witt_index):
            total ^= (v >> (2 * i)) & (v >> (2 * i + 1)) & 1
        return total

    def b(self, u: int, v: int) -> int:
        """Polar form q(u+v) - q(u) - q(v)."""
        return self.q(u ^ v) ^ self.q(u) ^ self.q(v)


def lagrangian_extension_count(n: int) -> int:
    """Extensions of a codimension-n isotropic subspace to a maximal one:
    the product of 2^i + 1 for i < n (empty product = 1)."""
    if n < 0:
        raise ValueError("codimension must be non-negative")
    out = 1
    for i in range(n):
        out *= 2**i + 1
    return out


def brute_force_lagrangians(space: F2QuadSpace) -> int:
    """Count maximal totally isotropic subspaces by exhaustive extension.

    Subspaces are canonicalized by reduced row echelon form; every vector
    of every subspace is re-checked to be singular along the way.
    """
    if space.dim > 10:
        raise ValueError("brute force limited to dimension 10")
    m = space.witt_index
    nvec = 1 << space.dim
    singular = [v for v in range(1, nvec) if space.q(v) == 0]
    level: set[tuple[int, ...]] = {()}
    for _ in range(m):
        nxt: set[tuple[int, ...]] = set()
        for basis in level:
            members = _span(basis)
            for v in singular:
                if v in members:
                    continue
                if any(space.b(v, w) for w in basis):
                    continue
                nb = _rref_bits(basis + (v,))
                if any(space.q(x) for x in _span(nb)):
                    raise AssertionError("non-singular vector in extension")
                nxt.add(nb)
        level = nxt
    return len(level)


def _span(basis: tuple[int, ...]) -> set[int]:
    out = {0}
    for b in basis:
        out |= {x ^ b for x in out}
    return out


def _rref_bits(rows: tuple[int, ...]) -> tuple[int, ...]:
    basis: list[int] = []
    for r in rows:
        for p in basis:
            r = min(r, r ^ p)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    for i, p in enumerate(basis):
        hi = p.bit_length() - 1
        for j in range(len(basis)):
            if j != i and (basis[j] >> hi) & 1:
                basis[j] ^= p
    return tuple(sorted(basis, reverse=True))


# -- table consistency -----------------------------------------------------


@dataclass
class ConsistencyReport:
    target: str
    clauses: list = field(default_factory=list)  # (description, ok, detail)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.clauses)

    def add(self, desc: str, ok: bool, detail: str = ""):
        self.clauses.append((desc, bool(ok), detail))

    def to_json(self) -> dict:
        return {"target": self.target, "passed": self.passed,
                "clauses": [{"description": d, "passed": ok, "detail": x}
                            for d, ok, x in self.clauses]}


def table1_consistency() -> ConsistencyReport:
    """Each mass times |Co1| is a positive integer and the counts sum to
    the number of maximal totally isotropic subspaces in dimension 24."""
    rep = ConsistencyReport("table1")
    total = 0
    for e in catalog():
        c = e.mass * CO1_ORDER
        ok = c.denominator == 1 and c > 0
        rep.add(f"{e.name}: mass x |Co1| is a positive integer", ok, q_str(c))
        if ok:
            total += int(c)
    expected = lagrangian_extension_count(12)
    rep.add("sum of counts equals the total Lagrangian count",
            total == expected, f"{total} vs {expected}")
    return rep


@dataclass(frozen=True)
class Table2Row:
    symbol: str
    dim: int
    stabilizer_order: int
    edges: tuple  # (extensions, containments, child_symbol)


def table2_rows() -> list[Table2Row]:
    return [Table2Row(r["symbol"], r["dim"], int(r["stabilizer_order"]),
                      tuple((int(x), int(y), c) for x, y, c in r["edges"]))
            for r in _data("table2.json")["rows"]]


def table2_consistency(rows: list[Table2Row] | None = None) -> ConsistencyReport:
    """Double-counting identity per edge: with N(X) = |Co1| / stab(X),
    N(parent) x containments = N(child) x extensions."""
    rep = ConsistencyReport("table2")
    rows = table2_rows() if rows is None else rows
    orbit: dict[str, object] = {}
    for r in rows:
        n = Q(CO1_ORDER, r.stabilizer_order)
        if n.denominator != 1:
            rep.add(f"{r.symbol}: stabilizer order divides |Co1|", False,
                    q_str(n))
            continue
        orbit[r.symbol] = n
    anchor = orbit.get("A_1")
    rep.add("anchor: N(A_1) = 98280", anchor == 98280, q_str(anchor or ZERO))
    for r in rows:
        if r.symbol not in orbit:
            continue
        for ext, cont, child in r.edges:
            if child not in orbit:
                rep.add(f"edge {r.symbol} -> {child}: child order missing",
                        False, "skipped")
                continue
            lhs = orbit[r.symbol] * cont
            rhs = orbit[child] * ext
            rep.add(f"edge {r.symbol} contains {cont} x {child} "
                    f"(extends {ext})", lhs == rhs,
                    f"{q_str(lhs)} vs {q_str(rhs)}")
    return rep
