"""Finite-dimensional commutative (non-associative) algebras over Q.

A StructureAlgebra is a labeled basis together with sparse rational
structure constants and a symmetric bilinear form.  Products and form
values of basis pairs may be supplied as explicit tables or as callables
(computed lazily and cached), which keeps the rank-24 algebras tractable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .exactlin import QMatrix, SparseSolver
from .ratio import ONE, Q, ZERO, q_parse, q_str

Sparse = dict  # index -> rational, no zero values stored


class StructureAlgebra:
    """Commutative algebra given by basis products b_i * b_j and a form."""

    def __init__(self, basis_labels: Sequence[str],
                 product: Callable[[int, int], Sparse] | Mapping,
                 form: Callable[[int, int], object] | Mapping):
        self.basis_labels = list(basis_labels)
        self.dim = len(self.basis_labels)
        self._product_fn = product if callable(product) else None
        self._product_cache: dict[tuple[int, int], Sparse] = (
            {} if callable(product) else {k: dict(v) for k, v in product.items()})
        self._form_fn = form if callable(form) else None
        self._form_cache: dict[tuple[int, int], object] = (
            {} if callable(form) else dict(form))
        self._gram: QMatrix | None = None

    # -- basis-level access ------------------------------------------------

    def basis_product(self, i: int, j: int) -> Sparse:
        key = (i, j) if i <= j else (j, i)
        p = self._product_cache.get(key)
        if p is None:
            if self._product_fn is None:
                p = {}
            else:
                p = {k: v for k, v in self._product_fn(*key).items() if v != 0}
            self._product_cache[key] = p
        return p

    def basis_form(self, i: int, j: int):
        key = (i, j) if i <= j else (j, i)
        v = self._form_cache.get(key)
        if v is None:
            v = Q(self._form_fn(*key)) if self._form_fn else ZERO
            self._form_cache[key] = v
        return v

    def gram_matrix(self) -> QMatrix:
        if self._gram is None:
            self._gram = QMatrix(
                [[self.basis_form(i, j) for j in range(self.dim)]
                 for i in range(self.dim)])
        return self._gram

    def radical_dimension(self) -> int:
        """dim minus the exact rank of the Gram matrix."""
        return self.dim - self.gram_matrix().rank()

    # -- elements ----------------------------------------------------------

    def element(self, coeffs: Mapping | Sequence) -> "AlgebraElement":
        if not isinstance(coeffs, Mapping):
            coeffs = {i: c for i, c in enumerate(coeffs)}
        return AlgebraElement(self, {int(i): Q(c) for i, c in coeffs.items()
                                     if c != 0})

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def basis_element(self, i: int) -> "AlgebraElement":
        return AlgebraElement(self, {i: ONE})

    def find_identity(self) -> "AlgebraElement | None":
        """Solve x * b_j = b_j for all j exactly; None if no solution.

        Equations are fed into a sparse incremental solver until full rank,
        then the candidate is verified against every basis vector, so the
        result is the unique identity whenever one is returned.
        """
        solver = SparseSolver(self.dim)
        for j in range(self.dim):
            cols: dict[int, Sparse] = {}
            for i in range(self.dim):
                for k, v in self.basis_product(i, j).items():
                    cols.setdefault(k, {})[i] = v
            if j not in cols:
                # b_j never occurs in any product x*b_j: no identity exists.
                return None
            for k, row in cols.items():
                if not solver.add_equation(row, ONE if k == j else ZERO):
                    return None
            if solver.rank == self.dim:
                break
        x = solver.solution()
        if x is None:
            return None
        cand = self.element(x)
        for j in range(self.dim):
            if cand * self.basis_element(j) != self.basis_element(j):
                return None
        return cand

    def is_associative_span(self, elements: Sequence["AlgebraElement"],
                            ) -> bool:
        """True iff the span of the elements is closed and associative.

        Raises ValueError (reporting a dependency) if the elements are not
        linearly independent.  The triple-product check is exhaustive over
        the spanning set, with value-level memoization of products.
        """
        span = _SpanReducer([e.coeffs for e in elements])
        if span.dependency is not None:
            raise ValueError(
                f"elements are linearly dependent: {span.dependency}")
        n = len(elements)
        memo: dict[tuple, "AlgebraElement"] = {}

        def mul(a: "AlgebraElement", b: "AlgebraElement") -> "AlgebraElement":
            key = (a.key(), b.key()) if a.key() <= b.key() else (b.key(), a.key())
            r = memo.get(key)
            if r is None:
                r = a * b
                memo[key] = r
            return r

        prods = [[mul(elements[i], elements[j]) for j in range(n)]
                 for i in range(n)]
        for i in range(n):
            for j in range(n):
                if not span.contains(prods[i][j].coeffs):
                    return False
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if mul(prods[i][j], elements[k]) != mul(elements[i], prods[j][k]):
                        return False
        return True

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        products = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                p = self.basis_product(i, j)
                if p:
                    products.append(
                        [i, j, [[k, q_str(v)] for k, v in sorted(p.items())]])
        gram = [[q_str(self.basis_form(i, j)) for j in range(self.dim)]
                for i in range(self.dim)]
        return {"basis": list(self.basis_labels), "products": products,
                "gram": gram}

    @classmethod
    def from_json(cls, data: dict) -> "StructureAlgebra":
        table = {(i, j): {int(k): q_parse(v) for k, v in terms}
                 for i, j, terms in data["products"]}
        form = {(i, j): q_parse(data["gram"][i][j])
                for i in range(len(data["basis"]))
                for j in range(i, len(data["basis"]))}
        return cls(data["basis"], table, form)


class _SpanReducer:
    """Exact row space of sparse vectors with membership queries."""

    def __init__(self, vectors: Iterable[Sparse]):
        self.pivots: dict[int, Sparse] = {}
        self.dependency = None
        for idx, v in enumerate(vectors):
            if not self._insert(v):
                self.dependency = f"vector #{idx} lies in the span of its predecessors"
                return

    def _reduce(self, v: Sparse) -> Sparse:
        v = dict(v)
        for c in sorted(set(v) & set(self.pivots)):
            if c not in v:
                continue
            f = v[c]
            for pc, pv in self.pivots[c].items():
                v[pc] = v.get(pc, ZERO) - f * pv
                if v[pc] == 0:
                    del v[pc]
        return v

    def _insert(self, v: Sparse) -> bool:
        v = self._reduce(v)
        if not v:
            return False
        pc = min(v)
        inv = ONE / v[pc]
        v = {c: x * inv for c, x in v.items()}
        for oc, ov in self.pivots.items():
            if pc in ov:
                f = ov[pc]
                for c, x in v.items():
                    ov[c] = ov.get(c, ZERO) - f * x
                    if ov[c] == 0:
                        del ov[c]
        self.pivots[pc] = v
        return True

    def contains(self, v: Sparse) -> bool:
        return not self._reduce(v)


class AlgebraElement:
    """Sparse element of a StructureAlgebra; a value type."""

    __slots__ = ("algebra", "coeffs", "_key")

    def __init__(self, algebra: StructureAlgebra, coeffs: Sparse):
        self.algebra = algebra
        self.coeffs = coeffs
        self._key = None

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(sorted(self.coeffs.items()))
        return self._key

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement)
                and self.algebra is other.algebra
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(self.key())

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, ZERO) + c
            if out[i] == 0:
                del out[i]
        return AlgebraElement(self.algebra, out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {i: -c for i, c in self.coeffs.items()})

    def scale(self, s) -> "AlgebraElement":
        s = Q(s)
        if s == 0:
            return self.algebra.zero()
        return AlgebraElement(self.algebra, {i: c * s for i, c in self.coeffs.items()})

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        """Bilinear extension of the structure constants."""
        self._check(other)
        alg = self.algebra
        out: Sparse = {}
        bp = alg.basis_product
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                ab = a * b
                for k, v in bp(i, j).items():
                    out[k] = out.get(k, ZERO) + ab * v
        return AlgebraElement(alg, {k: v for k, v in out.items() if v != 0})

    def form(self, other: "AlgebraElement"):
        self._check(other)
        bf = self.algebra.basis_form
        total = ZERO
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                v = bf(i, j)
                if v != 0:
                    total += a * b * v
        return total

    def central_charge(self):
        """Eight times the squared norm of the element."""
        return 8 * self.form(self)

    def is_idempotent(self) -> bool:
        return self * self == self

    def to_json(self) -> list:
        return [[i, q_str(c)] for i, c in sorted(self.coeffs.items())]

    def _check(self, other: "AlgebraElement"):
        if self.algebra is not other.algebra:
            raise ValueError("elements belong to different algebras")

    def __repr__(self):
        terms = ", ".join(f"{q_str(c)}*{self.algebra.basis_labels[i]}"
                          for i, c in sorted(self.coeffs.items())[:6])
        more = "" if len(self.coeffs) <= 6 else f", ... ({len(self.coeffs)} terms)"
        return f"<{terms or '0'}{more}>"


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


def central_charge(a: AlgebraElement):
    return a.central_charge()


def find_identity(alg: StructureAlgebra) -> AlgebraElement | None:
    return alg.find_identity()


def is_idempotent(a: AlgebraElement) -> bool:
    return a.is_idempotent()


def are_orthogonal(a: AlgebraElement, b: AlgebraElement) -> bool:
    """Exact test: a*b = 0 and <a,b> = 0."""
    return (a * b).is_zero() and a.form(b) == 0


def is_associative_span(alg: StructureAlgebra,
                        elements: Sequence[AlgebraElement]) -> bool:
    return alg.is_associative_span(elements)


def radical_dimension(alg: StructureAlgebra) -> int:
    return alg.radical_dimension()


@dataclass
class DecompositionReport:
    """An ordered system of pairwise-orthogonal idempotents with charges."""

    idempotents: list[AlgebraElement]
    charges: list
    chain_description: str
    checks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "idempotents": [e.to_json() for e in self.idempotents],
            "charges": [q_str(c) for c in self.charges],
            "chain": self.chain_description,
            "checks": dict(self.checks),
        }
