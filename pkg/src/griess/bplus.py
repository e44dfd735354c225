"""The weight-2 algebra of the fixed-point lattice vertex operator algebra.

For a simply-laced root system the algebra lives on S^2(H) plus one
generator x_alpha per positive root, where H is the rational span of the
roots.  We use the simple roots as the basis of H; symmetric products
a_i a_j (i <= j) of simple roots index the S^2 block.  Products and the
form on general symmetric tensors follow by polarizing the rules on
squares, which is the unique symmetric bilinear extension:

    (ab)(cd)   = (a,c)bd + (a,d)bc + (b,c)ad + (b,d)ac
    (ab)x_r    = 2(a,r)(b,r) x_r
    x_r x_s    = 0 / x_g / 2 r^2        (orthogonal / close via g / equal)
    <ab,cd>    = (a,c)(b,d) + (a,d)(b,c)
    <ab,x_r>   = 0,  <x_r,x_s> = 2 [r=s]

The linear map from the root algebra sends t(alpha) to alpha^2/2 - x_alpha
and u(alpha) to alpha^2/2 + x_alpha; it is a surjective isometric algebra
homomorphism, bijective exactly in type A, with kernel equal to the
radical of the form on the root algebra otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement, StructureAlgebra
from .exactlin import QMatrix
from .ratio import ONE, Q, ZERO
from .rootalgebra import RootAlgebra
from .rootsys import RootSystem, dot

HALF = Q(1, 2)


@dataclass
class BPlusAlgebra:
    rs: RootSystem
    alg: StructureAlgebra
    sym_index: dict  # (a, b) with a <= b -> basis index
    num_sym: int
    _sq: list = None  # per positive root: alpha^2 over the S^2 basis

    @property
    def dim(self) -> int:
        return self.alg.dim

    def x(self, root_index: int) -> AlgebraElement:
        return self.alg.basis_element(self.num_sym + root_index)

    def root_square(self, root_index: int) -> AlgebraElement:
        return self.alg.element(self._root_square_coeffs(root_index))

    def _root_square_coeffs(self, root_index: int) -> dict:
        return dict(self._sq[root_index])


def build_bplus(rs: RootSystem) -> BPlusAlgebra:
    l = rs.l
    sym_pairs = [(a, b) for a in range(l) for b in range(a, l)]
    sym_index = {p: i for i, p in enumerate(sym_pairs)}
    ns = len(sym_pairs)
    N = rs.N

    # Gram matrix of the simple roots (integer entries, roots have norm 2).
    S = [[dot(rs.simple_roots[a], rs.simple_roots[b]) for b in range(l)]
         for a in range(l)]
    # (simple root a, positive root r)
    P = [[sum(S[a][b] * rs.simple_coeffs[r][b] for b in range(l))
          for r in range(N)] for a in range(l)]

    # alpha^2 of each positive root, expanded over the symmetric pairs
    squares: list[dict] = []
    for r in range(N):
        c = rs.simple_coeffs[r]
        sq: dict = {}
        for a in range(l):
            if c[a] == 0:
                continue
            for b in range(a, l):
                if c[b] == 0:
                    continue
                v = Q(c[a] * c[b] * (1 if a == b else 2))
                sq[sym_index[(a, b)]] = v
        squares.append(sq)

    def add(out: dict, idx: int, v):
        if v != 0:
            out[idx] = out.get(idx, ZERO) + v
            if out[idx] == 0:
                del out[idx]

    def product(i: int, j: int) -> dict:
        out: dict = {}
        if i < ns and j < ns:
            a, b = sym_pairs[i]
            c, d = sym_pairs[j]
            for (p, q, w) in ((b, d, S[a][c]), (b, c, S[a][d]),
                              (a, d, S[b][c]), (a, c, S[b][d])):
                if w != 0:
                    add(out, sym_index[(p, q) if p <= q else (q, p)], Q(w))
        elif i < ns <= j:
            a, b = sym_pairs[i]
            r = j - ns
            w = 2 * P[a][r] * P[b][r]
            add(out, j, Q(w))
        else:
            r, s = i - ns, j - ns
            if r == s:
                for k, v in squares[r].items():
                    add(out, k, 2 * v)
            elif rs.rel[r][s] == 1:
                add(out, ns + rs.gamma[(r, s)], ONE)
        return out

    def form(i: int, j: int):
        if i < ns and j < ns:
            a, b = sym_pairs[i]
            c, d = sym_pairs[j]
            return Q(S[a][c] * S[b][d] + S[a][d] * S[b][c])
        if i >= ns and j >= ns:
            return Q(2) if i == j else ZERO
        return ZERO

    labels = ([f"s({a},{b})" for a, b in sym_pairs]
              + [f"x({r})" for r in range(N)])
    alg = StructureAlgebra(labels, product, form)
    bp = BPlusAlgebra(rs, alg, sym_index, ns, squares)
    expected = l * (l + 1) // 2 + N
    if alg.dim != expected:
        raise AssertionError("dimension l(l+1)/2 + N violated")
    return bp


@dataclass
class PhiMap:
    """Linear map from the root algebra onto the weight-2 algebra."""

    domain: RootAlgebra
    codomain: BPlusAlgebra

    def __post_init__(self):
        if self.domain.rs is not self.codomain.rs:
            raise ValueError("root systems do not match")
        if self.domain.t_only:
            raise ValueError("the map is defined on the full algebra")

    def image_of_basis(self, i: int) -> AlgebraElement:
        bp = self.codomain
        N = bp.rs.N
        r = i if i < N else i - N
        sign = -ONE if i < N else ONE
        coeffs = {k: HALF * v for k, v in bp._root_square_coeffs(r).items()}
        coeffs[bp.num_sym + r] = coeffs.get(bp.num_sym + r, ZERO) + sign
        return bp.alg.element(coeffs)

    def apply(self, a: AlgebraElement) -> AlgebraElement:
        out = self.codomain.alg.zero()
        for i, c in a.coeffs.items():
            out = out + self.image_of_basis(i).scale(c)
        return out

    def matrix(self) -> QMatrix:
        """Columns are the images of the domain basis."""
        cols = []
        for i in range(self.domain.dim):
            img = self.image_of_basis(i)
            cols.append([img.coeffs.get(k, ZERO)
                         for k in range(self.codomain.dim)])
        return QMatrix(list(zip(*cols)))

    def kernel_basis(self) -> list[list]:
        return self.matrix().kernel_basis()


def build_phi(ra: RootAlgebra, bp: BPlusAlgebra) -> PhiMap:
    return PhiMap(ra, bp)


@dataclass
class Theorem31Report:
    homomorphism: bool
    isometry: bool
    surjective: bool
    kernel_dim: int
    first_failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.homomorphism and self.isometry and self.surjective


def verify_theorem_3_1(phi: PhiMap) -> Theorem31Report:
    """Check, over all basis pairs, that the map is a surjective isometric
    algebra homomorphism; report the kernel dimension."""
    ra, bp = phi.domain, phi.codomain
    n = ra.dim
    images = [phi.image_of_basis(i) for i in range(n)]
    hom = iso = True
    failure = None
    for i in range(n):
        for j in range(i, n):
            lhs = phi.apply(ra.alg.basis_element(i) * ra.alg.basis_element(j))
            rhs = images[i] * images[j]
            if lhs != rhs:
                hom = False
                failure = failure or f"product mismatch at basis pair ({i},{j})"
            if images[i].form(images[j]) != ra.alg.basis_form(i, j):
                iso = False
                failure = failure or f"form mismatch at basis pair ({i},{j})"
    rank = phi.matrix().rank()
    surj = (rank == bp.dim)
    if not surj:
        failure = failure or f"rank {rank} < dim {bp.dim}"
    return Theorem31Report(hom, iso, surj, n - rank, failure)
