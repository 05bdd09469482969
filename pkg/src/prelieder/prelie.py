"""Core algebraic objects and axiom validators.

A pre-Lie product satisfies left symmetry of the associator,
(x.y).z - x.(y.z) = (y.x).z - y.(x.z). A representation (V; rho, mu)
consists of a Lie-algebra representation rho of the sub-adjacent
bracket [x,y] = x.y - y.x together with mu satisfying
mu(y)mu(x) - mu(x.y) = mu(y)rho(x) - rho(x)mu(y), and a derivation is a
linear D: g -> V with D(x.y) = rho(x)D(y) + mu(y)D(x). Constructors
accept arbitrary structure constants; validity is always a separate
query so deformation candidates can be represented before they hold.
"""

from __future__ import annotations

from fractions import Fraction

from .cochain import Cochain, MixedMap, MixedShape, SplitDims, lift
from .exact_linalg import Matrix, frac, vec_add, vec_scale, zero_vec


class PreLieAlgebra:
    """Bilinear product on a based space, as structure constants.

    table[i][j] is the coefficient vector of e_i . e_j.
    """

    def __init__(self, dim: int, table):
        assert dim >= 0
        tab = tuple(
            tuple(tuple(frac(x) for x in vec) for vec in row) for row in table
        )
        assert len(tab) == dim
        for row in tab:
            assert len(row) == dim and all(len(v) == dim for v in row)
        self.dim = dim
        self.table = tab

    def prod_basis(self, i: int, j: int):
        return self.table[i][j]

    def prod(self, x, y):
        """Bilinear extension of the product to coefficient vectors."""
        out = zero_vec(self.dim)
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b == 0:
                    continue
                out = vec_add(out, vec_scale(frac(a) * frac(b), self.table[i][j]))
        return out

    def left_mult(self, i: int) -> Matrix:
        """Matrix of L_{e_i}: y -> e_i . y."""
        return Matrix(
            self.dim,
            self.dim,
            [[self.table[i][j][k] for j in range(self.dim)] for k in range(self.dim)],
        )

    def right_mult(self, i: int) -> Matrix:
        """Matrix of R_{e_i}: y -> y . e_i."""
        return Matrix(
            self.dim,
            self.dim,
            [[self.table[j][i][k] for j in range(self.dim)] for k in range(self.dim)],
        )

    def __eq__(self, other):
        return (
            isinstance(other, PreLieAlgebra)
            and self.dim == other.dim
            and self.table == other.table
        )


class Representation:
    """(V; rho, mu): one dimV x dimV matrix per g-basis vector, each way."""

    def __init__(self, dim_v: int, rho, mu):
        self.dim_v = dim_v
        self.rho = tuple(rho)
        self.mu = tuple(mu)
        assert all(
            isinstance(m, Matrix) and m.rows == dim_v and m.cols == dim_v
            for m in self.rho + self.mu
        )
        assert len(self.rho) == len(self.mu)

    @property
    def dim_g(self) -> int:
        return len(self.rho)


class DerPair:
    """Pre-Lie algebra + representation + derivation candidate D: g -> V."""

    def __init__(self, algebra: PreLieAlgebra, rep: Representation, D: Matrix):
        assert rep.dim_g == algebra.dim
        assert D.rows == rep.dim_v and D.cols == algebra.dim
        self.algebra = algebra
        self.rep = rep
        self.D = D

    @property
    def dims(self) -> SplitDims:
        return SplitDims(self.algebra.dim, self.rep.dim_v)


class RegularPair:
    """Pre-Lie algebra with a derivation into itself (V = g, rep = (L,R))."""

    def __init__(self, algebra: PreLieAlgebra, D: Matrix):
        assert D.rows == algebra.dim and D.cols == algebra.dim
        self.algebra = algebra
        self.D = D

    def to_derpair(self) -> DerPair:
        return DerPair(self.algebra, regular_representation(self.algebra), self.D)


def is_prelie(a: PreLieAlgebra) -> bool:
    """Left symmetry of the associator on all basis triples."""
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                ek = basis_vec(a.dim, k)
                left = vec_sub2(
                    a.prod(a.prod_basis(i, j), ek),
                    a.prod(basis_vec(a.dim, i), a.prod_basis(j, k)),
                )
                right = vec_sub2(
                    a.prod(a.prod_basis(j, i), ek),
                    a.prod(basis_vec(a.dim, j), a.prod_basis(i, k)),
                )
                if left != right:
                    return False
    return True


def basis_vec(dim: int, i: int):
    return tuple(Fraction(1) if t == i else Fraction(0) for t in range(dim))


def vec_sub2(u, v):
    return tuple(a - b for a, b in zip(u, v))


def subadjacent_lie(a: PreLieAlgebra):
    """Bracket constants of [x,y] = x.y - y.x; requires a pre-Lie input."""
    if not is_prelie(a):
        raise ValueError("not a pre-Lie algebra")
    return tuple(
        tuple(
            vec_sub2(a.prod_basis(i, j), a.prod_basis(j, i)) for j in range(a.dim)
        )
        for i in range(a.dim)
    )


def bracket_vec(a: PreLieAlgebra, i: int, j: int):
    """[e_i, e_j] = e_i.e_j - e_j.e_i without the validity gate."""
    return vec_sub2(a.prod_basis(i, j), a.prod_basis(j, i))


def representation_report(a: PreLieAlgebra, r: Representation) -> dict:
    """Both representation axioms on all basis pairs, tagged per axiom."""
    assert r.dim_g == a.dim
    ok1 = True
    ok2 = True
    for i in range(a.dim):
        for j in range(a.dim):
            # rho([e_i,e_j]) = rho(e_i)rho(e_j) - rho(e_j)rho(e_i)
            br = bracket_vec(a, i, j)
            lhs = Matrix.zeros(r.dim_v, r.dim_v)
            for k, c in enumerate(br):
                if c != 0:
                    lhs = lhs + r.rho[k].scale(c)
            if lhs != r.rho[i] * r.rho[j] - r.rho[j] * r.rho[i]:
                ok1 = False
            # mu(e_j)mu(e_i) - mu(e_i.e_j) = mu(e_j)rho(e_i) - rho(e_i)mu(e_j)
            prod = a.prod_basis(i, j)
            mu_prod = Matrix.zeros(r.dim_v, r.dim_v)
            for k, c in enumerate(prod):
                if c != 0:
                    mu_prod = mu_prod + r.mu[k].scale(c)
            if r.mu[j] * r.mu[i] - mu_prod != r.mu[j] * r.rho[i] - r.rho[i] * r.mu[j]:
                ok2 = False
    failed = []
    if not ok1:
        failed.append("rep-axiom-1")
    if not ok2:
        failed.append("rep-axiom-2")
    return {"ok": not failed, "failed": failed}


def is_representation(a: PreLieAlgebra, r: Representation) -> bool:
    """Both representation axioms on all basis pairs."""
    return representation_report(a, r)["ok"]


def regular_representation(a: PreLieAlgebra) -> Representation:
    """(g; L, R), the left and right multiplication operators."""
    return Representation(
        a.dim,
        [a.left_mult(i) for i in range(a.dim)],
        [a.right_mult(i) for i in range(a.dim)],
    )


def is_derivation(p: DerPair) -> bool:
    """D(e_i.e_j) = rho(e_i)D(e_j) + mu(e_j)D(e_i) on all basis pairs."""
    a, r, D = p.algebra, p.rep, p.D
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = D.matvec(a.prod_basis(i, j))
            rhs = vec_add(
                r.rho[i].matvec(D.col(j)), r.mu[j].matvec(D.col(i))
            )
            if lhs != rhs:
                return False
    return True


def is_derpair(p: DerPair) -> bool:
    return (
        is_prelie(p.algebra)
        and is_representation(p.algebra, p.rep)
        and is_derivation(p)
    )


def is_regular_pair(p: RegularPair) -> bool:
    return is_prelie(p.algebra) and is_derivation(p.to_derpair())


def is_morphism(f_g: Matrix, f_v: Matrix, src: DerPair, dst: DerPair) -> bool:
    """Pre-Lie morphism on g plus the three intertwining identities."""
    a1, a2 = src.algebra, dst.algebra
    assert f_g.rows == a2.dim and f_g.cols == a1.dim
    assert f_v.rows == dst.rep.dim_v and f_v.cols == src.rep.dim_v
    for i in range(a1.dim):
        for j in range(a1.dim):
            # f_g(x.y) = f_g(x).f_g(y)
            if f_g.matvec(a1.prod_basis(i, j)) != a2.prod(f_g.col(i), f_g.col(j)):
                return False
    for i in range(a1.dim):
        fi = f_g.col(i)
        rho2 = Matrix.zeros(dst.rep.dim_v, dst.rep.dim_v)
        mu2 = Matrix.zeros(dst.rep.dim_v, dst.rep.dim_v)
        for k, c in enumerate(fi):
            if c != 0:
                rho2 = rho2 + dst.rep.rho[k].scale(c)
                mu2 = mu2 + dst.rep.mu[k].scale(c)
        # f_V . rho(x) = rho'(f_g x) . f_V, same for mu
        if f_v * src.rep.rho[i] != rho2 * f_v:
            return False
        if f_v * src.rep.mu[i] != mu2 * f_v:
            return False
    # f_V . D = D' . f_g
    if f_v * src.D != dst.D * f_g:
        return False
    return True


# Component maps for the bracket path. The split space is g + V with g
# indices first; pi, rho, mu all lift to bidegree 1|0 and D to 1|-1.

def pi_component(a: PreLieAlgebra, dims: SplitDims) -> MixedMap:
    coeffs = {}
    for i in range(a.dim):
        for j in range(a.dim):
            coeffs[((i,), (), j)] = a.prod_basis(i, j)
    return MixedMap(dims, MixedShape(1, 0, "g"), "g", coeffs)


def rho_component(r: Representation, dims: SplitDims) -> MixedMap:
    coeffs = {}
    for i in range(r.dim_g):
        for u in range(r.dim_v):
            coeffs[((i,), (), u)] = r.rho[i].col(u)
    return MixedMap(dims, MixedShape(1, 0, "v"), "v", coeffs)


def mu_component(r: Representation, dims: SplitDims) -> MixedMap:
    coeffs = {}
    for j in range(r.dim_g):
        for u in range(r.dim_v):
            # source is V tensor g: wedge slot u, tail j, value mu(e_j)e_u
            coeffs[((), (u,), j)] = r.mu[j].col(u)
    return MixedMap(dims, MixedShape(0, 1, "g"), "v", coeffs)


def d_component(D: Matrix, dims: SplitDims) -> MixedMap:
    coeffs = {}
    for j in range(D.cols):
        coeffs[((), (), j)] = D.col(j)
    return MixedMap(dims, MixedShape(0, 0, "g"), "v", coeffs)


def structure_cochain(p: DerPair) -> Cochain:
    """lift(pi) + lift(rho) + lift(mu), the arity-2 structure cochain."""
    dims = p.dims
    return (
        lift(pi_component(p.algebra, dims))
        + lift(rho_component(p.rep, dims))
        + lift(mu_component(p.rep, dims))
    )


def derivation_cochain(p: DerPair) -> Cochain:
    return lift(d_component(p.D, p.dims))
