"""Modules over regular pairs, semidirect products, abelian extensions.

A module over a regular pair (g, D) is (V, K, rho_t, mu_t): an action of
the algebra on V together with a map K: V -> V compatible with D,

  extension-rep-1   K(rho_t(x)u) = rho_t(x)K(u) + rho_t(D(x))u
  extension-rep-2   K(mu_t(x)u)  = mu_t(x)K(u)  + mu_t(D(x))u.

An abelian extension presents a regular pair on g + V with V an abelian
ideal; choosing a section s of the projection extracts a 2-cochain

  theta(x,y) = s(x) prod s(y) - s(x y),   xi(x) = Dhat(s(x)) - s(D(x))

which is a cocycle of the module-coefficient complex, and extensions are
classified by its degree-2 cohomology. Everything here is presented in
explicit g + V coordinates: basis vectors 0..dim g - 1 span the base
copy, the rest span V.
"""

from __future__ import annotations

from fractions import Fraction

from .cochain import MixedMap, MixedShape, SplitDims
from .cohomology import (
    TwoSlotCochain,
    _component_specs,
    _flatten,
    _unflatten,
    differential_matrix,
    huaD_rep,
)
from .exact_linalg import Matrix, rank, solve, zero_vec
from .prelie import (
    PreLieAlgebra,
    RegularPair,
    Representation,
    is_morphism,
    is_regular_pair,
    representation_report,
)


class DerPairRepresentation:
    """(V, K, rho_t, mu_t): a module over a regular pair."""

    def __init__(self, dim_v: int, K: Matrix, rho_t, mu_t):
        self.dim_v = dim_v
        self.K = K
        self.rho_t = list(rho_t)
        self.mu_t = list(mu_t)
        assert K.rows == K.cols == dim_v
        assert all(m.rows == m.cols == dim_v for m in self.rho_t + self.mu_t)
        assert len(self.rho_t) == len(self.mu_t)

    @property
    def dim_g(self) -> int:
        return len(self.rho_t)

    def plain(self) -> Representation:
        return Representation(self.dim_v, self.rho_t, self.mu_t)


def regular_module(base: RegularPair) -> DerPairRepresentation:
    """g acting on itself by left and right multiplication, K = D."""
    a = base.algebra
    L = [a.left_mult(i) for i in range(a.dim)]
    R = [a.right_mult(i) for i in range(a.dim)]
    return DerPairRepresentation(a.dim, base.D, L, R)


REP_TAGS = ("rep-axiom-1", "rep-axiom-2", "extension-rep-1", "extension-rep-2")


def derpair_representation_report(base: RegularPair, r: DerPairRepresentation) -> dict:
    """Per-equation validation of a module over a regular pair."""
    a = base.algebra
    assert r.dim_g == a.dim
    failed = list(representation_report(a, r.plain())["failed"])
    for i in range(a.dim):
        dcol = base.D.col(i)
        rho_d = Matrix.zeros(r.dim_v, r.dim_v)
        mu_d = Matrix.zeros(r.dim_v, r.dim_v)
        for k, c in enumerate(dcol):
            if c != 0:
                rho_d = rho_d + r.rho_t[k].scale(c)
                mu_d = mu_d + r.mu_t[k].scale(c)
        if r.K * r.rho_t[i] != r.rho_t[i] * r.K + rho_d:
            if "extension-rep-1" not in failed:
                failed.append("extension-rep-1")
        if r.K * r.mu_t[i] != r.mu_t[i] * r.K + mu_d:
            if "extension-rep-2" not in failed:
                failed.append("extension-rep-2")
    return {"ok": not failed, "failed": failed}


def is_derpair_representation(base: RegularPair, r: DerPairRepresentation) -> bool:
    return derpair_representation_report(base, r)["ok"]


def _total_table(base: RegularPair, r: DerPairRepresentation, theta_vec):
    """Product table on g + V; theta_vec(i, j) gives the V correction."""
    a = base.algebra
    dg, dv = a.dim, r.dim_v
    n = dg + dv
    table = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]

    def put(i, j, gpart, vpart):
        table[i][j] = list(gpart) + list(vpart)

    for i in range(dg):
        for j in range(dg):
            put(i, j, a.prod_basis(i, j), theta_vec(i, j))
        for u in range(dv):
            put(i, dg + u, zero_vec(dg), r.rho_t[i].col(u))
            put(dg + u, i, zero_vec(dg), r.mu_t[i].col(u))
    return table


def _block_derivation(base: RegularPair, r: DerPairRepresentation, xi_col) -> Matrix:
    """[[D, 0], [xi, K]] on g + V."""
    dg, dv = base.algebra.dim, r.dim_v
    rows = []
    for i in range(dg):
        rows.append(list(base.D.row(i)) + [Fraction(0)] * dv)
    for u in range(dv):
        rows.append([xi_col(j)[u] for j in range(dg)] + list(r.K.row(u)))
    return Matrix(dg + dv, dg + dv, rows)


def semidirect_product(base: RegularPair, r: DerPairRepresentation) -> RegularPair:
    """Regular pair on g + V with V an abelian ideal and derivation D + K."""
    if not is_derpair_representation(base, r):
        raise ValueError("not a module over the regular pair")
    dg, dv = base.algebra.dim, r.dim_v
    table = _total_table(base, r, lambda i, j: zero_vec(dv))
    alg = PreLieAlgebra(dg + dv, table)
    D = _block_derivation(base, r, lambda j: zero_vec(dv))
    return RegularPair(alg, D)


class ExtensionCocycle:
    """(theta, xi): degree-2 element of the module-coefficient complex."""

    def __init__(self, dims: SplitDims, theta: MixedMap, xi: MixedMap):
        self.dims = dims
        self.theta = theta
        self.xi = xi
        assert theta.shape == MixedShape(1, 0, "g") and theta.target == "v"
        assert xi.shape == MixedShape(0, 0, "g") and xi.target == "v"
        assert theta.dims == dims and xi.dims == dims

    @staticmethod
    def from_matrices(dims: SplitDims, theta_table, xi: Matrix) -> "ExtensionCocycle":
        th = {}
        for i in range(dims.dim_g):
            for j in range(dims.dim_g):
                v = tuple(Fraction(x) for x in theta_table[i][j])
                if any(x != 0 for x in v):
                    th[((i,), (), j)] = v
        xc = {}
        for j in range(dims.dim_g):
            v = xi.col(j)
            if any(x != 0 for x in v):
                xc[((), (), j)] = v
        return ExtensionCocycle(
            dims,
            MixedMap(dims, MixedShape(1, 0, "g"), "v", th),
            MixedMap(dims, MixedShape(0, 0, "g"), "v", xc),
        )

    @staticmethod
    def zero(dims: SplitDims) -> "ExtensionCocycle":
        return ExtensionCocycle(
            dims,
            MixedMap(dims, MixedShape(1, 0, "g"), "v"),
            MixedMap(dims, MixedShape(0, 0, "g"), "v"),
        )

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionCocycle)
            and self.dims == other.dims
            and self.theta == other.theta
            and self.xi == other.xi
        )

    def theta_vec(self, i: int, j: int):
        return self.theta.eval_local((i,), (), j)

    def xi_mat(self) -> Matrix:
        dg, dv = self.dims.dim_g, self.dims.dim_v
        cols = [self.xi.eval_local((), (), j) for j in range(dg)]
        return Matrix(dv, dg, [[c[r] for c in cols] for r in range(dv)])

    def two_slot(self) -> TwoSlotCochain:
        return TwoSlotCochain(self.dims, 2, "v", self.theta, self.xi)


def is_extension_cocycle(base: RegularPair, r: DerPairRepresentation, c: ExtensionCocycle) -> bool:
    return huaD_rep(base, r, c.two_slot()).is_zero()


class AbelianExtension:
    """Total regular pair with inclusion of V and projection onto g."""

    def __init__(self, total: RegularPair, iota: Matrix, proj: Matrix):
        self.total = total
        self.iota = iota
        self.proj = proj
        n = total.algebra.dim
        assert iota.rows == n and proj.cols == n
        assert proj.rows + iota.cols == n

    @property
    def dim_g(self) -> int:
        return self.proj.rows

    @property
    def dim_v(self) -> int:
        return self.iota.cols


EXTENSION_TAGS = (
    "extension-total",
    "extension-exact",
    "extension-abelian",
    "extension-ideal",
    "extension-derivation",
)


def validate_extension(ext: AbelianExtension) -> dict:
    """Structural validity: exactness, abelian ideal, derivation squares."""
    total, iota, proj = ext.total, ext.iota, ext.proj
    a = total.algebra
    n, dg, dv = a.dim, ext.dim_g, ext.dim_v
    failed = []
    if not is_regular_pair(total):
        failed.append("extension-total")
    exact = (
        (proj * iota).is_zero() and rank(iota) == dv and rank(proj) == dg
    )
    if not exact:
        failed.append("extension-exact")
    cols = [iota.col(u) for u in range(dv)]
    abelian = True
    ideal = True
    for u in range(dv):
        for v in range(dv):
            if any(x != 0 for x in a.prod(cols[u], cols[v])):
                abelian = False
    for w in range(n):
        ew = tuple(Fraction(1) if k == w else Fraction(0) for k in range(n))
        for u in range(dv):
            left = a.prod(ew, cols[u])
            right = a.prod(cols[u], ew)
            if any(x != 0 for x in proj.matvec(left)) or any(
                x != 0 for x in proj.matvec(right)
            ):
                ideal = False
    if not abelian:
        failed.append("extension-abelian")
    if not ideal:
        failed.append("extension-ideal")
    if not (proj * total.D * iota).is_zero():
        failed.append("extension-derivation")
    return {"ok": not failed, "failed": failed}


def build_extension(
    base: RegularPair, r: DerPairRepresentation, c: ExtensionCocycle
) -> AbelianExtension:
    """Total pair with product corrected by theta and derivation by xi.

    Refuses non-cocycles: those are exactly the data for which the total
    structure would fail the pair axioms.
    """
    if not is_derpair_representation(base, r):
        raise ValueError("not a module over the regular pair")
    if not is_extension_cocycle(base, r, c):
        raise ValueError("(theta, xi) is not a 2-cocycle of the module complex")
    dg, dv = base.algebra.dim, r.dim_v
    table = _total_table(base, r, c.theta_vec)
    alg = PreLieAlgebra(dg + dv, table)
    xi = c.xi_mat()
    D = _block_derivation(base, r, lambda j: xi.col(j))
    total = RegularPair(alg, D)
    assert is_regular_pair(total)
    iota = Matrix(
        dg + dv, dv, [[1 if i == dg + u else 0 for u in range(dv)] for i in range(dg + dv)]
    )
    proj = Matrix(dg, dg + dv, [[1 if j == i else 0 for j in range(dg + dv)] for i in range(dg)])
    ext = AbelianExtension(total, iota, proj)
    assert validate_extension(ext)["ok"]
    return ext


def canonical_section(ext: AbelianExtension) -> Matrix:
    """A right inverse of the projection, exact and deterministic."""
    n, dg = ext.total.algebra.dim, ext.dim_g
    cols = []
    for j in range(dg):
        e = tuple(Fraction(1) if k == j else Fraction(0) for k in range(dg))
        s = solve(ext.proj, e)
        assert s is not None
        cols.append(s)
    return Matrix(n, dg, [[c[i] for c in cols] for i in range(n)])


def is_section(ext: AbelianExtension, s: Matrix) -> bool:
    return ext.proj * s == Matrix.identity(ext.dim_g)


def _v_part(ext: AbelianExtension, w) -> tuple:
    """Coordinates of w in V; w must project to zero."""
    assert all(x == 0 for x in ext.proj.matvec(w))
    u = solve(ext.iota, w)
    assert u is not None
    return u


def induced_base(ext: AbelianExtension, s: Matrix) -> RegularPair:
    """The quotient structure pulled through a section (independent of it)."""
    a = ext.total.algebra
    dg = ext.dim_g
    table = []
    for i in range(dg):
        row = []
        for j in range(dg):
            row.append(list(ext.proj.matvec(a.prod(s.col(i), s.col(j)))))
        table.append(row)
    alg = PreLieAlgebra(dg, table)
    D = ext.proj * ext.total.D * s
    return RegularPair(alg, D)


def extract_cocycle(ext: AbelianExtension, s: Matrix):
    """(cocycle, module) carried by a section.

    theta(x,y) = s(x) s(y) - s(x y), xi(x) = Dhat(s(x)) - s(D(x)),
    rho_t(x)u = s(x) iota(u), mu_t(x)u = iota(u) s(x), K = Dhat on V.
    """
    if not is_section(ext, s):
        raise ValueError("not a section of the projection")
    a = ext.total.algebra
    dg, dv = ext.dim_g, ext.dim_v
    dims = SplitDims(dg, dv)
    base = induced_base(ext, s)
    rho_t = []
    mu_t = []
    for i in range(dg):
        rcols = []
        mcols = []
        for u in range(dv):
            iu = ext.iota.col(u)
            rcols.append(_v_part(ext, a.prod(s.col(i), iu)))
            mcols.append(_v_part(ext, a.prod(iu, s.col(i))))
        rho_t.append(Matrix(dv, dv, [[c[r] for c in rcols] for r in range(dv)]))
        mu_t.append(Matrix(dv, dv, [[c[r] for c in mcols] for r in range(dv)]))
    kcols = [_v_part(ext, ext.total.D.matvec(ext.iota.col(u))) for u in range(dv)]
    K = Matrix(dv, dv, [[c[r] for c in kcols] for r in range(dv)])
    r = DerPairRepresentation(dv, K, rho_t, mu_t)

    theta_table = []
    for i in range(dg):
        row = []
        for j in range(dg):
            prod = a.prod(s.col(i), s.col(j))
            sxy = s.matvec(base.algebra.prod_basis(i, j))
            row.append(_v_part(ext, tuple(x - y for x, y in zip(prod, sxy))))
        theta_table.append(row)
    xi_cols = []
    for j in range(dg):
        dsx = ext.total.D.matvec(s.col(j))
        sdx = s.matvec(base.D.col(j))
        xi_cols.append(_v_part(ext, tuple(x - y for x, y in zip(dsx, sdx))))
    xi = Matrix(dv, dg, [[c[r] for c in xi_cols] for r in range(dv)])
    return ExtensionCocycle.from_matrices(dims, theta_table, xi), r


def coboundary_cocycle(base: RegularPair, r: DerPairRepresentation, phi: Matrix) -> ExtensionCocycle:
    """Degree-1 coboundary of phi: g -> V in the module complex."""
    dims = SplitDims(base.algebra.dim, r.dim_v)
    specs1 = _component_specs("rep", 1)
    phi_map_coeffs = {}
    for j in range(base.algebra.dim):
        v = phi.col(j)
        if any(x != 0 for x in v):
            phi_map_coeffs[((), (), j)] = v
    phi_map = MixedMap(dims, MixedShape(0, 0, "g"), "v", phi_map_coeffs)
    coords = _flatten([phi_map, MixedMap(dims, MixedShape(-1, 0, "g"), "v")])
    d1 = differential_matrix("rep", 1, (base, r))
    out = d1.matvec(coords)
    theta, xi = _unflatten(dims, _component_specs("rep", 2), list(out))
    return ExtensionCocycle(dims, theta, xi)


def classify(
    base: RegularPair,
    r: DerPairRepresentation,
    c1: ExtensionCocycle,
    c2: ExtensionCocycle,
):
    """Isomorphism id + phi between the two extensions, or None.

    Exists iff c1 - c2 is a coboundary of the module complex; the
    returned matrix is verified to be a pair isomorphism between
    build_extension(base, r, c1) and build_extension(base, r, c2).
    """
    for c in (c1, c2):
        if not is_extension_cocycle(base, r, c):
            raise ValueError("input is not a 2-cocycle of the module complex")
    dims = SplitDims(base.algebra.dim, r.dim_v)
    diff_theta = c1.theta - c2.theta
    diff_xi = c1.xi - c2.xi
    target = _flatten([diff_theta, diff_xi])
    d1 = differential_matrix("rep", 1, (base, r))
    sol = solve(d1, target)
    if sol is None:
        return None
    phi_map, _ = _unflatten(dims, _component_specs("rep", 1), list(sol))
    dg, dv = dims.dim_g, dims.dim_v
    phi = Matrix(dv, dg, [[phi_map.eval_local((), (), j)[u] for j in range(dg)] for u in range(dv)])
    n = dg + dv
    zeta_rows = []
    for i in range(dg):
        zeta_rows.append([1 if j == i else 0 for j in range(n)])
    for u in range(dv):
        zeta_rows.append(
            [phi.entries[u][j] for j in range(dg)]
            + [1 if w == u else 0 for w in range(dv)]
        )
    zeta = Matrix(n, n, zeta_rows)
    ext1 = build_extension(base, r, c1)
    ext2 = build_extension(base, r, c2)
    assert rank(zeta) == n
    assert is_morphism(zeta, zeta, ext1.total.to_derpair(), ext2.total.to_derpair())
    return zeta
