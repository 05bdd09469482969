"""Infinitesimal deformations of a pair and their classification.

A datum (omega, sigma, tau, dhat) deforms a pair structure to

  x . y   + t omega(x, y)
  rho(x)  + t sigma(x)
  mu(y)   + t tau(., y)
  D       + t dhat

and is an infinitesimal deformation when the deformed structure is a
valid pair for every t. Collecting t-degrees gives four bracket
equations, tagged deformation-1 .. deformation-4:

  1  [m, w] = 0          (m = structure cochain, w = omega+sigma+tau)
  2  [w, w] = 0
  3  [m, dhat] + [w, D] = 0
  4  [w, dhat] = 0

Equations 2 and 4 are quadratic in the datum, so valid data do not form
a linear space. A valid datum is a 2-cocycle of the pair complex.

Equivalence of two data d1 (primed) and d2 is witnessed by a pair of
matrices (N, S) making (Id + tN, Id + tS) a morphism from the
d1-deformed pair to the d2-deformed pair; expanding in t gives eleven
identities, tagged equi-deformation-1 .. equi-deformation-11. Equivalent
data differ by the coboundary of (N, S), so they share a cohomology
class in degree 2.
"""

from __future__ import annotations

from fractions import Fraction

from .cochain import MixedMap, MixedShape, SplitDims, lift
from .cohomology import (
    DerPairCochain,
    _component_specs,
    _flatten,
    _unflatten,
    differential_matrix,
    huaD,
)
from .exact_linalg import Matrix, solve, vec_add, vec_scale, vec_sub, zero_vec
from .linfty import LElement
from .mn_bracket import mn_bracket
from .prelie import (
    DerPair,
    PreLieAlgebra,
    Representation,
    derivation_cochain,
    structure_cochain,
)


class DeformationDatum:
    """(omega, sigma, tau, dhat) stored as degree-2 component maps.

    omega: g x g -> g, sigma: g x V -> V, tau: V x g -> V, dhat: g -> V.
    Nothing is validated at construction.
    """

    def __init__(self, dims: SplitDims, omega: MixedMap, sigma: MixedMap, tau: MixedMap, dhat: MixedMap):
        self.dims = dims
        self.omega = omega
        self.sigma = sigma
        self.tau = tau
        self.dhat = dhat
        assert omega.shape == MixedShape(1, 0, "g") and omega.target == "g"
        assert sigma.shape == MixedShape(1, 0, "v") and sigma.target == "v"
        assert tau.shape == MixedShape(0, 1, "g") and tau.target == "v"
        assert dhat.shape == MixedShape(0, 0, "g") and dhat.target == "v"
        assert all(m.dims == dims for m in (omega, sigma, tau, dhat))

    @staticmethod
    def from_matrices(dims: SplitDims, omega_table, sigma_mats, tau_mats, dhat: Matrix) -> "DeformationDatum":
        """omega_table[i][j] = omega(e_i, e_j) as a g-vector; sigma_mats[i]
        acts on V as sigma(e_i); tau_mats[j] sends u to tau(u, e_j)."""
        dg, dv = dims.dim_g, dims.dim_v
        om = {}
        for i in range(dg):
            for j in range(dg):
                v = tuple(Fraction(x) for x in omega_table[i][j])
                if any(x != 0 for x in v):
                    om[((i,), (), j)] = v
        sg = {}
        for i in range(dg):
            for u in range(dv):
                v = sigma_mats[i].col(u)
                if any(x != 0 for x in v):
                    sg[((i,), (), u)] = v
        ta = {}
        for j in range(dg):
            for u in range(dv):
                v = tau_mats[j].col(u)
                if any(x != 0 for x in v):
                    ta[((), (u,), j)] = v
        dh = {}
        for j in range(dg):
            v = dhat.col(j)
            if any(x != 0 for x in v):
                dh[((), (), j)] = v
        return DeformationDatum(
            dims,
            MixedMap(dims, MixedShape(1, 0, "g"), "g", om),
            MixedMap(dims, MixedShape(1, 0, "v"), "v", sg),
            MixedMap(dims, MixedShape(0, 1, "g"), "v", ta),
            MixedMap(dims, MixedShape(0, 0, "g"), "v", dh),
        )

    @staticmethod
    def zero(dims: SplitDims) -> "DeformationDatum":
        return DeformationDatum(
            dims,
            MixedMap(dims, MixedShape(1, 0, "g"), "g"),
            MixedMap(dims, MixedShape(1, 0, "v"), "v"),
            MixedMap(dims, MixedShape(0, 1, "g"), "v"),
            MixedMap(dims, MixedShape(0, 0, "g"), "v"),
        )

    def __eq__(self, other):
        return (
            isinstance(other, DeformationDatum)
            and self.dims == other.dims
            and (self.omega, self.sigma, self.tau, self.dhat)
            == (other.omega, other.sigma, other.tau, other.dhat)
        )

    # matrix views, used by the equation-by-equation validators
    def omega_vec(self, i: int, j: int):
        return self.omega.eval_local((i,), (), j)

    def sigma_mat(self, i: int) -> Matrix:
        dv = self.dims.dim_v
        cols = [self.sigma.eval_local((i,), (), u) for u in range(dv)]
        return Matrix(dv, dv, [[c[r] for c in cols] for r in range(dv)])

    def tau_mat(self, j: int) -> Matrix:
        dv = self.dims.dim_v
        cols = [self.tau.eval_local((), (u,), j) for u in range(dv)]
        return Matrix(dv, dv, [[c[r] for c in cols] for r in range(dv)])

    def dhat_mat(self) -> Matrix:
        dg, dv = self.dims.dim_g, self.dims.dim_v
        cols = [self.dhat.eval_local((), (), j) for j in range(dg)]
        return Matrix(dv, dg, [[c[r] for c in cols] for r in range(dv)])

    def cochain(self) -> DerPairCochain:
        return DerPairCochain(self.dims, 2, self.omega, self.sigma, self.tau, self.dhat)

    def lelement(self) -> LElement:
        """(s^{-1}(omega+sigma+tau), dhat) as a degree-0 element."""
        sh = lift(self.omega) + lift(self.sigma) + lift(self.tau)
        return LElement(self.dims, 0, sh, self.dhat)


class EquivalenceWitness:
    """(N, S): candidate morphism corrections on g and V."""

    def __init__(self, N: Matrix, S: Matrix):
        assert N.rows == N.cols and S.rows == S.cols
        self.N = N
        self.S = S


DEFORMATION_TAGS = ("deformation-1", "deformation-2", "deformation-3", "deformation-4")


def is_infinitesimal_deformation(base: DerPair, d: DeformationDatum) -> dict:
    """The four t-degree bracket equations, with per-equation tags."""
    assert d.dims == base.dims
    m = structure_cochain(base)
    dc = derivation_cochain(base)
    w = lift(d.omega) + lift(d.sigma) + lift(d.tau)
    dh = lift(d.dhat)
    failed = []
    if not mn_bracket(m, w).is_zero():
        failed.append("deformation-1")
    if not mn_bracket(w, w).is_zero():
        failed.append("deformation-2")
    if not (mn_bracket(m, dh) + mn_bracket(w, dc)).is_zero():
        failed.append("deformation-3")
    if not mn_bracket(w, dh).is_zero():
        failed.append("deformation-4")
    return {"ok": not failed, "failed": failed}


def deformed_pair(base: DerPair, d: DeformationDatum, t: Fraction) -> DerPair:
    """The structure at parameter value t; valid for all t iff d deforms base."""
    dims = base.dims
    dg = dims.dim_g
    a = base.algebra
    table = []
    for i in range(dg):
        row = []
        for j in range(dg):
            row.append(list(vec_add(a.prod_basis(i, j), vec_scale(t, d.omega_vec(i, j)))))
        table.append(row)
    alg = PreLieAlgebra(dg, table)
    rho = [base.rep.rho[i] + d.sigma_mat(i).scale(t) for i in range(dg)]
    mu = [base.rep.mu[j] + d.tau_mat(j).scale(t) for j in range(dg)]
    rep = Representation(dims.dim_v, rho, mu)
    D = base.D + d.dhat_mat().scale(t)
    return DerPair(alg, rep, D)


def deformation_cocycle(base: DerPair, d: DeformationDatum) -> DerPairCochain:
    """The datum as a degree-2 element of the pair complex.

    Raises when the datum is not a valid deformation; validity forces
    the cocycle condition, which callers can confirm with huaD.
    """
    res = is_infinitesimal_deformation(base, d)
    if not res["ok"]:
        raise ValueError(f"not an infinitesimal deformation: {res['failed']}")
    return d.cochain()


EQUIVALENCE_TAGS = tuple(f"equi-deformation-{k}" for k in range(1, 12))


def is_equivalence(base: DerPair, d1: DeformationDatum, d2: DeformationDatum, w: EquivalenceWitness) -> dict:
    """Check the eleven identities making (Id+tN, Id+tS) a morphism.

    Source structure is deformed by d1 (the primed datum), target by d2.
    Tags equi-deformation-1..3 are the t, t^2, t^3 parts of the product
    identity, 4..6 the left-action parts, 7..9 the right-action parts,
    10..11 the derivation parts.
    """
    dims = base.dims
    dg, dv = dims.dim_g, dims.dim_v
    a = base.algebra
    N, S = w.N, w.S
    assert N.rows == dg and S.rows == dv
    rho, mu, D = base.rep.rho, base.rep.mu, base.D
    failed = set()

    def prod_vec(vx, vy):
        out = zero_vec(dg)
        for i, ci in enumerate(vx):
            if ci == 0:
                continue
            for j, cj in enumerate(vy):
                if cj != 0:
                    out = vec_add(out, vec_scale(ci * cj, a.prod_basis(i, j)))
        return out

    def omega_of(d, vx, vy):
        out = zero_vec(dg)
        for i, ci in enumerate(vx):
            if ci == 0:
                continue
            for j, cj in enumerate(vy):
                if cj != 0:
                    out = vec_add(out, vec_scale(ci * cj, d.omega_vec(i, j)))
        return out

    for i in range(dg):
        ei = tuple(Fraction(1) if k == i else Fraction(0) for k in range(dg))
        ni = N.col(i)
        for j in range(dg):
            ej = tuple(Fraction(1) if k == j else Fraction(0) for k in range(dg))
            nj = N.col(j)
            # 1: omega'(x,y) - omega(x,y) = N(x).y + x.N(y) - N(x.y)
            lhs = vec_sub(d1.omega_vec(i, j), d2.omega_vec(i, j))
            rhs = vec_add(prod_vec(ni, ej), prod_vec(ei, nj))
            rhs = vec_sub(rhs, N.matvec(a.prod_basis(i, j)))
            if lhs != rhs:
                failed.add(1)
            # 2: N(omega'(x,y)) = N(x).N(y) + omega(x, N(y)) + omega(N(x), y)
            lhs = N.matvec(d1.omega_vec(i, j))
            rhs = vec_add(prod_vec(ni, nj), omega_of(d2, ei, nj))
            rhs = vec_add(rhs, omega_of(d2, ni, ej))
            if lhs != rhs:
                failed.add(2)
            # 3: omega(N(x), N(y)) = 0
            if any(x != 0 for x in omega_of(d2, ni, nj)):
                failed.add(3)

    for i in range(dg):
        ni = N.col(i)

        def ncomb(mats):
            out = Matrix.zeros(dv, dv)
            for k, c in enumerate(ni):
                if c != 0:
                    out = out + mats[k].scale(c)
            return out

        rho_n = ncomb(rho)
        mu_n = ncomb(mu)
        sig_n = ncomb([d2.sigma_mat(k) for k in range(dg)])
        tau_n = ncomb([d2.tau_mat(k) for k in range(dg)])
        s1, s2 = d1.sigma_mat(i), d2.sigma_mat(i)
        t1, t2 = d1.tau_mat(i), d2.tau_mat(i)
        # 4: sigma'(x) - sigma(x) = rho(N x) + rho(x) S - S rho(x)
        if s1 - s2 != rho_n + rho[i] * S - S * rho[i]:
            failed.add(4)
        # 5: S sigma'(x) = sigma(N x) + sigma(x) S + rho(N x) S
        if S * s1 != sig_n + s2 * S + rho_n * S:
            failed.add(5)
        # 6: sigma(N x) S = 0
        if not (sig_n * S).is_zero():
            failed.add(6)
        # 7: tau'(., y) - tau(., y) = mu(N y) + mu(y) S - S mu(y)
        if t1 - t2 != mu_n + mu[i] * S - S * mu[i]:
            failed.add(7)
        # 8: S tau'(u, y) = tau(S u, y) + tau(u, N y) + mu(N y) S u
        if S * t1 != t2 * S + tau_n + mu_n * S:
            failed.add(8)
        # 9: tau(S u, N y) = 0
        if not (tau_n * S).is_zero():
            failed.add(9)

    dh1, dh2 = d1.dhat_mat(), d2.dhat_mat()
    # 10: dhat'(x) - dhat(x) = D(N(x)) - S(D(x))
    if dh1 - dh2 != D * N - S * D:
        failed.add(10)
    # 11: S(dhat'(x)) = dhat(N(x))
    if S * dh1 != dh2 * N:
        failed.add(11)

    tags = [f"equi-deformation-{k}" for k in sorted(failed)]
    return {"ok": not tags, "failed": tags}


def coboundary_datum(base: DerPair, N: Matrix, S: Matrix) -> DeformationDatum:
    """The degree-1 coboundary of (N, S) viewed as a deformation datum."""
    dims = base.dims
    specs = _component_specs("pair", 1)
    coords = _flatten(
        [
            _matrix_to_map(dims, MixedShape(0, 0, "g"), "g", N),
            _matrix_to_map(dims, MixedShape(0, 0, "v"), "v", S),
            MixedMap(dims, MixedShape(-1, 1, "g"), "v"),
            MixedMap(dims, MixedShape(-1, 0, "g"), "v"),
        ]
    )
    d1 = differential_matrix("pair", 1, base)
    out = d1.matvec(coords)
    omega, sigma, tau, dhat = _unflatten(dims, _component_specs("pair", 2), list(out))
    return DeformationDatum(dims, omega, sigma, tau, dhat)


def _matrix_to_map(dims: SplitDims, shape: MixedShape, target: str, m: Matrix) -> MixedMap:
    coeffs = {}
    for j in range(m.cols):
        v = m.col(j)
        if any(x != 0 for x in v):
            coeffs[((), (), j)] = v
    return MixedMap(dims, shape, target, coeffs)


def same_cohomology_class(base: DerPair, d1: DeformationDatum, d2: DeformationDatum):
    """Solve d1 - d2 = coboundary(N, S); the witness or None.

    Both inputs must be cocycles of the pair complex. The returned
    witness satisfies the linear identity exactly; it need not satisfy
    the quadratic equivalence constraints.
    """
    for d in (d1, d2):
        if not huaD(base, d.cochain()).is_zero():
            raise ValueError("input datum is not a 2-cocycle of the pair")
    diff = d1.cochain() - d2.cochain()
    target = _flatten([diff.f_g, diff.f_rho, diff.f_mu, diff.theta])
    d1mat = differential_matrix("pair", 1, base)
    sol = solve(d1mat, target)
    if sol is None:
        return None
    dims = base.dims
    n_map, s_map, _, _ = _unflatten(dims, _component_specs("pair", 1), list(sol))
    dg, dv = dims.dim_g, dims.dim_v
    N = Matrix(dg, dg, [[n_map.eval_local((), (), j)[r] for j in range(dg)] for r in range(dg)])
    S = Matrix(dv, dv, [[s_map.eval_local((), (), u)[r] for u in range(dv)] for r in range(dv)])
    w = EquivalenceWitness(N, S)
    assert coboundary_datum(base, N, S) == DeformationDatum(
        dims, diff.f_g, diff.f_rho, diff.f_mu, diff.theta
    )
    return w
