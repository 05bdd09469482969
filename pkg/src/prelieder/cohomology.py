"""The coboundary operators and cohomology dimensions.

Five complexes share this module:

  coeffs   C^n = Hom(wedge^(n-1) g tensor g, V), differential d_coeff
           (the four-sum coboundary of the coefficient complex),
  prelie   C^n = Hom(.., g) + Hom(.., V) + Hom(.., V) triples with
           differential partial (the bracket with the structure maps,
           up to sign),
  pair     C^n = prelie C^n + coeffs C^{n-1}, differential
           huaD(f, theta) = (partial f, d_coeff theta + delta f),
  regular  C^n = Hom(wedge^(n-1) g tensor g, g) + Hom(wedge^(n-2) g
           tensor g, g) for derivations of g into itself,
           huaD_reg(f, theta) = (d f, d theta + omega f),
  rep      the same two-slot shape with values in a module V carrying
           (K, rho_t, mu_t), differential huaD_rep.

Explicit formulas are authoritative here; the equivalent bracket-path
operators live next to them (suffix _bracket) and the test suite pins
the two paths together exactly. Sign factors like (-1)^(n-2) are
applied literally at n=1, where they equal -1.

The component shapes with a negative wedge size are zero spaces, which
makes the degree-1 special cases of every complex come out of the
uniform formulas.
"""

from __future__ import annotations

from fractions import Fraction

from .cochain import (
    Cochain,
    MixedMap,
    MixedShape,
    SplitDims,
    component,
    lift,
    mixed_space_dim,
    theta_component,
)
from .exact_linalg import (
    Matrix,
    kernel_basis,
    rank,
    rref,
    solve,
    vec_add,
    vec_scale,
    zero_vec,
)
from .mn_bracket import mn_bracket
from .prelie import (
    DerPair,
    PreLieAlgebra,
    RegularPair,
    bracket_vec,
    d_component,
    structure_cochain,
)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _add_scaled(acc, c, vec):
    if c == 0:
        return acc
    return vec_add(acc, vec_scale(c, vec))


def _drop(t, i):
    return t[:i] + t[i + 1 :]


# ---------------------------------------------------------------------------
# coefficient-complex coboundary (three instantiations: (rho,mu) on V,
# (L,R) on g, (rho_t,mu_t) on V)


def d_coeff(a: PreLieAlgebra, act_l, act_r, f: MixedMap) -> MixedMap:
    """Four-sum coboundary on Hom(wedge^(m-1) g tensor g, T).

    act_l[i], act_r[i] are the action matrices of e_i on the target
    space T; f has shape (m-1, 0, 'g'). Output has shape (m, 0, 'g').
    """
    dims = f.dims
    assert f.shape.v_wedge == 0 or f.shape.degenerate
    assert f.shape.tail == "g"
    m = f.shape.g_wedge + 1
    out_shape = MixedShape(m, 0, "g")
    out = {}
    tdim = f.target_dim
    for gt, vt, t in MixedMap(dims, out_shape, f.target).basis_keys():
        xs = gt
        acc = zero_vec(tdim)
        for i in range(m):
            s = _sign(i)  # (-1)^(i+1) for 1-based i
            xi = xs[i]
            rest = _drop(xs, i)
            acc = vec_add(acc, vec_scale(s, act_l[xi].matvec(f.eval_local(rest, (), t))))
            acc = vec_add(acc, vec_scale(s, act_r[t].matvec(f.eval_local(rest, (), xi))))
            for k, c in enumerate(a.prod_basis(xi, t)):
                acc = _add_scaled(acc, -s * c, f.eval_local(rest, (), k))
        for i in range(m):
            for j in range(i + 1, m):
                s = _sign(i + j)  # (-1)^(i+j): the two 1-based shifts cancel
                rest = _drop(_drop(xs, j), i)
                for k, c in enumerate(bracket_vec(a, xs[i], xs[j])):
                    acc = _add_scaled(acc, s * c, f.eval_local((k,) + rest, (), t))
        if any(x != 0 for x in acc):
            out[(gt, vt, t)] = acc
    return MixedMap(dims, out_shape, f.target, out)


def d_prelie(a: PreLieAlgebra, rep, f: MixedMap) -> MixedMap:
    """Coboundary of the coefficient complex with values in (V; rho, mu)."""
    return d_coeff(a, rep.rho, rep.mu, f)


def d_regular(a: PreLieAlgebra, f: MixedMap) -> MixedMap:
    """Coboundary with regular coefficients (L, R) on g itself."""
    L = [a.left_mult(i) for i in range(a.dim)]
    R = [a.right_mult(i) for i in range(a.dim)]
    return d_coeff(a, L, R, f)


# ---------------------------------------------------------------------------
# partial: the degree map on triples (f_g, f_rho, f_mu)


def partial(a: PreLieAlgebra, rep, f_g: MixedMap, f_rho: MixedMap, f_mu: MixedMap):
    """Explicit component formulas for the triple-complex coboundary."""
    dims = f_g.dims
    n = f_g.shape.arity
    out_g = d_regular(a, f_g)
    out_rho = _partial_rho(a, rep, f_g, f_rho, n)
    out_mu = _partial_mu(a, rep, f_g, f_rho, f_mu, n)
    return out_g, out_rho, out_mu


def _partial_rho(a, rep, f_g, f_rho, n):
    dims = f_g.dims
    shape = MixedShape(n, 0, "v")
    out = {}
    dv = dims.dim_v
    for gt, vt, u in MixedMap(dims, shape, "v").basis_keys():
        xs = gt
        acc = zero_vec(dv)
        for i in range(n):
            s = _sign(i)
            xi = xs[i]
            rest = _drop(xs, i)
            # rho(f_g(.., x_i)) u
            for k, c in enumerate(f_g.eval_local(rest, (), xi)):
                acc = _add_scaled(acc, s * c, rep.rho[k].col(u))
            # rho(x_i) f_rho(.., u)
            acc = vec_add(
                acc, vec_scale(s, rep.rho[xi].matvec(f_rho.eval_local(rest, (), u)))
            )
            # - f_rho(.., rho(x_i) u)
            for w, c in enumerate(rep.rho[xi].col(u)):
                acc = _add_scaled(acc, -s * c, f_rho.eval_local(rest, (), w))
        for i in range(n):
            for j in range(i + 1, n):
                s = _sign(i + j)
                rest = _drop(_drop(xs, j), i)
                for k, c in enumerate(bracket_vec(a, xs[i], xs[j])):
                    acc = _add_scaled(acc, s * c, f_rho.eval_local((k,) + rest, (), u))
        if any(x != 0 for x in acc):
            out[(gt, vt, u)] = acc
    return MixedMap(dims, shape, "v", out)


def _partial_mu(a, rep, f_g, f_rho, f_mu, n):
    dims = f_g.dims
    shape = MixedShape(n - 1, 1, "g")
    out = {}
    dv = dims.dim_v
    lead_sign = _sign(n - 1)
    for gt, vt, t in MixedMap(dims, shape, "v").basis_keys():
        xs = gt  # x_1 .. x_{n-1}
        (u,) = vt
        acc = zero_vec(dv)
        # (-1)^(n-1) (mu(f_g(x_1..x_n)) u + mu(x_n) f_rho(.., u) - f_rho(.., mu(x_n) u))
        for k, c in enumerate(f_g.eval_local(xs, (), t)):
            acc = _add_scaled(acc, lead_sign * c, rep.mu[k].col(u))
        acc = vec_add(
            acc, vec_scale(lead_sign, rep.mu[t].matvec(f_rho.eval_local(xs, (), u)))
        )
        for w, c in enumerate(rep.mu[t].col(u)):
            acc = _add_scaled(acc, -lead_sign * c, f_rho.eval_local(xs, (), w))
        for i in range(n - 1):
            s = _sign(i)
            xi = xs[i]
            rest = _drop(xs, i)
            # - f_mu(.., u, x_i . x_n)
            for k, c in enumerate(a.prod_basis(xi, t)):
                acc = _add_scaled(acc, -s * c, f_mu.eval_local(rest, (u,), k))
            # + rho(x_i) f_mu(.., u, x_n)
            acc = vec_add(
                acc, vec_scale(s, rep.rho[xi].matvec(f_mu.eval_local(rest, (u,), t)))
            )
            # - f_mu(.., rho(x_i) u, x_n)
            for w, c in enumerate(rep.rho[xi].col(u)):
                acc = _add_scaled(acc, -s * c, f_mu.eval_local(rest, (w,), t))
            # + mu(x_n) f_mu(.., u, x_i)
            acc = vec_add(
                acc, vec_scale(s, rep.mu[t].matvec(f_mu.eval_local(rest, (u,), xi)))
            )
            # + f_mu(.., mu(x_i) u, x_n)  (note: plus, unlike the rho term)
            for w, c in enumerate(rep.mu[xi].col(u)):
                acc = _add_scaled(acc, s * c, f_mu.eval_local(rest, (w,), t))
        for i in range(n - 1):
            for j in range(i + 1, n - 1):
                s = _sign(i + j)
                rest = _drop(_drop(xs, j), i)
                for k, c in enumerate(bracket_vec(a, xs[i], xs[j])):
                    acc = _add_scaled(acc, s * c, f_mu.eval_local((k,) + rest, (u,), t))
        if any(x != 0 for x in acc):
            out[(gt, vt, t)] = acc
    return MixedMap(dims, shape, "v", out)


def partial_bracket(p: DerPair, f_g, f_rho, f_mu):
    """Oracle path: (-1)^(n-1) [pi+rho+mu, f]^MN, decomposed."""
    n = f_g.shape.arity
    m = structure_cochain(p)
    f = lift(f_g) + lift(f_rho) + lift(f_mu)
    br = mn_bracket(m, f).scale(_sign(n - 1))
    dims = p.dims
    return (
        component(br, MixedShape(n, 0, "g"), "g"),
        component(br, MixedShape(n, 0, "v"), "v"),
        component(br, MixedShape(n - 1, 1, "g"), "v"),
    )


# ---------------------------------------------------------------------------
# delta and omega


def delta(D: Matrix, f_g: MixedMap, f_rho: MixedMap, f_mu: MixedMap) -> MixedMap:
    """The mixing map triple -> Hom(wedge^(n-1) g tensor g, V).

    (delta f)(x_1..x_n) = sum_i (-1)^(i+1) f_mu(.., D(x_i), x_n)
      + (-1)^(n-2) (f_rho(x_1..x_{n-1}, D(x_n)) - D(f_g(x_1..x_n))).
    """
    dims = f_g.dims
    n = f_g.shape.arity
    shape = MixedShape(n - 1, 0, "g")
    tail_sign = _sign(n - 2)
    out = {}
    for gt, vt, t in MixedMap(dims, shape, "v").basis_keys():
        xs = gt
        acc = zero_vec(dims.dim_v)
        for i in range(n - 1):
            s = _sign(i)
            rest = _drop(xs, i)
            for k, c in enumerate(D.col(xs[i])):
                acc = _add_scaled(acc, s * c, f_mu.eval_local(rest, (k,), t))
        for k, c in enumerate(D.col(t)):
            acc = _add_scaled(acc, tail_sign * c, f_rho.eval_local(xs, (), k))
        acc = vec_add(
            acc, vec_scale(-tail_sign, D.matvec(f_g.eval_local(xs, (), t)))
        )
        if any(x != 0 for x in acc):
            out[(gt, vt, t)] = acc
    return MixedMap(dims, shape, "v", out)


def delta_bracket(p: DerPair, f_g, f_rho, f_mu) -> MixedMap:
    """Oracle path: (-1)^(n-2) [f, D]^MN, which lands in the theta shapes."""
    n = f_g.shape.arity
    f = lift(f_g) + lift(f_rho) + lift(f_mu)
    br = mn_bracket(f, derivation_cochain_of(p)).scale(_sign(n - 2))
    return theta_component(br)


def derivation_cochain_of(p: DerPair) -> Cochain:
    return lift(d_component(p.D, p.dims))


def omega(D: Matrix, K: Matrix, f: MixedMap) -> MixedMap:
    """(-1)^(n-2) (sum_i f(.., D(x_i), ..) - K(f(x_1..x_n))).

    D acts on the g arguments, K on the value; for the regular complex
    K = D, for the module-coefficient complex K is the coefficient map.
    Output has the same shape as f.
    """
    dims = f.dims
    if f.shape.degenerate:
        return MixedMap(dims, f.shape, f.target)
    n = f.shape.arity
    s_n = _sign(n - 2)
    out = {}
    for gt, vt, t in MixedMap(dims, f.shape, f.target).basis_keys():
        xs = gt
        acc = zero_vec(f.target_dim)
        for i in range(n - 1):
            rest_before, rest_after = xs[:i], xs[i + 1 :]
            for k, c in enumerate(D.col(xs[i])):
                acc = _add_scaled(
                    acc, s_n * c, f.eval_local(rest_before + (k,) + rest_after, (), t)
                )
        for k, c in enumerate(D.col(t)):
            acc = _add_scaled(acc, s_n * c, f.eval_local(xs, (), k))
        acc = vec_add(acc, vec_scale(-s_n, K.matvec(f.eval_local(xs, (), t))))
        if any(x != 0 for x in acc):
            out[(gt, vt, t)] = acc
    return MixedMap(dims, f.shape, f.target, out)


# ---------------------------------------------------------------------------
# cochain containers and the full differentials


class DerPairCochain:
    """Element of the pair complex: (f_g, f_rho, f_mu, theta) at degree n.

    At n = 1 the f_mu and theta slots are the zero space (negative wedge
    size) and the element is just (Hom(g,g), Hom(V,V)).
    """

    def __init__(self, dims: SplitDims, n: int, f_g, f_rho, f_mu, theta):
        assert n >= 1
        self.dims = dims
        self.n = n
        self.f_g = f_g
        self.f_rho = f_rho
        self.f_mu = f_mu
        self.theta = theta
        assert f_g.shape == MixedShape(n - 1, 0, "g") and f_g.target == "g"
        assert f_rho.shape == MixedShape(n - 1, 0, "v") and f_rho.target == "v"
        assert f_mu.shape == MixedShape(n - 2, 1, "g") and f_mu.target == "v"
        assert theta.shape == MixedShape(n - 2, 0, "g") and theta.target == "v"

    @staticmethod
    def zero(dims: SplitDims, n: int) -> "DerPairCochain":
        return DerPairCochain(
            dims,
            n,
            MixedMap(dims, MixedShape(n - 1, 0, "g"), "g"),
            MixedMap(dims, MixedShape(n - 1, 0, "v"), "v"),
            MixedMap(dims, MixedShape(n - 2, 1, "g"), "v"),
            MixedMap(dims, MixedShape(n - 2, 0, "g"), "v"),
        )

    def is_zero(self) -> bool:
        return (
            self.f_g.is_zero()
            and self.f_rho.is_zero()
            and self.f_mu.is_zero()
            and self.theta.is_zero()
        )

    def __eq__(self, other):
        return (
            isinstance(other, DerPairCochain)
            and self.dims == other.dims
            and self.n == other.n
            and self.f_g == other.f_g
            and self.f_rho == other.f_rho
            and self.f_mu == other.f_mu
            and self.theta == other.theta
        )

    def __add__(self, other):
        return DerPairCochain(
            self.dims,
            self.n,
            self.f_g + other.f_g,
            self.f_rho + other.f_rho,
            self.f_mu + other.f_mu,
            self.theta + other.theta,
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return DerPairCochain(
            self.dims,
            self.n,
            self.f_g.scale(c),
            self.f_rho.scale(c),
            self.f_mu.scale(c),
            self.theta.scale(c),
        )


def huaD(p: DerPair, c: DerPairCochain) -> DerPairCochain:
    """(partial f, d_coeff theta + delta f), one degree up."""
    out_g, out_rho, out_mu = partial(p.algebra, p.rep, c.f_g, c.f_rho, c.f_mu)
    d_theta = d_prelie(p.algebra, p.rep, c.theta)
    out_theta = d_theta + delta(p.D, c.f_g, c.f_rho, c.f_mu)
    return DerPairCochain(c.dims, c.n + 1, out_g, out_rho, out_mu, out_theta)


class TwoSlotCochain:
    """(f, theta) element of the regular or module-coefficient complex.

    f has shape (n-1, 0, 'g'), theta (n-2, 0, 'g'), both valued in the
    same target ('g' for the regular complex, 'v' for coefficients in a
    module).
    """

    def __init__(self, dims: SplitDims, n: int, target: str, f, theta):
        assert n >= 1
        self.dims = dims
        self.n = n
        self.target = target
        self.f = f
        self.theta = theta
        assert f.shape == MixedShape(n - 1, 0, "g") and f.target == target
        assert theta.shape == MixedShape(n - 2, 0, "g") and theta.target == target

    @staticmethod
    def zero(dims: SplitDims, n: int, target: str) -> "TwoSlotCochain":
        return TwoSlotCochain(
            dims,
            n,
            target,
            MixedMap(dims, MixedShape(n - 1, 0, "g"), target),
            MixedMap(dims, MixedShape(n - 2, 0, "g"), target),
        )

    def is_zero(self) -> bool:
        return self.f.is_zero() and self.theta.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, TwoSlotCochain)
            and (self.dims, self.n, self.target) == (other.dims, other.n, other.target)
            and self.f == other.f
            and self.theta == other.theta
        )

    def __add__(self, other):
        return TwoSlotCochain(
            self.dims, self.n, self.target, self.f + other.f, self.theta + other.theta
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return TwoSlotCochain(
            self.dims, self.n, self.target, self.f.scale(c), self.theta.scale(c)
        )


def huaD_reg(p: RegularPair, c: TwoSlotCochain) -> TwoSlotCochain:
    """(d f, d theta + omega f) with regular coefficients."""
    assert c.target == "g"
    a = p.algebra
    return TwoSlotCochain(
        c.dims,
        c.n + 1,
        "g",
        d_regular(a, c.f),
        d_regular(a, c.theta) + omega(p.D, p.D, c.f),
    )


def huaD_rep(p: RegularPair, rep5, c: TwoSlotCochain) -> TwoSlotCochain:
    """(d f, d theta + omega f) with coefficients in (V, K, rho_t, mu_t)."""
    assert c.target == "v"
    a = p.algebra
    return TwoSlotCochain(
        c.dims,
        c.n + 1,
        "v",
        d_coeff(a, rep5.rho_t, rep5.mu_t, c.f),
        d_coeff(a, rep5.rho_t, rep5.mu_t, c.theta) + omega(p.D, rep5.K, c.f),
    )


# ---------------------------------------------------------------------------
# embedding of the regular complex into the pair complex


def retarget(m: MixedMap, tail: str | None = None, target: str | None = None) -> MixedMap:
    """Reinterpret tail or target space; only valid when dims agree."""
    dims = m.dims
    new_tail = tail or m.shape.tail
    new_target = target or m.target
    if new_tail != m.shape.tail:
        assert dims.dim_g == dims.dim_v
    if new_target != m.target:
        assert dims.dim_g == dims.dim_v
    shape = MixedShape(m.shape.g_wedge, m.shape.v_wedge, new_tail)
    return MixedMap(dims, shape, new_target, dict(m.coeffs))


def i_embed(c: TwoSlotCochain) -> DerPairCochain:
    """i(f, theta) = (f, f, f, theta) into the pair complex over V = g.

    The f_mu slot places the V argument in the last wedge position of f;
    the alternating sign from re-sorting is produced by eval_local.
    """
    assert c.target == "g" and c.dims.dim_g == c.dims.dim_v
    dims, n = c.dims, c.n
    f = c.f
    f_rho = MixedMap(dims, MixedShape(n - 1, 0, "v"), "v", dict(f.coeffs))
    mu_shape = MixedShape(n - 2, 1, "g")
    coeffs = {}
    for gt, vt, t in MixedMap(dims, mu_shape, "v").basis_keys():
        (u,) = vt
        val = f.eval_local(gt + (u,), (), t)
        if any(x != 0 for x in val):
            coeffs[(gt, vt, t)] = val
    f_mu = MixedMap(dims, mu_shape, "v", coeffs)
    theta = retarget(c.theta, target="v")
    return DerPairCochain(dims, n, f, f_rho, f_mu, theta)


def p_project(c: DerPairCochain) -> TwoSlotCochain:
    """p(f_g, f_rho, f_mu, theta) = (f_g, theta) with g-valued theta."""
    assert c.dims.dim_g == c.dims.dim_v
    return TwoSlotCochain(
        c.dims, c.n, "g", c.f_g, retarget(c.theta, target="g")
    )


# ---------------------------------------------------------------------------
# coordinates, differential matrices, cohomology dimensions


def _component_specs(complex_id: str, n: int):
    """(shape, target) list defining the coordinate blocks of C^n."""
    if complex_id == "coeffs":
        return [(MixedShape(n - 1, 0, "g"), "v")]
    if complex_id == "prelie":
        return [
            (MixedShape(n - 1, 0, "g"), "g"),
            (MixedShape(n - 1, 0, "v"), "v"),
            (MixedShape(n - 2, 1, "g"), "v"),
        ]
    if complex_id == "pair":
        return _component_specs("prelie", n) + [(MixedShape(n - 2, 0, "g"), "v")]
    if complex_id == "regular":
        return [(MixedShape(n - 1, 0, "g"), "g"), (MixedShape(n - 2, 0, "g"), "g")]
    if complex_id == "rep":
        return [(MixedShape(n - 1, 0, "g"), "v"), (MixedShape(n - 2, 0, "g"), "v")]
    raise ValueError(f"unknown complex {complex_id!r}")


def _dims_for(complex_id: str, data) -> SplitDims:
    if complex_id in ("coeffs", "prelie", "pair"):
        return data.dims
    if complex_id == "regular":
        return SplitDims(data.algebra.dim, data.algebra.dim)
    if complex_id == "rep":
        regpair, rep5 = data
        return SplitDims(regpair.algebra.dim, rep5.dim_v)
    raise ValueError(f"unknown complex {complex_id!r}")


def space_dimension(complex_id: str, n: int, data) -> int:
    dims = _dims_for(complex_id, data)
    return sum(
        mixed_space_dim(dims, shape, target)
        for shape, target in _component_specs(complex_id, n)
    )


def _flatten(maps) -> list:
    coords = []
    for m in maps:
        for key in m.basis_keys():
            val = m.coeffs.get(key)
            coords.extend(val if val is not None else zero_vec(m.target_dim))
    return coords


def _unflatten(dims: SplitDims, specs, vec):
    maps = []
    pos = 0
    for shape, target in specs:
        m = MixedMap(dims, shape, target)
        tdim = m.target_dim
        coeffs = {}
        for key in m.basis_keys():
            chunk = tuple(vec[pos : pos + tdim])
            pos += tdim
            if any(x != 0 for x in chunk):
                coeffs[key] = chunk
        maps.append(MixedMap(dims, shape, target, coeffs))
    assert pos == len(vec)
    return maps


def _apply_differential(complex_id: str, n: int, data, maps):
    if complex_id == "coeffs":
        (theta,) = maps
        return [d_prelie(data.algebra, data.rep, theta)]
    if complex_id == "prelie":
        f_g, f_rho, f_mu = maps
        return list(partial(data.algebra, data.rep, f_g, f_rho, f_mu))
    if complex_id == "pair":
        f_g, f_rho, f_mu, theta = maps
        c = DerPairCochain(data.dims, n, f_g, f_rho, f_mu, theta)
        out = huaD(data, c)
        return [out.f_g, out.f_rho, out.f_mu, out.theta]
    if complex_id == "regular":
        f, theta = maps
        dims = _dims_for(complex_id, data)
        out = huaD_reg(data, TwoSlotCochain(dims, n, "g", f, theta))
        return [out.f, out.theta]
    if complex_id == "rep":
        regpair, rep5 = data
        f, theta = maps
        dims = _dims_for(complex_id, data)
        out = huaD_rep(regpair, rep5, TwoSlotCochain(dims, n, "v", f, theta))
        return [out.f, out.theta]
    raise ValueError(f"unknown complex {complex_id!r}")


def differential_matrix(complex_id: str, n: int, data) -> Matrix:
    """Matrix of d: C^n -> C^(n+1) in enumerate_basis coordinates."""
    dims = _dims_for(complex_id, data)
    specs_n = _component_specs(complex_id, n)
    cols_n = space_dimension(complex_id, n, data)
    rows = space_dimension(complex_id, n + 1, data)
    columns = []
    for j in range(cols_n):
        unit = [Fraction(0)] * cols_n
        unit[j] = Fraction(1)
        maps = _unflatten(dims, specs_n, unit)
        out = _apply_differential(complex_id, n, data, maps)
        columns.append(_flatten(out))
    return Matrix(rows, cols_n, [[columns[j][i] for j in range(cols_n)] for i in range(rows)])


def cohomology_dim(complex_id: str, n: int, data):
    """(z, b, h): cocycle, coboundary and cohomology dimensions at degree n."""
    assert n >= 1
    dim_n = space_dimension(complex_id, n, data)
    d_n = differential_matrix(complex_id, n, data)
    z = dim_n - rank(d_n)
    b = rank(differential_matrix(complex_id, n - 1, data)) if n >= 2 else 0
    return z, b, z - b


# ---------------------------------------------------------------------------
# long exact sequence


def _iota_matrix(p: DerPair, n: int) -> Matrix:
    """Chain inclusion theta -> (0,0,0,theta): coeffs degree n-1 -> pair degree n."""
    src = space_dimension("coeffs", n - 1, p) if n >= 2 else 0
    dst = space_dimension("pair", n, p)
    offset = dst - src  # theta block is last
    rows = []
    for i in range(dst):
        row = [0] * src
        if i >= offset:
            row[i - offset] = 1
        rows.append(row)
    return Matrix(dst, src, rows)


def _p_matrix(p: DerPair, n: int) -> Matrix:
    """Chain projection (f, theta) -> f: pair degree n -> prelie degree n."""
    src = space_dimension("pair", n, p)
    dst = space_dimension("prelie", n, p)
    rows = []
    for i in range(dst):
        row = [0] * src
        row[i] = 1
        rows.append(row)
    return Matrix(dst, src, rows)


def _delta_matrix(p: DerPair, n: int) -> Matrix:
    """Connecting map on cochains: prelie degree n -> coeffs degree n."""
    dims = p.dims
    specs = _component_specs("prelie", n)
    src = space_dimension("prelie", n, p)
    dst = space_dimension("coeffs", n, p)
    columns = []
    for j in range(src):
        unit = [Fraction(0)] * src
        unit[j] = Fraction(1)
        f_g, f_rho, f_mu = _unflatten(dims, specs, unit)
        out = delta(p.D, f_g, f_rho, f_mu)
        columns.append(_flatten([out]))
    return Matrix(dst, src, [[columns[j][i] for j in range(src)] for i in range(dst)])


def _columns_of(m: Matrix) -> list:
    return [m.col(j) for j in range(m.cols)]


def _induced_rank(chain_map: Matrix, z_src: list, b_dst: list) -> int:
    """Rank of the induced map on cohomology.

    z_src: kernel-basis vectors at the source; b_dst: spanning set of
    coboundaries at the destination. rank = dim((M z + B)/B).
    """
    cols = [chain_map.matvec(v) for v in z_src] + list(b_dst)
    if not cols:
        return 0
    m = Matrix(chain_map.rows, len(cols), [[c[i] for c in cols] for i in range(chain_map.rows)])
    b_rank = 0
    if b_dst:
        bm = Matrix(
            chain_map.rows, len(b_dst), [[c[i] for c in b_dst] for i in range(chain_map.rows)]
        )
        b_rank = rank(bm)
    return rank(m) - b_rank


def _in_span(cols: list, v, dim: int) -> bool:
    if all(x == 0 for x in v):
        return True
    if not cols:
        return False
    m = Matrix(dim, len(cols), [[c[i] for c in cols] for i in range(dim)])
    return solve(m, v) is not None


def les_check(p: DerPair, n_max: int) -> dict:
    """Exactness of H^{n-1}(coeffs) -> H^n(pair) -> H^n(prelie) -> H^n(coeffs) -> ...

    For each node: the composite of the incoming and outgoing induced
    maps must vanish on cohomology, and rank(incoming) must equal
    dim H(node) - rank(outgoing). Returns a structured report.
    """
    info = {}

    def complex_data(cid, deg):
        key = (cid, deg)
        if key not in info:
            if deg < 1:
                info[key] = {"z": [], "b": [], "h": 0, "dim": 0}
            else:
                d_n = differential_matrix(cid, deg, p)
                z = kernel_basis(d_n)
                b = (
                    _columns_of(differential_matrix(cid, deg - 1, p))
                    if deg >= 2
                    else []
                )
                b_rank = rank(differential_matrix(cid, deg - 1, p)) if deg >= 2 else 0
                info[key] = {
                    "z": z,
                    "b": b,
                    "h": len(z) - b_rank,
                    "dim": space_dimension(cid, deg, p),
                }
        return info[key]

    nodes = []
    all_exact = True
    for n in range(1, n_max + 1):
        pair_n = complex_data("pair", n)
        prelie_n = complex_data("prelie", n)
        coeffs_prev = complex_data("coeffs", n - 1)
        coeffs_n = complex_data("coeffs", n)
        pair_next = complex_data("pair", n + 1)

        iota_n = _iota_matrix(p, n)
        p_n = _p_matrix(p, n)
        delta_n = _delta_matrix(p, n)
        iota_next = _iota_matrix(p, n + 1)

        # node H^n(pair): incoming iota from H^{n-1}(coeffs), outgoing p
        rank_in = _induced_rank(iota_n, coeffs_prev["z"], pair_n["b"])
        rank_out = _induced_rank(p_n, pair_n["z"], prelie_n["b"])
        comp_zero = all(
            _in_span(prelie_n["b"], p_n.matvec(iota_n.matvec(v)), p_n.rows)
            for v in coeffs_prev["z"]
        )
        exact = comp_zero and (rank_in == pair_n["h"] - rank_out)
        nodes.append(
            {
                "degree": n,
                "node": "pair",
                "h": pair_n["h"],
                "rank_in": rank_in,
                "rank_out": rank_out,
                "composite_zero": comp_zero,
                "exact": exact,
            }
        )
        all_exact = all_exact and exact

        # node H^n(prelie): incoming p, outgoing delta to H^n(coeffs)
        rank_out_d = _induced_rank(delta_n, prelie_n["z"], coeffs_n["b"])
        comp_zero = all(
            _in_span(coeffs_n["b"], delta_n.matvec(p_n.matvec(v)), delta_n.rows)
            for v in pair_n["z"]
        )
        exact = comp_zero and (rank_out == prelie_n["h"] - rank_out_d)
        nodes.append(
            {
                "degree": n,
                "node": "prelie",
                "h": prelie_n["h"],
                "rank_in": rank_out,
                "rank_out": rank_out_d,
                "composite_zero": comp_zero,
                "exact": exact,
            }
        )
        all_exact = all_exact and exact

        # node H^n(coeffs): incoming delta, outgoing iota into H^{n+1}(pair)
        rank_out_i = _induced_rank(iota_next, coeffs_n["z"], pair_next["b"])
        comp_zero = all(
            _in_span(pair_next["b"], iota_next.matvec(delta_n.matvec(v)), iota_next.rows)
            for v in prelie_n["z"]
        )
        exact = comp_zero and (rank_out_d == coeffs_n["h"] - rank_out_i)
        nodes.append(
            {
                "degree": n,
                "node": "coeffs",
                "h": coeffs_n["h"],
                "rank_in": rank_out_d,
                "rank_out": rank_out_i,
                "composite_zero": comp_zero,
                "exact": exact,
            }
        )
        all_exact = all_exact and exact

    return {"max_degree": n_max, "nodes": nodes, "all_exact": all_exact}
