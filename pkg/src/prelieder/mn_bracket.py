"""The graded Lie bracket on multilinear maps wedge^(n-1)(W) tensor W -> W.

For P of arity p+1 and Q of arity q+1 the composition P . Q has arity
p+q+1 and is defined by two unshuffle sums (ordinary signatures, the
grading only enters through the global (-1)^(pq) factors):

  (P.Q)(x_1,...,x_{p+q+1}) =
      sum over (q,1,p-1)-unshuffles s of sgn(s) *
          P(Q(x_{s(1)},...,x_{s(q)}, x_{s(q+1)}), x_{s(q+2)},...,x_{s(p+q)}, x_{p+q+1})
    + (-1)^{pq} * sum over (p,q)-unshuffles s of sgn(s) *
          P(x_{s(1)},...,x_{s(p)}, Q(x_{s(p+1)},...,x_{s(p+q)}, x_{p+q+1}))

and [P,Q] = P.Q - (-1)^{pq} Q.P. The unshuffles permute only the first
p+q arguments; the last argument stays put. When p = 0 the first sum is
empty (its last block has size -1), so on linear maps the bracket is the
matrix commutator. An element of C^m carries graded-Lie degree m-1.
"""

from __future__ import annotations

from .cochain import Cochain
from .exact_linalg import vec_add, vec_scale, zero_vec
from .spaces import unshuffles, wedge_tail_basis


def circ(P: Cochain, Q: Cochain) -> Cochain:
    """The composition P . Q from the displayed double unshuffle sum."""
    assert P.dims == Q.dims
    dims = P.dims
    total = dims.total
    p, q = P.arity - 1, Q.arity - 1
    n = p + q + 1
    sign2 = -1 if (p * q) % 2 else 1
    first = unshuffles((q, 1, p - 1))
    second = unshuffles((p, q))
    out = {}
    for wedge, tail in wedge_tail_basis(total, n):
        acc = zero_vec(total)
        for sigma, sgn in first:
            q_args = [wedge[sigma[j]] for j in range(q)]
            mid = wedge[sigma[q]]
            rest = [wedge[sigma[q + 1 + j]] for j in range(p - 1)]
            qv = Q.eval_basis(q_args, mid)
            for k, c in enumerate(qv):
                if c == 0:
                    continue
                pv = P.eval_basis([k] + rest, tail)
                acc = vec_add(acc, vec_scale(sgn * c, pv))
        for sigma, sgn in second:
            p_args = [wedge[sigma[j]] for j in range(p)]
            q_args = [wedge[sigma[p + j]] for j in range(q)]
            qv = Q.eval_basis(q_args, tail)
            for k, c in enumerate(qv):
                if c == 0:
                    continue
                pv = P.eval_basis(p_args, k)
                acc = vec_add(acc, vec_scale(sign2 * sgn * c, pv))
        if any(x != 0 for x in acc):
            out[(wedge, tail)] = acc
    return Cochain(dims, n, out)


def mn_bracket(P: Cochain, Q: Cochain) -> Cochain:
    """[P,Q] = P.Q - (-1)^(pq) Q.P."""
    p, q = P.arity - 1, Q.arity - 1
    sign = -1 if (p * q) % 2 else 1
    return circ(P, Q) - circ(Q, P).scale(sign)
