"""Truncated 1-parameter formal deformations of a differential Lie algebra.

A deformation is a pair of polynomial families mu_t = sum mu_i t^i,
d_t = sum d_i t^i in k[t]/(t^{N+1}) with (mu_0, d_0) the base structure.
The defining equations, collected per order n, are:

  jacobi-type:  sum_{i=0}^n cyclic sum of mu_i(x, mu_{n-i}(y, z)) = 0;
  operator-type: sum_{k+l=n} d_l mu_k(x,y)
                 = sum_{k+l=n} (mu_k(d_l x, y) + mu_k(x, d_l y))
                 + lambda sum_{k+l+m=n} mu_k(d_l x, d_m y).

The order-1 pair of a deformation is a degree-2 cocycle of the combined
complex with adjoint coefficients; clearing it by a formal isomorphism
Id + phi t^r is a linear solve, obstructed exactly by its cohomology class.
"""

from fractions import Fraction
from itertools import combinations

from .linalg import Matrix, vec_add, vec_is_zero, vec_scale, vec_sub, \
    vec_zero, basis_vec
from .liealg import adjoint_rep
from .multilinear import AltMap
from .cohomology import (CocyclePair, cochain_dim, coords_to_altmap,
                         cocycle_residual, difflie_differential,
                         CochainComplexSpec)
from .extensions import altmap1_from_matrix, matrix_from_altmap1


class NotDeformation(Exception):
    def __init__(self, order, which):
        super().__init__("deformation equations fail at order %d (%s)"
                         % (order, which))
        self.order = order
        self.which = which


class Obstructed(Exception):
    """Carries the unsolvable cocycle pair (a nonzero cohomology class)."""

    def __init__(self, pair, order):
        super().__init__("order-%d class is not a coboundary" % order)
        self.pair = pair
        self.order = order


class TruncatedDeformation:
    """mu = [mu_0..mu_N] (arity-2 maps), d = [d_0..d_N] (matrices)."""

    def __init__(self, base, mu, d):
        assert len(mu) == len(d) and len(mu) >= 1
        self.base = base
        self.order = len(mu) - 1
        self.mu = list(mu)
        self.d = list(d)
        assert (mu[0] - base.algebra.bracket).is_zero(), \
            "order-0 bracket must be the base bracket"
        assert d[0] == base.d, "order-0 operator must be the base operator"


def constant_deformation(base, order):
    dim = base.dim
    mu = [base.algebra.bracket] + [AltMap(2, dim, dim)] * order
    d = [base.d] + [Matrix.zero(dim, dim)] * order
    return TruncatedDeformation(base, mu, d)


class FormalIso:
    """phi = [phi_0..phi_N] with phi_0 = Id."""

    def __init__(self, phi):
        assert phi and phi[0] == Matrix.identity(phi[0].rows)
        self.phi = list(phi)
        self.order = len(phi) - 1

    def inverse_series(self, order):
        """Truncated inverse: psi_0 = Id, psi_n = -sum phi_k psi_{n-k}."""
        n_dim = self.phi[0].rows
        psi = [Matrix.identity(n_dim)]
        for n in range(1, order + 1):
            acc = Matrix.zero(n_dim, n_dim)
            for k in range(1, n + 1):
                pk = self.phi[k] if k <= self.order else None
                if pk is not None:
                    acc = acc + pk * psi[n - k]
            psi.append(acc.scale(-1))
        return psi


def deformation_residuals(D):
    """Per-order residual pairs [(jacobi: arity-3 map, operator: arity-2
    map)], order 0..N; the deformation equations hold iff all are zero."""
    dim = D.base.dim
    lam = D.base.weight
    out = []
    for n in range(D.order + 1):
        jac = AltMap(3, dim, dim)
        if dim >= 3:
            for key in combinations(range(dim), 3):
                vecs = [basis_vec(dim, k) for k in key]
                total = vec_zero(dim)
                for i in range(n + 1):
                    mi, mj = D.mu[i], D.mu[n - i]
                    for (a, b, c) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
                        inner = mj.evaluate([vecs[b], vecs[c]])
                        total = vec_add(
                            total, mi.evaluate([vecs[a], inner]))
                if not vec_is_zero(total):
                    jac.coeffs[key] = total
        op = AltMap(2, dim, dim)
        for key in combinations(range(dim), 2):
            x, y = (basis_vec(dim, k) for k in key)
            total = vec_zero(dim)
            for k in range(n + 1):
                l = n - k
                total = vec_add(total,
                                D.d[l].matvec(D.mu[k].evaluate([x, y])))
                total = vec_sub(total, D.mu[k].evaluate(
                    [D.d[l].matvec(x), y]))
                total = vec_sub(total, D.mu[k].evaluate(
                    [x, D.d[l].matvec(y)]))
            if lam != 0:
                for k in range(n + 1):
                    for l in range(n - k + 1):
                        m = n - k - l
                        total = vec_sub(total, vec_scale(
                            lam, D.mu[k].evaluate([D.d[l].matvec(x),
                                                   D.d[m].matvec(y)])))
            if not vec_is_zero(total):
                op.coeffs[key] = total
        out.append((jac, op))
    return out


def is_deformation(D):
    return all(j.is_zero() and o.is_zero()
               for j, o in deformation_residuals(D))


def infinitesimal(D):
    """The order-1 pair (mu_1, d_1) with its exact degree-2 cocycle
    residual in the adjoint complex; residual is zero for any valid
    deformation."""
    res = deformation_residuals(D)
    for n in (0, 1):
        if n <= D.order:
            jac, op = res[n]
            if not jac.is_zero():
                raise NotDeformation(n, "jacobi")
            if not op.is_zero():
                raise NotDeformation(n, "operator")
    dim = D.base.dim
    mu1 = D.mu[1] if D.order >= 1 else AltMap(2, dim, dim)
    d1 = D.d[1] if D.order >= 1 else Matrix.zero(dim, dim)
    pair = CocyclePair(mu1, altmap1_from_matrix(d1))
    spec = CochainComplexSpec(D.base, adjoint_rep(D.base), "difflie",
                              max_degree=3)
    return pair, cocycle_residual(spec, 2, pair)


def apply_formal_iso(D, Phi):
    """Pull back along Phi_t: the deformation with
    mu'_n = sum_{a+b+c+e=n} psi_a mu_b(phi_c ., phi_e .) and
    d'_n = sum_{a+b+c=n} psi_a d_b phi_c, truncated at the order of D;
    Phi maps the result onto D (Phi mu' = mu (Phi x Phi))."""
    N = D.order
    dim = D.base.dim
    psi = Phi.inverse_series(N)

    def phi_at(k):
        return Phi.phi[k] if k <= Phi.order else None

    mu_new = []
    d_new = []
    for n in range(N + 1):
        m = AltMap(2, dim, dim)
        for key in combinations(range(dim), 2):
            x, y = (basis_vec(dim, k) for k in key)
            total = vec_zero(dim)
            for a in range(n + 1):
                for b in range(n - a + 1):
                    for c in range(n - a - b + 1):
                        e = n - a - b - c
                        pc, pe = phi_at(c), phi_at(e)
                        if pc is None or pe is None:
                            continue
                        val = D.mu[b].evaluate(
                            [pc.matvec(x), pe.matvec(y)])
                        total = vec_add(total, psi[a].matvec(val))
            if not vec_is_zero(total):
                m.coeffs[key] = total
        mu_new.append(m)
        acc = Matrix.zero(dim, dim)
        for a in range(n + 1):
            for b in range(n - a + 1):
                c = n - a - b
                pc = phi_at(c)
                if pc is None:
                    continue
                acc = acc + psi[a] * D.d[b] * pc
        d_new.append(acc)
    return TruncatedDeformation(D.base, mu_new, d_new)


def first_nontrivial_order(D):
    for r in range(1, D.order + 1):
        if not D.mu[r].is_zero() or not D.d[r].is_zero():
            return r
    return None


def rigidify_step(D):
    """Clear the lowest nonzero order by a formal isomorphism Id + phi t^r.

    Returns (iso, transformed deformation); when the order-r pair is not a
    coboundary raises Obstructed with that pair.  Requires the deformation
    equations to hold through the truncation order."""
    res = deformation_residuals(D)
    for n, (jac, op) in enumerate(res):
        if not jac.is_zero():
            raise NotDeformation(n, "jacobi")
        if not op.is_zero():
            raise NotDeformation(n, "operator")
    dim = D.base.dim
    r = first_nontrivial_order(D)
    if r is None:
        return FormalIso([Matrix.identity(dim)]), D
    pair = CocyclePair(D.mu[r], altmap1_from_matrix(D.d[r]))
    d1 = difflie_differential(D.base, adjoint_rep(D.base), 1, tilde=True)
    target = [-x for x in pair.coords(dim, dim, 2)]
    sol = d1.solve(target)
    if sol is None:
        raise Obstructed(pair, r)
    phi = matrix_from_altmap1(coords_to_altmap(sol, dim, dim, 1))
    phis = [Matrix.identity(dim)] + \
        [Matrix.zero(dim, dim)] * (r - 1) + [phi]
    iso = FormalIso(phis)
    return iso, apply_formal_iso(D, iso)
