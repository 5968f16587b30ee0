"""Cochain complexes of a differential Lie algebra with coefficients in a
differential representation, as exact matrix families.

Four flavors are available:

  "ce"      : the Chevalley-Eilenberg complex of the underlying Lie algebra,
              C^n = Hom(wedge^n g, V);
  "do"      : the complex of the weighted operator -- the Chevalley-Eilenberg
              complex of the shifted representation rho_lambda;
  "difflie" : the combined complex C^n = C^n_ce (+) C^{n-1}_do, a negative
              shift of the mapping cone of the connecting map delta;
  "tilde"   : the subcomplex with degree 0 removed and degree 1 truncated to
              the Lie part (the receptacle of extension classes).

Degree-0 sign note: the combined differential uses the uniform mapping-cone
rule (f, g) |-> (d_ce f, -d_do g - delta f) in every degree, including the
extension of that rule to degree 0 (where g = 0), which is what d o d = 0
forces.
"""

from fractions import Fraction
from itertools import combinations
from math import comb

from .linalg import Matrix, homology_dim, vec_add, vec_is_zero, vec_scale, \
    vec_sub, vec_zero, basis_vec
from .liealg import rho_lambda
from .multilinear import AltMap


FLAVORS = ("ce", "do", "difflie", "tilde")


class UnknownFlavor(Exception):
    pass


# ---------------------------------------------------------------------------
# cochain coordinates: Hom(wedge^n g, V) on the increasing-tuple basis,
# ordered lexicographically by tuple, then by target index


def cochain_keys(gdim, n):
    return list(combinations(range(gdim), n))


def cochain_dim(gdim, vdim, n):
    return comb(gdim, n) * vdim


def altmap_to_coords(f, gdim, vdim, n):
    """Coordinates of an n-cochain (a vector when n = 0, else an AltMap)."""
    if n == 0:
        return [Fraction(x) for x in f]
    out = []
    for key in cochain_keys(gdim, n):
        vec = f.coeffs.get(key)
        out.extend(vec if vec is not None else vec_zero(vdim))
    return out


def coords_to_altmap(coords, gdim, vdim, n):
    if n == 0:
        return list(coords)
    f = AltMap(n, gdim, vdim)
    for k, key in enumerate(cochain_keys(gdim, n)):
        vec = coords[k * vdim:(k + 1) * vdim]
        if not vec_is_zero(vec):
            f.coeffs[key] = [Fraction(x) for x in vec]
    return f


def _operator_matrix(op, gdim, vdim, n, m):
    """Matrix of a linear map from n-cochains to m-cochains."""
    src = cochain_dim(gdim, vdim, n)
    tgt = cochain_dim(gdim, vdim, m)
    out = Matrix.zero(tgt, src)
    for j in range(src):
        e = vec_zero(src)
        e[j] = Fraction(1)
        col = altmap_to_coords(op(coords_to_altmap(e, gdim, vdim, n)),
                               gdim, vdim, m)
        for i in range(tgt):
            out.data[i][j] = col[i]
    return out


# ---------------------------------------------------------------------------
# the three building-block operators, applied to cochains


def ce_apply(L, rep, f, n):
    """The Lie-algebra coboundary of an n-cochain, an (n+1)-cochain."""
    gdim, vdim = L.dim, rep.space_dim
    out = AltMap(n + 1, gdim, vdim)
    if n + 1 > gdim:
        return out
    for key in combinations(range(gdim), n + 1):
        total = vec_zero(vdim)
        for pos in range(n + 1):
            i = pos + 1
            sign = -1 if (i + n) % 2 else 1
            rest = key[:pos] + key[pos + 1:]
            inner = f if n == 0 else f.value_on_basis(rest)
            val = rep.rho[key[pos]].matvec(inner)
            if not vec_is_zero(val):
                total = vec_add(total, vec_scale(sign, val))
        if n >= 1:
            for pos_i in range(n + 1):
                for pos_j in range(pos_i + 1, n + 1):
                    i, j = pos_i + 1, pos_j + 1
                    sign = -1 if (i + j + n + 1) % 2 else 1
                    rest = tuple(key[p] for p in range(n + 1)
                                 if p not in (pos_i, pos_j))
                    br = L.br(basis_vec(gdim, key[pos_i]),
                              basis_vec(gdim, key[pos_j]))
                    val = f.evaluate([br] + [basis_vec(gdim, t)
                                             for t in rest])
                    if not vec_is_zero(val):
                        total = vec_add(total, vec_scale(sign, val))
        if not vec_is_zero(total):
            out.coeffs[key] = total
    return out


def delta_apply(A, rep, f, n):
    """The connecting map delta on an n-cochain: insert the operator into
    1 <= k <= n slots with weight lambda^{k-1}, minus d_V after f."""
    lam = A.weight
    gdim, vdim = A.dim, rep.space_dim
    if n == 0:
        return vec_scale(-1, rep.dV.matvec(f))
    out = AltMap(n, gdim, vdim)
    for key in combinations(range(gdim), n):
        base = [basis_vec(gdim, i) for i in key]
        total = vec_scale(-1, rep.dV.matvec(f.value_on_basis(key)))
        for k in range(1, n + 1):
            c = lam ** (k - 1)
            if c == 0:
                break
            for subset in combinations(range(n), k):
                args = [A.dv(v) if p in subset else v
                        for p, v in enumerate(base)]
                val = f.evaluate(args)
                if not vec_is_zero(val):
                    total = vec_add(total, vec_scale(c, val))
        if not vec_is_zero(total):
            out.coeffs[key] = total
    return out


class CochainComplexSpec:
    """A validated complex: dimensions and differentials up to max_degree.

    d[n] maps n-cochains to (n+1)-cochains for 0 <= n <= max_degree;
    d[n+1] * d[n] = 0 is asserted for n <= max_degree - 1 at build time.
    """

    def __init__(self, algebra, rep, flavor="difflie", max_degree=4):
        if flavor not in FLAVORS:
            raise UnknownFlavor(flavor)
        self.algebra = algebra
        self.rep = rep
        self.flavor = flavor
        self.max_degree = max_degree
        self.dims = [self._dim(n) for n in range(max_degree + 2)]
        self.d = [self._differential(n) for n in range(max_degree + 1)]
        for n in range(max_degree):
            if not (self.d[n + 1] * self.d[n]).is_zero():
                raise AssertionError(
                    "d^2 != 0 at degree %d (flavor %s)" % (n, flavor))

    def _dim(self, n):
        gdim, vdim = self.algebra.dim, self.rep.space_dim
        single = cochain_dim(gdim, vdim, n)
        if self.flavor in ("ce", "do"):
            return single
        if self.flavor == "tilde":
            if n == 0:
                return 0
            if n == 1:
                return single
        return single + (cochain_dim(gdim, vdim, n - 1) if n >= 1 else 0)

    def _differential(self, n):
        A, rep = self.algebra, self.rep
        gdim, vdim = A.dim, rep.space_dim
        if self.flavor == "ce":
            return ce_differential(A, rep, n)
        if self.flavor == "do":
            return do_differential(A, rep, n)
        return difflie_differential(A, rep, n, tilde=(self.flavor == "tilde"))


def ce_differential(A, rep, n):
    L = A.algebra if hasattr(A, "algebra") else A
    gdim, vdim = L.dim, rep.space_dim
    return _operator_matrix(lambda f: ce_apply(L, rep, f, n),
                            gdim, vdim, n, n + 1)


def do_differential(A, rep, n):
    shifted = rho_lambda(rep, A)
    return _operator_matrix(lambda f: ce_apply(A.algebra, shifted, f, n),
                            A.dim, rep.space_dim, n, n + 1)


def delta_matrix(A, rep, n):
    return _operator_matrix(lambda f: delta_apply(A, rep, f, n),
                            A.dim, rep.space_dim, n, n)


def difflie_differential(A, rep, n, tilde=False):
    """Block matrix of the combined differential in degree n.

    Layout: Lie part first, operator part second, in both source and target.
    """
    gdim, vdim = A.dim, rep.space_dim
    dce = ce_differential(A, rep, n)
    ddo = do_differential(A, rep, n - 1) if n >= 1 else None
    dlt = delta_matrix(A, rep, n)
    lie_n = cochain_dim(gdim, vdim, n)
    lie_n1 = cochain_dim(gdim, vdim, n + 1)
    op_prev = cochain_dim(gdim, vdim, n - 1) if n >= 1 else 0
    op_n = lie_n
    if tilde:
        if n == 0:
            return Matrix.zero(cochain_dim(gdim, vdim, 1), 0)
        if n == 1:
            return Matrix.block([[dce], [dlt.scale(-1)]])
    if n == 0:
        return Matrix.block([[dce], [dlt.scale(-1)]])
    return Matrix.block([
        [dce, Matrix.zero(lie_n1, op_prev)],
        [dlt.scale(-1), ddo.scale(-1)],
    ])


def cohomology_dims(spec):
    """dim H^n for 0 <= n <= max_degree - 1."""
    out = []
    for n in range(spec.max_degree):
        d_in = spec.d[n - 1] if n >= 1 else Matrix.zero(spec.dims[0], 0)
        out.append(homology_dim(spec.d[n], d_in))
    return out


# ---------------------------------------------------------------------------
# cocycle pairs and residuals


class CocyclePair:
    """(f, g) with f an n-cochain into V and g an (n-1)-cochain into V."""

    def __init__(self, f, g):
        self.f = f
        self.g = g

    def coords(self, gdim, vdim, n):
        out = altmap_to_coords(self.f, gdim, vdim, n)
        if n >= 1:
            out = out + altmap_to_coords(self.g, gdim, vdim, n - 1)
        return out


def cocycle_residual(spec, n, pair):
    """The combined differential applied to the pair, as a coordinate
    vector in degree n+1; zero exactly for cocycles."""
    gdim, vdim = spec.algebra.dim, spec.rep.space_dim
    return spec.d[n].matvec(pair.coords(gdim, vdim, n))


# ---------------------------------------------------------------------------
# bridge to the twisted formal structure (adjoint coefficients)


def _matrix_as_altmap(m):
    f = AltMap(1, m.cols, m.rows)
    for j in range(m.cols):
        col = [m.data[i][j] for i in range(m.rows)]
        if not vec_is_zero(col):
            f.coeffs[(j,)] = col
    return f


def _as_altmap0(v, dim):
    f = AltMap(0, dim, dim)
    f[()] = list(v)
    return f


def twist_bridge_residual(A, n, pair):
    """l_1 of the absolute structure twisted by (s mu, d), applied to
    (sf, g), plus the combined differential of (f, g); identically zero for
    adjoint coefficients.  Returned in degree-(n+1) coordinates."""
    from .linfty import Term, absolute_structure, twist_l1_formal
    dim = A.dim
    mu = A.algebra.bracket
    dmap = _matrix_as_altmap(A.d)
    struct = absolute_structure(dim, A.weight)
    fterm = Term("s", pair.f)
    if n == 1:
        gterm = Term("a", _as_altmap0(pair.g, dim))
    else:
        gterm = Term("a", pair.g)
    twisted = twist_l1_formal(struct, mu, dmap, fterm) + \
        twist_l1_formal(struct, mu, dmap, gterm)
    # assemble as coordinates in C^{n+1} = C^{n+1}_ce (+) C^n_do
    s_out = AltMap(n + 1, dim, dim)
    a_out = AltMap(n, dim, dim) if n >= 1 else None
    for t in twisted.terms():
        if t.kind == "s":
            assert t.f.arity == n + 1
            s_out = s_out + t.f
        else:
            assert t.f.arity == n
            a_out = a_out + t.f
    from .liealg import adjoint_rep
    rep = adjoint_rep(A)
    d_f = ce_apply(A.algebra, rep, pair.f, n)
    shifted = rho_lambda(rep, A)
    if n == 1:
        d_g = ce_apply(A.algebra, shifted, pair.g, 0)
    else:
        d_g = ce_apply(A.algebra, shifted, pair.g, n - 1)
    delta_f = delta_apply(A, rep, pair.f, n)
    res_s = s_out + d_f
    res_a = a_out + d_g.scale(-1) + delta_f.scale(-1)
    return altmap_to_coords(res_s, dim, dim, n + 1) + \
        altmap_to_coords(res_a, dim, dim, n)


# ---------------------------------------------------------------------------
# coefficients in a general representation via the split-zero extension


def extension_embedding(A, rep, n):
    """The matrix embedding Hom(wedge^n g, V) into Hom(wedge^n(g (+) V),
    g (+) V): restrict along wedge^n g, kill every summand with a V-factor,
    corestrict along V.  Together with the analogous map on the operator
    part this identifies the coefficient complex with a subcomplex of the
    adjoint complex of the split-zero extension."""
    gdim, vdim = A.dim, rep.space_dim
    N = gdim + vdim
    src = cochain_dim(gdim, vdim, n)
    tgt = cochain_dim(N, N, n)
    out = Matrix.zero(tgt, src)
    big_keys = {key: k for k, key in enumerate(cochain_keys(N, n))}
    for k, key in enumerate(cochain_keys(gdim, n)):
        for t in range(vdim):
            col = k * vdim + t
            row = big_keys[key] * N + gdim + t
            out.data[row][col] = Fraction(1)
    return out


def embedding_commutes_residual(A, rep, n):
    """E . d  -  d_ext . E on the combined complexes, where E is the block
    embedding of C^n(g,V) into C^n of the split-zero extension with adjoint
    coefficients.  Returns the difference matrix (zero)."""
    from .liealg import adjoint_rep, trivial_extension
    ext = trivial_extension(A, rep)
    ext_rep = adjoint_rep(ext)

    def embed_block(m):
        lie = extension_embedding(A, rep, m)
        if m == 0:
            return lie
        op = extension_embedding(A, rep, m - 1)
        z1 = Matrix.zero(lie.rows, op.cols)
        z2 = Matrix.zero(op.rows, lie.cols)
        return Matrix.block([[lie, z1], [z2, op]])

    E_n = embed_block(n)
    E_n1 = embed_block(n + 1)
    d_small = difflie_differential(A, rep, n)
    d_big = difflie_differential(ext, ext_rep, n)
    return d_big * E_n - E_n1 * d_small
