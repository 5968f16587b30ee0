"""Abelian extensions of a differential Lie algebra by a differential
representation: building from 2-cocycles, extracting cocycles via sections,
equivalence testing, and classification by the truncated degree-2 cohomology.

An extension is always presented on the split underlying space g (+) V with
the inclusion i, projection p and a chosen section s as matrices; the kernel
carries the zero bracket.
"""

from fractions import Fraction

from .linalg import Matrix, vec_is_zero, vec_zero
from .liealg import (DiffLieAlgebra, DiffRepresentation, LieAlgebra,
                     is_diff_lie_algebra, is_diff_representation)
from .multilinear import AltMap
from .cohomology import (CochainComplexSpec, CocyclePair, cohomology_dims,
                         cocycle_residual, difflie_differential,
                         coords_to_altmap, cochain_dim)


class InvalidExtension(Exception):
    pass


class NotCocycle(Exception):
    """Carries the nonzero degree-3 residual of the offending pair."""

    def __init__(self, residual):
        super().__init__("pair is not a 2-cocycle")
        self.residual = residual


def _invert(m):
    assert m.rows == m.cols
    cols = []
    for j in range(m.rows):
        e = vec_zero(m.rows)
        e[j] = Fraction(1)
        x = m.solve(e)
        if x is None:
            return None
        cols.append(x)
    return Matrix(m.rows, m.rows,
                  [[cols[j][i] for j in range(m.rows)]
                   for i in range(m.rows)])


def altmap1_from_matrix(m):
    f = AltMap(1, m.cols, m.rows)
    for j in range(m.cols):
        col = [m.data[i][j] for i in range(m.rows)]
        if not vec_is_zero(col):
            f.coeffs[(j,)] = col
    return f


def matrix_from_altmap1(f):
    out = Matrix.zero(f.tgt_dim, f.src_dim)
    for (j,), vec in f.coeffs.items():
        for i in range(f.tgt_dim):
            out.data[i][j] = vec[i]
    return out


class AbelianExtension:
    """A differential Lie algebra structure on g (+) V with abelian V.

    total: DiffLieAlgebra on the sum; i: V -> total; p: total -> g;
    s: g -> total a section of p.
    """

    def __init__(self, total, i, p, s):
        self.total = total
        self.i = i
        self.p = p
        self.s = s
        self.gdim = p.rows
        self.vdim = i.cols
        N = total.dim
        if i.rows != N or p.cols != N or s.rows != N or s.cols != self.gdim:
            raise InvalidExtension("shape mismatch")
        if self.gdim + self.vdim != N:
            raise InvalidExtension("dimension count is not exact")
        if not (self.p * self.i).is_zero():
            raise InvalidExtension("p . i != 0")
        if self.p * self.s != Matrix.identity(self.gdim):
            raise InvalidExtension("s is not a section of p")
        split = Matrix.block([[i, s]])
        inv = _invert(split)
        if inv is None:
            raise InvalidExtension("i and s do not split the total space")
        # i t + s p = Id with t i = Id, t s = 0
        self.t = Matrix(self.vdim, N, inv.data[:self.vdim])
        if not is_diff_lie_algebra(total):
            raise InvalidExtension("total space axioms fail")
        # the kernel must be abelian and an ideal preserved by the operator
        for a in range(self.vdim):
            iv = self.i.matvec(_basis(self.vdim, a))
            if not vec_is_zero(self.p.matvec(total.dv(iv))):
                raise InvalidExtension("operator does not preserve kernel")
            for b in range(self.vdim):
                if not vec_is_zero(
                        total.br(iv, self.i.matvec(_basis(self.vdim, b)))):
                    raise InvalidExtension("kernel is not abelian")
            for k in range(N):
                if not vec_is_zero(
                        self.p.matvec(total.br(_basis(N, k), iv))):
                    raise InvalidExtension("kernel is not an ideal")

    def base(self):
        """The induced differential Lie algebra structure on g."""
        gdim = self.gdim
        br = AltMap(2, gdim, gdim)
        for x in range(gdim):
            for y in range(x + 1, gdim):
                val = self.p.matvec(self.total.br(
                    self.s.matvec(_basis(gdim, x)),
                    self.s.matvec(_basis(gdim, y))))
                if not vec_is_zero(val):
                    br[(x, y)] = val
        d_g = self.p * self.total.d * self.s
        return DiffLieAlgebra(LieAlgebra(gdim, br), d_g, self.total.weight)


def _basis(n, i):
    v = vec_zero(n)
    v[i] = Fraction(1)
    return v


def extract_cocycle(E):
    """The representation and the pair (psi, chi) of a section:
    psi(x,y) = [s x, s y] - s[x,y], chi(x) = d(s x) - s(d x), both valued in
    V via t; rho(x)v = t[s x, i v]."""
    base = E.base()
    gdim, vdim = E.gdim, E.vdim
    rho = []
    for x in range(gdim):
        sx = E.s.matvec(_basis(gdim, x))
        cols = []
        for a in range(vdim):
            cols.append(E.t.matvec(
                E.total.br(sx, E.i.matvec(_basis(vdim, a)))))
        rho.append(Matrix(vdim, vdim,
                          [[cols[a][r] for a in range(vdim)]
                           for r in range(vdim)]))
    dV = E.t * E.total.d * E.i
    rep = DiffRepresentation(vdim, rho, dV)
    if not is_diff_representation(base, rep):
        raise InvalidExtension("induced coefficients fail representation "
                               "axioms")
    psi = AltMap(2, gdim, vdim)
    for x in range(gdim):
        for y in range(x + 1, gdim):
            sx = E.s.matvec(_basis(gdim, x))
            sy = E.s.matvec(_basis(gdim, y))
            val = E.t.matvec(E.total.br(sx, sy))
            if not vec_is_zero(val):
                psi[(x, y)] = val
    chi_m = E.t * E.total.d * E.s
    return rep, psi, altmap1_from_matrix(chi_m)


def build_extension(g, rep, psi, chi):
    """The split extension with bracket [x+u, y+v] = [x,y] + rho(x)v
    - rho(y)u + psi(x,y) and operator d(x+v) = d x + chi(x) + d_V v.

    Raises NotCocycle with the exact residual when (psi, chi) fails the
    degree-2 cocycle condition."""
    gdim, vdim = g.dim, rep.space_dim
    spec = CochainComplexSpec(g, rep, "difflie", max_degree=3)
    res = cocycle_residual(spec, 2, CocyclePair(psi, chi))
    if not vec_is_zero(res):
        raise NotCocycle(res)
    N = gdim + vdim
    br = AltMap(2, N, N)
    for x in range(gdim):
        for y in range(x + 1, gdim):
            gval = g.br(_basis(gdim, x), _basis(gdim, y))
            pval = psi.value_on_basis((x, y))
            br[(x, y)] = list(gval) + list(pval)
    for x in range(gdim):
        for a in range(vdim):
            val = rep.rho[x].matvec(_basis(vdim, a))
            if not vec_is_zero(val):
                br[(x, gdim + a)] = vec_zero(gdim) + val
    chi_m = matrix_from_altmap1(chi)
    d_hat = Matrix.block([
        [g.d, Matrix.zero(gdim, vdim)],
        [chi_m, rep.dV],
    ])
    total = DiffLieAlgebra(LieAlgebra(N, br), d_hat, g.weight)
    i = Matrix.block([[Matrix.zero(gdim, vdim)], [Matrix.identity(vdim)]])
    p = Matrix.block([[Matrix.identity(gdim), Matrix.zero(gdim, vdim)]])
    s = Matrix.block([[Matrix.identity(gdim)], [Matrix.zero(vdim, gdim)]])
    return AbelianExtension(total, i, p, s)


def equivalence_witness(E1, E2, phi=None):
    """Equivalence of two extensions of the same (g, V).

    With phi given: checks that zeta = Id + i . phi . p is an isomorphism of
    the totals commuting with i and p; returns (ok, phi).  With phi = None:
    searches for phi by solving the linear system
    (combined differential)(phi) = extracted cocycle difference; returns
    (found, phi_or_None)."""
    if (E1.gdim, E1.vdim) != (E2.gdim, E2.vdim):
        return False, None
    if phi is None:
        rep1, psi1, chi1 = extract_cocycle(E1)
        rep2, psi2, chi2 = extract_cocycle(E2)
        if rep1.rho != rep2.rho or rep1.dV != rep2.dV:
            return False, None
        base = E1.base()
        d1 = difflie_differential(base, rep1, 1, tilde=True)
        gdim, vdim = E1.gdim, E1.vdim
        target = CocyclePair(psi1 - psi2, chi1 - chi2).coords(
            gdim, vdim, 2)
        x = d1.solve(target)
        if x is None:
            return False, None
        phi = matrix_from_altmap1(coords_to_altmap(x, gdim, vdim, 1))
    N = E1.total.dim
    zeta = Matrix.identity(N) + E1.i * phi * E1.p
    if zeta * E1.i != E2.i or E2.p * zeta != E1.p:
        return False, None
    if zeta * E1.total.d != E2.total.d * zeta:
        return False, None
    for x in range(N):
        for y in range(x + 1, N):
            lhs = zeta.matvec(E1.total.br(_basis(N, x), _basis(N, y)))
            rhs = E2.total.br(zeta.matvec(_basis(N, x)),
                              zeta.matvec(_basis(N, y)))
            if lhs != rhs:
                return False, None
    return True, phi


def classify(g, rep):
    """dim of the truncated degree-2 cohomology, the group classifying
    abelian extensions of g by the coefficients."""
    spec = CochainComplexSpec(g, rep, "tilde", max_degree=3)
    return cohomology_dims(spec)[2]
