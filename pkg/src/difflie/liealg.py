"""Differential Lie algebras of weight lambda and their representations.

A weight-lambda differential operator on a Lie algebra g satisfies

    d[x,y] = [dx,y] + [x,dy] + lambda [dx,dy].

lambda = 0 gives a classical derivation, lambda = 1 a difference operator;
the identity is such an operator of weight -1.  Everything here is a plain
container plus explicit residual functions, so tests can inspect the
residuals themselves; validate() helpers just assert the residuals vanish.
"""

from fractions import Fraction
from itertools import combinations

from .linalg import (Matrix, frac, fmt_scalar, parse_scalar, vec_add, vec_sub,
                     vec_scale, vec_zero, vec_is_zero, basis_vec)
from .multilinear import AltMap, DimensionMismatch


class ZeroScale(Exception):
    pass


class NotLieAlgebra(Exception):
    pass


class InvalidStructure(Exception):
    pass


class LieAlgebra:
    """Lie algebra given by structure constants (an arity-2 AltMap g -> g)."""

    def __init__(self, dim, bracket=None):
        self.dim = dim
        if bracket is None:
            bracket = AltMap(2, dim, dim)
        assert bracket.arity == 2
        assert bracket.src_dim == dim and bracket.tgt_dim == dim
        self.bracket = bracket

    @classmethod
    def from_brackets(cls, dim, entries):
        """entries: iterable of (i, j, vector) with 0-based i < j."""
        b = AltMap(2, dim, dim)
        for i, j, vec in entries:
            b[(i, j)] = vec
        return cls(dim, b)

    def br(self, u, v):
        return self.bracket.evaluate([u, v])

    def basis(self, i):
        return basis_vec(self.dim, i)

    def ad(self, i):
        """Matrix of ad(x_i) acting on g."""
        cols = [self.bracket.value_on_basis((i, j)) for j in range(self.dim)]
        return Matrix(self.dim, self.dim,
                      [[cols[j][r] for j in range(self.dim)]
                       for r in range(self.dim)])

    def ad_vec(self, v):
        m = Matrix.zero(self.dim, self.dim)
        for i, c in enumerate(v):
            if c != 0:
                m = m + self.ad(i).scale(c)
        return m


def jacobi_residual(L):
    """[[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] over all triples."""
    out = []
    for i, j, k in combinations(range(L.dim), 3):
        xi, xj, xk = L.basis(i), L.basis(j), L.basis(k)
        r = L.br(L.br(xi, xj), xk)
        r = vec_add(r, L.br(L.br(xj, xk), xi))
        r = vec_add(r, L.br(L.br(xk, xi), xj))
        out.append(r)
    return out


def is_lie_algebra(L):
    return all(vec_is_zero(r) for r in jacobi_residual(L))


class DiffLieAlgebra:
    """A Lie algebra with a weighted differential operator d and weight."""

    def __init__(self, algebra, d, weight):
        assert d.rows == d.cols == algebra.dim
        self.algebra = algebra
        self.d = d
        self.weight = frac(weight)

    @property
    def dim(self):
        return self.algebra.dim

    def br(self, u, v):
        return self.algebra.br(u, v)

    def basis(self, i):
        return self.algebra.basis(i)

    def dv(self, v):
        return self.d.matvec(v)


def weighted_derivation_residual(A):
    """d[x,y] - [dx,y] - [x,dy] - lambda [dx,dy] over basis pairs i < j."""
    lam = A.weight
    out = []
    for i, j in combinations(range(A.dim), 2):
        x, y = A.basis(i), A.basis(j)
        dx, dy = A.dv(x), A.dv(y)
        r = A.dv(A.br(x, y))
        r = vec_sub(r, A.br(dx, y))
        r = vec_sub(r, A.br(x, dy))
        r = vec_sub(r, vec_scale(lam, A.br(dx, dy)))
        out.append(r)
    return out


def is_diff_lie_algebra(A):
    return (is_lie_algebra(A.algebra)
            and all(vec_is_zero(r) for r in weighted_derivation_residual(A)))


def validate(A):
    if not is_lie_algebra(A.algebra):
        raise NotLieAlgebra("Jacobi residual nonzero")
    if not all(vec_is_zero(r) for r in weighted_derivation_residual(A)):
        raise InvalidStructure("weighted derivation residual nonzero")
    return A


def rescale_operator(A, kappa):
    """(g, [.,.], kappa d) is a differential Lie algebra of weight lambda/kappa."""
    kappa = frac(kappa)
    if kappa == 0:
        raise ZeroScale("rescaling by zero is not invertible")
    return DiffLieAlgebra(A.algebra, A.d.scale(kappa), A.weight / kappa)


class DiffRepresentation:
    """Representation (V, rho, d_V) over a differential Lie algebra.

    rho: list of space_dim x space_dim matrices, one per basis vector of g.
    """

    def __init__(self, space_dim, rho, dV):
        self.space_dim = space_dim
        self.rho = list(rho)
        for m in self.rho:
            if m.rows != space_dim or m.cols != space_dim:
                raise DimensionMismatch("rho matrix shape")
        assert dV.rows == dV.cols == space_dim
        self.dV = dV

    @property
    def g_dim(self):
        return len(self.rho)

    def rho_vec(self, x):
        """rho extended linearly to a g-vector."""
        m = Matrix.zero(self.space_dim, self.space_dim)
        for i, c in enumerate(x):
            if c != 0:
                m = m + self.rho[i].scale(c)
        return m

    def act(self, x, v):
        return self.rho_vec(x).matvec(v)


def rep_residuals(A, rep):
    """Homomorphism + weighted compatibility residuals of a representation.

    Returns {"hom": [matrices], "compat": [matrices]}:
      hom:    rho([x,y]) - rho(x)rho(y) + rho(y)rho(x) over pairs
      compat: d_V rho(x) - rho(dx) - rho(x) d_V - lambda rho(dx) d_V per basis x
    """
    lam = A.weight
    hom = []
    for i, j in combinations(range(A.dim), 2):
        rb = rep.rho_vec(A.br(A.basis(i), A.basis(j)))
        hom.append(rb - rep.rho[i] * rep.rho[j] + rep.rho[j] * rep.rho[i])
    compat = []
    for i in range(A.dim):
        rdx = rep.rho_vec(A.dv(A.basis(i)))
        r = rep.dV * rep.rho[i] - rdx - rep.rho[i] * rep.dV \
            - (rdx * rep.dV).scale(lam)
        compat.append(r)
    return {"hom": hom, "compat": compat}


def is_diff_representation(A, rep):
    res = rep_residuals(A, rep)
    return all(m.is_zero() for m in res["hom"] + res["compat"])


def rho_lambda(rep, A):
    """The shifted representation rho_lambda(x) = rho(x + lambda d x)."""
    lam = A.weight
    rho = [rep.rho_vec(vec_add(A.basis(i), vec_scale(lam, A.dv(A.basis(i)))))
           for i in range(A.dim)]
    return DiffRepresentation(rep.space_dim, rho, rep.dV)


def adjoint_rep(A):
    """rho = ad, d_V = d."""
    return DiffRepresentation(A.dim, [A.algebra.ad(i) for i in range(A.dim)],
                              A.d)


def trivial_rep(A, space_dim, dV=None):
    """rho = 0 with an arbitrary d_V (default 0)."""
    if dV is None:
        dV = Matrix.zero(space_dim, space_dim)
    return DiffRepresentation(
        space_dim, [Matrix.zero(space_dim, space_dim)] * A.dim, dV)


def trivial_extension(A, rep):
    """The differential Lie algebra g (+) V with bracket
    {x+u, y+v} = [x,y] + rho(x)v - rho(y)u and operator d_g + d_V."""
    n, m = A.dim, rep.space_dim
    N = n + m
    b = AltMap(2, N, N)
    for i, j in combinations(range(n), 2):
        vec = A.algebra.bracket.value_on_basis((i, j))
        b[(i, j)] = list(vec) + [Fraction(0)] * m
    for i in range(n):
        for a in range(m):
            col = [rep.rho[i].data[r][a] for r in range(m)]
            if not vec_is_zero(col):
                b[(i, n + a)] = [Fraction(0)] * n + col
    alg = LieAlgebra(N, b)
    d = Matrix.block([[A.d, Matrix.zero(n, m)],
                      [Matrix.zero(m, n), rep.dV]])
    return DiffLieAlgebra(alg, d, A.weight)


# ---------------------------------------------------------------------------
# LieAct triples, relative operators, and the weighted semidirect product


class LieActTriple:
    """(g, h, rho) with rho: g -> Der(h) a Lie algebra homomorphism."""

    def __init__(self, g, h, rho):
        self.g = g
        self.h = h
        self.rho = list(rho)
        assert len(self.rho) == g.dim
        for m in self.rho:
            if m.rows != h.dim or m.cols != h.dim:
                raise DimensionMismatch("rho matrix shape")

    def rho_vec(self, x):
        m = Matrix.zero(self.h.dim, self.h.dim)
        for i, c in enumerate(x):
            if c != 0:
                m = m + self.rho[i].scale(c)
        return m


def lieact_residuals(T):
    """Homomorphism residuals and derivation-of-h residuals.

    hom:        rho([x,y]_g) - [rho(x), rho(y)] over g-pairs
    derivation: rho(x)[u,v]_h - [rho(x)u, v]_h - [u, rho(x)v]_h per basis x, u<v
    """
    hom = []
    for i, j in combinations(range(T.g.dim), 2):
        rb = T.rho_vec(T.g.br(T.g.basis(i), T.g.basis(j)))
        hom.append(rb - T.rho[i] * T.rho[j] + T.rho[j] * T.rho[i])
    der = []
    for i in range(T.g.dim):
        for a, b in combinations(range(T.h.dim), 2):
            u, v = T.h.basis(a), T.h.basis(b)
            r = T.rho[i].matvec(T.h.br(u, v))
            r = vec_sub(r, T.h.br(T.rho[i].matvec(u), v))
            r = vec_sub(r, T.h.br(u, T.rho[i].matvec(v)))
            der.append(r)
    return {"hom": hom, "derivation": der}


def is_lieact(T):
    res = lieact_residuals(T)
    return (all(m.is_zero() for m in res["hom"])
            and all(vec_is_zero(v) for v in res["derivation"]))


def relative_diff_residual(T, D, lam):
    """D[x,y]_g - rho(x)Dy + rho(y)Dx - lambda [Dx,Dy]_h over g-pairs."""
    if D.rows != T.h.dim or D.cols != T.g.dim:
        raise DimensionMismatch("relative operator shape")
    lam = frac(lam)
    out = []
    for i, j in combinations(range(T.g.dim), 2):
        x, y = T.g.basis(i), T.g.basis(j)
        Dx, Dy = D.matvec(x), D.matvec(y)
        r = D.matvec(T.g.br(x, y))
        r = vec_sub(r, T.rho_vec(x).matvec(Dy))
        r = vec_add(r, T.rho_vec(y).matvec(Dx))
        r = vec_sub(r, vec_scale(lam, T.h.br(Dx, Dy)))
        out.append(r)
    return out


def semidirect_weighted(T, lam):
    """Lie algebra on g (+) h:
    [x+u, y+v] = [x,y]_g + rho(x)v - rho(y)u + lambda [u,v]_h."""
    lam = frac(lam)
    n, m = T.g.dim, T.h.dim
    N = n + m
    b = AltMap(2, N, N)
    for i, j in combinations(range(n), 2):
        vec = T.g.bracket.value_on_basis((i, j))
        b[(i, j)] = list(vec) + [Fraction(0)] * m
    for i in range(n):
        for a in range(m):
            col = [T.rho[i].data[r][a] for r in range(m)]
            if not vec_is_zero(col):
                b[(i, n + a)] = [Fraction(0)] * n + col
    for a, c in combinations(range(m), 2):
        vec = vec_scale(lam, T.h.bracket.value_on_basis((a, c)))
        if not vec_is_zero(vec):
            b[(n + a, n + c)] = [Fraction(0)] * n + list(vec)
    return LieAlgebra(N, b)


def lift_tilde_D(T, D, lam):
    """Lift D: g -> h to D~(x+u) = D(x) - u on the lam-weighted semidirect
    product.  Since the product's h-bracket already absorbs one factor of
    lam, the weighted rule D~ satisfies there is the weight-1 rule: the
    returned candidate has weight 1, and its derivation residual vanishes
    precisely when D is a relative differential operator of weight lam
    (for lam = 0 the weighted term on the product vanishes and the
    equivalence degenerates correctly as well)."""
    lam = frac(lam)
    n, m = T.g.dim, T.h.dim
    alg = semidirect_weighted(T, lam)
    d = Matrix.block([[Matrix.zero(n, n), Matrix.zero(n, m)],
                      [D, Matrix.identity(m).scale(-1)]])
    return DiffLieAlgebra(alg, d, Fraction(1))


# ---------------------------------------------------------------------------
# JSON serialization (1-based indices on the wire)


def _matrix_to_json(m):
    return [[fmt_scalar(x) for x in row] for row in m.data]


def _matrix_from_json(rows):
    return Matrix.from_rows([[parse_scalar(x) for x in row] for row in rows])


def difflie_to_json(A):
    brackets = []
    for (i, j), vec in sorted(A.algebra.bracket.coeffs.items()):
        brackets.append([i + 1, j + 1, [fmt_scalar(c) for c in vec]])
    return {"dim": A.dim, "weight": fmt_scalar(A.weight),
            "brackets": brackets, "d": _matrix_to_json(A.d)}


def difflie_from_json(obj):
    dim = obj["dim"]
    entries = [(i - 1, j - 1, [parse_scalar(c) for c in vec])
               for i, j, vec in obj["brackets"]]
    alg = LieAlgebra.from_brackets(dim, entries)
    return DiffLieAlgebra(alg, _matrix_from_json(obj["d"]),
                          parse_scalar(obj["weight"]))


def rep_to_json(rep):
    return {"rep_dim": rep.space_dim,
            "rho": {str(i + 1): _matrix_to_json(m)
                    for i, m in enumerate(rep.rho)},
            "dV": _matrix_to_json(rep.dV)}


def rep_from_json(obj, g_dim):
    rho = [_matrix_from_json(obj["rho"][str(i + 1)]) for i in range(g_dim)]
    return DiffRepresentation(obj["rep_dim"], rho, _matrix_from_json(obj["dV"]))


def altmap_to_json(f):
    return {"arity": f.arity,
            "coeffs": {",".join(str(i + 1) for i in key):
                       [fmt_scalar(c) for c in vec]
                       for key, vec in sorted(f.coeffs.items())}}


def altmap_from_json(obj, src_dim, tgt_dim):
    f = AltMap(obj["arity"], src_dim, tgt_dim)
    for key, vec in obj["coeffs"].items():
        idx = tuple(int(p) - 1 for p in key.split(","))
        f[idx] = [parse_scalar(c) for c in vec]
    return f
