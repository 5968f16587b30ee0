"""Homotopy differential Lie algebras: a graded space l with a family of
degree-1 graded symmetric brackets mu_i and a family of degree-0 graded
symmetric operators D_i, of a fixed weight lambda.

Two residual families characterise the structure:

  bracket family (n >= 1):
    sum_{i=1}^n sum_{Sh(i,n-i)} eps(sigma)
        mu_{n-i+1}(mu_i(x_{sigma(1..i)}), x_{sigma(i+1..n)}) = 0,
  i.e. (l, mu) is an L-infinity[1]-algebra;

  operator family (n >= 1):
    sum_{p>=2} sum_{t=p-1}^{n} sum_{m_1+..+m_{p-1}=t}
      sum_{sigma in Sh(m_{p-1},..,m_1,n-t), pointed on the first p-1 blocks}
        eps(sigma) lambda^{p-2}
        mu_{n-t+p-1}(D_{m_{p-1}}(block_1), .., D_{m_1}(block_{p-1}), tail)
    - sum_{j=1}^n sum_{Sh(j,n-j)} eps(sigma)
        D_{n-j+1}(mu_j(x_{sigma(1..j)}), x_{sigma(j+1..n)}) = 0.

"Pointed" means the images of the first positions of the D-blocks increase;
summing instead over plain shuffles of those blocks overcounts each pointed
term exactly (p-1)! times, which ``homotopy_diff_residual_factorial``
exploits as an independent evaluation of the same family.

A differential Lie algebra of weight lambda, suspended into a single degree
with mu_2 the bracket and D_1 the operator, satisfies both families; that
reduction is the bridge to the ungraded residual checks.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

from .linalg import basis_vec, frac, vec_add, vec_is_zero, vec_scale, \
    vec_sub, vec_zero
from .multilinear import GradedSymMap
from .permutations import koszul_sign, shuffles


def _compositions(total, parts):
    """Ordered tuples of `parts` positive integers summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class HomotopyDiffLie:
    """Graded space with brackets mu = {i: GradedSymMap of degree 1} and
    operators D = {i: GradedSymMap of degree 0}, of weight lambda."""

    def __init__(self, space, mu, D, weight):
        self.space = space
        self.mu = dict(mu)
        self.D = dict(D)
        self.weight = frac(weight)
        for i, f in self.mu.items():
            self._check_family(f, i, 1, "mu")
        for i, f in self.D.items():
            self._check_family(f, i, 0, "D")

    def _check_family(self, f, i, deg, name):
        assert f.arity == i, "%s_%d has arity %d" % (name, i, f.arity)
        assert f.space == self.space
        assert f.degree == deg
        degrees = self.space.degrees
        for key, vec in f.coeffs.items():
            want = sum(degrees[k] for k in key) + deg
            got = self.space.degree_of_vector(vec)
            if not vec_is_zero(vec):
                assert got == want, \
                    "%s_%d is not homogeneous of degree %d" % (name, i, deg)

    def arity_bound(self):
        return max([0] + list(self.mu) + list(self.D))

    def residual_range(self):
        """Largest n at which either family can have a nonzero term: the
        bracket family stops at 2M-1 for M the top bracket arity; the
        operator family at M*K (weighted terms with every bracket slot fed
        by a top-arity operator) resp. M+K-1 when the weight is zero."""
        M = max([0] + list(self.mu))
        K = max([0] + list(self.D))
        bound = max(2 * M - 1, 0)
        if M and K:
            bound = max(bound, M * K if self.weight != 0 else M + K - 1)
        return max(bound, 1)


def _apply(family, arity, args):
    f = family.get(arity)
    if f is None:
        return None
    return f.evaluate(args)


def linfty_residual(H, n, args):
    """The arity-n bracket-family residual on the given homogeneous args."""
    assert len(args) == n
    degs = [H.space.degree_of_vector(v) for v in args]
    out = vec_zero(H.space.dim)
    for i in range(1, n + 1):
        if i not in H.mu or (n - i + 1) not in H.mu:
            continue
        outer = H.mu[n - i + 1]
        for sigma in shuffles((i, n - i)):
            eps = koszul_sign(sigma, degs)
            perm = [args[k - 1] for k in sigma]
            inner = H.mu[i].evaluate(perm[:i])
            if vec_is_zero(inner):
                continue
            val = outer.evaluate([inner] + perm[i:])
            if not vec_is_zero(val):
                out = vec_add(out, vec_scale(eps, val))
    return out


def _mu_of_D_terms(H, n, args, degs, pointed):
    """The positive half of the operator family: mu applied to D-outputs.

    With pointed=True the first p-1 block leaders must increase (the
    statement form); with pointed=False every shuffle counts, weighted by
    1/(p-1)! (the expanded form).  Both evaluate the same sum.
    """
    out = vec_zero(H.space.dim)
    lam = H.weight
    for p in range(2, n + 2):
        coeff = lam ** (p - 2)
        if coeff == 0:
            continue
        if not pointed:
            fact = 1
            for k in range(2, p):
                fact *= k
            coeff = coeff * Fraction(1, fact)
        for t in range(p - 1, n + 1):
            outer = H.mu.get(n - t + p - 1)
            if outer is None:
                continue
            for comp in _compositions(t, p - 1):
                # comp = (m_{p-1}, .., m_1) in block order
                if any(m not in H.D for m in comp):
                    continue
                blocks = comp + (n - t,)
                starts = [0]
                for m in blocks[:-1]:
                    starts.append(starts[-1] + m)
                for sigma in shuffles(blocks):
                    if pointed:
                        leaders = [sigma[starts[b]] for b in range(p - 1)]
                        if any(a > b for a, b in
                               zip(leaders, leaders[1:])):
                            continue
                    eps = koszul_sign(sigma, degs)
                    perm = [args[k - 1] for k in sigma]
                    heads = []
                    pos = 0
                    for m in comp:
                        heads.append(H.D[m].evaluate(perm[pos:pos + m]))
                        pos += m
                    val = outer.evaluate(heads + perm[pos:])
                    if not vec_is_zero(val):
                        out = vec_add(out, vec_scale(eps * coeff, val))
    return out


def _D_of_mu_terms(H, n, args, degs):
    out = vec_zero(H.space.dim)
    for j in range(1, n + 1):
        if j not in H.mu or (n - j + 1) not in H.D:
            continue
        outer = H.D[n - j + 1]
        for sigma in shuffles((j, n - j)):
            eps = koszul_sign(sigma, degs)
            perm = [args[k - 1] for k in sigma]
            inner = H.mu[j].evaluate(perm[:j])
            if vec_is_zero(inner):
                continue
            val = outer.evaluate([inner] + perm[j:])
            if not vec_is_zero(val):
                out = vec_add(out, vec_scale(eps, val))
    return out


def homotopy_diff_residual(H, n, args):
    """The arity-n operator-family residual (pointed-shuffle form)."""
    assert len(args) == n
    degs = [H.space.degree_of_vector(v) for v in args]
    return vec_sub(_mu_of_D_terms(H, n, args, degs, pointed=True),
                   _D_of_mu_terms(H, n, args, degs))


def homotopy_diff_residual_factorial(H, n, args):
    """The same family summed over plain shuffles with 1/(p-1)! weights."""
    assert len(args) == n
    degs = [H.space.degree_of_vector(v) for v in args]
    return vec_sub(_mu_of_D_terms(H, n, args, degs, pointed=False),
                   _D_of_mu_terms(H, n, args, degs))


def _spanning_tuples(space, n):
    """Sorted basis tuples spanning S^n(l); odd repeats contribute zero by
    graded symmetry, so they are skipped."""
    for key in combinations_with_replacement(range(space.dim), n):
        ok = True
        for a, b in zip(key, key[1:]):
            if a == b and space.degrees[a] % 2:
                ok = False
                break
        if ok:
            yield key


def residual_tables(H, max_n=None):
    """Per-n residual maps of both families, evaluated on spanning basis
    tuples; returns {n: (bracket GradedSymMap, operator GradedSymMap)}."""
    if max_n is None:
        max_n = H.residual_range()
    out = {}
    dim = H.space.dim
    for n in range(1, max_n + 1):
        jac = GradedSymMap(n, 2, H.space)
        op = GradedSymMap(n, 1, H.space)
        for key in _spanning_tuples(H.space, n):
            args = [basis_vec(dim, k) for k in key]
            v1 = linfty_residual(H, n, args)
            if not vec_is_zero(v1):
                jac.coeffs[key] = v1
            v2 = homotopy_diff_residual(H, n, args)
            if not vec_is_zero(v2):
                op.coeffs[key] = v2
        out[n] = (jac, op)
    return out


def suspend_diff_lie(A):
    """A differential Lie algebra, suspended into a single odd degree:
    mu_2 the bracket, D_1 the operator, same weight.  Both residual
    families vanish exactly when the ungraded axioms hold."""
    from .multilinear import alt_to_graded, suspend_space
    dim = A.dim
    space = suspend_space(dim)
    mu2 = alt_to_graded(A.algebra.bracket, space)
    d1 = GradedSymMap(1, 0, space)
    for j in range(dim):
        col = [A.d.data[i][j] for i in range(dim)]
        if not vec_is_zero(col):
            d1.coeffs[(j,)] = col
    return HomotopyDiffLie(space, {2: mu2}, {1: d1}, A.weight)


def homotopy_mc_check(H, max_n=None):
    """(bool, tables): whether every residual of both families vanishes on a
    spanning set of basis tuples through max_n (default: the full range
    where the arity bounds can produce nonzero terms)."""
    tables = residual_tables(H, max_n)
    ok = all(j.is_zero() and o.is_zero() for j, o in tables.values())
    return ok, tables
