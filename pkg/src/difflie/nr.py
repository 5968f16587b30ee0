"""The Nijenhuis-Richardson circle product and bracket.

Ungraded version on alternating maps f in Hom(wedge^{p+1} V, V) (degree of f
is p); graded version on graded-symmetric maps of a graded space.  In both
pictures [mu,mu]_NR = 0 characterizes (L-infinity[1]-) algebra structures.
"""

from .linalg import vec_zero, vec_add, vec_scale, vec_is_zero
from .multilinear import AltMap, GradedSymMap, DimensionMismatch
from .permutations import shuffles, signature, koszul_sign


def _check_compat(f, g):
    if not (f.src_dim == f.tgt_dim == g.src_dim == g.tgt_dim):
        raise DimensionMismatch("circle product needs maps on one space")


def _eval_head(f, head_vec, tail_idx):
    """f(head_vec, x_{t1}, ..., x_{tk}) with tail basis indices."""
    out = vec_zero(f.tgt_dim)
    for i, c in enumerate(head_vec):
        if c != 0:
            val = f.value_on_basis((i,) + tail_idx)
            if not vec_is_zero(val):
                out = vec_add(out, vec_scale(c, val))
    return out


def circ_bar(f, g):
    """f o-bar g, arity p+q+1 for f of arity p+1, g of arity q+1:

    sum over (q+1, p)-shuffles sigma of
    sgn(sigma) f(g(x_{sigma(1)},..,x_{sigma(q+1)}), x_{sigma(q+2)},..).
    """
    _check_compat(f, g)
    if f.arity == 0:
        # a constant map has no slot to plug into
        return AltMap(max(g.arity - 1, 0), f.src_dim, f.tgt_dim)
    p = f.arity - 1
    q = g.arity - 1
    arity = p + q + 1
    dim = f.src_dim
    out = AltMap(arity, dim, dim)
    if arity > dim:
        return out
    from itertools import combinations
    shs = shuffles((q + 1, p))
    for key in combinations(range(dim), arity):
        total = vec_zero(dim)
        for sigma in shs:
            inner = g.value_on_basis(tuple(key[sigma[t] - 1]
                                           for t in range(q + 1)))
            if vec_is_zero(inner):
                continue
            tail = tuple(key[sigma[t] - 1] for t in range(q + 1, arity))
            val = _eval_head(f, inner, tail)
            if not vec_is_zero(val):
                total = vec_add(total, vec_scale(signature(sigma), val))
        if not vec_is_zero(total):
            out.coeffs[key] = total
    return out


def nr_bracket(f, g):
    """[f,g]_NR = f o-bar g - (-1)^{pq} g o-bar f."""
    p = f.arity - 1
    q = g.arity - 1
    sign = -1 if (p * q) % 2 else 1
    return circ_bar(f, g) - circ_bar(g, f).scale(sign)


def _eval_head_graded(f, head_vec, tail_idx):
    out = vec_zero(f.space.dim)
    for i, c in enumerate(head_vec):
        if c != 0:
            val = f.value_on_basis((i,) + tail_idx)
            if not vec_is_zero(val):
                out = vec_add(out, vec_scale(c, val))
    return out


def graded_circ_bar(f, g):
    """f o-bar g on graded-symmetric maps, f of arity n, g of arity m:

    sum over (m, n-1)-shuffles sigma of
    eps(sigma) f(g(v_{sigma(1)},..,v_{sigma(m)}), v_{sigma(m+1)},..).
    """
    if f.space != g.space:
        raise DimensionMismatch("circle product needs maps on one space")
    space = f.space
    m = g.arity
    arity = m + f.arity - 1
    out = GradedSymMap(arity, f.degree + g.degree, space)
    from itertools import combinations_with_replacement
    shs = shuffles((m, f.arity - 1))
    for key in combinations_with_replacement(range(space.dim), arity):
        degs = [space.degrees[i] for i in key]
        odd = [i for i in key if space.degrees[i] % 2]
        if len(odd) != len(set(odd)):
            continue
        total = vec_zero(space.dim)
        for sigma in shs:
            eps = koszul_sign(sigma, degs)
            inner = g.value_on_basis(tuple(key[sigma[t] - 1]
                                           for t in range(m)))
            if vec_is_zero(inner):
                continue
            tail = tuple(key[sigma[t] - 1] for t in range(m, arity))
            val = _eval_head_graded(f, inner, tail)
            if not vec_is_zero(val):
                total = vec_add(total, vec_scale(eps, val))
        if not vec_is_zero(total):
            out[key] = total
    return out


def graded_nr_bracket(f, g):
    """[f,g]_NR = f o-bar g - (-1)^{|f||g|} g o-bar f on graded maps."""
    sign = -1 if (f.degree * g.degree) % 2 else 1
    return graded_circ_bar(f, g) - graded_circ_bar(g, f).scale(sign)
