"""Alternating multilinear maps and graded symmetric multilinear maps.

AltMap covers the ungraded picture (cochains, brackets on a Lie algebra):
coefficients live on strictly increasing basis tuples and evaluation extends
alternately.  GradedSymMap covers the suspended picture: coefficients live on
sorted basis tuples of a graded space, normalized by the Koszul sign.  The
suspension isomorphism mediates between the two.
"""

from fractions import Fraction
from itertools import product

from .linalg import frac, vec_zero, vec_add, vec_scale, vec_is_zero
from .permutations import koszul_sign


class ArityMismatch(Exception):
    pass


class DimensionMismatch(Exception):
    pass


class NonHomogeneousInput(Exception):
    pass


def _sort_with_sgn(idx):
    """Sort an index tuple, tracking the permutation sign; None on repeats."""
    lst = list(idx)
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1] > lst[j]:
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(lst, lst[1:]):
        if a == b:
            return None, 0
    return tuple(lst), sign


class AltMap:
    """Alternating k-linear map between ungraded spaces, by coefficients.

    coeffs maps strictly increasing tuples of source basis indices (0-based)
    to target vectors; missing tuples are zero.
    """

    def __init__(self, arity, src_dim, tgt_dim, coeffs=None):
        assert arity >= 0
        self.arity = arity
        self.src_dim = src_dim
        self.tgt_dim = tgt_dim
        self.coeffs = {}
        if coeffs:
            for key, vec in coeffs.items():
                self[key] = vec

    def __setitem__(self, key, vec):
        skey, sign = _sort_with_sgn(key)
        if skey is None:
            if not vec_is_zero([frac(x) for x in vec]):
                raise ValueError("repeated index with nonzero value")
            return
        vec = [frac(x) for x in vec]
        if len(vec) != self.tgt_dim:
            raise DimensionMismatch("target vector length")
        if sign < 0:
            vec = vec_scale(-1, vec)
        if vec_is_zero(vec):
            self.coeffs.pop(skey, None)
        else:
            self.coeffs[skey] = vec

    def value_on_basis(self, idx):
        """Value on a tuple of basis indices, any order, with sign."""
        if len(idx) != self.arity:
            raise ArityMismatch("expected %d arguments" % self.arity)
        skey, sign = _sort_with_sgn(idx)
        if skey is None:
            return vec_zero(self.tgt_dim)
        vec = self.coeffs.get(skey)
        if vec is None:
            return vec_zero(self.tgt_dim)
        return vec_scale(sign, vec)

    def evaluate(self, args):
        """Multilinear alternating extension to arbitrary vectors."""
        if len(args) != self.arity:
            raise ArityMismatch("expected %d arguments" % self.arity)
        for v in args:
            if len(v) != self.src_dim:
                raise DimensionMismatch("source vector length")
        supports = [[i for i, x in enumerate(v) if x != 0] for v in args]
        out = vec_zero(self.tgt_dim)
        for combo in product(*supports):
            c = Fraction(1)
            for v, i in zip(args, combo):
                c *= v[i]
            val = self.value_on_basis(combo)
            if not vec_is_zero(val):
                out = vec_add(out, vec_scale(c, val))
        return out

    def __add__(self, other):
        assert (self.arity, self.src_dim, self.tgt_dim) == \
               (other.arity, other.src_dim, other.tgt_dim)
        out = AltMap(self.arity, self.src_dim, self.tgt_dim, self.coeffs)
        for key, vec in other.coeffs.items():
            cur = out.coeffs.get(key, vec_zero(self.tgt_dim))
            s = vec_add(cur, vec)
            if vec_is_zero(s):
                out.coeffs.pop(key, None)
            else:
                out.coeffs[key] = s
        return out

    def scale(self, c):
        c = frac(c)
        out = AltMap(self.arity, self.src_dim, self.tgt_dim)
        if c != 0:
            for key, vec in self.coeffs.items():
                out.coeffs[key] = vec_scale(c, vec)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, AltMap)
                and (self.arity, self.src_dim, self.tgt_dim)
                == (other.arity, other.src_dim, other.tgt_dim)
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return "AltMap(arity=%d, %d->%d, %d terms)" % (
            self.arity, self.src_dim, self.tgt_dim, len(self.coeffs))

    def copy(self):
        return AltMap(self.arity, self.src_dim, self.tgt_dim, self.coeffs)


def evaluate_alt(f, args):
    return f.evaluate(args)


class GradedVectorSpace:
    """Finite dimensional graded space, components = [(degree, dim), ...]."""

    def __init__(self, components):
        degs = [d for d, _ in components]
        assert len(degs) == len(set(degs)), "degrees must be distinct"
        self.components = list(components)
        self.degrees = []
        for deg, dim in components:
            self.degrees.extend([deg] * dim)
        self.dim = len(self.degrees)

    def degree_of_basis(self, i):
        return self.degrees[i]

    def degree_of_vector(self, v):
        """Degree of a homogeneous vector (0 for the zero vector)."""
        degs = {self.degrees[i] for i, x in enumerate(v) if x != 0}
        if len(degs) > 1:
            raise NonHomogeneousInput("vector mixes degrees %s" % sorted(degs))
        return degs.pop() if degs else 0

    def basis_of_degree(self, deg):
        return [i for i in range(self.dim) if self.degrees[i] == deg]

    def __eq__(self, other):
        return isinstance(other, GradedVectorSpace) and \
            self.components == other.components


def _sym_sort(idx, degrees):
    """Sort an index tuple with Koszul sign; None if an odd index repeats."""
    lst = list(idx)
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1] > lst[j]:
            if (degrees[lst[j - 1]] % 2) and (degrees[lst[j]] % 2):
                sign = -sign
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            j -= 1
    for a, b in zip(lst, lst[1:]):
        if a == b and degrees[a] % 2:
            return None, 0
    return tuple(lst), sign


class GradedSymMap:
    """Graded symmetric n-linear map on a graded space, by coefficients.

    coeffs maps sorted (non-decreasing) basis tuples to vectors in the same
    space; tuples repeating an odd-degree index are identically zero.
    """

    def __init__(self, arity, degree, space, coeffs=None):
        assert arity >= 1
        self.arity = arity
        self.degree = degree
        self.space = space
        self.coeffs = {}
        if coeffs:
            for key, vec in coeffs.items():
                self[key] = vec

    def __setitem__(self, key, vec):
        skey, sign = _sym_sort(key, self.space.degrees)
        vec = [frac(x) for x in vec]
        if skey is None:
            if not vec_is_zero(vec):
                raise ValueError("repeated odd index with nonzero value")
            return
        if len(vec) != self.space.dim:
            raise DimensionMismatch("target vector length")
        if sign < 0:
            vec = vec_scale(-1, vec)
        if vec_is_zero(vec):
            self.coeffs.pop(skey, None)
        else:
            self.coeffs[skey] = vec

    def value_on_basis(self, idx):
        if len(idx) != self.arity:
            raise ArityMismatch("expected %d arguments" % self.arity)
        skey, sign = _sym_sort(idx, self.space.degrees)
        if skey is None:
            return vec_zero(self.space.dim)
        vec = self.coeffs.get(skey)
        if vec is None:
            return vec_zero(self.space.dim)
        return vec_scale(sign, vec)

    def evaluate(self, args):
        """Graded symmetric multilinear extension; args must be homogeneous."""
        if len(args) != self.arity:
            raise ArityMismatch("expected %d arguments" % self.arity)
        for v in args:
            self.space.degree_of_vector(v)
        supports = [[i for i, x in enumerate(v) if x != 0] for v in args]
        out = vec_zero(self.space.dim)
        for combo in product(*supports):
            c = Fraction(1)
            for v, i in zip(args, combo):
                c *= v[i]
            val = self.value_on_basis(combo)
            if not vec_is_zero(val):
                out = vec_add(out, vec_scale(c, val))
        return out

    def __add__(self, other):
        assert (self.arity, self.degree) == (other.arity, other.degree)
        assert self.space == other.space
        out = GradedSymMap(self.arity, self.degree, self.space, self.coeffs)
        for key, vec in other.coeffs.items():
            cur = out.coeffs.get(key, vec_zero(self.space.dim))
            s = vec_add(cur, vec)
            if vec_is_zero(s):
                out.coeffs.pop(key, None)
            else:
                out.coeffs[key] = s
        return out

    def scale(self, c):
        c = frac(c)
        out = GradedSymMap(self.arity, self.degree, self.space)
        if c != 0:
            for key, vec in self.coeffs.items():
                out.coeffs[key] = vec_scale(c, vec)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, GradedSymMap)
                and (self.arity, self.degree) == (other.arity, other.degree)
                and self.space == other.space and self.coeffs == other.coeffs)

    def __repr__(self):
        return "GradedSymMap(arity=%d, deg=%d, %d terms)" % (
            self.arity, self.degree, len(self.coeffs))


def evaluate_graded(f, args):
    return f.evaluate(args)


# ---------------------------------------------------------------------------
# suspension


def suspension_sign(v_degrees):
    """Sign relating s v_1 (.) ... (.) s v_n to s^n (v_1 ^ ... ^ v_n).

    Exponent (n-1)|v_1| + (n-2)|v_2| + ... + |v_{n-1}|.
    """
    n = len(v_degrees)
    exp = sum((n - j) * v_degrees[j - 1] for j in range(1, n))
    return -1 if exp % 2 else 1


def suspend_space(dim, base_degree=0):
    """The suspension of an ungraded space in the given degree."""
    return GradedVectorSpace([(base_degree - 1, dim)])


def alt_to_graded(f, space=None):
    """Transport an AltMap on an ungraded g to a GradedSymMap on sg.

    For an ungraded source the suspension sign is +1 on every basis tuple, so
    the coefficient tables coincide; the resulting map has degree arity-1.
    """
    if f.src_dim != f.tgt_dim:
        raise DimensionMismatch("suspension transport needs src = tgt")
    if space is None:
        space = suspend_space(f.src_dim)
    out = GradedSymMap(f.arity, f.arity - 1, space)
    for key, vec in f.coeffs.items():
        out.coeffs[key] = vec[:]
    return out


def graded_to_alt(F):
    """Inverse transport; round trip with alt_to_graded is the identity."""
    out = AltMap(F.arity, F.space.dim, F.space.dim)
    for key, vec in F.coeffs.items():
        out.coeffs[key] = vec[:]
    return out
