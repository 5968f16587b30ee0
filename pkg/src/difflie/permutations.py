"""Shuffles, pointed shuffles, signatures and Koszul signs.

Permutations are tuples ``images`` with ``images[k] = sigma(k+1)``, i.e.
1-based bijections of {1..n} stored 0-indexed.  Shuffle enumeration is
lexicographic in the position subsets of the blocks, so all downstream sums
are deterministic.
"""

from itertools import combinations


class LengthMismatch(Exception):
    pass


def is_permutation(images):
    return sorted(images) == list(range(1, len(images) + 1))


def signature(images):
    """Sign of the permutation, +1 or -1."""
    n = len(images)
    sign = 1
    for i in range(n):
        for j in range(i + 1, n):
            if images[i] > images[j]:
                sign = -sign
    return sign


def koszul_sign(images, degrees):
    """epsilon(sigma; x_1..x_n) for x_i of the given degrees.

    Defined by x_1 (.) ... (.) x_n = eps * x_{s(1)} (.) ... (.) x_{s(n)} in
    the graded symmetric algebra: a factor (-1)^{|x_s(i)||x_s(j)|} for every
    inversion i < j with s(i) > s(j).
    """
    if len(images) != len(degrees):
        raise LengthMismatch("permutation and degree vector lengths differ")
    exp = 0
    n = len(images)
    for i in range(n):
        for j in range(i + 1, n):
            if images[i] > images[j]:
                exp += degrees[images[i] - 1] * degrees[images[j] - 1]
    return -1 if exp % 2 else 1


def chi_sign(images, degrees):
    """chi(sigma) = epsilon(sigma) * sgn(sigma)."""
    return koszul_sign(images, degrees) * signature(images)


def shuffles(block_sizes):
    """All (i_1,...,i_r)-shuffles of {1..n}, n = sum of block sizes.

    A shuffle is increasing on each block of positions
    [1..i_1], [i_1+1..i_1+i_2], ...  Enumeration: choose the value subset of
    each successive block, lexicographically.
    """
    n = sum(block_sizes)
    out = []

    def rec(remaining, prefix):
        if not remaining:
            out.append(tuple(prefix))
            return
        k = remaining[0]
        for subset in combinations(sorted(set(range(1, n + 1)) - set(prefix)), k):
            rec(remaining[1:], prefix + list(subset))

    rec(list(block_sizes), [])
    return out


def pointed_shuffles(block_sizes):
    """Shuffles whose block leaders sigma(1), sigma(i_1+1), ... increase."""
    assert all(k >= 1 for k in block_sizes)
    starts = [0]
    for k in block_sizes[:-1]:
        starts.append(starts[-1] + k)
    out = []
    for sigma in shuffles(block_sizes):
        leaders = [sigma[s] for s in starts]
        if all(a < b for a, b in zip(leaders, leaders[1:])):
            out.append(sigma)
    return out


def multinomial(block_sizes):
    from math import comb
    n = sum(block_sizes)
    total = 1
    for k in block_sizes:
        total *= comb(n, k)
        n -= k
    return total
