from fractions import Fraction

import pytest

from difflie.linalg import Matrix, vec_is_zero
from difflie.liealg import DiffLieAlgebra, adjoint_rep
from difflie.multilinear import AltMap
from difflie.cohomology import (CochainComplexSpec, CocyclePair, cochain_dim,
                                coords_to_altmap, cocycle_residual)
from difflie.deformations import (FormalIso, NotDeformation, Obstructed,
                                  TruncatedDeformation, apply_formal_iso,
                                  constant_deformation, deformation_residuals,
                                  first_nontrivial_order, infinitesimal,
                                  is_deformation, rigidify_step)
from difflie.extensions import altmap1_from_matrix, matrix_from_altmap1
from difflie.samples import (abelian, aff1, sl2, rand_matrix,
                             random_diff_lie)


def aff1_d(lam=2):
    return DiffLieAlgebra(aff1(), Matrix.from_rows([[0, 0], [0, 1]]),
                          Fraction(lam))


def split_pair(coords, dim):
    cut = cochain_dim(dim, dim, 2)
    return CocyclePair(coords_to_altmap(coords[:cut], dim, dim, 2),
                       coords_to_altmap(coords[cut:], dim, dim, 1))


def order1_deformation(A, pair):
    mu1 = pair.f
    d1 = matrix_from_altmap1(pair.g)
    return TruncatedDeformation(A, [A.algebra.bracket, mu1], [A.d, d1])


def rand_iso(rng, dim, order):
    phis = [Matrix.identity(dim)] + \
        [rand_matrix(rng, dim, dim) for _ in range(order)]
    return FormalIso(phis)


def test_constant_deformation_valid(rng):
    for _ in range(5):
        A = random_diff_lie(rng, max_dim=3)
        D = constant_deformation(A, 2)
        assert is_deformation(D)
        pair, res = infinitesimal(D)
        assert pair.f.is_zero() and pair.g.is_zero() and vec_is_zero(res)


def test_order_zero_residuals_detect_broken_base():
    A = aff1_d()
    broken = AltMap(2, 2, 2)
    broken[(0, 1)] = [1, 0]
    D = TruncatedDeformation(A, [A.algebra.bracket, AltMap(2, 2, 2)],
                             [A.d, Matrix.identity(2)])
    res = deformation_residuals(D)
    jac0, op0 = res[0]
    assert jac0.is_zero() and op0.is_zero()  # base itself is fine


def test_order1_valid_iff_cocycle(rng):
    # the order-1 equations agree exactly with the degree-2 cocycle test
    valid = invalid = 0
    for _ in range(12):
        A = random_diff_lie(rng, max_dim=3)
        dim = A.dim
        spec = CochainComplexSpec(A, adjoint_rep(A), "difflie",
                                  max_degree=3)
        if rng.random() < 0.5:
            basis = spec.d[2].kernel_basis()
            coords = basis[rng.randrange(len(basis))] if basis else \
                [Fraction(0)] * spec.dims[2]
        else:
            coords = [Fraction(rng.randrange(-2, 3))
                      for _ in range(spec.dims[2])]
        pair = split_pair(coords, dim)
        D = order1_deformation(A, pair)
        ok = is_deformation(D)
        is_cocycle = vec_is_zero(cocycle_residual(spec, 2, pair))
        assert ok == is_cocycle
        valid += ok
        invalid += not ok
    assert valid and invalid


def test_infinitesimal_requires_deformation(rng):
    # a pair violating the order-1 equations is rejected
    raised = 0
    for _ in range(8):
        A = aff1_d()
        mu1 = AltMap(2, 2, 2)
        mu1[(0, 1)] = [rng.randrange(-2, 3), rng.randrange(-2, 3)]
        D = TruncatedDeformation(A, [A.algebra.bracket, mu1],
                                 [A.d, rand_matrix(rng, 2, 2)])
        try:
            _, res = infinitesimal(D)
            assert vec_is_zero(res)
        except NotDeformation:
            raised += 1
    assert raised > 0


def test_coboundary_deformation_infinitesimal(rng):
    from difflie.cohomology import difflie_differential
    for _ in range(5):
        A = random_diff_lie(rng, max_dim=3)
        dim = A.dim
        iso = rand_iso(rng, dim, 1)
        D = apply_formal_iso(constant_deformation(A, 2), iso)
        assert is_deformation(D)
        pair, res = infinitesimal(D)
        assert vec_is_zero(res)
        d1 = difflie_differential(A, adjoint_rep(A), 1, tilde=True)
        phi_coords = []
        for j in range(dim):
            phi_coords.extend(iso.phi[1].data[i][j] for i in range(dim))
        expected = d1.matvec(phi_coords)
        assert pair.coords(dim, dim, 2) == expected


def test_operator_only_deformation_one_cocycle(rng):
    # mu_t frozen: the order-1 operator term is killed by the shifted
    # coboundary alone
    from difflie.cohomology import do_differential
    hits = 0
    for _ in range(8):
        A = random_diff_lie(rng, max_dim=3)
        dim = A.dim
        rep = adjoint_rep(A)
        d1m = do_differential(A, rep, 1)
        basis = d1m.kernel_basis()
        if not basis:
            continue
        coords = basis[rng.randrange(len(basis))]
        d1 = matrix_from_altmap1(coords_to_altmap(coords, dim, dim, 1))
        D = TruncatedDeformation(A, [A.algebra.bracket, AltMap(2, dim, dim)],
                                 [A.d, d1])
        jac, op = deformation_residuals(D)[1]
        assert jac.is_zero() and op.is_zero()
        hits += 1
    assert hits >= 3


def test_apply_identity_iso(rng):
    A = random_diff_lie(rng, max_dim=3)
    D = constant_deformation(A, 2)
    ident = FormalIso([Matrix.identity(A.dim)])
    D2 = apply_formal_iso(D, ident)
    assert all((a - b).is_zero() for a, b in zip(D2.mu, D.mu))
    assert D2.d == D.d


def test_iso_round_trip(rng):
    for _ in range(4):
        A = random_diff_lie(rng, max_dim=3)
        dim = A.dim
        iso = rand_iso(rng, dim, 2)
        D = apply_formal_iso(constant_deformation(A, 2), iso)
        back = apply_formal_iso(D, FormalIso(iso.inverse_series(2)))
        C = constant_deformation(A, 2)
        assert all((a - b).is_zero() for a, b in zip(back.mu, C.mu))
        assert back.d == C.d


def test_equivalence_preserves_equations(rng):
    for _ in range(4):
        A = random_diff_lie(rng, max_dim=3)
        D = apply_formal_iso(constant_deformation(A, 3),
                             rand_iso(rng, A.dim, 3))
        assert is_deformation(D)


def test_rigidify_trivial_is_identity():
    A = aff1_d()
    D = constant_deformation(A, 2)
    iso, D2 = rigidify_step(D)
    assert iso.order == 0
    assert first_nontrivial_order(D2) is None


def test_rigidify_clears_coboundary_orders(rng):
    for _ in range(4):
        A = random_diff_lie(rng, max_dim=3)
        D = apply_formal_iso(constant_deformation(A, 2),
                             rand_iso(rng, A.dim, 2))
        steps = 0
        while first_nontrivial_order(D) is not None and steps < 4:
            _, D = rigidify_step(D)
            steps += 1
        assert first_nontrivial_order(D) is None


def test_rigid_fixture_clears_any_valid_deformation(rng):
    # weight -1 with the identity operator on a simple algebra has trivial
    # degree-2 cohomology, so every valid order-1 pair rigidifies
    A = DiffLieAlgebra(sl2(), Matrix.identity(3), Fraction(-1))
    spec = CochainComplexSpec(A, adjoint_rep(A), "difflie", max_degree=3)
    cleared = 0
    for coords in spec.d[2].kernel_basis():
        pair = split_pair(coords, 3)
        D = order1_deformation(A, pair)
        if not is_deformation(D):
            continue
        _, D2 = rigidify_step(D)
        assert first_nontrivial_order(D2) is None
        cleared += 1
    assert cleared >= 1


def test_obstructed_class_raises():
    A = DiffLieAlgebra(abelian(2), Matrix.zero(2, 2), Fraction(1))
    mu1 = AltMap(2, 2, 2)
    mu1[(0, 1)] = [1, 0]  # a bracket deformation: not exact for abelian g
    D = TruncatedDeformation(A, [A.algebra.bracket, mu1],
                             [A.d, Matrix.zero(2, 2)])
    assert is_deformation(D)
    with pytest.raises(Obstructed) as exc:
        rigidify_step(D)
    assert exc.value.order == 1
    assert not exc.value.pair.f.is_zero()
