from fractions import Fraction

import pytest

from difflie.linalg import Matrix, basis_vec, vec_is_zero
from difflie.liealg import (DiffLieAlgebra, DiffRepresentation, adjoint_rep,
                            trivial_rep)
from difflie.multilinear import AltMap
from difflie.cohomology import (CochainComplexSpec, CocyclePair, UnknownFlavor,
                                altmap_to_coords, ce_apply, ce_differential,
                                cochain_dim, cohomology_dims,
                                coords_to_altmap, cocycle_residual,
                                delta_apply, delta_matrix, do_differential,
                                difflie_differential,
                                embedding_commutes_residual,
                                twist_bridge_residual)
from difflie.samples import (abelian, aff1, sl2, rand_vec, random_diff_lie,
                             random_rep, WEIGHTS)


def aff1_d(lam=3):
    return DiffLieAlgebra(aff1(), Matrix.from_rows([[0, 0], [0, 1]]),
                          Fraction(lam))


def rand_cochain(rng, gdim, vdim, n):
    if n == 0:
        return rand_vec(rng, vdim, -2, 2)
    from itertools import combinations
    f = AltMap(n, gdim, vdim)
    for key in combinations(range(gdim), n):
        f[key] = rand_vec(rng, vdim, -2, 2)
    return f


def test_coords_round_trip(rng):
    for n in (0, 1, 2):
        f = rand_cochain(rng, 3, 2, n)
        coords = altmap_to_coords(f, 3, 2, n)
        g = coords_to_altmap(coords, 3, 2, n)
        if n == 0:
            assert g == f
        else:
            assert g == f or (g - f).is_zero()


def test_ce_degree_zero_is_minus_action():
    A = aff1_d()
    rep = adjoint_rep(A)
    m = ce_differential(A, rep, 0)
    for t in range(2):
        v = basis_vec(2, t)
        img = coords_to_altmap(m.matvec(v), 2, 2, 1)
        for i in range(2):
            expected = [-x for x in rep.rho[i].matvec(v)]
            assert img.value_on_basis((i,)) == expected


def test_ce_trivial_rep_abelian_is_zero():
    A = DiffLieAlgebra(abelian(3), Matrix.zero(3, 3), 1)
    rep = trivial_rep(A, 2)
    for n in range(4):
        assert ce_differential(A, rep, n).is_zero()


def test_ce_squares_to_zero_aff1_adjoint():
    A = aff1_d()
    rep = adjoint_rep(A)
    d0 = ce_differential(A, rep, 0)
    d1 = ce_differential(A, rep, 1)
    assert (d1 * d0).is_zero()


def test_do_weight_zero_equals_ce(rng):
    A = DiffLieAlgebra(sl2(), Matrix.zero(3, 3), 0)
    rep = adjoint_rep(A)
    for n in range(3):
        assert do_differential(A, rep, n) == ce_differential(A, rep, n)


def test_do_identity_weight_minus_one_degree_zero():
    A = DiffLieAlgebra(sl2(), Matrix.identity(3), Fraction(-1))
    rep = adjoint_rep(A)
    # rho_lambda(x) = ad(x - d x) = 0, so degree 0 vanishes
    assert do_differential(A, rep, 0).is_zero()


def test_do_squares_to_zero(rng):
    for _ in range(6):
        A = random_diff_lie(rng, max_dim=3)
        rep = random_rep(rng, A, max_dim=2)
        mats = [do_differential(A, rep, n) for n in range(4)]
        for n in range(3):
            assert (mats[n + 1] * mats[n]).is_zero()


def test_delta_degree_zero_is_minus_dv():
    A = aff1_d()
    rep = adjoint_rep(A)
    v = [Fraction(1), Fraction(5)]
    assert delta_apply(A, rep, v, 0) == [-x for x in rep.dV.matvec(v)]


def test_delta_identity_cochain_commuting_with_d():
    A = aff1_d()
    rep = adjoint_rep(A)
    ident = AltMap(1, 2, 2)
    for i in range(2):
        ident[(i,)] = basis_vec(2, i)
    assert delta_apply(A, rep, ident, 1).is_zero()


def test_delta_frozen_example():
    # f(x)=y, f(y)=0 on aff(1), d=diag(0,1): delta f sends x to -y, y to 0
    A = aff1_d()
    rep = adjoint_rep(A)
    f = AltMap(1, 2, 2)
    f[(0,)] = [0, 1]
    out = delta_apply(A, rep, f, 1)
    assert out.value_on_basis((0,)) == [Fraction(0), Fraction(-1)]
    assert out.value_on_basis((1,)) == [Fraction(0), Fraction(0)]


def test_cochain_map_identity(rng):
    # d_do . delta = delta . d_ce in every degree
    for _ in range(5):
        A = random_diff_lie(rng, max_dim=3)
        rep = random_rep(rng, A, max_dim=2)
        for n in range(3):
            lhs = do_differential(A, rep, n) * delta_matrix(A, rep, n)
            rhs = delta_matrix(A, rep, n + 1) * ce_differential(A, rep, n)
            assert lhs == rhs


def test_all_flavors_build_and_square_to_zero(rng):
    for _ in range(4):
        A = random_diff_lie(rng, max_dim=3)
        rep = random_rep(rng, A, max_dim=2)
        for flavor in ("ce", "do", "difflie", "tilde"):
            CochainComplexSpec(A, rep, flavor)  # asserts d^2 = 0 internally


def test_unknown_flavor():
    A = aff1_d()
    with pytest.raises(UnknownFlavor):
        CochainComplexSpec(A, adjoint_rep(A), "nope")


def test_degree_zero_central_killed_vector():
    # abelian algebra, d = 0: every vector is a 0-cocycle
    A = DiffLieAlgebra(abelian(2), Matrix.zero(2, 2), 1)
    spec = CochainComplexSpec(A, adjoint_rep(A), "difflie")
    assert spec.d[0].is_zero()


def test_h0_trivial_line():
    A = DiffLieAlgebra(abelian(1), Matrix.zero(1, 1), 1)
    rep = trivial_rep(A, 1)
    spec = CochainComplexSpec(A, rep, "difflie", max_degree=3)
    assert cohomology_dims(spec)[0] == 1


def test_h0_aff1_adjoint_vanishes():
    spec = CochainComplexSpec(aff1_d(), adjoint_rep(aff1_d()), "difflie")
    assert cohomology_dims(spec)[0] == 0


def test_tilde_dims_and_high_degrees_agree(rng):
    for _ in range(4):
        A = random_diff_lie(rng, max_dim=3)
        rep = random_rep(rng, A, max_dim=2)
        full = CochainComplexSpec(A, rep, "difflie", max_degree=4)
        tilde = CochainComplexSpec(A, rep, "tilde", max_degree=4)
        assert tilde.dims[0] == 0
        assert tilde.dims[1] == cochain_dim(A.dim, rep.space_dim, 1)
        hf = cohomology_dims(full)
        ht = cohomology_dims(tilde)
        assert hf[3] == ht[3]


def test_trivial_rep_h2_equals_tilde_h2(rng):
    for _ in range(3):
        A = random_diff_lie(rng, max_dim=3)
        rep = trivial_rep(A, 2, Matrix.identity(2))
        full = CochainComplexSpec(A, rep, "difflie")
        tilde = CochainComplexSpec(A, rep, "tilde")
        assert cohomology_dims(full)[2] == cohomology_dims(tilde)[2]


def test_rank_nullity_bookkeeping(rng):
    A = random_diff_lie(rng, max_dim=3)
    rep = random_rep(rng, A, max_dim=2)
    spec = CochainComplexSpec(A, rep, "difflie")
    hs = cohomology_dims(spec)
    for n in range(spec.max_degree):
        r_in = spec.d[n - 1].rank() if n >= 1 else 0
        assert spec.dims[n] == hs[n] + spec.d[n].rank() + r_in


def test_coboundaries_are_cocycles(rng):
    for _ in range(5):
        A = random_diff_lie(rng, max_dim=3)
        rep = random_rep(rng, A, max_dim=2)
        spec = CochainComplexSpec(A, rep, "difflie")
        n = rng.randrange(1, 3)
        gdim, vdim = A.dim, rep.space_dim
        phi_coords = [Fraction(rng.randrange(-2, 3))
                      for _ in range(spec.dims[n])]
        image = spec.d[n].matvec(phi_coords)
        f = coords_to_altmap(image[:cochain_dim(gdim, vdim, n + 1)],
                             gdim, vdim, n + 1)
        g = coords_to_altmap(image[cochain_dim(gdim, vdim, n + 1):],
                             gdim, vdim, n)
        assert vec_is_zero(cocycle_residual(spec, n + 1, CocyclePair(f, g)))


def test_random_pair_generically_not_cocycle(rng):
    A = aff1_d()
    spec = CochainComplexSpec(A, adjoint_rep(A), "difflie")
    hits = 0
    for _ in range(10):
        pair = CocyclePair(rand_cochain(rng, 2, 2, 2),
                           rand_cochain(rng, 2, 2, 1))
        hits += not vec_is_zero(cocycle_residual(spec, 2, pair))
    assert hits > 0


def test_twist_bridge_zero_pair():
    A = aff1_d()
    pair = CocyclePair(AltMap(2, 2, 2), AltMap(1, 2, 2))
    assert vec_is_zero(twist_bridge_residual(A, 2, pair))


def test_twist_bridge_degree_one(rng):
    A = aff1_d()
    for _ in range(6):
        pair = CocyclePair(rand_cochain(rng, 2, 2, 1),
                           rand_cochain(rng, 2, 2, 0))
        assert vec_is_zero(twist_bridge_residual(A, 1, pair))


def test_twist_bridge_random(rng):
    for _ in range(6):
        A = random_diff_lie(rng, max_dim=3)
        n = rng.randrange(2, 4)
        pair = CocyclePair(rand_cochain(rng, A.dim, A.dim, n),
                           rand_cochain(rng, A.dim, A.dim, n - 1))
        assert vec_is_zero(twist_bridge_residual(A, n, pair))


def test_embedding_commutes(rng):
    for _ in range(3):
        A = random_diff_lie(rng, max_dim=2)
        rep = random_rep(rng, A, max_dim=2)
        for n in range(3):
            assert embedding_commutes_residual(A, rep, n).is_zero()
