import numpy as np
import pytest

from psgraded import modfin as mf
from psgraded.errors import InputError
from psgraded.kernels import matmul_mod
from psgraded.modp import matpow


def diag(*xs):
    return np.diag(xs).astype(np.int64)


def truncation(A, j):
    """Cyclic module A / m^j, cut out of the regular module by degree."""
    keep = [i for i, g in enumerate(A.grades) if sum(g) < j]
    acts = tuple(X[np.ix_(keep, keep)] for X in mf.FiniteModule.regular(A).actions)
    return mf.FiniteModule(A, len(keep), acts)


def same_span(U, V):
    return U.shape == V.shape and np.array_equal(U, V)


@pytest.fixture
def dual_numbers():
    return mf.make_truncated_algebra(2, 1, 2)


def test_truncated_algebra_basis():
    A = mf.make_truncated_algebra(3, 2, 3)
    assert A.labels == ("1", "x", "y", "x^2", "x*y", "y^2")
    assert A.is_local()
    B = mf.make_truncated_algebra(2, 2, 3, [(1, 1)])
    assert B.labels == ("1", "x", "y", "x^2", "y^2")


def test_semigroup_algebra_basis():
    A = mf.make_truncated_semigroup_algebra(2, [(2,), (3,)], 6)
    assert A.labels == ("0", "2", "3", "4", "5")
    B = mf.make_truncated_semigroup_algebra(3, [(1, 0), (1, 1)], 2)
    assert B.labels == ("(0, 0)", "(1, 0)", "(1, 1)")


def test_bad_algebras():
    with pytest.raises(InputError):
        mf.make_truncated_algebra(2, 1, 0)
    with pytest.raises(InputError):
        mf.FiniteAlgebra(2, ("1", "x"), np.zeros((2, 2, 2), dtype=np.int64))
    A = mf.make_truncated_algebra(2, 1, 2)
    with pytest.raises(InputError):
        mf.FiniteModule(A, 1, (np.eye(1), np.eye(1)))


def test_endomorphisms(dual_numbers):
    A = dual_numbers
    assert len(mf.endomorphism_algebra(mf.FiniteModule.regular(A))) == 2
    assert len(mf.endomorphism_algebra(mf.FiniteModule.trivial(A, 2))) == 4


def test_regular_module_of_local_algebra_is_indecomposable(dual_numbers):
    M = mf.FiniteModule.regular(dual_numbers)
    assert mf.find_idempotent(M) is None
    assert mf.certify_indecomposable(M)


def test_trivial_square_splits(dual_numbers):
    M = mf.FiniteModule.trivial(dual_numbers, 2)
    e = mf.find_idempotent(M)
    assert np.array_equal(e, diag(1, 0))
    assert not mf.certify_indecomposable(M)


def test_frobenius_transform_splits(dual_numbers):
    M = mf.FiniteModule.regular(dual_numbers)
    F = mf.frobenius_transform(M)
    assert F.dim == M.dim
    assert np.array_equal(F.actions[1], np.zeros((2, 2)))
    e = mf.find_idempotent(F)
    assert mf.is_nontrivial_idempotent(e, 2) and mf.commutes_with_actions(e, F)
    level, e = mf.f_decomposable_upto(M, 2)
    assert level == 1


def test_residue_field_never_splits(dual_numbers):
    k = mf.FiniteModule.residue_field(dual_numbers)
    assert mf.f_decomposable_upto(k, 3) is None
    with pytest.raises(InputError):
        mf.f_decomposable_upto(k, -1)


@pytest.mark.parametrize("p,r,N", [(2, 1, 2), (3, 1, 3), (2, 2, 2), (3, 2, 3), (5, 1, 4)])
def test_derivations_and_pth_powers(p, r, N):
    A = mf.make_truncated_algebra(p, r, N)
    der = mf.derivations(A)
    assert der
    for D in der:
        assert mf.is_derivation(A, D)
        assert mf.is_derivation(A, matpow(D, p, p))
    assert mf.is_derivation(A, mf.euler_derivation(A))


def test_dual_number_derivations(dual_numbers):
    assert len(mf.derivations(dual_numbers)) == 2


def test_euler_skew_derivation(dual_numbers):
    M = mf.FiniteModule.regular(dual_numbers)
    D = mf.euler_derivation(dual_numbers)
    F = mf.skew_derivation_solve(M, D)
    assert np.array_equal(F, diag(0, 1))
    for a in range(dual_numbers.dim):
        X = M.actions[a]
        comm = (matmul_mod(F, X, 2) - matmul_mod(X, F, 2)) % 2
        assert np.array_equal(comm, M.action_of(D[:, a]))


def test_no_skew_derivation_on_residue_field(dual_numbers):
    k = mf.FiniteModule.residue_field(dual_numbers)
    D = np.array([[0, 1], [0, 0]])  # x -> 1
    assert mf.skew_derivation_solve(k, D) is None


def test_ks_small_cases(dual_numbers):
    assert len(mf.ks_kernel(mf.FiniteModule.residue_field(dual_numbers))) == 1
    assert len(mf.ks_kernel(mf.FiniteModule.regular(dual_numbers))) == 2


def module_pairs():
    out = []
    for p, r, N in [(2, 1, 2), (3, 1, 3), (2, 1, 4), (2, 2, 2), (3, 2, 2), (2, 2, 3)]:
        A = mf.make_truncated_algebra(p, r, N)
        reg = mf.FiniteModule.regular(A)
        k = mf.FiniteModule.residue_field(A)
        mods = [reg, k, mf.frobenius_transform(reg)] + [truncation(A, j) for j in range(2, N)]
        out.extend([(reg, k), (mods[2], k), (mods[-1], reg)])
    return out


def test_ks_kernel_of_sum_is_intersection():
    pairs = module_pairs()
    assert len(pairs) >= 10
    for P, Q in pairs:
        A, p = P.algebra, P.p
        shape = (A.dim, A.dim)
        lhs = mf.subspace_basis(mf.ks_kernel(mf.direct_sum(P, Q)), p, shape)
        rhs = mf.intersect_subspaces(
            mf.subspace_basis(mf.ks_kernel(P), p, shape), mf.subspace_basis(mf.ks_kernel(Q), p, shape), p
        )
        assert same_span(lhs, rhs)


def test_artin_schreier_euler(dual_numbers):
    M = mf.FiniteModule.regular(dual_numbers)
    f = mf.skew_derivation_solve(M, mf.euler_derivation(dual_numbers))
    e = mf.artin_schreier_idempotent(M, f)
    assert np.array_equal(e, diag(0, 1))
    assert mf.is_nontrivial_idempotent(e, 2)
    assert mf.commutes_with_actions(e, mf.frobenius_transform(M))


def test_artin_schreier_scalar_gives_zero(dual_numbers):
    M = mf.FiniteModule.regular(dual_numbers)
    e = mf.artin_schreier_idempotent(M, diag(1, 1))
    assert not e.any()


def test_artin_schreier_root_converges():
    phi = np.array([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    tau, steps = mf.artin_schreier_root(phi, 0, 3)
    assert steps <= 3
    assert np.array_equal((matpow(tau, 3, 3) - tau) % 3, phi % 3)


def test_artin_schreier_obstruction(dual_numbers):
    M = mf.FiniteModule.trivial(dual_numbers, 2)
    # companion matrix of T^2 + T + 1, so f^2 - f = 1 and T^2 - T = 1 has no root in Z/2
    f = np.array([[0, 1], [1, 1]])
    with pytest.raises(mf.ArtinSchreierObstruction):
        mf.artin_schreier_idempotent(M, f)


def test_artin_schreier_needs_endomorphism(dual_numbers):
    M = mf.FiniteModule.regular(dual_numbers)
    with pytest.raises(InputError):
        mf.artin_schreier_idempotent(M, np.array([[0, 1], [0, 0]]))


def test_module_json_round_trip():
    A = mf.make_truncated_algebra(3, 2, 2)
    M = truncation(A, 2)
    obj = mf.module_to_json(M)
    back = mf.module_from_json(obj)
    assert mf.module_to_json(back) == obj


@pytest.mark.parametrize(
    "obj",
    [
        [],
        {"p": 2},
        {"p": 4, "algebra": {"dim": 1, "structure": [[[1]]]}, "dim": 1, "actions": [[[1]]]},
        {"p": 2, "algebra": {"dim": 1, "structure": [[[1]]]}, "dim": 1, "actions": [[[3]]]},
        {"p": 2, "algebra": {"dim": 1, "structure": [[[1]]]}, "dim": 1, "actions": [[[1, 0]]]},
        {"p": 2, "algebra": {"dim": 1, "structure": [[[0]]]}, "dim": 1, "actions": [[[1]]]},
    ],
)
def test_module_json_rejects(obj):
    with pytest.raises(InputError):
        mf.module_from_json(obj)
