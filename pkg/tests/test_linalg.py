import numpy as np
import pytest

from annigraph.errors import GraphTooLarge, NoConvergence, NotSymmetric
from annigraph.linalg import jacobi_eigenvalues, off_diagonal_norm, symmetric_eigenvalues


def test_complete_graph_k4():
    A = np.ones((4, 4)) - np.eye(4)
    s = symmetric_eigenvalues(A)
    assert np.allclose(s.eigenvalues, [-1, -1, -1, 3], atol=1e-12)
    assert s.method == "jacobi" and s.tol <= 1e-10


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_star(p):
    A = np.zeros((p, p))
    A[0, 1:] = A[1:, 0] = 1
    s = symmetric_eigenvalues(A)
    expected = [-(p - 1) ** 0.5] + [0.0] * (p - 2) + [(p - 1) ** 0.5]
    assert np.allclose(s.eigenvalues, expected, atol=1e-10)


def test_zero_matrix():
    s = symmetric_eigenvalues(np.zeros((5, 5)))
    assert list(s.eigenvalues) == [0.0] * 5 and s.sweeps == 0


def test_empty():
    assert len(symmetric_eigenvalues(np.zeros((0, 0)))) == 0


@pytest.mark.parametrize("n", [2, 10, 40, 90])
def test_jacobi_matches_lapack_random(n):
    rng = np.random.default_rng(n)
    B = rng.normal(size=(n, n))
    A = B + B.T
    ours = symmetric_eigenvalues(A, method="jacobi")
    ref = np.linalg.eigvalsh(A)
    assert np.max(np.abs(ours.eigenvalues - ref)) < 1e-9
    assert off_diagonal_norm(np.diag(ours.eigenvalues)) == 0


def test_jacobi_handles_clustered_spectra():
    rng = np.random.default_rng(3)
    Q, _ = np.linalg.qr(rng.normal(size=(30, 30)))
    lam = np.array([1.0] * 10 + [1 + 1e-9] * 10 + [-2.0] * 10)
    A = (Q * lam) @ Q.T
    A = (A + A.T) / 2
    s = symmetric_eigenvalues(A, method="jacobi")
    assert np.max(np.abs(s.eigenvalues - np.sort(lam))) < 1e-9


def test_auto_switches_to_lapack_above_threshold():
    A = np.eye(300)
    assert symmetric_eigenvalues(A).method == "lapack"
    assert symmetric_eigenvalues(A, method="jacobi").method == "jacobi"


def test_not_symmetric():
    with pytest.raises(NotSymmetric):
        symmetric_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(NotSymmetric):
        symmetric_eigenvalues(np.zeros((2, 3)))


def test_no_convergence():
    rng = np.random.default_rng(0)
    B = rng.normal(size=(20, 20))
    with pytest.raises(NoConvergence):
        jacobi_eigenvalues(B + B.T, tol=1e-14, max_sweeps=1)


def test_cap():
    with pytest.raises(GraphTooLarge):
        symmetric_eigenvalues(np.eye(5), cap=4)


def test_unknown_method():
    with pytest.raises(ValueError):
        symmetric_eigenvalues(np.eye(2), method="qr")


def test_input_not_modified():
    A = np.array([[2.0, 1.0], [1.0, 2.0]])
    before = A.copy()
    symmetric_eigenvalues(A, method="jacobi")
    assert np.array_equal(A, before)
