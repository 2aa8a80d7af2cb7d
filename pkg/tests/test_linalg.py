from pathlib import Path

import numpy as np

from tfcahn.linalg.krylov import gmres_solve, relative_residual


def _system(n: int = 60, seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    rng = np.random.default_rng(seed)
    A = np.diag(np.linspace(1.0, 50.0, n)) + 0.1 * rng.standard_normal((n, n))
    b = rng.standard_normal(n)
    return A, b


def test_gmres_matches_dense_solve() -> None:
    A, b = _system()
    res = gmres_solve(lambda v: A @ v, b, tol=1e-12)
    assert res.converged
    assert res.residual <= 1e-12
    assert np.allclose(res.x, np.linalg.solve(A, b), atol=1e-9)


def test_diagonal_preconditioner_reduces_iterations() -> None:
    A, b = _system(seed=1)
    d = np.diag(A).copy()
    plain = gmres_solve(lambda v: A @ v, b, tol=1e-10)
    pre = gmres_solve(lambda v: A @ v, b, precond=lambda v: v / d, tol=1e-10)
    assert pre.converged
    assert pre.iterations <= plain.iterations


def test_zero_rhs_returns_zero() -> None:
    res = gmres_solve(lambda v: 2.0 * v, np.zeros(5))
    assert res.converged
    assert res.iterations == 0
    assert np.array_equal(res.x, np.zeros(5))


def test_budget_exhaustion_is_reported() -> None:
    A, b = _system(seed=2)
    res = gmres_solve(lambda v: A @ v, b, tol=1e-14, maxiter=1, restart=1)
    assert not res.converged
    assert res.iterations == 1
    assert np.isclose(res.residual, relative_residual(lambda v: A @ v, res.x, b))


def test_no_dense_inverse_in_core() -> None:
    root = Path(__file__).resolve().parents[1] / "src" / "tfcahn"
    for path in root.rglob("*.py"):
        text = path.read_text(encoding="utf-8")
        assert "np.linalg.inv" not in text
        assert "np.linalg.solve" not in text


def test_preconditioned_residual_is_measured_on_left_system() -> None:
    A, b = _system(seed=3)
    d = np.diag(A).copy()
    res = gmres_solve(lambda v: A @ v, b, precond=lambda v: v / d, tol=1e-11)
    assert res.converged
    left = relative_residual(lambda v: (A @ v) / d, res.x, b / d)
    assert np.isclose(res.residual, left, rtol=1e-6, atol=1e-16)
    assert np.allclose(res.x, np.linalg.solve(A, b), atol=1e-8)
