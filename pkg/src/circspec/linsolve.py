"""Dense linear solves with a conditioning gate and a residual check."""

from __future__ import annotations

import warnings

import numpy as np
import scipy.linalg as sla

__all__ = ["SolveError", "solve_checked"]


class SolveError(RuntimeError):
    """Raised when a linear system is singular, ill-conditioned, or inaccurate."""


def solve_checked(a: np.ndarray, rhs: np.ndarray, cond_cap: float = 1e12,
                  context: str = "linear solve") -> np.ndarray:
    """LU solve with partial pivoting, gated on a 1-norm condition estimate.

    Raises SolveError naming the condition estimate when it exceeds
    cond_cap, and when the solution residual exceeds 1e-10 relative to the
    right-hand side.
    """
    a = np.asarray(a, dtype=complex)
    rhs = np.asarray(rhs, dtype=complex)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", sla.LinAlgWarning)
        lu, piv = sla.lu_factor(a, check_finite=False)
    anorm = np.linalg.norm(a, 1)
    gecon, = sla.get_lapack_funcs(("gecon",), (a,))
    rcond, info = gecon(lu, anorm, norm="1")
    if info != 0:
        raise SolveError(f"{context}: condition estimation failed (info={info})")
    cond = np.inf if rcond == 0.0 else 1.0 / float(rcond)
    if not np.isfinite(cond) or cond > cond_cap:
        raise SolveError(
            f"{context}: condition estimate {cond:.3e} exceeds cap {cond_cap:.1e} "
            "(operator not invertible at this truncation, or truncation too small)"
        )
    x = sla.lu_solve((lu, piv), rhs, check_finite=False)
    resid = np.linalg.norm(a @ x - rhs)
    if resid > 1e-10 * np.linalg.norm(rhs):
        raise SolveError(f"{context}: residual {resid:.3e} exceeds 1e-10 of the right-hand side")
    return x
