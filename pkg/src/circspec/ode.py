"""Periodic differential equation solvers on a Fourier mode window.

solve_ode compresses the operator to the window with either the truncation
projection (finite-section) or trigonometric interpolation (collocation)
and solves the resulting dense system.  exact_constant_solve is the
diagonal oracle for operators without a variable part.
"""

from __future__ import annotations

import numpy as np

from .fourier import BandWindow, CoeffVec, evaluate_on_grid, interpolate, project
from .linsolve import SolveError, solve_checked
from .operators import MODES, DiffOpSpec, assemble_collocation_ode, assemble_finite_section_ode

__all__ = ["solve_ode", "exact_constant_solve", "SolveError"]


def solve_ode(spec: DiffOpSpec, f: CoeffVec, w: BandWindow,
              mode: str = "finite_section", cond_cap: float = 1e12) -> CoeffVec:
    """Solve the compressed equation on the window of w.

    finite_section solves (L0 + P L1) u = P f with P the window truncation;
    collocation replaces P by interpolation from the N-point grid, for the
    operator and the right-hand side alike.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if mode == "finite_section":
        a = assemble_finite_section_ode(spec, w)
        rhs = project(f, w).coeffs
    else:
        a = assemble_collocation_ode(spec, w)
        rhs = interpolate(evaluate_on_grid(f, w.N)).coeffs
    context = f"{mode} solve at N={w.N}"
    entries = a.entries
    diag = np.diag(entries)
    if not np.any(entries - np.diag(diag)) and np.any(diag == 0.0):
        # diagonal operator with dead modes: solvable iff the data avoids
        # them, in which case those modes carry zero
        dead = diag == 0.0
        hit = dead & (rhs != 0.0)
        if np.any(hit):
            m = int(w.modes()[np.argmax(hit)])
            raise SolveError(
                f"{context}: condition estimate inf (symbol vanishes at mode {m} with nonzero data)"
            )
        x = np.zeros(w.N, dtype=complex)
        live = ~dead
        if np.any(live):
            x[live] = solve_checked(np.diag(diag[live]), rhs[live], cond_cap=cond_cap, context=context)
        return CoeffVec(-w.n_minus, x)
    x = solve_checked(entries, rhs, cond_cap=cond_cap, context=context)
    return CoeffVec(-w.n_minus, x)


def exact_constant_solve(spec: DiffOpSpec, f: CoeffVec) -> CoeffVec:
    """Divide by the symbol: the exact solution when the variable part vanishes."""
    if spec.has_variable_part():
        raise ValueError("exact solve requires a vanishing variable part")
    sym = spec.symbol(f.modes())
    zero = np.abs(sym) == 0.0
    if np.any(zero):
        m = int(f.modes()[np.argmax(zero)])
        raise SolveError(f"symbol vanishes at mode {m}; constant-coefficient solve undefined")
    return CoeffVec(f.j_min, f.coeffs / sym)
