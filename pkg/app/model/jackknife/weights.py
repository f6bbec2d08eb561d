from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Any, Sequence

import numpy as np
from scipy import linalg

from app.base.errors import DomainError, NumericalError
from app.model.jackknife.plan import SubsamplePlan
from app.model.spectral.grid import DEFAULT_ALPHA, bandwidth

# Residual bound for the two weight constraints
CONSTRAINT_TOL = 1e-10
# Agreement between the solved and closed-form full-sample weight
CLOSED_FORM_TOL = 1e-8
# Largest acceptable condition number of the KKT matrix
MAX_CONDITION = 1e12


class WeightProvenance(str, Enum):
    """
    Where a set of jackknife weights came from.

    Attrs:
        CHAMBERS: Closed-form weights with equal sub-sample weights.
        OPTIMAL: Variance-minimising weights from the KKT system.
        FEASIBLE: Optimal weights built on an estimated model (iteration k).
        MANUAL: Hand-built weights that skip the constraint checks.
    """

    CHAMBERS = "chambers"
    OPTIMAL = "optimal"
    FEASIBLE = "feasible-iteration"
    MANUAL = "manual"

    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}.{self.name}"


@dataclass(frozen=True)
class BiasFactors:
    """
    Bandwidths and the bias-constraint coefficients of a plan.

    ``a`` = N_n²/n² multiplies w_n and ``b`` = m²N_l²/l² multiplies Σw_i in
    the bias constraint a·w_n - b·Σw_i = 0.
    """

    n: int
    m: int
    l: int
    N_n: int
    N_l: int
    a: float
    b: float

    @classmethod
    def from_plan(
        cls,
        plan: SubsamplePlan,
        alpha: float = DEFAULT_ALPHA,
    ) -> BiasFactors:
        N_n = bandwidth(plan.n, alpha)
        N_l = bandwidth(plan.l, alpha)
        return cls(
            n=plan.n,
            m=plan.m,
            l=plan.l,
            N_n=N_n,
            N_l=N_l,
            a=(N_n / plan.n) ** 2,
            b=plan.m**2 * (N_l / plan.l) ** 2,
        )

    @property
    def ratio(self) -> float:
        """(N_n l/(N_l m n))² = a/b."""
        return (self.N_n * self.l / (self.N_l * self.m * self.n)) ** 2

    def closed_form_full_weight(self) -> float:
        denominator = 1.0 - self.ratio
        if denominator == 0.0:
            msg = "Closed-form jackknife weight is undefined: N_n l = N_l m n."
            raise DomainError(msg, diagnostics=self.describe())
        return 1.0 / denominator

    def describe(self) -> dict[str, Any]:
        return {"n": self.n, "m": self.m, "l": self.l, "N_n": self.N_n, "N_l": self.N_l}


class JackknifeWeights:
    """
    Description:
    - Weights of d̂_J = w_n d̂_n - Σ w_i d̂_i
    - Construction checks w_n - Σw_i = 1 and a·w_n - b·Σw_i = 0 to 1e-10;
      ``manual`` builds weights without the checks

    Attrs:
    - w_n: full-sample weight
    - w_sub: read-only array of the m sub-sample weights
    - factors: BiasFactors of the plan the weights were built for
    - provenance: WeightProvenance
    - iteration: feasible iteration index, None otherwise
    - delta1, delta2: Lagrange multipliers of optimal weights

    Example:
    ```python
    weights = chambers_weights(96, 2)
    weights.w_n                 # 1.185794...
    weights.residuals()         # (0.0, ~1e-17)
    ```
    """

    @classmethod
    def manual(
        cls,
        w_n: float,
        w_sub: Sequence[float],
        factors: BiasFactors,
    ) -> JackknifeWeights:
        return cls(w_n, w_sub, factors, provenance=WeightProvenance.MANUAL, check=False)

    def __init__(
        self,
        w_n: float,
        w_sub: Sequence[float],
        factors: BiasFactors,
        provenance: WeightProvenance = WeightProvenance.OPTIMAL,
        iteration: int | None = None,
        delta1: float | None = None,
        delta2: float | None = None,
        check: bool = True,
    ) -> None:
        self.w_n: float = float(w_n)
        self.w_sub: np.ndarray = self._resolve_w_sub(w_sub, factors)
        self.factors: BiasFactors = factors
        self.provenance: WeightProvenance = provenance
        self.iteration: int | None = iteration
        self.delta1: float | None = None if delta1 is None else float(delta1)
        self.delta2: float | None = None if delta2 is None else float(delta2)
        if check:
            self._check_constraints()

    def _resolve_w_sub(
        self,
        w_sub: Sequence[float],
        factors: BiasFactors,
    ) -> np.ndarray:
        values = np.array(w_sub, dtype=float)
        if values.shape != (factors.m,):
            msg = f"Expected {factors.m} sub-sample weights, got shape {values.shape}."
            raise DomainError(msg)
        values.setflags(write=False)
        return values

    def _check_constraints(self) -> None:
        g1, g2 = self.residuals()
        if abs(g1) > CONSTRAINT_TOL or abs(g2) > CONSTRAINT_TOL or not np.isfinite(self.w_n):
            msg = f"Jackknife weights violate their constraints: g1 = {g1:.3g}, g2 = {g2:.3g}."
            raise NumericalError(msg, diagnostics={"g1": g1, "g2": g2, **self.factors.describe()})

    @property
    def m(self) -> int:
        return self.factors.m

    def residuals(self) -> tuple[float, float]:
        total = float(np.sum(self.w_sub))
        g1 = self.w_n - total - 1.0
        g2 = self.factors.a * self.w_n - self.factors.b * total
        return float(g1), float(g2)

    def label(self) -> str:
        if self.provenance is WeightProvenance.FEASIBLE and self.iteration is not None:
            return f"{self.provenance}({self.iteration})"
        return str(self.provenance)

    def describe(self) -> dict[str, Any]:
        return {
            "provenance": self.label(),
            "w_n": self.w_n,
            "w_sub": self.w_sub.tolist(),
            **self.factors.describe(),
        }

    def __repr__(self) -> str:
        return f"JackknifeWeights(w_n={self.w_n!r}, w_sub={self.w_sub.tolist()!r}, provenance={self.label()!r})"


def chambers_weights(
    n: int,
    m: int,
    alpha: float = DEFAULT_ALPHA,
) -> JackknifeWeights:
    """w_n = [1 - (N_n l/(N_l m n))²]^{-1}, w_i = (w_n - 1)/m."""
    factors = BiasFactors.from_plan(SubsamplePlan(n, m), alpha)
    w_n = factors.closed_form_full_weight()
    return JackknifeWeights(
        w_n=w_n,
        w_sub=np.full(m, (w_n - 1.0) / m),
        factors=factors,
        provenance=WeightProvenance.CHAMBERS,
    )


def _check_bundle(
    plan: SubsamplePlan,
    alpha: float,
    cov: Any,
) -> None:
    if cov.plan != plan or cov.alpha != float(alpha):
        msg = f"Covariance bundle for {cov.plan!r}, alpha={cov.alpha} does not match {plan!r}, alpha={alpha}."
        raise DomainError(msg)


def kkt_matrix(
    plan: SubsamplePlan,
    alpha: float,
    cov: Any,
) -> np.ndarray:
    """
    The (m+3)×(m+3) system in the unknowns (δ₁, δ₂, w_n, w_1..w_m).

    Rows are the two constraints, the w_n condition and the m sub-sample
    conditions; the matrix is also the bordered Hessian of the problem.
    """
    _check_bundle(plan, alpha, cov)
    factors = BiasFactors.from_plan(plan, alpha)
    m = plan.m
    A = np.zeros((m + 3, m + 3))
    A[0, 2] = 1.0
    A[0, 3:] = -1.0
    A[1, 2] = factors.a
    A[1, 3:] = -factors.b
    A[2, 0] = 1.0
    A[2, 1] = factors.a
    A[2, 2] = np.pi**2 / (12.0 * factors.N_n)
    A[2, 3:] = -2.0 * cov.c_star
    A[3:, 0] = -1.0
    A[3:, 1] = -factors.b
    A[3:, 2] = -2.0 * cov.c_star
    A[3:, 3:] = 2.0 * cov.c_dagger
    A[3 + np.arange(m), 3 + np.arange(m)] = np.pi**2 / (12.0 * factors.N_l)
    return A


def optimal_weights(
    plan: SubsamplePlan,
    alpha: float,
    cov: Any,
    provenance: WeightProvenance = WeightProvenance.OPTIMAL,
    iteration: int | None = None,
) -> JackknifeWeights:
    """
    Variance-minimising weights under both constraints.

    Solves A w = e₁ by LU with partial pivoting and checks the solved w_n
    against its closed form.
    """
    A = kkt_matrix(plan, alpha, cov)
    factors = BiasFactors.from_plan(plan, alpha)
    condition = float(np.linalg.cond(A))
    if not np.isfinite(condition) or condition > MAX_CONDITION:
        msg = f"Jackknife weight system is singular (condition number {condition:.3g})."
        raise NumericalError(msg, diagnostics={"condition": condition, **factors.describe()})
    rhs = np.zeros(plan.m + 3)
    rhs[0] = 1.0
    with warnings.catch_warnings():
        warnings.simplefilter("error", linalg.LinAlgWarning)
        try:
            solution = linalg.lu_solve(linalg.lu_factor(A), rhs)
        except (linalg.LinAlgError, linalg.LinAlgWarning) as e:
            msg = f"Jackknife weight system could not be factorised: {e}."
            raise NumericalError(msg, diagnostics={"condition": condition}) from e

    closed = factors.closed_form_full_weight()
    if abs(solution[2] - closed) > CLOSED_FORM_TOL:
        msg = f"Solved w_n = {solution[2]:.12g} differs from its closed form {closed:.12g}."
        raise NumericalError(msg, diagnostics={"solved": float(solution[2]), "closed_form": closed})
    return JackknifeWeights(
        w_n=solution[2],
        w_sub=solution[3:],
        factors=factors,
        provenance=provenance,
        iteration=iteration,
        delta1=solution[0],
        delta2=solution[1],
    )


def bordered_hessian_minors(
    plan: SubsamplePlan,
    alpha: float,
    cov: Any,
) -> list[float]:
    """
    Leading principal minors of the bordered Hessian, orders 4..m+3.

    The order-3 minor vanishes identically (the two border rows are
    proportional on the first three columns); order 4 equals (a - b)².
    """
    H = kkt_matrix(plan, alpha, cov)
    return [float(np.linalg.det(H[:k, :k])) for k in range(4, plan.m + 4)]
