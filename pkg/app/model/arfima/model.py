from __future__ import annotations

import hashlib
import json
from typing import Any, Sequence

import numpy as np

from app.base.errors import DomainError

# Roots must lie strictly outside the unit circle by at least this margin
_ROOT_MARGIN = 1e-10


class ArfimaModel:
    """
    Description:
    - Gaussian ARFIMA(p,d,q) process Φ(B)(1-B)^d (Y_t - μ) = Θ(B) ε_t
    - Polynomials use the PLUS convention Φ(B) = 1 + φ₁B + ... + φ_pB^p and
      Θ(B) = 1 + θ₁B + ... + θ_qB^q, so φ₁ = -0.9 is an AR coefficient of +0.9
      in the conventional Y_t = 0.9 Y_{t-1} + ... form
    - Immutable and hashable; used as a cache key by the covariance engine

    Attrs:
    - d: memory parameter, -0.5 < d < 0.5
    - ar: tuple of φ coefficients
    - ma: tuple of θ coefficients
    - sigma2: innovation variance (> 0)
    - mu: process mean

    Methods:
    - from_dict(data): Build from a flat mapping (keys d, phi/ar, theta/ma, sigma2, mu)
    - with_d(d): Copy with a different memory parameter
    - label(): Short name such as "ARFIMA(1,d,0)"
    - describe(): Compact dict for logs and result files
    - to_dict(): Full serialisation
    - get_fingerprint(): SHA256 of the canonical description

    Example:
    ```python
    from app.model.arfima import ArfimaModel

    model = ArfimaModel(d=0.25, ar=[0.4])
    model.label()           # 'ARFIMA(1,d,0)'
    model.with_d(0.0).d     # 0.0
    ```
    """

    @classmethod
    def from_dict(
        cls,
        data: dict[str, Any],
    ) -> ArfimaModel:
        ar = data.get("ar") if data.get("ar") is not None else data.get("phi")
        ma = data.get("ma") if data.get("ma") is not None else data.get("theta")
        return cls(
            d=data.get("d", 0.0),
            ar=ar or (),
            ma=ma or (),
            sigma2=data.get("sigma2", 1.0) if data.get("sigma2") is not None else 1.0,
            mu=data.get("mu", 0.0) if data.get("mu") is not None else 0.0,
        )

    @classmethod
    def white_noise(
        cls,
        sigma2: float = 1.0,
    ) -> ArfimaModel:
        return cls(d=0.0, sigma2=sigma2)

    def __init__(
        self,
        d: float = 0.0,
        ar: Sequence[float] = (),
        ma: Sequence[float] = (),
        sigma2: float = 1.0,
        mu: float = 0.0,
    ) -> None:
        self.d: float = self._resolve_d(d)
        self.ar: tuple[float, ...] = self._resolve_polynomial(ar, "AR")
        self.ma: tuple[float, ...] = self._resolve_polynomial(ma, "MA")
        self.sigma2: float = self._resolve_sigma2(sigma2)
        self.mu: float = self._resolve_mu(mu)

    def _resolve_d(
        self,
        d: float,
    ) -> float:
        value = float(d)
        if not np.isfinite(value) or not -0.5 < value < 0.5:
            msg = f"Memory parameter d must lie in (-0.5, 0.5), got {d!r}."
            raise DomainError(msg)
        return value

    def _resolve_polynomial(
        self,
        coefficients: Sequence[float],
        kind: str,
    ) -> tuple[float, ...]:
        values = tuple(float(c) for c in coefficients)
        if not all(np.isfinite(values)):
            msg = f"{kind} coefficients must be finite, got {values!r}."
            raise DomainError(msg)
        if values:
            roots = np.polynomial.polynomial.polyroots((1.0,) + values)
            smallest = float(np.min(np.abs(roots)))
            if smallest <= 1.0 + _ROOT_MARGIN:
                what = "stationary" if kind == "AR" else "invertible"
                msg = f"{kind} polynomial is not {what}: root modulus {smallest:.6g} <= 1 for {values!r}."
                raise DomainError(msg, diagnostics={"root_modulus": smallest})
        return values

    def _resolve_sigma2(
        self,
        sigma2: float,
    ) -> float:
        value = float(sigma2)
        if not np.isfinite(value) or value <= 0.0:
            msg = f"Innovation variance sigma2 must be > 0, got {sigma2!r}."
            raise DomainError(msg)
        return value

    def _resolve_mu(
        self,
        mu: float,
    ) -> float:
        value = float(mu)
        if not np.isfinite(value):
            msg = f"Process mean mu must be finite, got {mu!r}."
            raise DomainError(msg)
        return value

    @property
    def p(self) -> int:
        return len(self.ar)

    @property
    def q(self) -> int:
        return len(self.ma)

    def is_white_noise(self) -> bool:
        return self.d == 0.0 and not any(self.ar) and not any(self.ma)

    def with_d(
        self,
        d: float,
    ) -> ArfimaModel:
        return ArfimaModel(d=d, ar=self.ar, ma=self.ma, sigma2=self.sigma2, mu=self.mu)

    def label(self) -> str:
        return f"ARFIMA({self.p},d,{self.q})"

    def describe(self) -> dict[str, Any]:
        result: dict[str, Any] = {"d": self.d}
        if self.ar:
            result["phi"] = list(self.ar)
        if self.ma:
            result["theta"] = list(self.ma)
        if self.sigma2 != 1.0:
            result["sigma2"] = self.sigma2
        if self.mu != 0.0:
            result["mu"] = self.mu
        return result

    def to_dict(self) -> dict[str, Any]:
        return {
            "d": self.d,
            "phi": list(self.ar),
            "theta": list(self.ma),
            "sigma2": self.sigma2,
            "mu": self.mu,
        }

    def get_fingerprint(self) -> str:
        serial = json.dumps(self.to_dict(), sort_keys=True)
        return hashlib.sha256(serial.encode()).hexdigest()

    def _key(self) -> tuple:
        return (self.d, self.ar, self.ma, self.sigma2, self.mu)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArfimaModel):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"ArfimaModel(d={self.d!r}, ar={self.ar!r}, ma={self.ma!r}, sigma2={self.sigma2!r}, mu={self.mu!r})"
