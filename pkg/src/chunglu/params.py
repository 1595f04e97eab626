"""Model parameters and numeric tolerances."""

from __future__ import annotations

from dataclasses import dataclass

CHUNG_LU = "chung-lu"
ERDOS_RENYI = "erdos-renyi"


@dataclass(frozen=True)
class ModelParams:
    """Kernel parameters of one graph ensemble.

    Chung-Lu uses the product kernel theta * w(x) * w(y) with the power-law
    weight profile w(x) = x**(-1/(gamma-1)); gamma must exceed 2 so the
    profile is integrable.  Erdos-Renyi is the constant kernel lam, in which
    case gamma and theta are unused.
    """

    gamma: float | None
    theta: float | None
    variant: str = CHUNG_LU
    lam: float | None = None

    def __post_init__(self):
        if self.variant == CHUNG_LU:
            if self.gamma is None or self.theta is None:
                raise ValueError("chung-lu parameters need gamma and theta")
            if not self.gamma > 2.0:
                raise ValueError(f"gamma must be > 2, got {self.gamma}")
            if not self.theta >= 0.0:
                raise ValueError(f"theta must be >= 0, got {self.theta}")
        elif self.variant == ERDOS_RENYI:
            if self.lam is None:
                raise ValueError("erdos-renyi parameters need lam")
            if not self.lam >= 0.0:
                raise ValueError(f"lam must be >= 0, got {self.lam}")
        else:
            raise ValueError(f"unknown variant {self.variant!r}")

    @classmethod
    def chung_lu(cls, gamma: float, theta: float) -> "ModelParams":
        return cls(gamma=float(gamma), theta=float(theta), variant=CHUNG_LU)

    @classmethod
    def erdos_renyi(cls, lam: float) -> "ModelParams":
        return cls(gamma=None, theta=None, variant=ERDOS_RENYI, lam=float(lam))

    @property
    def is_chung_lu(self) -> bool:
        return self.variant == CHUNG_LU


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances for the adaptive integrator.

    max_subdivisions bounds the number of subintervals the adaptive scheme
    may create; the defaults leave ample headroom at these integrand costs.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_subdivisions: int = 60

    def __post_init__(self):
        if not (self.abs_tol > 0.0 and self.rel_tol > 0.0):
            raise ValueError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


DEFAULT_QUADRATURE = QuadratureConfig()
