"""Space descriptors and kernel/weight evaluation.

Every space is a reproducing kernel Hilbert space of analytic functions on
the unit disk, polydisc or ball.  One-variable families carry a weight
sequence beta_n (orthonormal basis z^n / beta_n); several-variable families
expose only kernel evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from .errors import (
    DomainError,
    PointOutsideDomain,
    TruncationNotConverged,
    WrongSpaceFamily,
)

# Strict-inequality margin for domain membership; boundary points rejected.
DOMAIN_MARGIN = 1e-15

ONE_VARIABLE_FAMILIES = ("hardy_disk", "bergman_disk", "weighted_hardy")
POLYDISC_FAMILIES = ("hardy_polydisc", "bergman_polydisc", "bergman_polydisc_star")


@dataclass(frozen=True)
class WeightSequence:
    """Coefficient weights beta_n of a weighted Hardy space, beta_0 = 1.

    family "hardy":    beta_n = 1.
    family "bergman":  beta_n^2 = n! Gamma(2+alpha) / Gamma(n+2+alpha),
                       evaluated through log-gamma so it stays finite for
                       n up to ~1e5.
    family "explicit": finitely many values, repeated last entry beyond
                       the listed range (keeps liminf beta_n^{1/n} >= 1).
    """

    family: str
    alpha: float = 0.0
    values: tuple = ()

    def __post_init__(self):
        if self.family not in ("hardy", "bergman", "explicit"):
            raise DomainError(f"unknown weight family {self.family!r}")
        if self.family == "bergman" and self.alpha <= -1:
            raise DomainError("bergman weights require alpha > -1")
        if self.family == "explicit":
            if not self.values:
                raise DomainError("explicit weights need at least beta_0")
            vals = tuple(float(v) for v in self.values)
            if abs(vals[0] - 1.0) > 1e-12:
                raise DomainError("beta_0 must equal 1")
            if any(v <= 0 for v in vals):
                raise DomainError("weights must be positive")
            object.__setattr__(self, "values", vals)

    def beta_sq(self, n: int) -> float:
        if n < 0:
            raise DomainError("weight index must be >= 0")
        if self.family == "hardy":
            return 1.0
        if self.family == "bergman":
            a = self.alpha
            return math.exp(gammaln(n + 1) + gammaln(2 + a) - gammaln(n + 2 + a))
        idx = min(n, len(self.values) - 1)
        return self.values[idx] ** 2

    def beta(self, n: int) -> float:
        return math.sqrt(self.beta_sq(n))

    def beta_array(self, n_max: int) -> np.ndarray:
        """beta_0..beta_{n_max} as a vector."""
        if self.family == "hardy":
            return np.ones(n_max + 1)
        if self.family == "bergman":
            n = np.arange(n_max + 1)
            a = self.alpha
            return np.exp(0.5 * (gammaln(n + 1) + gammaln(2 + a) - gammaln(n + 2 + a)))
        out = np.empty(n_max + 1)
        for n in range(n_max + 1):
            out[n] = self.values[min(n, len(self.values) - 1)]
        return out


@dataclass(frozen=True)
class SpaceDescriptor:
    """One of the supported RKHS families.

    family: "hardy_disk" | "bergman_disk" | "weighted_hardy" |
            "hardy_polydisc" | "bergman_polydisc" | "bergman_polydisc_star" |
            "hardy_ball"
    """

    family: str
    alpha: float = 0.0
    n: int = 1
    weights: WeightSequence | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.family not in ONE_VARIABLE_FAMILIES + POLYDISC_FAMILIES + ("hardy_ball",):
            raise DomainError(f"unknown space family {self.family!r}")
        if self.family in ("bergman_disk", "bergman_polydisc", "bergman_polydisc_star"):
            if self.alpha <= -1:
                raise DomainError("alpha must be > -1")
        if self.n < 1:
            raise DomainError("dimension must be >= 1")
        if self.family == "hardy_disk" and self.weights is None:
            object.__setattr__(self, "weights", WeightSequence("hardy"))
        if self.family == "bergman_disk" and self.weights is None:
            object.__setattr__(self, "weights", WeightSequence("bergman", alpha=self.alpha))
        if self.family == "weighted_hardy" and self.weights is None:
            raise DomainError("weighted_hardy requires an explicit weight sequence")

    @property
    def dim(self) -> int:
        return 1 if self.family in ONE_VARIABLE_FAMILIES else self.n

    @property
    def is_one_variable(self) -> bool:
        return self.family in ONE_VARIABLE_FAMILIES


def hardy_disk() -> SpaceDescriptor:
    return SpaceDescriptor("hardy_disk")


def bergman_disk(alpha: float = 0.0) -> SpaceDescriptor:
    return SpaceDescriptor("bergman_disk", alpha=alpha)


def weighted_hardy(weights) -> SpaceDescriptor:
    if not isinstance(weights, WeightSequence):
        weights = WeightSequence("explicit", values=tuple(weights))
    return SpaceDescriptor("weighted_hardy", weights=weights)


def hardy_polydisc(n: int) -> SpaceDescriptor:
    return SpaceDescriptor("hardy_polydisc", n=n)


def bergman_polydisc(n: int, alpha: float = 0.0) -> SpaceDescriptor:
    return SpaceDescriptor("bergman_polydisc", n=n, alpha=alpha)


def bergman_polydisc_star(n: int, alpha: float = 0.0) -> SpaceDescriptor:
    return SpaceDescriptor("bergman_polydisc_star", n=n, alpha=alpha)


def hardy_ball(n: int) -> SpaceDescriptor:
    return SpaceDescriptor("hardy_ball", n=n)


@dataclass(frozen=True)
class MultiIndexTruncation:
    """Truncation policy for multi-index / tail-controlled series."""

    max_total_degree: int = 2000
    tail_tol: float = 1e-12

    def __post_init__(self):
        if self.tail_tol <= 0:
            raise DomainError("tail_tol must be positive")
        if self.max_total_degree < 0:
            raise DomainError("max_total_degree must be >= 0")


def as_point(z) -> tuple:
    """Normalize a scalar or sequence of coordinates to a tuple of complex."""
    if isinstance(z, tuple):
        return tuple(complex(c) for c in z)
    if isinstance(z, (list, np.ndarray)):
        return tuple(complex(c) for c in z)
    return (complex(z),)


def check_in_domain(space: SpaceDescriptor, z) -> tuple:
    """Validate strict domain membership; returns the normalized point."""
    pt = as_point(z)
    if len(pt) != space.dim:
        raise PointOutsideDomain(
            f"point has {len(pt)} coordinates, space has dimension {space.dim}"
        )
    if space.family == "hardy_ball":
        if math.sqrt(sum(abs(c) ** 2 for c in pt)) > 1.0 - DOMAIN_MARGIN:
            raise PointOutsideDomain(f"{pt} is not strictly inside the unit ball")
    else:
        if any(abs(c) > 1.0 - DOMAIN_MARGIN for c in pt):
            raise PointOutsideDomain(f"{pt} is not strictly inside the polydisc")
    return pt


def _weighted_series_kernel(weights: WeightSequence, x: complex,
                            tail_tol: float = 1e-14, max_terms: int = 200000) -> complex:
    """Sum_{n>=0} x^n / beta_n^2 with a relative-tail stopping rule."""
    total = 0.0 + 0.0j
    term_pow = 1.0 + 0.0j
    for n in range(max_terms):
        term = term_pow / weights.beta_sq(n)
        total += term
        if n > 0 and abs(term) < tail_tol * abs(total):
            return total
        term_pow *= x
    raise TruncationNotConverged("weighted Hardy kernel series did not converge")


def _star_axis_series(x: complex, exponent: float, trunc: MultiIndexTruncation) -> complex:
    """Sum_{k>=0} x^k (k+1)^exponent with the truncation policy's stopping rule."""
    total = 0.0 + 0.0j
    xk = 1.0 + 0.0j
    for k in range(trunc.max_total_degree + 1):
        term = xk * (k + 1) ** exponent
        total += term
        if k > 0 and abs(term) < trunc.tail_tol * abs(total):
            return total
        xk *= x
    raise TruncationNotConverged(
        f"axis series for exponent {exponent} not converged "
        f"within degree {trunc.max_total_degree}"
    )


def kernel_eval(space: SpaceDescriptor, z, w,
                trunc: MultiIndexTruncation | None = None) -> complex:
    """Reproducing kernel kappa(z, w); conjugate-linear in w.

    Closed forms per family:
      hardy_disk             1 / (1 - conj(w) z)
      bergman_disk           (1 - conj(w) z)^{-(alpha+2)}
      weighted_hardy         sum_n (conj(w) z)^n / beta_n^2
      hardy_polydisc         prod_i 1 / (1 - conj(w_i) z_i)
      bergman_polydisc       prod_i (1 - conj(w_i) z_i)^{-(alpha+2)}
      bergman_polydisc_star  prod_i sum_k (conj(w_i) z_i)^k (k+1)^{1+alpha}
      hardy_ball             (1 - <z, w>)^{-n}
    """
    zp = check_in_domain(space, z)
    wp = check_in_domain(space, w)
    fam = space.family
    if fam == "hardy_disk":
        return 1.0 / (1.0 - np.conj(wp[0]) * zp[0])
    if fam == "bergman_disk":
        return (1.0 - np.conj(wp[0]) * zp[0]) ** (-(space.alpha + 2.0))
    if fam == "weighted_hardy":
        return _weighted_series_kernel(space.weights, np.conj(wp[0]) * zp[0])
    if fam == "hardy_polydisc":
        out = 1.0 + 0.0j
        for zi, wi in zip(zp, wp):
            out /= 1.0 - np.conj(wi) * zi
        return out
    if fam == "bergman_polydisc":
        out = 1.0 + 0.0j
        for zi, wi in zip(zp, wp):
            out *= (1.0 - np.conj(wi) * zi) ** (-(space.alpha + 2.0))
        return out
    if fam == "bergman_polydisc_star":
        if trunc is None:
            trunc = MultiIndexTruncation()
        out = 1.0 + 0.0j
        for zi, wi in zip(zp, wp):
            out *= _star_axis_series(np.conj(wi) * zi, 1.0 + space.alpha, trunc)
        return out
    # hardy_ball
    inner = sum(zi * np.conj(wi) for zi, wi in zip(zp, wp))
    return (1.0 - inner) ** (-float(space.n))


def kernel_diag(space: SpaceDescriptor, z,
                trunc: MultiIndexTruncation | None = None) -> float:
    """kappa(z, z); always real and >= 1."""
    val = kernel_eval(space, z, z, trunc=trunc)
    return float(val.real)


def coeff_norm_sq(space: SpaceDescriptor, coeffs) -> float:
    """Squared norm sum |a_n|^2 beta_n^2 of a finite coefficient sequence."""
    if not space.is_one_variable:
        raise WrongSpaceFamily("coefficient norms need a one-variable space")
    a = np.asarray(coeffs, dtype=complex)
    if a.ndim != 1:
        raise DomainError("coefficients must be a flat sequence")
    beta = space.weights.beta_array(len(a) - 1) if len(a) else np.array([])
    return float(np.sum(np.abs(a) ** 2 * beta**2))


_SPACE_JSON_FIELDS = {
    "hardy_disk": set(),
    "bergman_disk": {"alpha"},
    "weighted_hardy": {"beta"},
    "hardy_polydisc": {"n"},
    "bergman_polydisc": {"n", "alpha"},
    "bergman_polydisc_star": {"n", "alpha"},
    "hardy_ball": {"n"},
}


def space_from_json(obj: dict) -> SpaceDescriptor:
    """Parse a space descriptor from its JSON object form.

    {"family": ..., "alpha": number?, "n": integer?, "beta": [number]?}
    Unknown fields are rejected.
    """
    if not isinstance(obj, dict):
        raise DomainError("space JSON must be an object")
    family = obj.get("family")
    if family not in _SPACE_JSON_FIELDS:
        raise DomainError(f"unknown space family {family!r}")
    allowed = _SPACE_JSON_FIELDS[family] | {"family"}
    extra = set(obj) - allowed
    if extra:
        raise DomainError(f"unknown fields for {family}: {sorted(extra)}")
    if family == "hardy_disk":
        return hardy_disk()
    if family == "bergman_disk":
        return bergman_disk(float(obj.get("alpha", 0.0)))
    if family == "weighted_hardy":
        if "beta" not in obj:
            raise DomainError("weighted_hardy requires a beta list")
        return weighted_hardy(obj["beta"])
    n = int(obj.get("n", 1))
    if family == "hardy_polydisc":
        return hardy_polydisc(n)
    if family == "bergman_polydisc":
        return bergman_polydisc(n, float(obj.get("alpha", 0.0)))
    if family == "bergman_polydisc_star":
        return bergman_polydisc_star(n, float(obj.get("alpha", 0.0)))
    return hardy_ball(n)
