"""Analytic self-maps of the disk and truncated power-series arithmetic.

Symbols are immutable and callable; ``sym(z)`` accepts scalars or arrays.
``to_series`` produces Taylor coefficients at the origin, ``compose``
composes truncated series by Horner's scheme.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BoundaryEvalUnsupported,
    DomainError,
    PointOutsideDomain,
)

_BOUNDARY_SLACK = 1e-12


@dataclass(frozen=True, eq=False)
class PowerSeries:
    """Finite truncated power series c_0 + c_1 z + ... + c_N z^N."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        if c.ndim != 1 or len(c) == 0:
            raise DomainError("series coefficients must be a nonempty flat sequence")
        if not np.all(np.isfinite(c)):
            raise DomainError("series coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        return horner(self.coeffs, z)

    def mul_trunc(self, other: "PowerSeries", out_degree: int) -> "PowerSeries":
        prod = np.convolve(self.coeffs, other.coeffs)[: out_degree + 1]
        return PowerSeries(prod)

    def pad(self, degree: int) -> "PowerSeries":
        if self.degree >= degree:
            return PowerSeries(self.coeffs[: degree + 1])
        out = np.zeros(degree + 1, dtype=complex)
        out[: len(self.coeffs)] = self.coeffs
        return PowerSeries(out)


def horner(coeffs, z):
    """Evaluate an ascending coefficient sequence at z (scalar or array)."""
    c = np.asarray(coeffs, dtype=complex)
    z = np.asarray(z, dtype=complex)
    out = np.full(z.shape, c[-1], dtype=complex)
    for k in range(len(c) - 2, -1, -1):
        out = out * z + c[k]
    return out if out.shape else complex(out)


def compose(f: PowerSeries, g: PowerSeries, out_degree: int | None = None) -> PowerSeries:
    """Truncated composition f(g(z)) by Horner's scheme.

    Default output degree is min(deg f, deg g); pass out_degree for an
    explicit budget.  Exact for polynomial f(g) below the truncation.
    """
    if out_degree is None:
        out_degree = min(f.degree, g.degree)
    fc = f.coeffs
    acc = PowerSeries(np.array([fc[-1]]))
    for k in range(len(fc) - 2, -1, -1):
        acc = acc.mul_trunc(g, out_degree)
        new = acc.coeffs.copy()
        new[0] += fc[k]
        acc = PowerSeries(new)
    return acc.pad(out_degree)


class Symbol:
    """Base class for analytic self-maps of the unit disk."""

    #: evaluable on |z| = 1 (analytic continuation across the boundary)
    boundary_ok = True

    @property
    def is_inner(self) -> bool:
        return False

    def _raw(self, z):
        raise NotImplementedError

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        mod = np.abs(z)
        if self.boundary_ok:
            if np.any(mod > 1.0 + _BOUNDARY_SLACK):
                raise PointOutsideDomain("symbol evaluation outside the closed disk")
        else:
            if np.any(mod > 1.0 - _BOUNDARY_SLACK):
                raise BoundaryEvalUnsupported(
                    "series symbols are only evaluable strictly inside the disk"
                )
        out = self._raw(z)
        return out if np.ndim(out) else complex(out)

    def taylor(self, n_max: int) -> np.ndarray:
        """Taylor coefficients at the origin through degree n_max."""
        raise NotImplementedError


@dataclass(frozen=True)
class Affine(Symbol):
    """z -> a z + b with |a| + |b| <= 1."""

    a: complex
    b: complex

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        if abs(self.a) + abs(self.b) > 1.0 + 1e-12:
            raise DomainError("affine symbol needs |a| + |b| <= 1")

    def _raw(self, z):
        return self.a * z + self.b

    def taylor(self, n_max):
        c = np.zeros(n_max + 1, dtype=complex)
        c[0] = self.b
        if n_max >= 1:
            c[1] = self.a
        return c


@dataclass(frozen=True)
class Automorphism(Symbol):
    """The involutive disk automorphism z -> (p - z) / (1 - conj(p) z)."""

    p: complex

    def __post_init__(self):
        object.__setattr__(self, "p", complex(self.p))
        if abs(self.p) >= 1:
            raise DomainError("automorphism parameter needs |p| < 1")

    @property
    def is_inner(self):
        return True

    def _raw(self, z):
        return (self.p - z) / (1.0 - np.conj(self.p) * z)

    def taylor(self, n_max):
        # (p - z) * sum (conj(p) z)^n  =>  c_0 = p, c_n = -(1-|p|^2) conj(p)^{n-1}
        c = np.zeros(n_max + 1, dtype=complex)
        c[0] = self.p
        if n_max >= 1:
            scale = 1.0 - abs(self.p) ** 2
            c[1:] = -scale * np.conj(self.p) ** np.arange(n_max)
        return c


@dataclass(frozen=True)
class Rotation(Symbol):
    """z -> e^{i angle} z; kept distinct from Affine for exact unitarity."""

    angle: float

    @property
    def is_inner(self):
        return True

    @property
    def factor(self) -> complex:
        return complex(np.exp(1j * float(self.angle)))

    def _raw(self, z):
        return self.factor * z

    def taylor(self, n_max):
        c = np.zeros(n_max + 1, dtype=complex)
        if n_max >= 1:
            c[1] = self.factor
        return c


def identity() -> Rotation:
    return Rotation(0.0)


@dataclass(frozen=True)
class Constant(Symbol):
    """z -> b with |b| < 1."""

    b: complex

    def __post_init__(self):
        object.__setattr__(self, "b", complex(self.b))
        if abs(self.b) >= 1:
            raise DomainError("constant symbol needs |b| < 1")

    def _raw(self, z):
        return np.full(np.shape(z), self.b, dtype=complex)

    def taylor(self, n_max):
        c = np.zeros(n_max + 1, dtype=complex)
        c[0] = self.b
        return c


@dataclass(frozen=True)
class Blaschke(Symbol):
    """Finite product of automorphism factors times a unimodular constant."""

    zeros: tuple
    factor: complex = 1.0 + 0.0j

    def __post_init__(self):
        zs = tuple(complex(z) for z in self.zeros)
        if any(abs(z) >= 1 for z in zs):
            raise DomainError("Blaschke zeros must lie strictly inside the disk")
        u = complex(self.factor)
        if abs(abs(u) - 1.0) > 1e-12:
            raise DomainError("Blaschke prefactor must be unimodular")
        object.__setattr__(self, "zeros", zs)
        object.__setattr__(self, "factor", u)

    @property
    def is_inner(self):
        return True

    def _raw(self, z):
        out = np.full(np.shape(z), self.factor, dtype=complex)
        for a in self.zeros:
            out = out * (a - z) / (1.0 - np.conj(a) * z)
        return out

    def taylor(self, n_max):
        acc = PowerSeries(np.array([self.factor]))
        for a in self.zeros:
            acc = acc.pad(n_max).mul_trunc(
                PowerSeries(Automorphism(a).taylor(n_max)), n_max
            )
        return acc.pad(n_max).coeffs


@dataclass(frozen=True)
class ZTimes(Symbol):
    """z -> z * inner(z); inner whenever the wrapped symbol is."""

    inner_symbol: Symbol

    @property
    def boundary_ok(self):
        return self.inner_symbol.boundary_ok

    @property
    def is_inner(self):
        return self.inner_symbol.is_inner

    def _raw(self, z):
        return z * self.inner_symbol._raw(z)

    def taylor(self, n_max):
        c = np.zeros(n_max + 1, dtype=complex)
        c[1:] = self.inner_symbol.taylor(n_max)[:n_max]
        return c


@dataclass(frozen=True, eq=False)
class SeriesSymbol(Symbol):
    """Self-map given only through its truncated Taylor coefficients.

    Carries no self-map certification; screen with self_map_check.
    """

    series: PowerSeries

    boundary_ok = False

    def __post_init__(self):
        if not isinstance(self.series, PowerSeries):
            object.__setattr__(self, "series", PowerSeries(np.asarray(self.series)))

    def _raw(self, z):
        return horner(self.series.coeffs, z)

    def taylor(self, n_max):
        return self.series.pad(n_max).coeffs


@dataclass(frozen=True)
class Composite(Symbol):
    """outer(inner(z))."""

    outer: Symbol
    inner: Symbol

    @property
    def boundary_ok(self):
        return self.outer.boundary_ok and self.inner.boundary_ok

    @property
    def is_inner(self):
        return self.outer.is_inner and self.inner.is_inner

    def _raw(self, z):
        return self.outer._raw(self.inner._raw(z))

    def taylor(self, n_max):
        return compose(
            PowerSeries(self.outer.taylor(n_max)),
            PowerSeries(self.inner.taylor(n_max)),
            out_degree=n_max,
        ).coeffs


def to_series(sym: Symbol, n_max: int) -> PowerSeries:
    """Taylor coefficients of the symbol at 0 through degree n_max."""
    if n_max < 0:
        raise DomainError("truncation degree must be >= 0")
    return PowerSeries(sym.taylor(n_max))


def automorphism_identity_check(p: complex, z: complex) -> tuple:
    """Both sides of 1 - |((p-z)/(1-conj(p)z))|^2
    = (1-|p|^2)(1-|z|^2)/|1-conj(p)z|^2."""
    p, z = complex(p), complex(z)
    if abs(p) >= 1 or abs(z) >= 1:
        raise DomainError("identity requires |p| < 1 and |z| < 1")
    lhs = 1.0 - abs(Automorphism(p)(z)) ** 2
    rhs = (1.0 - abs(p) ** 2) * (1.0 - abs(z) ** 2) / abs(1.0 - np.conj(p) * z) ** 2
    return lhs, rhs


@dataclass(frozen=True, eq=False)
class PolySymbol:
    """Map of the polydisc with truncated multivariate polynomial components.

    Each component maps multi-indices (tuples of length n) to coefficients.
    """

    n: int
    components: tuple

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("dimension must be >= 1")
        comps = []
        for comp in self.components:
            clean = {}
            for idx, coeff in dict(comp).items():
                key = tuple(int(i) for i in idx)
                if len(key) != self.n or any(i < 0 for i in key):
                    raise DomainError(f"bad multi-index {key} for dimension {self.n}")
                clean[key] = complex(coeff)
            comps.append(clean)
        if len(comps) != self.n:
            raise DomainError("need exactly one component per output coordinate")
        object.__setattr__(self, "components", tuple(comps))

    @classmethod
    def identity(cls, n: int) -> "PolySymbol":
        comps = []
        for i in range(n):
            idx = tuple(1 if j == i else 0 for j in range(n))
            comps.append({idx: 1.0})
        return cls(n, tuple(comps))

    def __call__(self, points):
        """Evaluate all components; points (m, n) -> values (m, n)."""
        pts = np.atleast_2d(np.asarray(points, dtype=complex))
        m = pts.shape[0]
        out = np.zeros((m, self.n), dtype=complex)
        for ci, comp in enumerate(self.components):
            acc = np.zeros(m, dtype=complex)
            for idx, coeff in comp.items():
                term = np.full(m, coeff, dtype=complex)
                for axis, power in enumerate(idx):
                    if power:
                        term = term * pts[:, axis] ** power
                acc += term
            out[:, ci] = acc
        return out

    def eval_point(self, point) -> tuple:
        return tuple(self(np.asarray([point]))[0])


@dataclass(frozen=True)
class SelfMapReport:
    sup_modulus: float
    worst_point: tuple
    passed: bool


def self_map_check(sym, grid_size: int = 64) -> SelfMapReport:
    """Screen the self-map property on a sample grid.

    Boundary-evaluable kinds are sampled on the unit circle (maximum
    modulus principle); series kinds just inside it.  Report-only:
    a verdict of False flags sup modulus > 1 + 1e-9.
    """
    if grid_size < 8:
        raise DomainError("grid_size must be >= 8")
    if isinstance(sym, PolySymbol):
        angles = 2.0 * np.pi * np.arange(grid_size) / grid_size
        axes = [np.exp(1j * angles)] * sym.n
        mesh = np.meshgrid(*axes, indexing="ij")
        pts = np.stack([m.ravel() for m in mesh], axis=1)
        vals = np.abs(sym(pts))
        flat = np.max(vals, axis=1)
        k = int(np.argmax(flat))
        sup = float(flat[k])
        worst = tuple(pts[k])
    else:
        radius = 1.0 if sym.boundary_ok else 1.0 - 1e-9
        angles = 2.0 * np.pi * np.arange(grid_size) / grid_size
        pts = radius * np.exp(1j * angles)
        vals = np.abs(sym._raw(pts))
        k = int(np.argmax(vals))
        sup = float(vals[k])
        worst = (complex(pts[k]),)
    return SelfMapReport(sup, worst, sup <= 1.0 + 1e-9)


def _json_complex(v) -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    raise DomainError(f"cannot parse complex value from {v!r}")


def symbol_from_json(obj: dict) -> Symbol:
    """Parse a symbol from its JSON object form (kind + parameters).

    Complex parameters are [re, im] pairs; z_times/composite nest symbols.
    """
    if not isinstance(obj, dict):
        raise DomainError("symbol JSON must be an object")
    kind = obj.get("kind")
    if kind == "affine":
        return Affine(_json_complex(obj["a"]), _json_complex(obj["b"]))
    if kind == "automorphism":
        return Automorphism(_json_complex(obj["p"]))
    if kind == "rotation":
        return Rotation(float(obj["angle"]))
    if kind == "constant":
        return Constant(_json_complex(obj["b"]))
    if kind == "blaschke":
        factor = _json_complex(obj.get("factor", 1.0))
        return Blaschke(tuple(_json_complex(z) for z in obj["zeros"]), factor)
    if kind == "z_times":
        return ZTimes(symbol_from_json(obj["inner"]))
    if kind == "series":
        return SeriesSymbol(PowerSeries(np.array([_json_complex(c) for c in obj["coeffs"]])))
    if kind == "composite":
        return Composite(symbol_from_json(obj["outer"]), symbol_from_json(obj["inner"]))
    raise DomainError(f"unknown symbol kind {kind!r}")
