"""Coefficient ensembles for random polynomials and reproducible sampling.

A random polynomial here is p(t) = sum_{j=0}^n a_j t^j with independent
coefficients a_j = b_j + c_j * xi_j, where b_j is the mean, |c_j| the
standard deviation, and xi_j a standardized (mean-0, variance-1)
innovation.  A :class:`CoefficientProfile` stores the deterministic data
(n, b, c, rho); a :class:`NoiseSpec` picks the innovation family; and
:func:`sample` realizes one coefficient vector from a counter-based
random stream keyed by (seed, trial), so independent trials can be
generated concurrently and reproducibly in any order.

The validated growth contract is: b_j, c_j = O((1+j)^rho) with
|c_j| bounded below by a constant multiple of (1+j)^rho away from the
edges, for some rho > -1/2.  :func:`validate_condition` checks a profile
against its own declared rho by log-log regression.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "CoefficientProfile",
    "NoiseSpec",
    "PolynomialSample",
    "ConditionReport",
    "DegenerateSampleError",
    "hyperbolic_profile",
    "power_profile",
    "mixed_sign_profile",
    "derivative_profile",
    "hyperbolic_coefficient",
    "generalized_coefficient",
    "generalized_degree",
    "validate_condition",
    "innovations",
    "sample",
    "profile_to_json",
    "profile_from_json",
]

NOISE_FAMILIES = ("gaussian", "rademacher", "uniform", "two-point")

_SQRT3 = math.sqrt(3.0)


class DegenerateSampleError(ValueError):
    """Raised when a drawn coefficient vector is identically zero.

    Possible only for discrete noise aligned against the means; such a
    draw is rejected rather than counted as "every real is a root".
    """


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class CoefficientProfile:
    """Deterministic data (n, b, c, rho) defining one ensemble.

    b and c have length n+1; c must not be identically zero.  rho is the
    declared growth exponent; profiles claiming the growth contract must
    have rho > -1/2 (set ``claims_condition`` False for deliberately
    non-conforming profiles, e.g. in validator tests).
    """

    n: int
    b: np.ndarray
    c: np.ndarray
    rho: float
    family: str = "custom"
    claims_condition: bool = True

    def __post_init__(self):
        object.__setattr__(self, "b", _readonly(self.b))
        object.__setattr__(self, "c", _readonly(self.c))
        if self.n < 0:
            raise ValueError(f"degree must be nonnegative, got {self.n}")
        if len(self.b) != self.n + 1 or len(self.c) != self.n + 1:
            raise ValueError(
                f"b and c must have length n+1={self.n + 1}, "
                f"got {len(self.b)} and {len(self.c)}"
            )
        if not np.any(self.c != 0.0):
            raise ValueError("c must not be identically zero")
        if self.claims_condition and not self.rho > -0.5:
            raise ValueError(
                f"growth exponent rho must exceed -1/2, got {self.rho}"
            )

    @property
    def centered(self) -> bool:
        return not np.any(self.b != 0.0)

    @property
    def profile_id(self) -> str:
        h = hashlib.sha256()
        h.update(np.int64(self.n).tobytes())
        h.update(np.float64(self.rho).tobytes())
        h.update(self.b.tobytes())
        h.update(self.c.tobytes())
        return h.hexdigest()[:12]

    def with_zero_mean(self) -> "CoefficientProfile":
        """The centered companion profile (b zeroed, c kept)."""
        return CoefficientProfile(
            self.n, np.zeros(self.n + 1), self.c, self.rho,
            family=self.family + "-centered",
            claims_condition=self.claims_condition,
        )

    def scaled(self, lam: float) -> "CoefficientProfile":
        """Joint positive rescaling of (b, c); root statistics invariant."""
        if lam <= 0:
            raise ValueError("scale factor must be positive")
        return CoefficientProfile(
            self.n, lam * self.b, lam * self.c, self.rho,
            family=self.family, claims_condition=self.claims_condition,
        )

    def reciprocal(self) -> "CoefficientProfile":
        """Profile of the reciprocal polynomial t^n p(1/t): b, c reversed.

        The reversed sequences do not satisfy the original growth
        contract in general, so the result does not claim it.
        """
        return CoefficientProfile(
            self.n, self.b[::-1].copy(), self.c[::-1].copy(), self.rho,
            family=self.family + "*", claims_condition=False,
        )


@dataclass(frozen=True)
class NoiseSpec:
    """Innovation family for the coefficient noise.

    The raw variable eta_j has mean ``mu`` and variance exactly 1; the
    sampler uses the standardized innovation xi_j = eta_j - mu, so all
    families are moment-matched to second order by construction.  For
    the asymmetric two-point family, xi takes the value sqrt(q/p) with
    probability p and -sqrt(p/q) with probability q = 1-p.
    """

    family: str
    mu: float = 0.0
    two_point_p: float = 0.2

    def __post_init__(self):
        if self.family not in NOISE_FAMILIES:
            raise ValueError(
                f"unknown noise family {self.family!r}; "
                f"expected one of {NOISE_FAMILIES}"
            )
        if not 0.0 < self.two_point_p < 1.0:
            raise ValueError("two_point_p must lie strictly in (0, 1)")

    def third_abs_moment(self) -> float:
        """E|xi|^3, computed analytically per family.

        Finite for every family, which verifies the bounded-(2+eps)
        moment requirement with eps = 1.
        """
        if self.family == "gaussian":
            return 2.0 * math.sqrt(2.0 / math.pi)
        if self.family == "rademacher":
            return 1.0
        if self.family == "uniform":
            return 3.0 * _SQRT3 / 4.0
        p = self.two_point_p
        q = 1.0 - p
        return (q * q + p * p) / math.sqrt(p * q)


@dataclass(frozen=True)
class PolynomialSample:
    """One realized coefficient vector with its provenance."""

    coeffs: np.ndarray
    profile_id: str
    seed: int
    trial: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _readonly(self.coeffs))
        if not np.any(self.coeffs != 0.0):
            raise DegenerateSampleError(
                "identically-zero coefficient vector"
            )

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of checking a profile against its declared growth exponent."""

    passes: bool
    fitted_rho: float
    upper_constant: float
    lower_constant: float
    mean_constant: float
    violation_indices: tuple = field(default_factory=tuple)


# ---------------------------------------------------------------------------
# profile constructors


def hyperbolic_coefficient(L: float, j: int) -> float:
    """h_L(j) = L(L+1)...(L+j-1)/j!, evaluated without overflow.

    Direct product for small j (exact for small integer values),
    log-gamma form otherwise.
    """
    if L <= 0:
        raise ValueError(f"hyperbolic parameter L must be positive, got {L}")
    if j < 0:
        raise ValueError("index must be nonnegative")
    if j <= 512:
        h = 1.0
        for i in range(j):
            h *= (L + i) / (i + 1)
        return h
    return math.exp(math.lgamma(L + j) - math.lgamma(L) - math.lgamma(j + 1))


def hyperbolic_profile(L: float, n: int, mu: float = 0.0) -> CoefficientProfile:
    """Hyperbolic ensemble: c_j = sqrt(h_L(j)), b_j = mu * c_j.

    L = 1 gives the Kac ensemble (c identically 1).  The growth exponent
    is (L-1)/2.  Coefficients are evaluated in the log domain, so any
    degree representable in memory is safe from overflow.
    """
    if L <= 0:
        raise ValueError(f"hyperbolic parameter L must be positive, got {L}")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    j = np.arange(n + 1, dtype=float)
    from scipy.special import gammaln

    logc = 0.5 * (gammaln(L + j) - gammaln(L) - gammaln(j + 1.0))
    c = np.exp(logc)
    if L == 1.0:
        c = np.ones(n + 1)
    return CoefficientProfile(
        n, mu * c, c.copy(), (L - 1.0) / 2.0, family=f"hyperbolic(L={L:g})"
    )


def power_profile(
    n: int, rho: float, mu_scale: float = 0.0, rho_mean: float = 0.0
) -> CoefficientProfile:
    """Pure power-growth ensemble: c_j = (1+j)^rho, b_j = mu_scale*(1+j)^rho_mean."""
    if not rho > -0.5:
        raise ValueError(
            f"rho must exceed -1/2 for the growth condition to hold, got {rho}"
        )
    j1 = np.arange(1, n + 2, dtype=float)
    c = j1 ** rho
    b = mu_scale * j1 ** rho_mean
    return CoefficientProfile(n, b, c, rho, family=f"power(rho={rho:g})")


def mixed_sign_profile(
    n: int, rho: float, rho_prime: float, rho_dprime: float
) -> CoefficientProfile:
    """Parity-split means: b_j = (1+j)^rho' (even j), (1+j)^rho'' (odd j).

    Requires rho - 1/2 < rho' <= rho and rho'' < rho'; the even-index
    mean then dominates the noise near +-1 and the expected real-root
    count stays bounded.
    """
    if not rho > -0.5:
        raise ValueError(f"rho must exceed -1/2, got {rho}")
    if not (rho - 0.5 < rho_prime <= rho):
        raise ValueError(
            f"need rho - 1/2 < rho_prime <= rho, got rho={rho}, "
            f"rho_prime={rho_prime}"
        )
    if not rho_dprime < rho_prime:
        raise ValueError(
            f"need rho_dprime < rho_prime, got rho_dprime={rho_dprime}, "
            f"rho_prime={rho_prime}"
        )
    j1 = np.arange(1, n + 2, dtype=float)
    c = j1 ** rho
    b = np.where(np.arange(n + 1) % 2 == 0, j1 ** rho_prime, j1 ** rho_dprime)
    return CoefficientProfile(
        n, b, c, rho, family=f"mixed(rho={rho:g},{rho_prime:g},{rho_dprime:g})"
    )


def _falling_factorial(j: np.ndarray, k: int) -> np.ndarray:
    """(j+k)!/j! for each entry of j, exact for moderate k."""
    out = np.ones(len(j))
    if k <= 64:
        for i in range(1, k + 1):
            out *= j + i
        return out
    from scipy.special import gammaln

    return np.exp(gammaln(j + k + 1.0) - gammaln(j + 1.0))


def derivative_profile(p: CoefficientProfile, k: int) -> CoefficientProfile:
    """Profile of the k-th derivative: degree n-k, coefficients shifted.

    The j-th coefficient of p^(k) is a_{j+k} (j+k)!/j!, so the new mean
    and deviation sequences are the old ones shifted by k and multiplied
    by the falling factorial.  The growth exponent increases by k.
    """
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    if k > p.n:
        raise ValueError(f"derivative order {k} exceeds degree {p.n}")
    if k == 0:
        return p
    j = np.arange(p.n + 1 - k, dtype=float)
    w = _falling_factorial(j, k)
    return CoefficientProfile(
        p.n - k, p.b[k:] * w, p.c[k:] * w, p.rho + k,
        family=p.family + f"'{k}",
        claims_condition=p.claims_condition,
    )


def generalized_coefficient(terms, j: int) -> float:
    """Finite linear combination sum_i w_i * h_{L_i}(j) of hyperbolic weights."""
    terms = list(terms)
    if not terms:
        raise ValueError("term list must not be empty")
    return math.fsum(w * hyperbolic_coefficient(L, j) for (w, L) in terms)


def generalized_degree(terms) -> float:
    """Degree of the combination: L_max - 1 (comparable to j^degree)."""
    terms = list(terms)
    if not terms:
        raise ValueError("term list must not be empty")
    for _, L in terms:
        if L <= 0:
            raise ValueError("all hyperbolic parameters must be positive")
    return max(L for _, L in terms) - 1.0


# ---------------------------------------------------------------------------
# growth-condition validation


def validate_condition(p: CoefficientProfile, j0: int = 8) -> ConditionReport:
    """Check |c_j| ~ (1+j)^rho on the window j0 <= j <= n-j0 by regression.

    Fits log|c_j| against log(1+j) with least squares.  Passes when the
    fitted slope is within 0.05 of the declared rho, every pointwise
    log-residual is below 0.75, and the implied constants are positive
    and finite.  Indices with c_j = 0 (or residual beyond the bound) are
    reported as violations.
    """
    if p.n < 2 * j0 + 2:
        raise ValueError(
            f"degree {p.n} too small for window offset j0={j0}"
        )
    js = np.arange(j0, p.n - j0 + 1)
    cwin = np.abs(p.c[js])
    violations = [int(j) for j in js[cwin == 0.0]]
    ok = cwin > 0.0
    if not np.any(ok):
        return ConditionReport(
            False, math.nan, math.inf, 0.0, math.inf, tuple(violations)
        )
    x = np.log1p(js[ok].astype(float))
    y = np.log(cwin[ok])
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    upper = float(np.exp(intercept + resid.max()))
    lower = float(np.exp(intercept + resid.min()))
    violations += [int(j) for j in js[ok][np.abs(resid) > 0.75]]
    mean_constant = float(
        np.max(np.abs(p.b[js]) / (1.0 + js) ** p.rho, initial=0.0)
    )
    passes = (
        abs(slope - p.rho) <= 0.05
        and not violations
        and lower > 0.0
        and math.isfinite(upper)
        and math.isfinite(mean_constant)
        and slope > -0.5
    )
    return ConditionReport(
        bool(passes), float(slope), upper, lower, mean_constant,
        tuple(sorted(set(violations))),
    )


# ---------------------------------------------------------------------------
# sampling


def innovations(noise: NoiseSpec, seed: int, trial: int, count: int) -> np.ndarray:
    """Standardized innovation vector for (seed, trial), counter-based.

    The stream is a Philox generator keyed directly by (seed, trial), so
    any trial's innovations can be produced independently of all others;
    identical inputs give bit-identical output.
    """
    if trial < 0:
        raise ValueError("trial index must be nonnegative")
    key = np.array(
        [np.uint64(seed & 0xFFFFFFFFFFFFFFFF), np.uint64(trial)],
        dtype=np.uint64,
    )
    g = np.random.Generator(np.random.Philox(key=key))
    if noise.family == "gaussian":
        return g.standard_normal(count)
    if noise.family == "rademacher":
        return 2.0 * g.integers(0, 2, size=count).astype(float) - 1.0
    if noise.family == "uniform":
        return g.uniform(-_SQRT3, _SQRT3, size=count)
    p = noise.two_point_p
    q = 1.0 - p
    hi = math.sqrt(q / p)
    lo = -math.sqrt(p / q)
    return np.where(g.random(count) < p, hi, lo)


def sample(
    p: CoefficientProfile, noise: NoiseSpec, seed: int, trial: int = 0
) -> PolynomialSample:
    """Draw one realization a_j = b_j + c_j * xi_j.

    Deterministic in (profile, noise, seed, trial).  Raises
    :class:`DegenerateSampleError` if the drawn vector is identically
    zero (probability zero for continuous noise).
    """
    xi = innovations(noise, seed, trial, p.n + 1)
    coeffs = p.b + p.c * xi
    return PolynomialSample(coeffs, p.profile_id, seed, trial)


# ---------------------------------------------------------------------------
# serialization


def profile_to_json(p: CoefficientProfile) -> str:
    """Serialize to a flat JSON document; floats round-trip exactly."""
    return json.dumps(
        {
            "n": p.n,
            "rho": p.rho,
            "b": p.b.tolist(),
            "c": p.c.tolist(),
            "family": p.family,
            "claims_condition": p.claims_condition,
        }
    )


def profile_from_json(doc: str) -> CoefficientProfile:
    d = json.loads(doc)
    return CoefficientProfile(
        int(d["n"]),
        np.array(d["b"], dtype=float),
        np.array(d["c"], dtype=float),
        float(d["rho"]),
        family=d.get("family", "custom"),
        claims_condition=bool(d.get("claims_condition", True)),
    )
