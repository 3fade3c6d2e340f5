"""Evaluation of samples, mean/variance functionals, and local geometry.

Everything here is a pure function of immutable inputs.  Evaluations
stay inside |t| <= 1 wherever possible: points beyond the unit circle
are routed through the reciprocal polynomial t^n p(1/t), carried in
sign + log-magnitude form so intermediate powers of t cannot overflow.
Variance sums spanning hundreds of orders of magnitude use max-term
scaling in the log domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from rootstats.ensembles import (
    CoefficientProfile,
    PolynomialSample,
    _falling_factorial,
)

__all__ = [
    "VarianceBundle",
    "LocalAnnulus",
    "eval_with_derivatives",
    "reciprocal_transform",
    "mean_derivatives",
    "variance_derivatives",
    "pqrs",
    "pqrs_arrays",
    "mean_arrays",
    "power_sum",
    "interval_Idelta",
    "enlargement",
]


@dataclass(frozen=True)
class VarianceBundle:
    """P = Var[r(t)], Q = Var[r'(t)], R = Cov[r(t), r'(t)], S = PQ - R^2.

    S is clamped to 0 when roundoff drives it slightly negative; the
    true value is nonnegative by Cauchy-Schwarz.
    """

    P: float
    Q: float
    R: float
    S: float


@dataclass(frozen=True)
class LocalAnnulus:
    """Annulus at distance ~delta inside the unit circle.

    For delta >= 1/(10n) the radii are (1-2*delta, 1-delta); below that
    scale the annulus collapses to the 1/(2n)-neighborhood of the circle.
    """

    delta: float
    n: int
    inner: float
    outer: float


# ---------------------------------------------------------------------------
# scalar Horner evaluation with reciprocal routing


def _horner012(coeffs, t: float):
    """Simultaneous Horner for p, p', p'' at a scalar point."""
    p = dp = ddp = 0.0
    for a in reversed(coeffs):
        ddp = ddp * t + dp
        dp = dp * t + p
        p = p * t + a
    return p, dp, 2.0 * ddp


def _slog(x: float):
    if x == 0.0:
        return 0, -math.inf
    return (1 if x > 0 else -1), math.log(abs(x))


def _slog_sum(terms):
    """Sum of signed-log terms [(sign, log|x|), ...] -> (sign, log|sum|)."""
    s, l = 0, -math.inf
    for s2, l2 in terms:
        if s2 == 0:
            continue
        if s == 0:
            s, l = s2, l2
        elif s == s2:
            l = np.logaddexp(l, l2)
        elif l2 > l:
            s, l = s2, l2 + math.log1p(-math.exp(l - l2))
        elif l2 < l:
            l = l + math.log1p(-math.exp(l2 - l))
        else:
            s, l = 0, -math.inf
    return s, l


def _slog_to_float(s: int, l: float) -> float:
    if s == 0:
        return 0.0
    if l > 709.0:
        return math.inf if s > 0 else -math.inf
    return s * math.exp(l)


def eval_with_derivatives(s: PolynomialSample, t: float, order: int = 2):
    """p(t), p'(t), p''(t) up to the requested order (0, 1, or 2).

    Inside the closed unit interval this is one simultaneous Horner
    pass.  For |t| > 1 the value is assembled from the reciprocal
    polynomial at 1/t in sign + log-magnitude form; a result whose
    magnitude exceeds the float range overflows to +-inf honestly.
    """
    if not math.isfinite(t):
        raise ValueError(f"evaluation point must be finite, got {t}")
    if not 0 <= order <= 2:
        raise ValueError("derivative order must be 0, 1, or 2")
    coeffs = s.coeffs
    n = len(coeffs) - 1
    if abs(t) <= 1.0 or n == 0:
        out = _horner012(coeffs, t)
        return out[: order + 1]
    u = 1.0 / t
    q, dq, ddq = _horner012(coeffs[::-1], u)
    slt = math.log(abs(t))
    st = 1 if t > 0 else -1
    sgn_tpow = lambda k: 1 if (st > 0 or k % 2 == 0) else -1

    def term(factor: float, power: int, base):
        sb, lb = base
        sf, lf = _slog(factor)
        if sf == 0 or sb == 0:
            return (0, -math.inf)
        return (sf * sb * sgn_tpow(power), lf + lb + power * slt)

    sq, sdq, sddq = _slog(q), _slog(dq), _slog(ddq)
    vals = [_slog_to_float(*term(1.0, n, sq))]
    if order >= 1:
        vals.append(
            _slog_to_float(
                *_slog_sum([term(float(n), n - 1, sq), term(-1.0, n - 2, sdq)])
            )
        )
    if order >= 2:
        vals.append(
            _slog_to_float(
                *_slog_sum(
                    [
                        term(float(n) * (n - 1), n - 2, sq),
                        term(-2.0 * (n - 1), n - 3, sdq),
                        term(1.0, n - 4, sddq),
                    ]
                )
            )
        )
    return tuple(vals)


def reciprocal_transform(s: PolynomialSample) -> PolynomialSample:
    """The reciprocal sample t^n p(1/t): coefficient order reversed."""
    return PolynomialSample(
        s.coeffs[::-1].copy(), s.profile_id + "*", s.seed, s.trial
    )


# ---------------------------------------------------------------------------
# mean and variance functionals of a profile


def _mean_coeffs(p: CoefficientProfile, k: int, reciprocal: bool) -> np.ndarray:
    b = p.b[::-1] if reciprocal else p.b
    if k == 0:
        return np.asarray(b, dtype=float)
    j = np.arange(p.n + 1 - k, dtype=float)
    return b[k:] * _falling_factorial(j, k)


def mean_derivatives(
    p: CoefficientProfile, t: float, k: int = 0, reciprocal: bool = False
) -> float:
    """k-th derivative of the mean polynomial m(t) = sum b_j t^j.

    With ``reciprocal`` set, the mean of the reciprocal polynomial
    (reversed b) is used instead.
    """
    if not 0 <= k <= 2:
        raise ValueError("derivative order must be 0, 1, or 2")
    if k > p.n:
        return 0.0
    d = _mean_coeffs(p, k, reciprocal)
    return float(_horner012(d, t)[0])


def mean_arrays(
    p: CoefficientProfile, ts: np.ndarray, k: int = 0, reciprocal: bool = False
) -> np.ndarray:
    """Vectorized :func:`mean_derivatives` over an array of points."""
    if k > p.n:
        return np.zeros_like(np.asarray(ts, dtype=float))
    d = _mean_coeffs(p, k, reciprocal)
    return npoly.polyval(np.asarray(ts, dtype=float), d)


def variance_derivatives(
    p: CoefficientProfile, t: float, k: int = 0, reciprocal: bool = False
) -> float:
    """Var[r^(k)(t)] = sum c_j^2 (j!/(j-k)!)^2 t^(2(j-k)), max-term scaled.

    Accumulation happens in the log domain with the largest term
    factored out, so profiles with coefficients spanning hundreds of
    orders of magnitude are summed without overflow (the final result
    may still be inf if it genuinely exceeds the float range).
    """
    if not 0 <= k <= 2:
        raise ValueError("derivative order must be 0, 1, or 2")
    if k > p.n:
        return 0.0
    c = p.c[::-1] if reciprocal else p.c
    j = np.arange(p.n + 1 - k, dtype=float)
    w = c[k:] * _falling_factorial(j, k)
    if t == 0.0:
        return float(w[0] ** 2)
    nz = w != 0.0
    if not np.any(nz):
        return 0.0
    logs = 2.0 * np.log(np.abs(w[nz])) + 2.0 * j[nz] * math.log(abs(t))
    m = logs.max()
    return float(math.exp(m) * np.exp(logs - m).sum()) if m <= 700.0 else math.inf


def pqrs(p: CoefficientProfile, t: float) -> VarianceBundle:
    """Variance bundle (P, Q, R, S) of (r(t), r'(t)) at a scalar point."""
    P, Q, R, S = (float(a) for a in pqrs_arrays(p, np.array([t])))
    return VarianceBundle(P, Q, R, S)


def pqrs_arrays(p: CoefficientProfile, ts: np.ndarray):
    """Vectorized (P, Q, R, S) over an array of points in [-1, 1].

    P = sum c_j^2 t^(2j), Q = sum c_j^2 j^2 t^(2j-2), R = sum c_j^2 j t^(2j-1);
    S = PQ - R^2 clamped to >= 0.  Points must satisfy |t| <= 1 + O(1/n)
    to stay in float range for large degrees; callers handle |t| > 1
    through the reciprocal profile.
    """
    ts = np.asarray(ts, dtype=float)
    c2 = p.c * p.c
    j = np.arange(p.n + 1, dtype=float)
    t2 = ts * ts
    P = npoly.polyval(t2, c2)
    if p.n == 0:
        Q = np.zeros_like(ts)
        R = np.zeros_like(ts)
    else:
        Q = npoly.polyval(t2, c2[1:] * (j[1:] ** 2))
        R = ts * npoly.polyval(t2, c2[1:] * j[1:])
    S = np.maximum(P * Q - R * R, 0.0)
    return P, Q, R, S


# ---------------------------------------------------------------------------
# power sums and interval geometry


def power_sum(n: int, alpha: float, beta: float, t: float):
    """(exact, asymptotic) for sum_{j=1}^n (n+1-j)^beta j^alpha t^j.

    The exact sum is accumulated in the log domain.  The asymptotic
    value is n^beta (1-t)^(-alpha-1) for t <= 1 - 1/n and n^(alpha+beta+1)
    within 1/n of t = 1 (branch constant 1); the comparison is only
    meaningful for t bounded away from 0.
    """
    if alpha <= -1 or beta <= -1:
        raise ValueError("alpha and beta must exceed -1")
    if not t > 0:
        raise ValueError("t must be positive")
    if n < 1:
        raise ValueError("n must be at least 1")
    j = np.arange(1, n + 1, dtype=float)
    logs = beta * np.log(n + 1 - j) + alpha * np.log(j) + j * math.log(t)
    m = logs.max()
    exact = float(math.exp(m) * np.exp(logs - m).sum()) if m <= 700 else math.inf
    if t <= 1.0 - 1.0 / n:
        asymptotic = n ** beta * (1.0 - t) ** (-alpha - 1.0)
    elif abs(1.0 - t) <= 1.0 / n:
        asymptotic = float(n) ** (alpha + beta + 1.0)
    else:
        raise ValueError(
            f"t={t} lies beyond 1 + 1/n; no asymptotic form applies"
        )
    return exact, asymptotic


def interval_Idelta(delta: float, n: int) -> LocalAnnulus:
    """The local annulus I(delta) for degree n."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    if n < 1:
        raise ValueError("n must be at least 1")
    if delta >= 1.0 / (10.0 * n):
        return LocalAnnulus(delta, n, 1.0 - 2.0 * delta, 1.0 - delta)
    half = 1.0 / (2.0 * n)
    return LocalAnnulus(delta, n, 1.0 - half, 1.0 + half)


def enlargement(I, n: int, factor: float = 1.0):
    """Extend each finite endpoint by factor * (|1 - |endpoint|| + 1/n)."""
    a, b = I
    if not a < b:
        raise ValueError(f"interval must be nonempty, got {I}")
    if factor < 0:
        raise ValueError("enlargement factor must be nonnegative")
    if math.isfinite(a):
        a = a - factor * (abs(1.0 - abs(a)) + 1.0 / n)
    if math.isfinite(b):
        b = b + factor * (abs(1.0 - abs(b)) + 1.0 / n)
    return (a, b)
