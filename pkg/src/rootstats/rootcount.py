"""Certified counting of distinct real roots on intervals.

The primary counter is adaptive bisection with interval certificates:

* a subinterval is certified root-free when |p(mid)| exceeds half the
  width times a bound on max|p'| (the bound is the derivative majorant
  sum |a_j| j r^(j-1) at r = max endpoint magnitude, plus a rigorous
  floating-point evaluation-error allowance);
* a subinterval with a sign change at its endpoints is certified to
  hold exactly one root when the same certificate applied to p' shows
  p' has no zero there (monotonicity);
* anything else is split, down to a depth cap of 60, after which the
  subinterval is reported unresolved (counted as zero roots, with the
  result flagged uncertified).

Counts follow the half-open convention [a, b) so disjoint covers add
exactly.  Points with |t| > 1 are counted on the reciprocal polynomial
over the inverted interval, which keeps all evaluation inside [-1, 1].

Multiple roots (probability zero for continuous noise) generally come
back unresolved rather than miscounted; the exact Sturm oracle
:func:`sturm_exact` provides distinct-root ground truth for rational
data.  A vectorized engine, :func:`batch_count_interval`, applies the
same certificates to many coefficient rows at once for Monte Carlo use,
falling back to the scalar path for degenerate rows (exact zeros at
evaluation points, uncertifiable signs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from rootstats.ensembles import PolynomialSample

__all__ = [
    "RootCountResult",
    "count_certified",
    "count_split_reciprocal",
    "count_global",
    "count_companion",
    "sturm_exact",
    "global_root_bound",
    "batch_count_interval",
]

DEPTH_CAP = 60
_EPS = float(np.finfo(float).eps)
_NUDGE_LIMIT = 64
_CERT_SLACK = 1.0 + 4e-9


@dataclass(frozen=True)
class RootCountResult:
    """A count of distinct real roots on a half-open interval [a, b)."""

    count: int
    method: str
    certified: bool
    unresolved: tuple = ()

    def __post_init__(self):
        if self.certified and self.unresolved:
            raise ValueError("a certified count cannot carry unresolved intervals")


def _coeff_list(poly):
    coeffs = poly.coeffs if isinstance(poly, PolynomialSample) else poly
    out = [float(a) for a in coeffs]
    if not out or not any(a != 0.0 for a in out):
        raise ValueError("identically-zero polynomial rejected")
    return out


def _horner(coeffs, t):
    p = 0.0
    for a in reversed(coeffs):
        p = p * t + a
    return p


def _horner2(coeffs, t):
    p = dp = 0.0
    for a in reversed(coeffs):
        dp = dp * t + p
        p = p * t + a
    return p, dp


class _Ctx:
    """Per-polynomial evaluation context: majorants and error allowance."""

    def __init__(self, coeffs):
        self.coeffs = coeffs
        n = len(coeffs) - 1
        self.absc = [abs(a) for a in coeffs]
        self.maj1 = [abs(coeffs[j]) * j for j in range(1, n + 1)]
        self.maj2 = [abs(coeffs[j]) * j * (j - 1) for j in range(2, n + 1)]
        self.errfac = 4.0 * max(n, 1) * _EPS
        self.unresolved = []

    def evalerr(self, x):
        return self.errfac * _horner(self.absc, abs(x))

    def sign_ok(self, x, px):
        return math.isfinite(px) and abs(px) > self.evalerr(x)


def _inward_nonzero(ctx, x, toward):
    """First point stepping from x toward ``toward`` with p != 0."""
    for _ in range(_NUDGE_LIMIT):
        x = math.nextafter(x, toward)
        if (x >= toward) if toward > x else (x <= toward):
            return None, None
        px = _horner(ctx.coeffs, x)
        if px != 0.0:
            return x, px
    return None, None


def _resolve(ctx, u, v, pu, pv, depth):
    """Count certified roots in the open interval (u, v); pu, pv nonzero."""
    m = 0.5 * (u + v)
    if not (u < m < v) or depth >= DEPTH_CAP:
        ctx.unresolved.append((u, v))
        return 0
    pm, dpm = _horner2(ctx.coeffs, m)
    if not (math.isfinite(pm) and math.isfinite(dpm)):
        ctx.unresolved.append((u, v))
        return 0
    if pm == 0.0:
        lm, plm = _inward_nonzero(ctx, m, u)
        rm, prm = _inward_nonzero(ctx, m, v)
        if lm is None or rm is None:
            ctx.unresolved.append((u, v))
            return 1
        return (
            1
            + _resolve(ctx, u, lm, pu, plm, depth + 1)
            + _resolve(ctx, rm, v, prm, pv, depth + 1)
        )
    w = v - u
    r = max(abs(u), abs(v))
    schg = (pu > 0) != (pv > 0)
    b1 = _horner(ctx.maj1, r)
    if not schg and abs(pm) - ctx.evalerr(m) > 0.5 * w * b1 * _CERT_SLACK:
        return 0
    b2 = _horner(ctx.maj2, r)
    if abs(dpm) - ctx.errfac * b1 > 0.5 * w * b2 * _CERT_SLACK:
        return 1 if schg else 0
    if not ctx.sign_ok(m, pm):
        ctx.unresolved.append((u, v))
        return 0
    return _resolve(ctx, u, m, pu, pm, depth + 1) + _resolve(
        ctx, m, v, pm, pv, depth + 1
    )


def _scalar_count_flags(coeffs, u, v, incl_u, incl_v):
    """Count distinct roots on (u, v) plus included endpoint roots."""
    ctx = _Ctx(coeffs)
    count = 0
    pu = _horner(coeffs, u)
    pv = _horner(coeffs, v)
    if u >= v:
        if u == v and incl_u and incl_v and pu == 0.0:
            return 1, True, ()
        return 0, True, ()
    u0, v0 = u, v
    if pu == 0.0:
        if incl_u:
            count += 1
        u, pu = _inward_nonzero(ctx, u, v)
        if u is None:
            return count, False, ((u0, v0),)
    if pv == 0.0:
        if incl_v:
            count += 1
        v, pv = _inward_nonzero(ctx, v, u)
        if v is None:
            return count, False, ((u0, v0),)
    if u >= v:
        # the interval vanished while stepping off endpoint roots
        return count, True, ()
    if not (ctx.sign_ok(u, pu) and ctx.sign_ok(v, pv)):
        return count, False, ((u, v),)
    count += _resolve(ctx, u, v, pu, pv, 0)
    return count, not ctx.unresolved, tuple(ctx.unresolved)


def count_certified(s, I) -> RootCountResult:
    """Certified count of distinct real roots in the half-open [a, b).

    The interval must be bounded; route unbounded intervals through
    :func:`count_split_reciprocal` or :func:`count_global`.
    """
    a, b = I
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError(
            "count_certified requires a bounded interval; "
            "use count_split_reciprocal/count_global for unbounded ones"
        )
    if a > b:
        raise ValueError(f"empty interval with a > b: {I}")
    coeffs = _coeff_list(s)
    count, certified, unresolved = _scalar_count_flags(coeffs, a, b, True, False)
    return RootCountResult(count, "bisection-certified", certified, unresolved)


def _split_pieces(a, b):
    """Decompose [a, b) into counting atoms inside [-1, 1].

    Returns tuples (use_reciprocal, u, v, include_u, include_v); the
    reciprocal atoms count roots of t^n p(1/t) on the inverted range.
    """
    pieces = []
    u, v = max(a, -1.0), min(b, 1.0)
    if u < v:
        pieces.append((False, u, v, True, False))
    u2 = max(a, 1.0)
    if b > u2:
        lo = 0.0 if math.isinf(b) else 1.0 / b
        pieces.append((True, lo, 1.0 / u2, False, True))
    v3 = min(b, -1.0)
    if a < v3:
        hi = 0.0 if math.isinf(a) else 1.0 / a
        pieces.append((True, 1.0 / v3, hi, False, not math.isinf(a)))
    return pieces


def count_split_reciprocal(s, I) -> RootCountResult:
    """Count on an arbitrary (possibly unbounded) interval via the split at +-1.

    |t| <= 1 is counted directly; |t| > 1 is counted on the reciprocal
    polynomial over the inverted interval, so per-sample root
    reciprocity holds exactly and no evaluation leaves [-1, 1].
    """
    a, b = I
    if a > b:
        raise ValueError(f"empty interval with a > b: {I}")
    coeffs = _coeff_list(s)
    rev = coeffs[::-1]
    count, certified = 0, True
    unresolved = []
    for use_rec, u, v, iu, iv in _split_pieces(a, b):
        c, ok, bad = _scalar_count_flags(rev if use_rec else coeffs, u, v, iu, iv)
        count += c
        certified = certified and ok
        unresolved.extend(bad)
    return RootCountResult(count, "bisection-certified", certified, tuple(unresolved))


def count_global(s) -> RootCountResult:
    """Certified count of all real roots."""
    return count_split_reciprocal(s, (-math.inf, math.inf))


def global_root_bound(s) -> float:
    """Cauchy bound B = 1 + max |a_j/a_n|; all real roots lie in (-B, B)."""
    coeffs = _coeff_list(s)
    while coeffs and coeffs[-1] == 0.0:
        coeffs.pop()
    n = len(coeffs) - 1
    if n == 0:
        return 1.0
    an = abs(coeffs[-1])
    return 1.0 + max(abs(a) for a in coeffs[:-1]) / an


def count_companion(s, I) -> RootCountResult:
    """Root count from companion-matrix eigenvalues; cross-check only.

    Eigenvalues with |Im| <= 1e-8 (1 + |lambda|) are taken as real.
    Never authoritative: the result is always flagged uncertified.
    """
    a, b = I
    coeffs = np.asarray(_coeff_list(s))
    roots = np.roots(coeffs[::-1]) if len(coeffs) > 1 else np.array([])
    real = roots[np.abs(roots.imag) <= 1e-8 * (1.0 + np.abs(roots))]
    count = int(np.count_nonzero((real.real >= a) & (real.real < b)))
    return RootCountResult(count, "companion", False)


# ---------------------------------------------------------------------------
# exact Sturm oracle over rational arithmetic


def _frac_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _frac_rem(f, g):
    f = list(f)
    dg = len(g) - 1
    lead = g[-1]
    while len(f) - 1 >= dg and _frac_trim(f):
        df = len(f) - 1
        q = f[-1] / lead
        shift = df - dg
        for i in range(dg + 1):
            f[shift + i] -= q * g[i]
        f[-1] = Fraction(0)
        _frac_trim(f)
    return f


def _primitive_int(p):
    """Scale a rational polynomial by a positive constant to primitive ints."""
    den = 1
    for a in p:
        den = den * a.denominator // math.gcd(den, a.denominator)
    ints = [int(a * den) for a in p]
    g = 0
    for a in ints:
        g = math.gcd(g, abs(a))
    if g > 1:
        ints = [a // g for a in ints]
    return ints


def _sturm_chain(coeffs):
    """Sturm chain of the squarefree part, as primitive integer polynomials."""
    f = _frac_trim([Fraction(a) for a in coeffs])
    if not f:
        raise ValueError("identically-zero polynomial rejected")
    if len(f) == 1:
        return []
    df = [i * f[i] for i in range(1, len(f))]
    # squarefree part f / gcd(f, f')
    a, b = [Fraction(x) for x in _primitive_int(f)], [
        Fraction(x) for x in _primitive_int(df)
    ]
    while _frac_trim(list(b)):
        r = _frac_rem(a, b)
        if not _frac_trim(r):
            break
        a, b = b, [Fraction(x) for x in _primitive_int(r)]
    g = b  # gcd(f, f') up to constants
    if len(g) > 1:
        q, rem = _frac_divmod(f, g)
        f = q
    if len(f) == 1:
        return []
    f = [Fraction(x) for x in _primitive_int(f)]
    chain = [_primitive_int(f), _primitive_int([i * f[i] for i in range(1, len(f))])]
    while True:
        r = _frac_rem(
            [Fraction(x) for x in chain[-2]], [Fraction(x) for x in chain[-1]]
        )
        if not _frac_trim(r):
            break
        chain.append(_primitive_int([-x for x in r]))
    return chain


def _frac_divmod(f, g):
    f = list(f)
    dg = len(g) - 1
    lead = g[-1]
    q = [Fraction(0)] * max(len(f) - dg, 1)
    while len(f) - 1 >= dg and _frac_trim(f):
        df = len(f) - 1
        c = f[-1] / lead
        q[df - dg] = c
        for i in range(dg + 1):
            f[df - dg + i] -= c * g[i]
        f[-1] = Fraction(0)
        _frac_trim(f)
    return q, f


def _sign_at(ints, x: Fraction):
    """Sign of an integer polynomial at a rational point, exactly."""
    num, den = x.numerator, x.denominator
    v = ints[-1]
    dp = 1
    for a in reversed(ints[:-1]):
        dp *= den
        v = v * num + a * dp
    return (v > 0) - (v < 0)


def _variations(chain, x):
    signs = [s for s in (_sign_at(p, x) for p in chain) if s != 0]
    return sum(1 for s1, s2 in zip(signs, signs[1:]) if s1 != s2)


def sturm_exact(coeffs, I) -> int:
    """Distinct real roots in [a, b), by exact Sturm chains over rationals.

    Coefficients and endpoints must be exact (int, Fraction, or float,
    which is an exact binary rational).  Degrees above 512 are rejected
    as a cost guard.
    """
    a, b = I
    if isinstance(a, float) and not math.isfinite(a):
        raise ValueError("sturm_exact requires finite rational endpoints")
    if isinstance(b, float) and not math.isfinite(b):
        raise ValueError("sturm_exact requires finite rational endpoints")
    a, b = Fraction(a), Fraction(b)
    if a > b:
        raise ValueError(f"empty interval with a > b: {I}")
    work = _frac_trim([Fraction(c) for c in coeffs])
    if not work:
        raise ValueError("identically-zero polynomial rejected")
    if len(work) - 1 > 512:
        raise ValueError(
            f"degree {len(work) - 1} exceeds the exact-arithmetic guard of 512"
        )
    chain = _sturm_chain(work)
    if not chain:
        return 0
    head = chain[0]
    if a == b:
        return 0
    in_open_closed = _variations(chain, a) - _variations(chain, b)
    root_at_a = 1 if _sign_at(head, a) == 0 else 0
    root_at_b = 1 if _sign_at(head, b) == 0 else 0
    return in_open_closed + root_at_a - root_at_b


# ---------------------------------------------------------------------------
# vectorized batch counting (same certificates, many samples at once)

_GRID_CACHE: dict = {}
_POWER_CACHE: dict = {}


def _canonical_grid(n: int, beta: float = 1.5) -> np.ndarray:
    """Symmetric base grid on [-1, 1], geometrically refined toward +-1.

    Shell [2^-k-1, 2^-k] in s = 1 - |t| carries ~beta * 2^(k/2) points,
    matching the s^(3/2) certificate resolution scale, down past 1/(8n).
    """
    key = (n, beta)
    if key in _GRID_CACHE:
        return _GRID_CACHE[key]
    pts = {0.0, 1.0, -1.0}
    K = max(3, int(math.ceil(math.log2(8.0 * max(n, 1)))))
    for k in range(K + 1):
        hi = 2.0 ** -k
        lo = hi / 2.0
        m = max(4, int(math.ceil(beta * 2.0 ** (0.5 * k))))
        for i in range(m):
            s = hi - (hi - lo) * i / m
            pts.add(1.0 - s)
            pts.add(-(1.0 - s))
    lo = 2.0 ** -(K + 1)
    for frac in (0.5, 0.25):
        pts.add(1.0 - lo * frac)
        pts.add(-(1.0 - lo * frac))
    grid = np.array(sorted(pts))
    if len(_GRID_CACHE) > 8:
        _GRID_CACHE.clear()
    _GRID_CACHE[key] = grid
    return grid


def _power_matrices(evalpts: np.ndarray, n: int):
    """Power tables for the evaluation points: full, odd (mids), even (bounds)."""
    key = (n, len(evalpts), float(evalpts[0]), float(evalpts[-1]))
    hit = _POWER_CACHE.get(key)
    if hit is not None and np.array_equal(hit[0], evalpts):
        return hit[1]
    M = len(evalpts)
    W = np.broadcast_to(evalpts, (n + 1, M)).copy()
    W[0] = 1.0
    np.cumprod(W, axis=0, out=W)
    Wa = np.broadcast_to(np.abs(evalpts), (n + 1, M)).copy()
    Wa[0] = 1.0
    np.cumprod(Wa, axis=0, out=Wa)
    mats = (
        W,
        Wa,
        np.ascontiguousarray(W[:, 1::2]),
        np.ascontiguousarray(Wa[:, 0::2]),
    )
    if len(_POWER_CACHE) >= 2:
        _POWER_CACHE.pop(next(iter(_POWER_CACHE)))
    _POWER_CACHE[key] = (evalpts.copy(), mats)
    return mats


_REFINE_BLOCK = 1024


def _refine_eval(C, A, jv, jv2, rows, m, r):
    """(p(m), p'(m), majorants at r) for one block of (row, point) items."""
    n1 = C.shape[1]
    k = len(rows)
    G = C[rows]
    GA = A[rows]
    Wm = np.broadcast_to(m[:, None], (k, n1)).copy()
    Wm[:, 0] = 1.0
    np.cumprod(Wm, axis=1, out=Wm)
    Wr = np.broadcast_to(r[:, None], (k, n1)).copy()
    Wr[:, 0] = 1.0
    np.cumprod(Wr, axis=1, out=Wr)
    GW = G * Wm
    p = GW.sum(axis=1)
    dp = (GW * jv).sum(axis=1) / m
    GW = GA * Wr
    m0 = GW.sum(axis=1)
    m1 = (GW * jv).sum(axis=1)
    m2 = (GW * jv2).sum(axis=1)
    return p, dp, m0, m1, m2


def _batch_refine(C, A, items, counts, uncert, route, errfac):
    """BFS bisection refinement of unresolved cells, vectorized over items.

    items = (rows, u, v, pu, pv, depth).  Mutates counts/uncert/route.
    """
    n1 = C.shape[1]
    jv = np.arange(n1, dtype=float)
    jv2 = jv * (jv - 1.0)
    rows, u, v, pu, pv, depth = items
    while len(rows):
        keep = ~route[rows]
        rows, u, v, pu, pv, depth = (
            a[keep] for a in (rows, u, v, pu, pv, depth)
        )
        if not len(rows):
            break
        m = 0.5 * (u + v)
        dead = (m <= u) | (m >= v) | (depth >= DEPTH_CAP)
        if dead.any():
            uncert[rows[dead]] = True
            live = ~dead
            rows, u, v, pu, pv, depth, m = (
                a[live] for a in (rows, u, v, pu, pv, depth, m)
            )
            if not len(rows):
                break
        r = np.maximum(np.abs(u), np.abs(v))
        k = len(rows)
        p = np.empty(k)
        dp = np.empty(k)
        m0 = np.empty(k)
        m1 = np.empty(k)
        m2 = np.empty(k)
        for lo in range(0, k, _REFINE_BLOCK):
            sl = slice(lo, min(lo + _REFINE_BLOCK, k))
            p[sl], dp[sl], m0[sl], m1[sl], m2[sl] = _refine_eval(
                C, A, jv, jv2, rows[sl], m[sl], r[sl]
            )
        E = errfac * m0
        degenerate = (p == 0.0) | ~np.isfinite(p)
        if degenerate.any():
            route[rows[degenerate]] = True
        b1 = m1 / r
        b2 = m2 / (r * r)
        w = v - u
        schg = (pu > 0) != (pv > 0)
        clear = ~schg & (np.abs(p) - E > 0.5 * w * b1 * _CERT_SLACK)
        mono = np.abs(dp) - errfac * b1 > 0.5 * w * b2 * _CERT_SLACK
        one = schg & mono
        resolved = (one | clear | mono) & ~degenerate
        np.add.at(counts, rows[one & ~degenerate], 1)
        split = ~resolved & ~degenerate
        sign_bad = split & (np.abs(p) <= E)
        if sign_bad.any():
            route[rows[sign_bad]] = True
            split &= ~sign_bad
        rows = np.concatenate([rows[split], rows[split]])
        u, v, pu, pv = (
            np.concatenate([u[split], m[split]]),
            np.concatenate([m[split], v[split]]),
            np.concatenate([pu[split], p[split]]),
            np.concatenate([p[split], pv[split]]),
        )
        depth = np.concatenate([depth[split] + 1, depth[split] + 1])


_GRID_BETA = 1.25


def _batch_piece(mats, u, v, incl_u, incl_v):
    """Certified counts for every row on one piece inside [-1, 1].

    mats = (C, A, Cj, Aj, Ajj): the coefficient rows and their
    j-weighted absolute companions, already oriented for this piece.
    """
    C, A, Cj, Aj, Ajj = mats
    T, n1 = C.shape
    n = n1 - 1
    canon = _canonical_grid(n, _GRID_BETA)
    inner = canon[(canon > u) & (canon < v)]
    base = np.unique(np.concatenate([[u], inner, [v]]))
    if len(base) < 2:
        base = np.array([u, v])
    mids = 0.5 * (base[:-1] + base[1:])
    evalpts = np.empty(2 * len(base) - 1)
    evalpts[0::2] = base
    evalpts[1::2] = mids
    W, Wa, Wodd, Wae = _power_matrices(evalpts, n)
    P = C @ W
    M0 = A @ Wa
    Pdm = Cj @ Wodd  # p'(mid) * mid
    M1e = Aj @ Wae
    M2e = Ajj @ Wae
    errfac = 4.0 * max(n, 1) * _EPS

    counts = np.zeros(T, dtype=np.int64)
    uncert = np.zeros(T, dtype=bool)
    # rows needing the careful scalar treatment: an exact zero anywhere,
    # or a boundary sign too small to certify against evaluation error
    Pe = P[:, 0::2]
    route = (P == 0.0).any(axis=1) | ~np.isfinite(P).all(axis=1)
    route |= (np.abs(Pe) <= errfac * M0[:, 0::2]).any(axis=1)

    ncells = len(base) - 1
    if ncells:
        idx = np.arange(ncells)
        rpos = np.where(np.abs(base[:-1]) >= np.abs(base[1:]), idx, idx + 1)
        r = np.maximum(np.abs(base[rpos]), 1e-300)
        w = np.diff(base)
        B1 = M1e[:, rpos] / r
        B2 = M2e[:, rpos] / (r * r)
        Em = errfac * M0[:, 1::2]
        Pm = P[:, 1::2]
        schg = (Pe[:, :-1] > 0) != (Pe[:, 1:] > 0)
        clear = ~schg & (np.abs(Pm) - Em > 0.5 * w * B1 * _CERT_SLACK)
        mono = np.abs(Pdm / mids) - errfac * B1 > 0.5 * w * B2 * _CERT_SLACK
        one = schg & mono
        resolved = one | clear | (mono & ~schg)
        counts += (one & ~route[:, None]).sum(axis=1)
        pend = np.argwhere(~resolved & ~route[:, None])
        if len(pend):
            rows = pend[:, 0]
            cells = pend[:, 1]
            items = (
                rows.astype(np.int64),
                base[cells],
                base[cells + 1],
                Pe[rows, cells],
                Pe[rows, cells + 1],
                np.zeros(len(rows), dtype=np.int64),
            )
            _batch_refine(C, A, items, counts, uncert, route, errfac)

    certified = ~uncert
    if route.any():
        for row in np.flatnonzero(route):
            cnt, ok, _ = _scalar_count_flags(C[row].tolist(), u, v, incl_u, incl_v)
            counts[row] = cnt
            certified[row] = ok
    return counts, certified


def batch_count_interval(C: np.ndarray, I):
    """Certified root counts for many coefficient rows on one interval.

    C has one polynomial per row (ascending coefficients).  Returns
    (counts, certified) arrays; semantics identical to running
    :func:`count_split_reciprocal` row by row, at matrix-product speed.
    """
    a, b = I
    if a > b:
        raise ValueError(f"empty interval with a > b: {I}")
    C = np.ascontiguousarray(C, dtype=float)
    T, n1 = C.shape
    jv = np.arange(n1, dtype=float)
    counts = np.zeros(T, dtype=np.int64)
    certified = np.ones(T, dtype=bool)
    pieces = _split_pieces(a, b)
    for use_rec in (False, True):
        group = [p for p in pieces if p[0] == use_rec]
        if not group:
            continue
        Cg = np.ascontiguousarray(C[:, ::-1]) if use_rec else C
        A = np.abs(Cg)
        mats = (Cg, A, Cg * jv, A * jv, A * (jv * (jv - 1.0)))
        for _, u, v, iu, iv in group:
            c_i, ok_i = _batch_piece(mats, u, v, iu, iv)
            counts += c_i
            certified &= ok_i
    return counts, certified
