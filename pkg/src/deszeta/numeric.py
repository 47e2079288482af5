"""Floating-point analytic machinery for the desingularized double zeta.

Continuation strategy: everything is built on a single Euler-Maclaurin
Hurwitz-zeta kernel.  The double zeta is reduced to an outer sum of Hurwitz
values; its tail is accelerated by substituting the asymptotic expansion of
the inner Hurwitz zeta and re-expanding binomially, which turns the tail
into a finite combination of shifted Hurwitz values.  At points on (or
near) the singular hyperplanes of the individual terms, the desingularized
combination is recovered by shifting along a generic direction and Neville
extrapolation in the shift size; the combination itself is entire, so the
limit exists and low-order polynomial extrapolation converges quickly.

All arithmetic is double precision; tolerances below are set for it.
"""

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .exact import bernoulli_number, bernoulli_polynomial, binomial

__all__ = [
    "EvalResult",
    "SingularityReport",
    "SingularPointError",
    "ContinuationReachError",
    "ToleranceError",
    "hurwitz_zeta",
    "riemann_zeta",
    "double_zeta",
    "double_zeta_direct",
    "desing1",
    "desing2",
    "singularity_distance",
    "neville_extrapolate",
]

_GOLDEN = (1 + math.sqrt(5)) / 2


@dataclass
class EvalResult:
    value: complex
    err_estimate: float
    method: str

    def to_json(self):
        return {
            "value": {"re": self.value.real, "im": self.value.imag},
            "err_estimate": self.err_estimate,
            "method": self.method,
        }


@dataclass
class SingularityReport:
    hyperplane: str
    distance: float


class SingularPointError(ValueError):
    """The query point is (numerically) on a singular hyperplane."""

    def __init__(self, report):
        super().__init__(
            "point lies on singular hyperplane %s (distance %g)"
            % (report.hyperplane, report.distance)
        )
        self.report = report


class ContinuationReachError(ValueError):
    """The truncated continuation cannot reach the requested point."""


class ToleranceError(ArithmeticError):
    """The requested tolerance could not be met."""


_BERN_FLOAT = []


def _bern_float(n):
    while len(_BERN_FLOAT) <= n:
        _BERN_FLOAT.append(float(bernoulli_number(len(_BERN_FLOAT))))
    return _BERN_FLOAT[n]


def _precision_override():
    """Decimal digits requested via DESING_PRECISION, if usable.

    Returns 0 when the variable is unset, malformed, not above double
    precision, or mpmath is unavailable; callers then use the built-in
    double-precision kernel.
    """
    raw = os.environ.get("DESING_PRECISION")
    if not raw:
        return 0
    try:
        dps = int(raw)
    except ValueError:
        return 0
    if dps <= 16:
        return 0
    try:
        import mpmath  # noqa: F401
    except ImportError:
        return 0
    return dps


def _pochhammer_c(s, k):
    out = 1.0 + 0j
    for i in range(k):
        out *= s + i
    return out


def hurwitz_zeta(s, a, tol=1e-14):
    """Hurwitz zeta continued in s by Euler-Maclaurin summation.

    Partial sum to N, boundary terms, and Bernoulli corrections; N and the
    correction order are raised until the first omitted correction is below
    tol.  Requires s != 1 and Re a > 0.
    """
    s = complex(s)
    a = complex(a)
    if s == 1:
        raise SingularPointError(SingularityReport("s=1", 0.0))
    if a.real <= 0:
        raise ValueError("Hurwitz zeta requires Re a > 0")

    if (
        s.imag == 0
        and a.imag == 0
        and s.real == round(s.real)
        and s.real <= 0
    ):
        # exactly integral non-positive s: the value is a Bernoulli
        # polynomial, computable in exact rational arithmetic
        n = int(-s.real)
        value = -Fraction(bernoulli_polynomial(n + 1, Fraction(a.real)), n + 1)
        out = float(value)
        return EvalResult(complex(out), abs(out) * 2e-16 + 1e-300, "bernoulli_polynomial")

    dps = _precision_override()
    if dps:
        import mpmath

        with mpmath.workdps(dps):
            value = complex(mpmath.zeta(mpmath.mpc(s), mpmath.mpc(a)))
        return EvalResult(value, abs(value) * 10.0 ** (-dps) + 1e-300, "mpmath")

    smod = abs(s)
    if s.real < 0.5:
        # For Re s < 0 the partial sum grows like (a+N)^{1-Re s}, so a large
        # N destroys the final cancellation in double precision; start from
        # N = 0 and only grow N if the correction series fails to converge.
        ladder = (0, 2, 4, 8, 16, 32, 64, 128, 256, 512)
    else:
        ladder = (16, 32, 64, 128, 256, 512)
    for N in ladder:
        if s.real >= 0.5 and N <= smod / 2 and N < 512:
            continue
        x = a + N
        total = sum((a + n) ** (-s) for n in range(N))
        total += x ** (1 - s) / (s - 1)
        total += 0.5 * x ** (-s)
        prev = math.inf
        err = math.inf
        for k in range(1, 40):
            term = (
                _bern_float(2 * k)
                / math.factorial(2 * k)
                * _pochhammer_c(s, 2 * k - 1)
                * x ** (-s - 2 * k + 1)
            )
            mag = abs(term)
            if mag > prev:
                err = mag  # asymptotic series started diverging
                break
            total += term
            prev = mag
            if mag < tol * max(1.0, abs(total)):
                err = mag
                break
        if err < tol * max(1.0, abs(total)):
            return EvalResult(total, err, "euler_maclaurin")
    return EvalResult(total, err, "euler_maclaurin")


def riemann_zeta(s, tol=1e-14):
    """Riemann zeta via the Hurwitz kernel at a = 1."""
    return hurwitz_zeta(s, 1.0, tol)


def singularity_distance(s1, s2, depth=40):
    """Distance of (s1, s2) to the singular locus of the double zeta:
    s2 = 1 and s1 + s2 in {2, 1, 0, -2, -4, ...} (down to -depth)."""
    s1 = complex(s1)
    s2 = complex(s2)
    best = SingularityReport("s2=1", abs(s2 - 1))
    w = s1 + s2
    levels = [2, 1, 0] + list(range(-2, -depth - 1, -2))
    for v in levels:
        d = abs(w - v) / math.sqrt(2)
        if d < best.distance:
            best = SingularityReport("s1+s2=%d" % v, d)
    return best


def _is_nonpositive_int(z, eps=1e-12):
    z = complex(z)
    n = round(z.real)
    if n <= 0 and abs(z - n) < eps:
        return -n
    return None


def double_zeta(s1, s2, gamma1=1.0, gamma2=1.0, tol=1e-10, j_max=16):
    """Generalized Euler-Zagier double zeta, analytically continued.

    The evaluation point must stay off the singular hyperplanes.  When s2
    is a non-positive integer the inner Hurwitz zeta collapses to a
    Bernoulli polynomial and the value reduces exactly to a finite
    combination of single zetas; otherwise the outer sum is split into a
    Hurwitz head and a binomially re-expanded Euler-Maclaurin tail.
    """
    s1 = complex(s1)
    s2 = complex(s2)
    g1 = complex(gamma1)
    g2 = complex(gamma2)
    if g1.real <= 0 or g2.real <= 0:
        raise ValueError("weights must have positive real part")
    report = singularity_distance(s1, s2)
    if report.distance < 1e-9:
        raise SingularPointError(report)

    beta = g1 / g2
    n = _is_nonpositive_int(s2)
    if n is not None:
        return _double_zeta_polynomial(s1, n, g1, g2, beta, tol)
    if (s1 + s2).real <= 2 - j_max:
        raise ContinuationReachError(
            "Re(s1+s2)=%g beyond continuation reach" % (s1 + s2).real
        )
    return _double_zeta_tail(s1, s2, g1, g2, beta, tol, j_max)


def _double_zeta_polynomial(s1, n, g1, g2, beta, tol):
    # zeta(-n, 1 + beta m) = -B_{n+1}(1 + beta m)/(n+1); expanding the
    # Bernoulli polynomial in powers of m leaves single zetas of s1 - i.
    total = 0j
    err = 0.0
    for i in range(n + 2):
        b = float((-1) ** (n + 1 - i) * bernoulli_number(n + 1 - i))  # B_j(1)
        coeff = binomial(n + 1, i) * b * beta**i
        if coeff == 0:
            continue
        arg = s1 - i
        z = hurwitz_zeta(arg, 1.0, tol)
        total += coeff * z.value
        err += abs(coeff) * z.err_estimate
    scale = -(g2**n) / (n + 1) * g1 ** (-s1)
    return EvalResult(scale * total, abs(scale) * err, "polynomial_reduction")


def _double_zeta_tail(s1, s2, g1, g2, beta, tol, j_max):
    # Head length: the binomial re-expansion needs |beta (M+1)| comfortably
    # above 1 and the asymptotic expansion of the inner zeta must be valid at
    # x = 1 + beta(M+1).  Keep M as small as those constraints allow: the
    # rounding-noise floor of the head/tail cancellation grows like a power
    # of M, and it dominates the error at deeply negative weights.
    K = 10
    M = max(
        8,
        int(math.ceil(2.0 / abs(beta))),
        int(math.ceil((abs(s2) + 2 * K + 2) / (2 * math.pi) / abs(beta))),
    )
    pref = g1 ** (-s1) * g2 ** (-s2)

    head = 0j
    err = 0.0
    for m in range(1, M + 1):
        z = hurwitz_zeta(s2, 1 + beta * m, min(tol * 1e-2, 1e-15))
        head += (m * g1) ** (-s1) * g2 ** (-s2) * z.value
        err += abs((m * g1) ** (-s1) * g2 ** (-s2)) * z.err_estimate

    # asymptotic expansion of the inner zeta at x = 1 + beta m:
    # sum over branches w with x^{-w}; branch list (w, c_w)
    branches = [(s2 - 1, 1.0 / (s2 - 1)), (s2, 0.5 + 0j)]
    for k in range(1, K + 1):
        c = _bern_float(2 * k) / math.factorial(2 * k) * _pochhammer_c(s2, 2 * k - 1)
        branches.append((s2 + 2 * k - 1, c))
    x0 = abs(1 + beta * (M + 1))
    # magnitude of the first omitted asymptotic order, as the tail error proxy
    k = K + 1
    err += (
        abs(_bern_float(2 * k) / math.factorial(2 * k) * _pochhammer_c(s2, 2 * k - 1))
        * x0 ** (-(s2.real) - 2 * k + 1)
        * abs(pref)
        * (M + 1) ** (-s1.real)
    )

    # collect by the integer offset p: all branch/binomial products with the
    # same total shift hit the same zeta argument s1 + s2 - 1 + p, and the
    # grouped coefficient is what cancels at the regular integer offsets
    ratio = 1.0 / abs(beta * (M + 1))
    groups = {}
    for w, c in branches:
        delta = round((w - (s2 - 1)).real)  # exact integer by construction
        bin_c = 1.0 + 0j
        for j in range(j_max + 1):
            if j > 0:
                bin_c *= (-w - (j - 1)) / j
            p = delta + j
            contrib = c * bin_c
            if abs(contrib) * ratio**j < 1e-305:
                break
            groups[p] = groups.get(p, 0j) + contrib
        # binomial truncation proxy for this branch
        err += abs(c * bin_c) * ratio ** (j_max + 1) * abs(pref) * x0 ** (-(w.real))

    tail = 0j
    base = s1 + s2 - 1
    scale = beta ** (1 - s2)
    for p in sorted(groups):
        coeff = groups[p] * scale * beta ** (-p)
        arg = base + p
        if abs(arg - 1) < 1e-9:
            if abs(coeff) < 1e-9 * max(1.0, abs(scale)):
                continue  # grouped coefficient cancels at the pole
            raise SingularPointError(SingularityReport("tail term at s=1", 0.0))
        z = hurwitz_zeta(arg, M + 1, min(tol * 1e-2, 1e-15))
        tail += coeff * z.value
        err += abs(coeff) * z.err_estimate
    return EvalResult(head + pref * tail, err, "euler_maclaurin")


def double_zeta_direct(s1, s2, gamma1=1.0, gamma2=1.0, m_max=2000, n_tail=400):
    """Brute-force double sum in the absolutely convergent region.

    Independent oracle: inner sums are truncated with an integral-bracket
    midpoint tail, never touching the Euler-Maclaurin machinery.
    """
    s1 = complex(s1)
    s2 = complex(s2)
    g1 = complex(gamma1)
    g2 = complex(gamma2)
    if s2.real <= 1 or (s1 + s2).real <= 2:
        raise ValueError("direct summation requires the convergent region")
    total = 0j
    last = 0.0
    for m in range(1, m_max + 1):
        inner = 0j
        base = m * g1
        for n in range(1, n_tail + 1):
            inner += (base + n * g2) ** (-s2)
        # bracket sum_{n > n_tail} f(n) between the two integrals and take the midpoint
        edge = base + n_tail * g2
        upper = edge ** (1 - s2) / ((s2 - 1) * g2)
        lower = (edge + g2) ** (1 - s2) / ((s2 - 1) * g2)
        inner += (upper + lower) / 2
        term = base ** (-s1) * inner
        total += term
        last = abs(term)
    # outer terms decay like m^{-w} with w = Re(s1+s2) - 1 > 1; bound the
    # dropped tail by the integral comparison
    w = (s1 + s2).real - 1
    err = last * m_max / (w - 1)
    return EvalResult(total, err, "direct_sum")


def desing1(s):
    """Desingularized single zeta: (1 - s) zeta(s), entire; -1 at s = 1."""
    s = complex(s)
    if abs(s - 1) < 1e-14:
        return EvalResult(-1.0 + 0j, 0.0, "polynomial_reduction")
    z = riemann_zeta(s)
    return EvalResult((1 - s) * z.value, abs(1 - s) * z.err_estimate, z.method)


_DESING2_TERMS = (
    # (coefficient as a function of (s1, s2), argument shift (m1, m2))
    (lambda s1, s2: (s1 - 1) * (s2 - 1), (0, 0)),
    (lambda s1, s2: s2 * (s2 + 1 - s1), (-1, 1)),
    (lambda s1, s2: -s2 * (s2 + 1), (-2, 2)),
)


def _desing2_combination(s1, s2, g1, g2, tol):
    total = 0j
    err = 0.0
    for coeff_fn, (m1, m2) in _DESING2_TERMS:
        c = coeff_fn(s1, s2)
        z = double_zeta(s1 + m1, s2 + m2, g1, g2, tol)
        total += c * z.value
        err += abs(c) * z.err_estimate
    return total, err


def _desing2_evaluable(s1, s2, j_max=16):
    for _, (m1, m2) in _DESING2_TERMS:
        a1, a2 = s1 + m1, s2 + m2
        if singularity_distance(a1, a2).distance < 1e-6:
            return False
        if _is_nonpositive_int(a2) is None and (a1 + a2).real <= 2 - j_max:
            return False
    return True


def neville_extrapolate(xs, ys):
    """Neville polynomial extrapolation of (xs, ys) to x = 0.

    Returns (limit, last_correction) where the correction is the change in
    the final diagonal step.
    """
    n = len(xs)
    p = list(ys)
    prev_diag = p[0]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            p[i] = (xs[i - j] * p[i] - xs[i] * p[i - 1]) / (xs[i - j] - xs[i])
        correction = abs(p[n - 1] - prev_diag)
        prev_diag = p[n - 1]
    return p[n - 1], correction


def desing2(s1, s2, gamma1=1.0, gamma2=1.0, tol=1e-9, eps0=1.0 / 64, levels=7):
    """Desingularized double zeta via the entire three-term combination.

    Off the singular hyperplanes of the individual terms the combination is
    summed directly.  On or near them the point is approached along the
    generic direction (1, 1/golden_ratio) with geometrically shrinking
    shifts and the limit taken by Neville extrapolation; entireness of the
    combination guarantees the limit exists.
    """
    s1 = complex(s1)
    s2 = complex(s2)
    g1 = complex(gamma1)
    g2 = complex(gamma2)
    if g1.real <= 0 or g2.real <= 0:
        raise ValueError("weights must have positive real part")
    if _desing2_evaluable(s1, s2):
        total, err = _desing2_combination(s1, s2, g1, g2, tol)
        return EvalResult(total, err, "euler_maclaurin")

    d1, d2 = 1.0, 1.0 / _GOLDEN
    xs, ys = [], []
    worst = None
    for k in range(levels):
        eps = eps0 * 2.0**-k
        p1, p2 = s1 + eps * d1, s2 + eps * d2
        if not _desing2_evaluable(p1, p2):
            worst = (p1, p2)
            continue
        total, _ = _desing2_combination(p1, p2, g1, g2, tol)
        xs.append(eps)
        ys.append(total)
    if len(xs) < 4:
        raise ToleranceError(
            "extrapolation grid unusable; worst shifted point %r" % (worst,)
        )
    value, correction = neville_extrapolate(xs, ys)
    return EvalResult(value, correction, "extrapolated")
