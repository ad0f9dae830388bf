"""Canonical reduction of g(z) e^{sigma z^d} dz modulo exact differentials.

Every Laurent polynomial coefficient reduces, in exact Gaussian-rational
arithmetic, to a combination of the basis forms z^j e^{sigma z^d} dz with
j = -1 .. d-2 plus d(F e^{sigma z^d}).  The single integration-by-parts
step in both directions is

    d(z^a e^{sigma z^d}) = (a z^{a-1} + sigma d z^{a+d-1}) e^{sigma z^d} dz

applied top-down for exponents >= d-1 and bottom-up for exponents <= -2.
Closed forms for the chain coefficients (the alpha/beta arrays) are kept as
a verified accessor; the recurrence itself is ground truth.

Convergent germs enter through a stored coefficient window plus a geometric
tail bound |g_{-k}| <= C R^k; the unknown tail contributes only to a per-
coefficient truncation error, never to point values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import EC_ZERO, ExactComplex, LaurentData, Poly
from .model import ExpDifferential, local_form


@dataclass
class ReductionResult:
    """Canonical coefficients, primitive, and rigorous tail error bounds.

    The identity  input = d(primitive * e^{sigma z^d}) + sum_j canonical[j]
    * z^j e^{sigma z^d} dz  holds exactly over the represented coefficient
    range; truncation_error[j] bounds the contribution of any unrepresented
    tail to canonical[j] (all zeros for tail-free input).
    """

    d: int
    sign: int
    canonical: dict
    primitive: LaurentData
    truncation_error: dict = field(default_factory=dict)

    def canonical_vector(self):
        """Coefficients ordered j = -1, 0, ..., d-2."""
        return [self.canonical.get(j, EC_ZERO) for j in range(-1, self.d - 1)]

    def error_vector(self):
        return [self.truncation_error.get(j, 0.0) for j in range(-1, self.d - 1)]

    def is_certified_zero(self):
        return all(not c for c in self.canonical.values()) and \
            all(e == 0.0 for e in self.truncation_error.values())


def _reduce_coeff_map(coeffs: dict, d: int, sign: int):
    """Chain reduction of a finite exponent->ExactComplex map."""
    work = {k: v for k, v in coeffs.items() if v}
    canonical = {j: EC_ZERO for j in range(-1, d - 1)}
    primitive = {}

    def add_prim(exp, val):
        primitive[exp] = primitive.get(exp, EC_ZERO) + val

    # positive side, top down
    for m in sorted((k for k in work if k >= d - 1), reverse=True):
        c = work.pop(m, EC_ZERO)
        if not c:
            continue
        add_prim(m - d + 1, c * Fraction(sign, d))
        if m - d + 1 > 0:
            drop = c * Fraction(-(m - d + 1) * sign, d)
            tgt = m - d
            if tgt >= d - 1:
                work[tgt] = work.get(tgt, EC_ZERO) + drop
            else:
                canonical[tgt] = canonical[tgt] + drop
    # negative side, bottom up
    chain = {k: v for k, v in work.items() if k <= -2}
    for k in chain:
        work.pop(k)
    while chain:
        m = min(chain)
        c = chain.pop(m)
        if not c:
            continue
        k = -m
        add_prim(-(k - 1), c * Fraction(-1, k - 1))
        lift = c * Fraction(sign * d, k - 1)
        tgt = d - k
        if tgt <= -2:
            chain[tgt] = chain.get(tgt, EC_ZERO) + lift
        else:
            canonical[tgt] = canonical[tgt] + lift
    # whatever is left sits in the canonical window already
    for m, c in work.items():
        if -1 <= m <= d - 2:
            canonical[m] = canonical[m] + c
        elif c:
            raise AssertionError(f"unreduced exponent {m}")
    canonical = {j: v for j, v in canonical.items()}
    return canonical, LaurentData(primitive)


def reduce_laurent(g, d: int, sign: int = 1) -> ReductionResult:
    """Reduce a tail-free Laurent polynomial coefficient exactly."""
    g = LaurentData.coerce(g)
    if g.tail is not None:
        raise ValueError("reduce_laurent needs tail-free input; use reduce_germ")
    if d < 1:
        raise ValueError("d must be >= 1")
    canonical, primitive = _reduce_coeff_map(g.coeffs, d, sign)
    return ReductionResult(d, sign, canonical, primitive,
                           {j: 0.0 for j in range(-1, d - 1)})


def reduce_poly(P, d: int, sign: int = 1) -> ReductionResult:
    """Reduce a polynomial coefficient; canonical part vanishes for d = 1."""
    P = Poly.coerce(P)
    return reduce_laurent(LaurentData({k: c for k, c in enumerate(P.coeffs)}), d, sign)


def min_tail_truncation(d: int, R: float) -> int:
    """Smallest admissible k0 with k0 - 1 > d * (2R)^d."""
    x = d * (2.0 * R) ** d
    return int(math.floor(x + 1.0)) + 1


def alpha_beta(j: int, k: int, d: int, sign: int = 1):
    """Closed-form chain coefficients for the reduction of z^{-k} e^{sigma z^d} dz.

    alpha(j, k): coefficient of z^{-j} in the primitive (j >= 1); nonzero only
    when k = j + 1 + m*d.  beta(j, k): canonical coefficient at exponent j in
    {-1..d-2}; nonzero only when k = (d - j) + m*d.  Values are exact
    rationals; both vanish off their arithmetic progressions.
    """
    if k < 2:
        raise ValueError("closed forms apply for k >= 2")
    alpha = Fraction(0)
    beta = Fraction(0)
    if j >= 1 and (k - j - 1) % d == 0 and k >= j + 1:
        m = (k - j - 1) // d
        val = Fraction(-1, j)
        for t in range(1, m + 1):
            val *= Fraction(sign * d, j + t * d)
        alpha = val
    if -1 <= j <= d - 2:
        jj = d - j
        if (k - jj) % d == 0 and k >= jj:
            m = (k - jj) // d
            val = Fraction(1)
            for t in range(0, m + 1):
                val *= Fraction(sign * d, jj - 1 + t * d)
            beta = val
    return alpha, beta


def reduce_germ(g: LaurentData, d: int, n_trunc: int, sign: int = 1) -> ReductionResult:
    """Reduce a convergent germ with tail bound (C, R).

    Stored coefficients with exponent >= -n_trunc reduce exactly; the unknown
    tail beyond the window is enclosed using |beta_{j,k}| <= (2R)^{-(k-k0)}
    for k >= k0 (geometric sum), with the finitely many k below k0 bounded by
    their exact closed-form values.
    """
    g = LaurentData.coerce(g)
    if g.tail is None:
        res = reduce_laurent(g, d, sign)
        return res
    C, R = g.tail
    k0 = min_tail_truncation(d, R)
    if n_trunc < k0:
        raise ValueError(
            f"truncation order {n_trunc} below the admissible minimum k0 = {k0}")
    stored_depth = -g.min_exp() if (g.min_exp() is not None and g.min_exp() < 0) else 0
    T = min(n_trunc, max(stored_depth, 0))
    window = {k: v for k, v in g.coeffs.items() if k >= -n_trunc}
    canonical, primitive = _reduce_coeff_map(window, d, sign)
    errors = {}
    for j in range(-1, d - 1):
        head = 0.0
        for k in range(T + 1, k0):
            _, b = alpha_beta(j, k, d, sign)
            head += abs(float(b)) * C * R ** k
        start = max(T + 1, k0)
        geo = C * (2.0 * R) ** k0 * 0.5 ** start / (1.0 - 0.5 ** d)
        errors[j] = head + geo
    return ReductionResult(d, sign, canonical, primitive, errors)


def reduce_differential(omega: ExpDifferential, n_trunc: int | None = None) -> ReductionResult:
    """Reduce a local differential in its own sign convention."""
    if not omega.type.is_local():
        raise ValueError("reduction applies to local differentials")
    lt = omega.type.local
    if omega.coeff.tail is None:
        return reduce_laurent(omega.coeff, lt.d, lt.sign)
    if n_trunc is None:
        depth = -omega.coeff.min_exp() if omega.coeff.coeffs else 0
        n_trunc = max(depth, min_tail_truncation(lt.d, omega.coeff.tail[1]))
    return reduce_germ(omega.coeff, lt.d, n_trunc, lt.sign)


def apply_primitive_derivative(primitive: LaurentData, d: int, sign: int) -> LaurentData:
    """The coefficient of d(F e^{sigma z^d}) = (F' + sigma d z^{d-1} F) e^{sigma z^d} dz."""
    deriv = primitive.derivative()
    shifted = LaurentData({k + d - 1: v * (sign * d) for k, v in primitive.coeffs.items()})
    return deriv + shifted


def roundtrip_residual(result: ReductionResult, g) -> LaurentData:
    """input - d(primitive e^h) - canonical part; exactly zero for tail-free input."""
    g = LaurentData.coerce(g)
    recon = apply_primitive_derivative(result.primitive, result.d, result.sign)
    recon = recon + LaurentData({j: c for j, c in result.canonical.items() if c})
    return LaurentData(g.coeffs) - recon


@dataclass
class ExactnessCertificate:
    """Outcome of a local exactness test.

    verdict is one of "exact", "not-exact", "undecided"; the certificate is
    the primitive when exact, otherwise the offending canonical coefficients.
    """

    verdict: str
    primitive: LaurentData | None = None
    nonzero: dict | None = None
    reduction: ReductionResult | None = None

    def __bool__(self):
        if self.verdict == "undecided":
            raise ValueError("exactness undecided at this truncation")
        return self.verdict == "exact"


def is_exact_local(omega: ExpDifferential, n_trunc: int | None = None) -> ExactnessCertificate:
    """Exactness of a local differential via canonical coefficients.

    True iff every canonical coefficient is zero; with a tail, coefficients
    whose point value is nonzero but smaller than the truncation error give
    an explicit "undecided" verdict rather than a guess.
    """
    res = reduce_differential(omega, n_trunc)
    nonzero = {}
    undecided = False
    for j in range(-1, res.d - 1):
        c = res.canonical.get(j, EC_ZERO)
        e = res.truncation_error.get(j, 0.0)
        if not c:
            continue
        if abs(c.to_complex()) > e:
            nonzero[j] = c
        else:
            undecided = True
    if nonzero:
        return ExactnessCertificate("not-exact", nonzero=nonzero, reduction=res)
    if undecided:
        return ExactnessCertificate("undecided", reduction=res)
    return ExactnessCertificate("exact", primitive=res.primitive, reduction=res)
