"""Exact and floating coefficient arithmetic.

Two regimes coexist and never mix silently: Gaussian-rational arithmetic
(`ExactComplex`, `Poly`, `RationalFunction`, `LaurentData`) for everything
that must be machine-checkable to zero residual, and ordinary complex
doubles for quadrature and special-function work.  Conversion is explicit
via ``to_complex`` / ``float_coeffs``.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.special

# Taylor order cap for exponential-factor expansions (explicit error beyond).
EXP_SERIES_ORDER = 64
# Root clustering tolerance for the numeric partial-fraction path.
ROOT_TOL = 1e-10


class ExpansionOrderError(ValueError):
    """Requested local expansion order exceeds the configured cap."""


class IllConditionedError(ValueError):
    """Numeric pole extraction failed its resampling check."""

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {x!r}")


class ExactComplex:
    """A Gaussian rational a + b*i with Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_fraction(re)
        self.im = _as_fraction(im)

    @staticmethod
    def coerce(x) -> "ExactComplex":
        if isinstance(x, ExactComplex):
            return x
        if isinstance(x, (int, Fraction, str)):
            return ExactComplex(x)
        raise TypeError(f"cannot coerce {x!r} to ExactComplex")

    def __add__(self, other):
        other = ExactComplex.coerce(other)
        return ExactComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = ExactComplex.coerce(other)
        return ExactComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return ExactComplex.coerce(other) - self

    def __mul__(self, other):
        other = ExactComplex.coerce(other)
        return ExactComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ExactComplex.coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by exact zero")
        return ExactComplex(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return ExactComplex.coerce(other) / self

    def __neg__(self):
        return ExactComplex(-self.re, -self.im)

    def __eq__(self, other):
        try:
            other = ExactComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def conjugate(self):
        return ExactComplex(self.re, -self.im)

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        if self.im == 0:
            return f"ExactComplex({self.re})"
        return f"ExactComplex({self.re}, {self.im})"


EC_ZERO = ExactComplex(0)
EC_ONE = ExactComplex(1)
EC_I = ExactComplex(0, 1)


class Poly:
    """Polynomial with ExactComplex coefficients, ascending degree order.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [ExactComplex.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction, str, ExactComplex)):
            return Poly([x])
        if isinstance(x, (list, tuple)):
            return Poly(x)
        raise TypeError(f"cannot coerce {x!r} to Poly")

    @staticmethod
    def monomial(degree: int, coeff=1) -> "Poly":
        return Poly([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return EC_ZERO

    def __add__(self, other):
        other = Poly.coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = Poly.coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] - other[k] for k in range(n)])

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ExactComplex)):
            c = ExactComplex.coerce(other)
            return Poly([a * c for a in self.coeffs])
        other = Poly.coerce(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [EC_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def divmod(self, other: "Poly"):
        other = Poly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [EC_ZERO] * max(0, len(rem) - len(other.coeffs) + 1)
        lead = other.coeffs[-1]
        d = other.degree
        while len(rem) - 1 >= d and rem:
            c = rem[-1] / lead
            k = len(rem) - 1 - d
            q[k] = c
            for j in range(len(other.coeffs)):
                rem[k + j] = rem[k + j] - c * other.coeffs[j]
            while rem and not rem[-1]:
                rem.pop()
        return Poly(q), Poly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def derivative(self) -> "Poly":
        return Poly([c * k for k, c in enumerate(self.coeffs)][1:])

    def eval(self, z: ExactComplex) -> ExactComplex:
        acc = EC_ZERO
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def eval_complex(self, z):
        """Horner evaluation at a complex scalar or ndarray."""
        acc = np.zeros_like(z, dtype=complex) if isinstance(z, np.ndarray) else 0j
        for c in reversed(self.float_coeffs()):
            acc = acc * z + c
        return acc

    def float_coeffs(self):
        return [c.to_complex() for c in self.coeffs]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Poly([c / lead for c in self.coeffs])

    def taylor_shift(self, p: ExactComplex) -> "Poly":
        """Coefficients of self(z + p) in powers of z."""
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * Poly([p, 1]) + Poly([c])
        return out

    def __repr__(self):
        return f"Poly({[str(c.re) + ('+' + str(c.im) + 'i' if c.im else '') for c in self.coeffs]})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the Gaussian rationals (Euclid)."""
    a, b = Poly.coerce(a), Poly.coerce(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class RationalFunction:
    """num/den over Gaussian rationals, normalized with gcd 1 and monic den."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = Poly.coerce(num), Poly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lead = den.coeffs[-1]
        self.num = Poly([c / lead for c in num.coeffs])
        self.den = den.monic()

    @staticmethod
    def coerce(x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        return RationalFunction(Poly.coerce(x))

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.degree == 0

    def __add__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def eval(self, z: ExactComplex) -> ExactComplex:
        d = self.den.eval(z)
        if not d:
            raise ZeroDivisionError(f"pole at {z!r}")
        return self.num.eval(z) / d

    def eval_complex(self, z):
        return self.num.eval_complex(z) / self.den.eval_complex(z)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


class LaurentData:
    """Finite Laurent polynomial, optionally standing for a convergent germ.

    ``coeffs`` maps integer exponent to a nonzero ExactComplex.  When
    ``tail=(C, R)`` is present the object represents a series whose stored
    negative coefficients are exact down to exponent -trunc_depth and whose
    unknown deeper coefficients obey |g_{-k}| <= C * R**k.
    """

    __slots__ = ("coeffs", "tail")

    def __init__(self, coeffs=None, tail=None):
        cs = {}
        for k, v in (coeffs or {}).items():
            v = ExactComplex.coerce(v)
            if v:
                cs[int(k)] = v
        self.coeffs = cs
        if tail is not None:
            C, R = float(tail[0]), float(tail[1])
            if C <= 0 or R <= 0:
                raise ValueError("tail bound constants must be positive")
            tail = (C, R)
        self.tail = tail

    @staticmethod
    def coerce(x) -> "LaurentData":
        if isinstance(x, LaurentData):
            return x
        if isinstance(x, Poly):
            return LaurentData({k: c for k, c in enumerate(x.coeffs)})
        if isinstance(x, (int, Fraction, str, ExactComplex)):
            return LaurentData({0: x})
        if isinstance(x, dict):
            return LaurentData(x)
        raise TypeError(f"cannot coerce {x!r} to LaurentData")

    def is_zero(self):
        return not self.coeffs and self.tail is None

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else None

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else None

    def __getitem__(self, k):
        return self.coeffs.get(k, EC_ZERO)

    def __add__(self, other):
        other = LaurentData.coerce(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, EC_ZERO) + v
        tails = [t for t in (self.tail, other.tail) if t is not None]
        tail = None
        if tails:
            tail = (sum(t[0] for t in tails), max(t[1] for t in tails))
        return LaurentData(out, tail)

    def __sub__(self, other):
        return self + (-LaurentData.coerce(other))

    def __neg__(self):
        return LaurentData({k: -v for k, v in self.coeffs.items()}, self.tail)

    def scale(self, c) -> "LaurentData":
        c = ExactComplex.coerce(c)
        mag = abs(complex(c.re)) + abs(complex(c.im))
        tail = None if self.tail is None else (self.tail[0] * max(mag, 1e-300), self.tail[1])
        return LaurentData({k: v * c for k, v in self.coeffs.items()}, tail)

    def mul_finite(self, other) -> "LaurentData":
        """Product of two tail-free Laurent polynomials."""
        other = LaurentData.coerce(other)
        if self.tail is not None or other.tail is not None:
            raise ValueError("mul_finite requires tail-free operands")
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out.get(i + j, EC_ZERO) + a * b
        return LaurentData(out)

    def derivative(self) -> "LaurentData":
        return LaurentData({k - 1: v * k for k, v in self.coeffs.items() if k != 0})

    def eval_complex(self, z):
        acc = np.zeros_like(z, dtype=complex) if isinstance(z, np.ndarray) else 0j
        for k, v in self.coeffs.items():
            acc = acc + v.to_complex() * z ** k
        return acc

    def __eq__(self, other):
        try:
            other = LaurentData.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs and self.tail == other.tail

    def __repr__(self):
        body = ", ".join(f"{k}: {v!r}" for k, v in sorted(self.coeffs.items()))
        return f"LaurentData({{{body}}}, tail={self.tail})"


# ---------------------------------------------------------------------------
# Power-series helpers (dense lists in (z - p), exact or complex entries)
# ---------------------------------------------------------------------------


def _series_mul(a, b, n, zero):
    out = [zero] * n
    for i, ai in enumerate(a[:n]):
        if not ai:
            continue
        for j, bj in enumerate(b[: n - i]):
            out[i + j] = out[i + j] + ai * bj
    return out


def _series_inv(a, n, one, zero):
    if not a[0]:
        raise ZeroDivisionError("series inversion needs a nonzero constant term")
    inv0 = one / a[0]
    out = [zero] * n
    out[0] = inv0
    for k in range(1, n):
        s = zero
        for j in range(1, k + 1):
            aj = a[j] if j < len(a) else zero
            s = s + aj * out[k - j]
        out[k] = -inv0 * s
    return out


def _series_exp(a, n, one, zero):
    """exp of a series with zero constant term, via the ODE recurrence."""
    if a[0]:
        raise ValueError("series exp expects zero constant term")
    out = [zero] * n
    out[0] = one
    for k in range(1, n):
        s = zero
        for j in range(1, k + 1):
            aj = a[j] if j < len(a) else zero
            s = s + (j * aj) * out[k - j]
        out[k] = s / k
    return out


def _rational_series_at(rat: RationalFunction, p, order: int, exact: bool):
    """Laurent coefficients of rat around p: (pole_order m, coeffs c_{-m}..c_{order}).

    Exact path keeps ExactComplex entries; otherwise complex doubles.
    """
    if exact:
        p = ExactComplex.coerce(p)
        num = rat.num.taylor_shift(p).coeffs
        den = rat.den.taylor_shift(p).coeffs
        zero, one = EC_ZERO, EC_ONE
        num = list(num)
        den = list(den)
    else:
        p = complex(p)
        zero, one = 0j, 1 + 0j
        num = _shift_complex(rat.num.float_coeffs(), p)
        den = _shift_complex(rat.den.float_coeffs(), p)
        scale = max(abs(c) for c in den) if den else 1.0
        num = [c for c in num]
        den = [c if abs(c) > 1e-14 * scale else 0j for c in den]
    # strip the (z-p)^m factor from the denominator
    m = 0
    while den and not den[0]:
        den.pop(0)
        m += 1
    if not den:
        raise ZeroDivisionError("rational function is identically singular here")
    n = order + m + 1
    num = num[:n] + [zero] * max(0, n - len(num))
    inv = _series_inv(den[:n] + [zero] * max(0, n - len(den)), n, one, zero)
    ser = _series_mul(num, inv, n, zero)
    return m, ser


def _shift_complex(coeffs, p):
    out = [0j]
    for c in reversed(coeffs):
        new = [0j] * (len(out) + 1)
        for k, v in enumerate(out):
            new[k] += v * p
            new[k + 1] += v
        new[0] += c
        out = new
        while len(out) > 1 and out[-1] == 0:
            out.pop()
    return out


def residue_at(rat: RationalFunction, p, order_hint: int = 0, exponent=None,
               order_cap: int = EXP_SERIES_ORDER, exact: bool = False):
    """Residue at p of rat(z) * exp(exponent(z)).

    The exponential factor must be holomorphic at p; its Taylor series is
    multiplied against the local Laurent expansion of the rational part and
    the coefficient of (z - p)^{-1} is read off.  Raises
    ExpansionOrderError if the pole order exceeds ``order_cap``.
    """
    rat = RationalFunction.coerce(rat)
    need = max(order_hint, 0)
    if exact:
        pe = ExactComplex.coerce(p)
        m, ser = _rational_series_at(rat, pe, need, exact=True)
        if m - 1 > order_cap:
            raise ExpansionOrderError(
                f"pole order {m} exceeds expansion cap {order_cap}")
        if exponent is None:
            return ser[m - 1] if m >= 1 else EC_ZERO
        expo = RationalFunction.coerce(exponent)
        if not expo.den.eval(pe):
            raise ValueError("exponential factor must be holomorphic at p")
        k, eser = _rational_series_at(expo, pe, m, exact=True)
        if k > 0:
            raise ValueError("exponential factor must be holomorphic at p")
        if eser[0] != EC_ZERO:
            # exp(exponent(p)) is transcendental; exact mode needs it to be 1
            raise ValueError(
                "exact residue with exponential factor requires exponent(p) == 0")
        shifted = [EC_ZERO] + eser[1:m]
        tay = _series_exp(shifted + [EC_ZERO] * max(0, m - len(shifted)), m, EC_ONE, EC_ZERO)
        acc = EC_ZERO
        for k2 in range(1, m + 1):
            acc = acc + ser[m - k2] * tay[k2 - 1]
        return acc
    # numeric path
    pc = complex(p)
    m, ser = _rational_series_at(rat, pc, need, exact=False)
    if m - 1 > order_cap:
        raise ExpansionOrderError(f"pole order {m} exceeds expansion cap {order_cap}")
    if m < 1:
        return 0j
    if exponent is None:
        return complex(ser[m - 1])
    expo = RationalFunction.coerce(exponent)
    k, eser = _rational_series_at(expo, pc, m, exact=False)
    if k > 0:
        raise ValueError("exponential factor must be holomorphic at p")
    head = cmath.exp(eser[0])
    tay = _series_exp([0j] + eser[1:m] + [0j] * max(0, m - len(eser)), m, 1 + 0j, 0j)
    acc = 0j
    for k2 in range(1, m + 1):
        acc += ser[m - k2] * tay[k2 - 1]
    return head * acc


def gamma_real(x: float) -> float:
    """Gamma(x) for real x in (0, 1], relative error <= 1e-12."""
    if not (0.0 < x <= 1.0):
        raise ValueError(f"gamma_real requires 0 < x <= 1, got {x}")
    return float(scipy.special.gamma(x))


@dataclass
class PolePart:
    """Principal part at one pole: coeffs[j] multiplies (z - location)^-(j+1)."""

    location: object
    coeffs: list

    def eval_complex(self, z):
        loc = self.location.to_complex() if isinstance(self.location, ExactComplex) else complex(self.location)
        acc = np.zeros_like(z, dtype=complex) if isinstance(z, np.ndarray) else 0j
        w = 1.0 / (z - loc)
        pw = w
        for c in self.coeffs:
            cc = c.to_complex() if isinstance(c, ExactComplex) else complex(c)
            acc = acc + cc * pw
            pw = pw * w
        return acc


@dataclass
class PartialFractions:
    """Polynomial part plus principal parts at each pole."""

    polynomial: Poly
    poles: list
    exact: bool

    def eval_complex(self, z):
        acc = self.polynomial.eval_complex(z)
        for part in self.poles:
            acc = acc + part.eval_complex(z)
        return acc


def partial_fractions(rat: RationalFunction, roots=None, tol: float = ROOT_TOL,
                      check_points: int = 12, seed: int = 7) -> PartialFractions:
    """Decompose rat into polynomial part + principal parts over its poles.

    With ``roots`` given as [(ExactComplex, multiplicity), ...] whose product
    reproduces den, the decomposition is exact.  Otherwise pole locations
    come from companion-matrix eigenvalues at double precision (clustered to
    multiplicities at ``tol``) and the result is verified by resampling; an
    IllConditionedError carrying the residual is raised on failure.
    """
    rat = RationalFunction.coerce(rat)
    polypart, rem = rat.num.divmod(rat.den)
    if rem.is_zero():
        return PartialFractions(polypart, [], exact=True)
    frac = RationalFunction(rem, rat.den)
    if roots is not None:
        prod = Poly([1])
        for q, mult in roots:
            q = ExactComplex.coerce(q)
            lin = Poly([-q, 1])
            for _ in range(mult):
                prod = prod * lin
        if prod.monic() != rat.den:
            raise ValueError("supplied roots do not factor the denominator")
        poles = []
        for q, mult in roots:
            q = ExactComplex.coerce(q)
            m, ser = _rational_series_at(frac, q, 0, exact=True)
            coeffs = [ser[m - 1 - j] for j in range(m)]
            poles.append(PolePart(q, coeffs))
        return PartialFractions(polypart, poles, exact=True)
    den_f = np.array(list(reversed(frac.den.float_coeffs())), dtype=complex)
    rts = np.roots(den_f)
    clusters = []
    for r in sorted(rts, key=lambda c: (c.real, c.imag)):
        for c in clusters:
            if abs(r - c[0]) <= max(tol, tol * max(1.0, abs(r))) * 10:
                c[1].append(r)
                break
        else:
            clusters.append([r, [r]])
    poles = []
    for _, members in clusters:
        q = sum(members) / len(members)
        mult = len(members)
        # deflate (z-q)^mult out of the denominator, then expand
        m, ser = _rational_series_at_numeric_multiplicity(frac, q, mult)
        coeffs = [ser[m - 1 - j] for j in range(m)]
        poles.append(PolePart(q, coeffs))
    result = PartialFractions(polypart, poles, exact=False)
    rng = random.Random(seed)
    resid = 0.0
    scale = 1e-300
    for _ in range(check_points):
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        if abs(rat.den.eval_complex(z)) < 1e-6:
            continue
        want = rat.eval_complex(z)
        got = result.eval_complex(z)
        resid = max(resid, abs(want - got))
        scale = max(scale, abs(want))
    rel = resid / scale
    if rel > max(1e-7, tol * 1e3):
        raise IllConditionedError(
            f"partial fraction resampling residual {rel:.3e} exceeds tolerance", rel)
    return result


def _rational_series_at_numeric_multiplicity(frac: RationalFunction, q: complex, mult: int):
    """Principal-part coefficients at a clustered numeric pole of multiplicity mult."""
    den = _shift_complex(frac.den.float_coeffs(), q)
    num = _shift_complex(frac.num.float_coeffs(), q)
    den = den[mult:] if len(den) > mult else [1.0 + 0j]
    n = mult + 1
    num = num[:n] + [0j] * max(0, n - len(num))
    den = den[:n] + [0j] * max(0, n - len(den))
    inv = _series_inv(den, n, 1 + 0j, 0j)
    ser = _series_mul(num, inv, n, 0j)
    return mult, ser


def exact_linear_solve(matrix, rhs):
    """Gaussian elimination over ExactComplex.

    matrix: list of rows of ExactComplex; rhs: list of ExactComplex.
    Returns a solution list or None when the system is inconsistent /
    underdetermined columns get zero.
    """
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    ncols = len(matrix[0]) if matrix else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][-1]:
            return None
    sol = [EC_ZERO] * ncols
    for i, c in enumerate(pivots):
        sol[c] = rows[i][-1]
    return sol
