"""Domain model: exponential types, ramification directions, curves.

Local types are signed monomials sigma * z**d in a chart where the puncture
sits at z = infinity.  Global genus-zero types attach a rational principal
part to each puncture of the sphere.  Curves are piecewise paths whose
infinite ends carry ramification-point tags; the quadrature module consumes
them directly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .algebra import LaurentData, Poly, RationalFunction

TWO_PI = 2.0 * math.pi

# The reduction identities are stated for h = +z^d; the period and Borel
# formulas for h = -z^d resp. +z^d.  Both signs are supported everywhere and
# every result records which one it used.  The coordinate rotation
# z -> exp(i*pi/d) * z that exchanges them is exposed as
# `convert_convention`; it leaves the Gaussian rationals unless d <= 2, so
# its output is float-coefficient data.
CONVENTION_PLUS = 1
CONVENTION_MINUS = -1


@dataclass(frozen=True)
class RamificationPoint:
    """One infinite-order ramification point: puncture, sheet, approach ray."""

    puncture: int
    sheet: int
    direction: float

    def __post_init__(self):
        object.__setattr__(self, "direction", self.direction % TWO_PI)


@dataclass(frozen=True)
class LocalType:
    """Exponential type h = sign * z**d at a puncture placed at z = infinity."""

    d: int
    sign: int = CONVENTION_MINUS

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("pole order d must be >= 1")
        if self.sign not in (CONVENTION_PLUS, CONVENTION_MINUS):
            raise ValueError("sign must be +1 or -1")

    def h_eval(self, z):
        return self.sign * z ** self.d

    def h_rational(self) -> RationalFunction:
        return RationalFunction(Poly.monomial(self.d, self.sign))


@dataclass(frozen=True)
class Puncture:
    """A puncture of the sphere with its principal part.

    ``location`` is a complex number or the string "inf".  ``principal`` is a
    Poly whose coefficient k (k >= 1) multiplies (z - location)^-k for a
    finite puncture, or z^k at infinity; its constant term must vanish.
    """

    location: object
    principal: Poly

    def __post_init__(self):
        if self.principal.is_zero() or self.principal[0]:
            raise ValueError("principal part needs a nonzero polar part and no constant term")

    @property
    def d(self) -> int:
        return self.principal.degree

    def is_infinite(self) -> bool:
        return isinstance(self.location, str)

    def h_term(self) -> RationalFunction:
        """The principal part as a rational function of the global coordinate."""
        if self.is_infinite():
            return RationalFunction(self.principal)
        p = self.location
        num = Poly()
        den = Poly([1])
        lin = Poly([-p, 1])
        powers = [Poly([1])]
        for _ in range(self.d):
            powers.append(powers[-1] * lin)
        for k in range(1, self.d + 1):
            c = self.principal[k]
            if c:
                num = num + Poly([c]) * powers[self.d - k]
        return RationalFunction(num, powers[self.d])


@dataclass(frozen=True)
class ExpType:
    """Either a local signed monomial or a global list of punctures."""

    local: LocalType | None = None
    punctures: tuple = ()

    @staticmethod
    def make_local(d: int, sign: int = CONVENTION_MINUS) -> "ExpType":
        return ExpType(local=LocalType(d, sign))

    @staticmethod
    def make_global(punctures) -> "ExpType":
        punctures = tuple(punctures)
        locs = [p.location if p.is_infinite() else complex(p.location) for p in punctures]
        if len(set(map(str, locs))) != len(locs):
            raise ValueError("puncture locations must be distinct")
        return ExpType(punctures=punctures)

    def is_local(self) -> bool:
        return self.local is not None


@dataclass(frozen=True)
class ExpDifferential:
    """g(z) * exp(h(z)) dz; local coeff is LaurentData, global is rational."""

    type: ExpType
    coeff: object

    def __post_init__(self):
        if self.type.is_local() and not isinstance(self.coeff, LaurentData):
            object.__setattr__(self, "coeff", LaurentData.coerce(self.coeff))
        if not self.type.is_local() and not isinstance(self.coeff, RationalFunction):
            object.__setattr__(self, "coeff", RationalFunction.coerce(self.coeff))


def local_form(coeff, d: int, sign: int = CONVENTION_MINUS) -> ExpDifferential:
    return ExpDifferential(ExpType.make_local(d, sign), LaurentData.coerce(coeff))


# ---------------------------------------------------------------------------
# Ramification directions
# ---------------------------------------------------------------------------


def _decay_bisectors(top_coeff: complex, d: int, at_infinity: bool):
    """Approach directions along which Re(h) -> -infinity.

    For h ~ c * t**d as t -> infinity (puncture at infinity) the bisectors
    solve cos(arg c + d*theta) = -1; for h ~ c * t**-d as t -> 0 they solve
    cos(arg c - d*theta) = -1.
    """
    a = cmath.phase(top_coeff)
    if at_infinity:
        base = (math.pi - a) / d
        step = TWO_PI / d
        dirs = [(base + j * step) % TWO_PI for j in range(d)]
    else:
        base = (a + math.pi) / d
        step = TWO_PI / d
        dirs = [(base - j * step) % TWO_PI for j in range(d)]
    return sorted(dirs)


def ramification_directions(t: ExpType, puncture: int = 0):
    """The d sector bisectors where Re(h) -> -infinity, sorted ascending.

    Sheet labels follow ascending angle with sheet 0 at the smallest
    nonnegative direction.  For the local monomials this reproduces
    theta_j = (2j-1)*pi/d when h = +z^d and theta_j = 2*pi*j/d when
    h = -z^d (reindexed to ascending order).
    """
    if t.is_local():
        lt = t.local
        dirs = _decay_bisectors(complex(lt.sign), lt.d, at_infinity=True)
        return [RamificationPoint(0, j, th) for j, th in enumerate(dirs)]
    p = t.punctures[puncture]
    top = p.principal[p.d].to_complex()
    dirs = _decay_bisectors(top, p.d, at_infinity=p.is_infinite())
    return [RamificationPoint(puncture, j, th) for j, th in enumerate(dirs)]


def sector_halfwidth(d: int) -> float:
    return math.pi / (2 * d)


def in_decay_sector(theta: float, rp: RamificationPoint, d: int, margin: float = 0.0) -> bool:
    delta = (theta - rp.direction + math.pi) % TWO_PI - math.pi
    return abs(delta) < sector_halfwidth(d) - margin


# ---------------------------------------------------------------------------
# Curves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ray:
    """Ray between radius and the puncture at ``anchor`` along ``angle``.

    anchor "inf": z = s * e^{i angle}, s in [radius, inf).
    finite anchor: z = anchor + s * e^{i angle}, s in (0, radius]; the
    infinite end is s -> 0.  ``inward`` True means traversal toward the
    puncture (toward the infinite end).
    """

    angle: float
    radius: float
    inward: bool
    anchor: object = "inf"
    tag: RamificationPoint | None = None


@dataclass(frozen=True)
class Arc:
    center: object
    radius: float
    theta1: float
    theta2: float


@dataclass(frozen=True)
class Segment:
    start: complex
    end: complex


@dataclass(frozen=True)
class Circle:
    center: object
    radius: float
    clockwise: bool = False


@dataclass(frozen=True)
class CurveSpec:
    """Ordered pieces sharing endpoints; infinite ends carry tags."""

    pieces: tuple

    def reversed(self) -> "CurveSpec":
        out = []
        for p in reversed(self.pieces):
            if isinstance(p, Ray):
                out.append(Ray(p.angle, p.radius, not p.inward, p.anchor, p.tag))
            elif isinstance(p, Arc):
                out.append(Arc(p.center, p.radius, p.theta2, p.theta1))
            elif isinstance(p, Segment):
                out.append(Segment(p.end, p.start))
            elif isinstance(p, Circle):
                out.append(Circle(p.center, p.radius, not p.clockwise))
        return CurveSpec(tuple(out))

    def endpoint_tags(self):
        return [p.tag for p in self.pieces if isinstance(p, Ray) and p.tag is not None]


def circle_curve(radius: float = 1.0, center=0j, clockwise: bool = False) -> CurveSpec:
    return CurveSpec((Circle(center, radius, clockwise),))


def _pole_radii(coeff) -> list:
    """Moduli of finite poles of a local coefficient (only finitely many
    negative exponents are stored, so the only finite pole is z = 0) or of a
    rational coefficient."""
    if isinstance(coeff, LaurentData):
        mn = coeff.min_exp()
        return [0.0] if (mn is not None and mn < 0) else []
    import numpy as np

    den = coeff.den
    if den.degree <= 0:
        return []
    rts = np.roots(list(reversed(den.float_coeffs())))
    return [abs(r) for r in rts]


def safe_circle_radius(coeff, rho: float = 1.0, clearance: float = 1e-6,
                       attempts: int = 8) -> float:
    """Scale rho by 1.1 until the circle |z| = rho clears all pole moduli."""
    radii = [r for r in _pole_radii(coeff) if r > 0]
    for _ in range(attempts):
        if all(abs(rho - r) > clearance * max(1.0, rho) for r in radii):
            return rho
        rho *= 1.1
    raise ValueError("could not find a pole-free circle radius in 8 attempts")


def standard_local_curves(t: ExpType, rho: float = 1.0, coeff=None):
    """The small circle gamma and the curves gamma_k joining ramification points.

    gamma: circle of radius rho around the origin, anticlockwise in the
    z-chart.  gamma_k: ray in from infinity along the sheet-0 direction,
    arc from theta_0 to theta_k at radius rho, ray back out along theta_k.
    """
    if not t.is_local():
        raise ValueError("standard_local_curves needs a local type")
    if coeff is not None:
        rho = safe_circle_radius(coeff, rho)
    rps = ramification_directions(t)
    gamma = circle_curve(rho)
    gammas = []
    for k in range(1, t.local.d):
        gammas.append(CurveSpec((
            Ray(rps[0].direction, rho, inward=False, anchor="inf", tag=rps[0]),
            Arc(0j, rho, rps[0].direction, rps[k].direction),
            Ray(rps[k].direction, rho, inward=True, anchor="inf", tag=rps[k]),
        )))
    return gamma, gammas


def convert_convention(omega: ExpDifferential) -> tuple:
    """Rotate a local differential between the h = +z^d and h = -z^d charts.

    Returns (rotated coefficient as float-coefficient LaurentData dict,
    new sign).  Substituting z = zeta*u with zeta = exp(i*pi/d) sends
    g(z) e^{sigma z^d} dz to zeta*g(zeta*u) e^{-sigma u^d} du, so the
    coefficient of u^m is zeta^{m+1} * g_m.  Exact only for d <= 2; the
    output always uses complex floats to keep the regimes explicit.
    """
    if not omega.type.is_local():
        raise ValueError("conversion applies to local differentials")
    lt = omega.type.local
    zeta = cmath.exp(1j * math.pi / lt.d)
    rotated = {m: zeta ** (m + 1) * c.to_complex() for m, c in omega.coeff.coeffs.items()}
    return rotated, -lt.sign


# ---------------------------------------------------------------------------
# Divisors
# ---------------------------------------------------------------------------


def divisor_degree(g: RationalFunction, punctures=None) -> int:
    """Total degree of the divisor of f = g * e^H on the sphere.

    At ordinary points and punctures alike the order is the order of the
    meromorphic germ g, so the degree is the sum of root multiplicities of
    num minus den over the plane plus the order at infinity.  Raises on the
    zero function.
    """
    g = RationalFunction.coerce(g)
    if g.is_zero():
        raise ValueError("the zero function has no divisor")
    import numpy as np

    total = 0
    for poly, s in ((g.num, 1), (g.den, -1)):
        if poly.degree > 0:
            rts = np.roots(list(reversed(poly.float_coeffs())))
            total += s * len(rts)
    total += g.den.degree - g.num.degree  # order at infinity
    return total
