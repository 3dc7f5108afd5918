"""Hyperelliptic curves y^2 = f(x), their closed points, and Weil divisors.

Only odd-degree models are supported: deg f = 2g + 1 forces exactly one
place at infinity, where x has a double pole and y a pole of order 2g + 1.
Closed points of the affine part are carried symbolically as a monic
irreducible u(x) together with a branch datum:

* split place: v with v^2 = f mod u and v != 0; its conjugate carries -v;
* ramified place: v = 0, equivalently u divides f;
* inert place: no v exists (f is a non-square mod u); the residue field is
  the quadratic extension, so the place has degree 2*deg(u).

Inert places never appear in the divisors the pipeline builds, but they do
occur in principal divisors of arbitrary functions, so the type supports
them.
"""

from dataclasses import dataclass, field

from .errors import (CurveMismatch, EvenDegree, GenusTooSmall, NotMonic,
                     NotPrime, NotSquarefree)
from .fppoly import Poly, is_prime, legendre, poly_gcd, sqrt_mod

FINITE = "finite"
INFINITE = "infinite"

MIN_PRIME = 11


@dataclass(frozen=True)
class HyperellipticCurve:
    """Smooth projective curve y^2 = f(x) over GF(p), genus (deg f - 1) / 2."""

    p: int
    f: Poly
    genus: int
    _cache: dict = field(default_factory=dict, compare=False, repr=False,
                         hash=False)

    def __hash__(self):
        return hash((self.p, self.f.coeffs))

    def __eq__(self, other):
        return (isinstance(other, HyperellipticCurve)
                and self.p == other.p and self.f.coeffs == other.f.coeffs)

    def same_curve(self, other):
        if self != other:
            raise CurveMismatch(f"{self} vs {other}")

    def __repr__(self):
        return f"HyperellipticCurve(p={self.p}, f={self.f}, g={self.genus})"


def validate_curve(p, f):
    """Check the model and return the curve; f may be a Poly or coefficient list."""
    if not isinstance(p, int) or not is_prime(p) or p < MIN_PRIME:
        raise NotPrime(f"modulus must be an odd prime >= {MIN_PRIME}, got {p}")
    if not isinstance(f, Poly):
        f = Poly(p, f)
    if f.p != p:
        raise CurveMismatch("coefficient modulus differs from p")
    if f.degree < 1:
        raise EvenDegree("constant f")
    if f.degree % 2 == 0:
        raise EvenDegree(f"deg f = {f.degree}; an odd-degree model is required")
    if not f.is_monic():
        raise NotMonic("f must be monic")
    if poly_gcd(f, f.derivative()).degree != 0:
        raise NotSquarefree("f shares a root with f'")
    genus = (f.degree - 1) // 2
    if genus < 2:
        raise GenusTooSmall(f"genus {genus} < 2")
    return HyperellipticCurve(p=p, f=f, genus=genus)


class Place:
    """A closed point: the infinite place, or (u, branch) over a monic irreducible u."""

    __slots__ = ("kind", "u", "v", "degree", "ramified", "inert", "_key")

    def __init__(self, kind, u=None, v=None, inert=False):
        self.kind = kind
        self.u = u
        self.v = v
        self.inert = inert
        if kind == INFINITE:
            self.degree = 1
            self.ramified = True
            self._key = (0, 1, (), ())
        else:
            if u is None or not u.is_monic() or u.degree < 1:
                raise ValueError("finite place needs a monic nonconstant u")
            if inert:
                self.degree = 2 * u.degree
                self.ramified = False
                self._key = (1, self.degree, u.coeffs, ())
            else:
                if v is None:
                    raise ValueError("split/ramified place needs v")
                self.degree = u.degree
                self.ramified = not bool(v)
                self._key = (1, self.degree, u.coeffs, v.coeffs)

    @classmethod
    def infinite(cls):
        return cls(INFINITE)

    @classmethod
    def finite(cls, curve, u, v):
        """Split or ramified place; validates v^2 = f mod u and deg v < deg u."""
        u = u.monic()
        v = v % u
        if (v * v - curve.f) % u:
            raise ValueError("v^2 != f mod u: not a point of the curve")
        return cls(FINITE, u, v)

    @classmethod
    def inert_over(cls, curve, u):
        """The unique place over an irreducible u at which f is a non-square."""
        return cls(FINITE, u.monic(), None, inert=True)

    @property
    def is_infinite(self):
        return self.kind == INFINITE

    def ramification_index(self):
        """Ramification over the x-line: 2 at ramified/infinite places, else 1."""
        return 2 if (self.is_infinite or self.ramified) else 1

    def conjugate(self):
        """Image under y -> -y; fixes infinite, ramified and inert places."""
        if self.is_infinite or self.ramified or self.inert:
            return self
        return Place(FINITE, self.u, (-self.v) % self.u)

    def sort_key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, Place) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.is_infinite:
            return "Place(oo)"
        if self.inert:
            return f"Place(inert, u={self.u})"
        return f"Place(u={self.u}, v={self.v})"

    def to_json(self):
        doc = {"kind": self.kind, "degree": self.degree}
        if self.is_infinite:
            return doc
        doc["u"] = list(self.u.coeffs)
        doc["v"] = None if self.inert else list(self.v.coeffs)
        doc["ramified"] = self.ramified
        doc["inert"] = self.inert
        return doc


class Divisor:
    """Finite integer combination of places of one curve."""

    __slots__ = ("curve", "_coeffs")

    def __init__(self, curve, coeffs=None):
        self.curve = curve
        self._coeffs = {P: n for P, n in (coeffs or {}).items() if n != 0}

    @classmethod
    def of_places(cls, curve, places):
        d = {}
        for P in places:
            d[P] = d.get(P, 0) + 1
        return cls(curve, d)

    def coeff(self, P):
        return self._coeffs.get(P, 0)

    def support(self):
        return sorted(self._coeffs, key=Place.sort_key)

    def items(self):
        return [(P, self._coeffs[P]) for P in self.support()]

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        return (isinstance(other, Divisor) and self.curve == other.curve
                and self._coeffs == other._coeffs)

    def __add__(self, other):
        self.curve.same_curve(other.curve)
        out = dict(self._coeffs)
        for P, n in other._coeffs.items():
            out[P] = out.get(P, 0) + n
        return Divisor(self.curve, out)

    def __neg__(self):
        return Divisor(self.curve, {P: -n for P, n in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return Divisor(self.curve, {P: k * n for P, n in self._coeffs.items()})

    def degree(self):
        return sum(n * P.degree for P, n in self._coeffs.items())

    def is_effective(self):
        return all(n >= 0 for n in self._coeffs.values())

    def common_part(self, other):
        """Place-wise minimum of two effective divisors (gcd of divisors)."""
        out = {}
        for P, n in self._coeffs.items():
            m = min(n, other.coeff(P))
            if m:
                out[P] = m
        return Divisor(self.curve, out)

    def __repr__(self):
        if not self._coeffs:
            return "Divisor(0)"
        return "Divisor(" + " + ".join(f"{n}*{P}" for P, n in self.items()) + ")"

    def to_json(self):
        return [{"place": P.to_json(), "coeff": n} for P, n in self.items()]


def rational_points(curve):
    """All degree-1 places: the infinite place plus every affine GF(p)-point.

    Sorted deterministically (infinite place first, then ascending x0, the
    branch with the smaller v first), which fixes the sampling pool of the
    divisor search.
    """
    p, f = curve.p, curve.f
    out = [Place.infinite()]
    for x0 in range(p):
        z = f.evaluate(x0)
        u = Poly.x_minus(p, x0)
        if z == 0:
            out.append(Place(FINITE, u, Poly.zero(p)))
        elif legendre(z, p) == 1:
            w = sqrt_mod(z, p)
            out.append(Place(FINITE, u, Poly.const(p, w)))
            out.append(Place(FINITE, u, Poly.const(p, p - w)))
    return out


def canonical_divisor(curve):
    """(2g - 2) times the infinite place: the divisor of dx / y on this model."""
    return Divisor(curve, {Place.infinite(): 2 * curve.genus - 2})
