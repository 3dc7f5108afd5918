"""Arithmetic in the function field GF(p)(x)[y] / (y^2 - f(x)).

Elements are kept in the canonical shape (a(x) + b(x) y) / d(x) with d monic
and gcd(gcd(a, b), d) = 1.  Valuations and local power series expansions are
exact:

* at the infinite place the parities of v(a) (even) and v(b y) (odd) rule out
  cancellation, so valuations are read off the degrees directly;
* at ramified and inert places the valuation is the u-adic order of the norm
  a^2 - b^2 f (halved at inert places), no series needed;
* at split places the element is expanded in the uniformizer with precision
  one past the u-adic order of the norm, which provably bounds the valuation,
  so the leading exponent found is exact.

Series live over the residue field of the place.  Residue fields of degree
one store elements as plain ints; higher degrees as coefficient tuples
modulo u.
"""

import math
from dataclasses import dataclass

from .curve import FINITE, Divisor, Place
from .errors import (CurveMismatch, PrecisionEscalationFailed,
                     PrecisionTooSmall, SectionRingError, ZeroElement)
from .fppoly import Poly, modinv, poly_ext_gcd, poly_factor, poly_gcd

INF = math.inf


class ResidueField:
    """GF(p)[x]/(u): the residue field of a finite place.

    Elements are ints when deg u = 1 and coefficient tuples of length deg u
    otherwise.  Only the handful of operations the series code needs.
    """

    def __init__(self, p, u):
        self.p = p
        self.u = u
        self.deg = u.degree
        self.q = p ** self.deg
        if self.deg == 1:
            self.x0 = (-u.coeffs[0]) % p

    # -- element construction ------------------------------------------

    def zero(self):
        return 0 if self.deg == 1 else (0,) * self.deg

    def one(self):
        return 1 if self.deg == 1 else (1,) + (0,) * (self.deg - 1)

    def from_int(self, c):
        c %= self.p
        return c if self.deg == 1 else (c,) + (0,) * (self.deg - 1)

    def xclass(self):
        """Residue class of the variable x."""
        if self.deg == 1:
            return self.x0
        return (0, 1) + (0,) * (self.deg - 2)

    def reduce_poly(self, P):
        """Residue class of a polynomial."""
        if self.deg == 1:
            return P.evaluate(self.x0)
        r = P % self.u
        cs = r.coeffs
        return tuple(cs[i] if i < len(cs) else 0 for i in range(self.deg))

    def to_ints(self, a):
        return (a,) if self.deg == 1 else tuple(a)

    # -- arithmetic ------------------------------------------------------

    def is_zero(self, a):
        return a == 0 if self.deg == 1 else not any(a)

    def add(self, a, b):
        if self.deg == 1:
            return (a + b) % self.p
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        if self.deg == 1:
            return (a - b) % self.p
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        if self.deg == 1:
            return (-a) % self.p
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        p = self.p
        if self.deg == 1:
            return a * b % p
        d = self.deg
        out = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        uc = self.u.coeffs
        for i in range(2 * d - 2, d - 1, -1):
            c = out[i] % p
            if c:
                for j in range(d):
                    out[i - d + j] -= c * uc[j]
        return tuple(v % p for v in out[:d])

    def inv(self, a):
        if self.deg == 1:
            return modinv(a, self.p)
        g, s, _ = poly_ext_gcd(Poly(self.p, a), self.u)
        if g.degree != 0:
            raise ZeroDivisionError("residue not invertible")
        inv_g = modinv(g.coeffs[0], self.p)
        cs = ((s * inv_g) % self.u).coeffs
        return tuple(cs[i] if i < len(cs) else 0 for i in range(self.deg))

    def pow(self, a, e):
        result = self.one()
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def sqrt(self, a):
        """Canonical square root in GF(q), or None for a non-residue.

        Tonelli-Shanks with a deterministic non-residue scan; of the two
        roots the one with the lexicographically smaller coefficient tuple
        is returned.
        """
        if self.is_zero(a):
            return self.zero()
        q = self.q
        if self.pow(a, (q - 1) // 2) != self.one():
            return None
        if q % 4 == 3:
            r = self.pow(a, (q + 1) // 4)
        else:
            m2, s = q - 1, 0
            while m2 % 2 == 0:
                m2 //= 2
                s += 1
            z = self._nonresidue()
            c = self.pow(z, m2)
            t, r, m = self.pow(a, m2), self.pow(a, (m2 + 1) // 2), s
            while t != self.one():
                t2, i = self.mul(t, t), 1
                while t2 != self.one():
                    t2 = self.mul(t2, t2)
                    i += 1
                b = self.pow(c, 1 << (m - i - 1))
                c = self.mul(b, b)
                t, r, m = self.mul(t, c), self.mul(r, b), i
        rn = self.neg(r)
        return min(r, rn, key=self.to_ints)

    def _nonresidue(self):
        n = 1
        while True:
            n += 1
            digits = []
            m = n
            while m:
                digits.append(m % self.p)
                m //= self.p
            if len(digits) > self.deg:
                raise SectionRingError("non-residue scan exhausted the field")
            z = (digits[0] if self.deg == 1
                 else tuple(digits[i] if i < len(digits) else 0
                            for i in range(self.deg)))
            if self.pow(z, (self.q - 1) // 2) != self.one():
                return z


# --------------------------------------------------------------- series ops

def ser_add(fd, a, b):
    n = max(len(a), len(b))
    z = fd.zero()
    return [fd.add(a[i] if i < len(a) else z, b[i] if i < len(b) else z)
            for i in range(n)]


def ser_neg(fd, a):
    return [fd.neg(c) for c in a]


def ser_mul(fd, a, b, prec):
    z = fd.zero()
    out = [z] * prec
    for i, x in enumerate(a):
        if i >= prec:
            break
        if fd.is_zero(x):
            continue
        for j, y in enumerate(b):
            if i + j >= prec:
                break
            out[i + j] = fd.add(out[i + j], fd.mul(x, y))
    return out


def ser_inv(fd, a, prec):
    """Inverse of a power series with unit constant term."""
    inv0 = fd.inv(a[0])
    out = [inv0] + [fd.zero()] * (prec - 1)
    for n in range(1, prec):
        acc = fd.zero()
        for k in range(1, min(n, len(a) - 1) + 1):
            acc = fd.add(acc, fd.mul(a[k], out[n - k]))
        out[n] = fd.neg(fd.mul(inv0, acc))
    return out


def ser_sqrt(fd, a, prec, r0):
    """Square root of a series with a[0] = r0^2, branch starting at r0."""
    out = [r0] + [fd.zero()] * (prec - 1)
    inv2r0 = fd.inv(fd.add(r0, r0))
    for n in range(1, prec):
        acc = a[n] if n < len(a) else fd.zero()
        for k in range(1, n):
            acc = fd.sub(acc, fd.mul(out[k], out[n - k]))
        out[n] = fd.mul(inv2r0, acc)
    return out


def ser_eval_poly(fd, P, X, prec):
    """Evaluate a GF(p)[x] polynomial on a series, truncated to prec."""
    out = [fd.zero()] * prec
    for c in reversed(P.coeffs):
        out = ser_mul(fd, out, X, prec)
        out[0] = fd.add(out[0], fd.from_int(c))
    return out


def ser_pow(fd, a, e, prec):
    out = [fd.one()] + [fd.zero()] * (prec - 1)
    while e:
        if e & 1:
            out = ser_mul(fd, out, a, prec)
        a = ser_mul(fd, a, a, prec)
        e >>= 1
    return out


def _series_root(fd, P, target, x0bar, prec):
    """Newton: the series X with P(X) = target, X(0) = x0bar, P'(x0bar) a unit."""
    Pd = P.derivative()
    X = [x0bar]
    cur = 1
    while cur < prec:
        cur = min(2 * cur, prec)
        X = X + [fd.zero()] * (cur - len(X))
        val = ser_eval_poly(fd, P, X, cur)
        tgt = [target[i] if i < len(target) else fd.zero() for i in range(cur)]
        err = [fd.sub(v, t) for v, t in zip(val, tgt)]
        der = ser_eval_poly(fd, Pd, X, cur)
        corr = ser_mul(fd, err, ser_inv(fd, der, cur), cur)
        X = [fd.sub(x, c) for x, c in zip(X, corr)]
    return X


# ------------------------------------------------------- place expansions

def residue_field(curve, u):
    key = ("rf", u.coeffs)
    rf = curve._cache.get(key)
    if rf is None:
        rf = ResidueField(curve.p, u)
        curve._cache[key] = rf
    return rf


def branch_series(curve, place, prec):
    """(X(t), Y(t), residue field) at a finite place, to absolute precision prec.

    t is the uniformizer: u(x) at split places, y at ramified ones.  X and Y
    are the images of x and y in the completed local ring.
    """
    key = ("branch", place, prec)
    hit = curve._cache.get(key)
    if hit is not None:
        return hit
    fd = residue_field(curve, place.u)
    z, o = fd.zero(), fd.one()
    if place.ramified:
        # uniformizer y; x solves f(X) = y^2
        t2 = [z, z, o] + [z] * max(0, prec - 3)
        X = _series_root(fd, curve.f, t2, fd.xclass(), prec)
        Y = ([z, o] + [z] * (prec - 2))[:prec]
    elif place.u.degree == 1:
        x0 = fd.x0
        X = ([fd.from_int(x0), o] + [z] * (prec - 2))[:prec]
        shifted = curve.f.taylor_shift(x0)
        C = [fd.from_int(shifted[i]) for i in range(prec)]
        Y = ser_sqrt(fd, C, prec, fd.reduce_poly(place.v))
    else:
        t1 = [z, o] + [z] * max(0, prec - 2)
        X = _series_root(fd, place.u, t1, fd.xclass(), prec)
        C = ser_eval_poly(fd, curve.f, X, prec)
        Y = ser_sqrt(fd, C, prec, fd.reduce_poly(place.v))
    curve._cache[key] = (X, Y, fd)
    return X, Y, fd


def _infinity_unit(curve, prec):
    """Series w with x = t^-2 / w at infinity, w(0) = 1, t = x^g / y."""
    key = ("inf", prec)
    hit = curve._cache.get(key)
    if hit is not None:
        return hit
    p = curve.p
    fd = residue_field(curve, Poly.x(p))  # plain GF(p) container
    n = curve.f.degree
    h = [curve.f[n - j] for j in range(n + 1)]  # h(s) = s^n f(1/s), h[0] = 1
    # fixed point s = t^2 h(s); two orders of precision per pass
    s = [0] * prec
    for _ in range(prec // 2 + 2):
        hs = [0] * prec
        for c in reversed(h):
            hs = ser_mul(fd, hs, s, prec)
            hs[0] = (hs[0] + c) % p
        new = [0, 0] + hs[:prec - 2]
        if new == s:
            break
        s = new
    w = s[2:] + [0, 0]  # s / t^2, w[0] = 1
    inv_w = ser_inv(fd, w, prec)
    curve._cache[key] = (fd, inv_w)
    return fd, inv_w


def _expand_at_infinity(e, nterms):
    """(offset, coefficient list) of e at the infinite place; exact offset."""
    curve = e.curve
    g = curve.genus
    fd, inv_w = _infinity_unit(curve, nterms + 2 * curve.f.degree + 2)
    prec = nterms

    def eval_poly(P):
        """Laurent expansion of P(x); returns (offset, coeffs) or None."""
        if not P:
            return None
        off = -2 * P.degree
        total = [0] * prec
        for i, c in enumerate(P.coeffs):
            if c == 0:
                continue
            xi = ser_pow(fd, inv_w, i, prec)  # unit part of x^i
            pos = -2 * i - off               # relative position of t^(-2i)
            for k in range(prec - pos):
                total[pos + k] = (total[pos + k] + c * xi[k]) % curve.p
        return off, total

    a_l = eval_poly(e.a)
    b_l = eval_poly(e.b)
    if b_l is not None:
        off_b, cs_b = b_l
        yoff = -(2 * g + 1)
        yunit = ser_pow(fd, inv_w, g, prec)
        cs_b = ser_mul(fd, cs_b, yunit, prec)
        b_l = (off_b + yoff, cs_b)
    if a_l is None:
        num = b_l
    elif b_l is None:
        num = a_l
    else:
        off = min(a_l[0], b_l[0])
        total = [0] * prec
        for src_off, cs in (a_l, b_l):
            shift = src_off - off
            for k in range(prec - shift):
                total[shift + k] = (total[shift + k] + cs[k]) % curve.p
        num = (off, total)
    d_off, d_cs = eval_poly(e.d)
    quot = ser_mul(fd, num[1], ser_inv(fd, d_cs, prec), prec)
    return num[0] - d_off, quot


@dataclass(frozen=True)
class LocalExpansion:
    """Truncated expansion in the uniformizer of a place.

    ``start`` is the exponent of the first term; ``coeffs`` holds the next
    ``prec`` coefficients (ints at degree-1 places and at infinity, tuples
    over the residue field otherwise).  A zero function has empty coeffs.
    """

    place: Place
    start: int
    coeffs: tuple


def _ord_u(h, u):
    """u-adic order of a nonzero polynomial."""
    if not h:
        raise ZeroElement("u-adic order of the zero polynomial")
    n = 0
    while True:
        q, r = divmod(h, u)
        if r:
            return n
        h = q
        n += 1


def _numerator_series(e, place, nterms):
    """Series of a + b y at a finite place, to absolute precision nterms."""
    X, Y, fd = branch_series(e.curve, place, nterms)
    num = ser_eval_poly(fd, e.a, X, nterms)
    if e.b:
        by = ser_mul(fd, ser_eval_poly(fd, e.b, X, nterms), Y, nterms)
        num = ser_add(fd, num, by)
    return num, fd


def valuation(e, place):
    """The (normalized discrete) valuation of e at the place; inf for e = 0."""
    if e.is_zero():
        return INF
    curve = e.curve
    if place.is_infinite:
        va = -2 * e.a.degree if e.a else INF
        vb = -2 * e.b.degree - (2 * curve.genus + 1) if e.b else INF
        return min(va, vb) + 2 * e.d.degree
    u = place.u
    ord_d = _ord_u(e.d, u) if e.d.degree >= u.degree else 0
    # split place: quick exit when the numerator does not vanish at P
    if not place.ramified and not place.inert and (e.a + e.b * place.v) % u:
        return -ord_d
    norm = e.a * e.a - e.b * e.b * curve.f
    if place.ramified:
        return _ord_u(norm, u) - 2 * ord_d
    if place.inert:
        return _ord_u(norm, u) // 2 - ord_d
    bound = _ord_u(norm, u)
    num, fd = _numerator_series(e, place, bound + 1)
    for i, c in enumerate(num):
        if not fd.is_zero(c):
            return i - ord_d
    raise PrecisionEscalationFailed(
        f"numerator of {e} vanished past its norm bound at {place}")


def local_expansion(e, place, prec):
    """Expansion of e at the place: valuation-exact leading term, prec coeffs."""
    if prec < 1:
        raise PrecisionTooSmall(f"prec={prec}")
    if e.is_zero():
        return LocalExpansion(place, 0, ())
    if place.is_infinite:
        off, cs = _expand_at_infinity(e, prec + 2 * e.d.degree + 2)
        lead = 0
        while lead < len(cs) and not cs[lead]:
            lead += 1
        if lead == len(cs):
            raise PrecisionEscalationFailed("expansion at infinity vanished")
        return LocalExpansion(place, off + lead,
                              tuple(cs[lead:lead + prec]))
    if place.inert:
        raise SectionRingError(
            "local expansions at inert places are not supported "
            "(valuations there come from the norm order)")
    u = place.u
    norm = e.a * e.a - e.b * e.b * e.curve.f
    eP = place.ramification_index()
    ord_d = _ord_u(e.d, u) if e.d.degree >= u.degree else 0
    v_den = eP * ord_d
    bound = eP * _ord_u(norm, u)
    nterms = bound + v_den + prec + 1
    num, fd = _numerator_series(e, place, nterms)
    lead = 0
    while lead < len(num) and fd.is_zero(num[lead]):
        lead += 1
    if lead > bound:
        raise PrecisionEscalationFailed(
            f"numerator of {e} vanished past its norm bound at {place}")
    den = ser_eval_poly(fd, e.d, branch_series(e.curve, place, nterms)[0],
                        nterms)
    for i in range(v_den):
        if not fd.is_zero(den[i]):
            raise PrecisionEscalationFailed("denominator valuation mismatch")
    den_unit = den[v_den:]
    quot = ser_mul(fd, num[lead:], ser_inv(fd, den_unit, prec), prec)
    coeffs = tuple(c if fd.deg == 1 else tuple(c) for c in quot[:prec])
    return LocalExpansion(place, lead - v_den, coeffs)


def places_over(curve, u):
    """All places of the curve above a monic irreducible u(x)."""
    u = u.monic()
    if not curve.f % u:
        return [Place(FINITE, u, Poly.zero(curve.p))]
    fd = residue_field(curve, u)
    r = fd.sqrt(fd.reduce_poly(curve.f))
    if r is None:
        return [Place.inert_over(curve, u)]
    v = Poly(curve.p, fd.to_ints(r))
    P = Place(FINITE, u, v)
    return sorted([P, P.conjugate()], key=Place.sort_key)


def principal_divisor(e):
    """div(e): all zeros and poles with multiplicity; total degree is zero."""
    if e.is_zero():
        raise ZeroElement("principal divisor of 0")
    curve = e.curve
    coeffs = {}
    norm = e.a * e.a - e.b * e.b * curve.f
    support = set()
    if norm.degree >= 1:
        support.update(irr for irr, _ in poly_factor(norm))
    if e.d.degree >= 1:
        support.update(irr for irr, _ in poly_factor(e.d))
    for u in sorted(support, key=lambda q: (q.degree, q.coeffs)):
        for P in places_over(curve, u):
            v = valuation(e, P)
            if v:
                coeffs[P] = v
    v_inf = valuation(e, Place.infinite())
    if v_inf:
        coeffs[Place.infinite()] = v_inf
    div = Divisor(curve, coeffs)
    if div.degree() != 0:
        raise SectionRingError(f"principal divisor of {e} has degree "
                               f"{div.degree()}, expected 0")
    return div


# ----------------------------------------------------------- field elements

class FunctionElement:
    """(a + b y) / d in canonical form: d monic, gcd(gcd(a, b), d) = 1."""

    __slots__ = ("curve", "a", "b", "d")

    def __init__(self, curve, a, b, d):
        if not d:
            raise ZeroDivisionError("zero denominator")
        if not a and not b:
            a = b = Poly.zero(curve.p)
            d = Poly.one(curve.p)
        else:
            g = poly_gcd(poly_gcd(a, b), d)
            if g.degree >= 1:
                a, b, d = a // g, b // g, d // g
            if d.lc != 1:
                c = modinv(d.lc, curve.p)
                a, b, d = a * c, b * c, d.monic()
        self.curve = curve
        self.a = a
        self.b = b
        self.d = d

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, curve):
        p = curve.p
        return cls(curve, Poly.zero(p), Poly.zero(p), Poly.one(p))

    @classmethod
    def one(cls, curve):
        p = curve.p
        return cls(curve, Poly.one(p), Poly.zero(p), Poly.one(p))

    @classmethod
    def constant(cls, curve, c):
        p = curve.p
        return cls(curve, Poly.const(p, c), Poly.zero(p), Poly.one(p))

    @classmethod
    def x(cls, curve):
        p = curve.p
        return cls(curve, Poly.x(p), Poly.zero(p), Poly.one(p))

    @classmethod
    def y(cls, curve):
        p = curve.p
        return cls(curve, Poly.zero(p), Poly.one(p), Poly.one(p))

    @classmethod
    def from_poly(cls, curve, P):
        p = curve.p
        return cls(curve, P, Poly.zero(p), Poly.one(p))

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return not self.a and not self.b

    def key(self):
        return (self.a.coeffs, self.b.coeffs, self.d.coeffs)

    def __eq__(self, other):
        return (isinstance(other, FunctionElement)
                and self.curve == other.curve and self.key() == other.key())

    def __hash__(self):
        return hash((self.curve, self.key()))

    def _check(self, other):
        if self.curve != other.curve:
            raise CurveMismatch("elements on different curves")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        self._check(other)
        return FunctionElement(
            self.curve,
            self.a * other.d + other.a * self.d,
            self.b * other.d + other.b * self.d,
            self.d * other.d)

    def __neg__(self):
        return FunctionElement(self.curve, -self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FunctionElement(self.curve, self.a * other, self.b * other,
                                   self.d)
        self._check(other)
        f = self.curve.f
        return FunctionElement(
            self.curve,
            self.a * other.a + self.b * other.b * f,
            self.a * other.b + self.b * other.a,
            self.d * other.d)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero function")
        norm = self.a * self.a - self.b * self.b * self.curve.f
        return FunctionElement(self.curve, self.d * self.a, -(self.d * self.b),
                               norm)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = FunctionElement.one(self.curve)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conjugate(self):
        return FunctionElement(self.curve, self.a, -self.b, self.d)

    def __repr__(self):
        return f"(({self.a}) + ({self.b})*y)/({self.d})"

    def to_json(self):
        return {"a": list(self.a.coeffs), "b": list(self.b.coeffs),
                "d": list(self.d.coeffs)}
