"""Prime fields GF(p) and dense univariate polynomials over them.

Scalars are plain integers in ``[0, p)``; the modulus travels with the
containing object (polynomial, matrix, curve), never per scalar.  Polynomials
store an ascending coefficient tuple with no trailing zeros, the zero
polynomial being the empty tuple.  Everything is immutable and exact.

Factorization is squarefree decomposition, then distinct-degree splitting,
then equal-degree splitting.  The equal-degree stage draws its random
elements from a generator seeded by a digest of (p, coefficients), so
``factor`` is a pure function: identical input, identical output, on every
run and platform.
"""

import hashlib
import random

from .errors import ZeroPolynomial

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, valid far beyond any usable modulus."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def modinv(a, p):
    return pow(a, -1, p)


def legendre(a, p):
    """Quadratic residue symbol of a mod p: 1, -1, or 0."""
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def sqrt_mod(a, p):
    """Smaller square root of a mod p, or None for a non-residue.

    Tonelli-Shanks with a deterministic non-residue scan, so the choice of
    root is reproducible.
    """
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c = s, pow(z, q, p)
    t, r = pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t * t % p, 1
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


class Poly:
    """Dense polynomial over GF(p), coefficients ascending, no trailing zeros."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p):
        return cls(p, ())

    @classmethod
    def one(cls, p):
        return cls(p, (1,))

    @classmethod
    def const(cls, p, c):
        return cls(p, (c,))

    @classmethod
    def x(cls, p):
        return cls(p, (0, 1))

    @classmethod
    def x_minus(cls, p, x0):
        return cls(p, (-x0, 1))

    # -- structure ----------------------------------------------------

    @property
    def degree(self):
        """Degree, with deg 0 = -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.p == other.p
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_monic(self):
        return self.lc == 1

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        p = self.p
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return Poly(p, out)

    def __neg__(self):
        return Poly(self.p, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        p = self.p
        if isinstance(other, int):
            return Poly(p, [c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(p)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(p, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        db, inv_lc = other.degree, modinv(other.lc, p)
        if len(rem) - 1 < db:
            return Poly.zero(p), self
        quo = [0] * (len(rem) - db)
        bc = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] % p
            if c:
                q = c * inv_lc % p
                quo[i - db] = q
                for j in range(db + 1):
                    rem[i - db + j] -= q * bc[j]
        return Poly(p, quo), Poly(p, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        result, base = Poly.one(self.p), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self):
        if not self or self.lc == 1:
            return self
        return self * modinv(self.lc, self.p)

    def derivative(self):
        return Poly(self.p, [i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x0):
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x0 + c) % self.p
        return acc

    def taylor_shift(self, c):
        """Return self(x + c)."""
        p = self.p
        out = Poly.zero(p)
        shift = Poly(p, (c, 1))
        for coeff in reversed(self.coeffs):
            out = out * shift + Poly.const(p, coeff)
        return out

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(terms)


def poly_gcd(a, b):
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    while b:
        a, b = b, a % b
    return a.monic()


def poly_ext_gcd(a, b):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic or zero."""
    p = a.p
    r0, r1 = a, b
    s0, s1 = Poly.one(p), Poly.zero(p)
    t0, t1 = Poly.zero(p), Poly.one(p)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 and r0.lc != 1:
        c = modinv(r0.lc, p)
        r0, s0, t0 = r0 * c, s0 * c, t0 * c
    return r0, s0, t0


def poly_powmod(a, e, m):
    """a**e mod m by binary exponentiation."""
    result = Poly.one(a.p)
    a %= m
    while e:
        if e & 1:
            result = result * a % m
        a = a * a % m
        e >>= 1
    return result


def _factor_seed(a):
    h = hashlib.sha256()
    h.update(str(a.p).encode())
    h.update(b"|")
    h.update(",".join(map(str, a.coeffs)).encode())
    return int.from_bytes(h.digest()[:8], "big")


def squarefree_decomposition(a):
    """Yun-style decomposition over GF(p); returns [(monic squarefree, mult)].

    Handles the characteristic-p branch (vanishing derivative means the
    polynomial is a p-th power, since Frobenius fixes GF(p) coefficients).
    """
    p = a.p
    out = []

    def rec(f, scale):
        if f.degree < 1:
            return
        fd = f.derivative()
        if not fd:
            # f = h(x^p) = h(x)^p over GF(p)
            root = Poly(p, [f.coeffs[i] for i in range(0, len(f.coeffs), p)])
            rec(root, scale * p)
            return
        c = poly_gcd(f, fd)
        w = f // c
        mult = 1
        while w.degree >= 1:
            y = poly_gcd(w, c)
            z = w // y
            if z.degree >= 1:
                out.append((z.monic(), mult * scale))
            c = c // y
            w = y
            mult += 1
        rec(c, scale)

    rec(a.monic(), 1)
    return out


def _distinct_degree(f):
    """Split a monic squarefree f into [(product of irreducibles of degree d, d)]."""
    p = f.p
    out = []
    w = Poly.x(p)
    d = 0
    while f.degree > 0:
        d += 1
        if 2 * d > f.degree:
            out.append((f, f.degree))
            break
        w = poly_powmod(w, p, f)
        g = poly_gcd(f, w - Poly.x(p))
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            w = w % f
    return out


def _equal_degree(f, d, rng):
    """Split monic squarefree f, all of whose factors have degree d."""
    p = f.p
    if f.degree == d:
        return [f]
    # random split: gcd(r^((p^d - 1)/2) - 1, f) is proper with prob ~1/2
    exponent = (p ** d - 1) // 2
    while True:
        r = Poly(p, [rng.randrange(p) for _ in range(f.degree)])
        if r.degree < 1:
            continue
        g = poly_gcd(r, f)
        if 0 < g.degree < f.degree:
            break
        s = poly_powmod(r, exponent, f) - Poly.one(p)
        g = poly_gcd(s, f)
        if 0 < g.degree < f.degree:
            break
    return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def poly_factor(a):
    """Factor a nonzero polynomial into monic irreducibles with multiplicity.

    Returns a list of (irreducible, multiplicity) sorted by (degree, coeffs);
    the leading coefficient of the input times the product of the factors
    reproduces the input exactly.  Deterministic: the internal randomness is
    seeded from the input itself.
    """
    if not a:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    rng = random.Random(_factor_seed(a))
    found = {}
    for sqf, mult in squarefree_decomposition(a):
        for prod, d in _distinct_degree(sqf):
            for irr in _equal_degree(prod, d, rng):
                key = irr.coeffs
                found[key] = (irr, found.get(key, (irr, 0))[1] + mult)
    return sorted(found.values(), key=lambda t: (t[0].degree, t[0].coeffs))


def is_irreducible(u):
    """Rabin test: x^(p^n) = x mod u and proper power maps have trivial gcd."""
    n = u.degree
    if n < 1:
        return False
    if n == 1:
        return True
    p = u.p
    x = Poly.x(p)
    primes = set()
    m = n
    q = 2
    while q * q <= m:
        while m % q == 0:
            primes.add(q)
            m //= q
        q += 1
    if m > 1:
        primes.add(m)
    for q in primes:
        w = poly_powmod(x, p ** (n // q), u)
        if poly_gcd(w - x, u).degree != 0:
            return False
    w = poly_powmod(x, p ** n, u)
    return (w - x) % u == Poly.zero(p)
