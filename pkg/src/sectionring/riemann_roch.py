"""Spaces of global sections L(D), their dimensions, and base loci.

L(D) is computed from the ansatz (a(x) + b(x) y) / d(x), where d collects the
positive finite part of D.  The infinite place contributes nothing but the
degree caps on a and b (poles of x and y at infinity have fixed orders -2 and
-(2g+1), and the two summands have different parities there, so the caps are
exact).  Every finite condition "pole order at most n_P" becomes linear
equations on the coefficients of a and b via the local expansion of the
numerator, deg(u) equations per series coefficient at a place over u.  The
basis returned is the reduced echelon basis of the kernel under the fixed
coordinate order (a coefficients ascending, then b coefficients), which makes
every downstream object of the pipeline reproducible.
"""

from dataclasses import dataclass

from .curve import Divisor, Place, canonical_divisor
from .errors import SectionRingError
from .fppoly import Poly
from .funcfield import (FunctionElement, branch_series, principal_divisor,
                        ser_mul)
from .linalg import kernel_rows


@dataclass(frozen=True)
class RRSpace:
    """L(D) with its echelon basis and both cohomology dimensions.

    The ansatz data (denominator, degree caps, kernel vectors with their
    pivot columns) is kept because coordinate maps of graded pieces solve
    against exactly this echelon structure.
    """

    divisor: Divisor
    basis: tuple
    h0: int
    h1: int
    denominator: Poly
    deg_a: int
    deg_b: int
    kernel: tuple
    pivots: tuple


def _ansatz_frame(curve, D):
    """Denominator and degree caps (deg_a, deg_b) for the L(D) ansatz."""
    p = curve.p
    d = Poly.one(p)
    n_inf = 0
    for P, n in D.items():
        if P.is_infinite:
            n_inf = n
        elif P.inert:
            raise SectionRingError(
                "L(D) over divisors with inert support is not implemented")
        elif n > 0:
            d = d * P.u ** n
    deg_a = d.degree + (n_inf // 2)
    deg_b = d.degree + ((n_inf - (2 * curve.genus + 1)) // 2)
    return d, deg_a, deg_b


def _condition_places(curve, D, d):
    """Places where vanishing conditions apply, with required orders.

    Everything over an irreducible factor of d (both branches of a split
    prime), plus every finite place of D with a negative coefficient.
    """
    groups = {}
    for P, n in D.items():
        if P.is_infinite:
            continue
        groups.setdefault(P.u, []).append((P, n))
    out = []
    for u, members in sorted(groups.items(),
                             key=lambda t: (t[0].degree, t[0].coeffs)):
        ord_u_d = sum(n for _, n in members if n > 0)
        coeff = {P: n for P, n in members}
        places = set(coeff)
        for P in list(places):
            places.add(P.conjugate())
        for Q in sorted(places, key=Place.sort_key):
            r = Q.ramification_index() * ord_u_d - coeff.get(Q, 0)
            if r > 0:
                out.append((Q, r))
    return out


def _rr_basis(curve, D):
    """Echelon basis of L(D) plus the ansatz frame used to express it."""
    p = curve.p
    d, deg_a, deg_b = _ansatz_frame(curve, D)
    na = deg_a + 1 if deg_a >= 0 else 0
    nb = deg_b + 1 if deg_b >= 0 else 0
    ncols = na + nb
    if ncols == 0:
        return [], d, deg_a, deg_b, (), ()
    rows = []
    for Q, r in _condition_places(curve, D, d):
        X, Y, fd = branch_series(curve, Q, r)
        xpow = [fd.one()] + [fd.zero()] * (r - 1)
        apow = []
        for _ in range(na):
            apow.append(xpow)
            xpow = ser_mul(fd, xpow, X, r)
        bpow = []
        if nb:
            xpow = Y[:r]
            for _ in range(nb):
                bpow.append(xpow)
                xpow = ser_mul(fd, xpow, X, r)
        for m in range(r):
            for comp in range(fd.deg):
                row = [fd.to_ints(ser[m])[comp] for ser in apow]
                row += [fd.to_ints(ser[m])[comp] for ser in bpow]
                rows.append(row)
    kernel = kernel_rows(p, rows, ncols)
    pivots = tuple(next(i for i, c in enumerate(v) if c) for v in kernel)
    basis = []
    for v in kernel:
        a = Poly(p, v[:na])
        b = Poly(p, v[na:])
        basis.append(FunctionElement(curve, a, b, d))
    return basis, d, deg_a, deg_b, tuple(tuple(v) for v in kernel), pivots


def rr_space(curve, D, with_h1=True):
    """L(D) as an RRSpace; h1 is computed by duality (h0 of K - D)."""
    basis, d, deg_a, deg_b, kernel, pivots = _rr_basis(curve, D)
    h1_val = 0
    if with_h1:
        h1_val = len(_rr_basis(curve, canonical_divisor(curve) - D)[0])
    return RRSpace(divisor=D, basis=tuple(basis), h0=len(basis), h1=h1_val,
                   denominator=d, deg_a=deg_a, deg_b=deg_b, kernel=kernel,
                   pivots=pivots)


def h0(curve, D):
    return len(_rr_basis(curve, D)[0])


def h1(curve, D, shortcut=True):
    """dim of first cohomology of O(D), via duality with the canonical divisor.

    For deg D >= 2g - 1 the dual divisor has negative degree and the value is
    0; with shortcut enabled that case skips the computation.
    """
    if shortcut and D.degree() >= 2 * curve.genus - 1:
        return 0
    return len(_rr_basis(curve, canonical_divisor(curve) - D)[0])


def euler_check(curve, D):
    """h0(D) - h1(D) = deg D + 1 - g, with both sides computed from scratch."""
    a = h0(curve, D)
    b = h1(curve, D, shortcut=False)
    return a - b == D.degree() + 1 - curve.genus


def is_base_point_free(curve, D, space):
    """Whether the sections of L(D) have no common zero.

    Returns (flag, base locus): the locus is the place-wise minimum of the
    effective divisors div(s) + D over the echelon basis.  For the spaces the
    pipeline checks (h0 <= 2) the basis minimum equals the minimum over all
    nonzero sections.
    """
    if space.h0 < 1:
        raise SectionRingError("base locus undefined for h0 = 0")
    locus = None
    for s in space.basis:
        zs = principal_divisor(s) + D
        if not zs.is_effective():
            raise SectionRingError(f"div(s) + D not effective for s = {s}")
        locus = zs if locus is None else locus.common_part(zs)
        if not locus:
            break
    return not locus, locus
