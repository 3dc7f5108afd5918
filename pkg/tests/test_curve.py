import pytest

from sectionring.curve import (Divisor, Place, canonical_divisor,
                               rational_points, validate_curve)
from sectionring.errors import (CurveMismatch, EvenDegree, GenusTooSmall,
                                NotMonic, NotPrime, NotSquarefree)
from sectionring.fppoly import Poly, legendre


def test_validate_reference_curve():
    c = validate_curve(101, [1, 1, 0, 0, 0, 1])  # x^5 + x + 1
    assert c.genus == 2
    assert c.f.degree == 5


def test_validate_genus3():
    c = validate_curve(101, [1, 1, 0, 0, 0, 0, 0, 1])  # x^7 + x + 1
    assert c.genus == 3


def test_validate_rejections():
    with pytest.raises(NotSquarefree):
        validate_curve(101, [0, 0, 0, 0, 0, 1])  # x^5
    with pytest.raises(EvenDegree):
        validate_curve(101, [1, 0, 0, 0, 1])  # x^4 + 1
    with pytest.raises(NotPrime):
        validate_curve(100, [1, 1, 0, 0, 0, 1])
    with pytest.raises(NotPrime):
        validate_curve(7, [1, 1, 0, 0, 0, 1])  # prime but below the floor
    with pytest.raises(GenusTooSmall):
        validate_curve(101, [1, 1, 0, 1])  # cubic: genus 1
    with pytest.raises(NotMonic):
        validate_curve(101, [1, 1, 0, 0, 0, 2])


def brute_force_points(p, fcoeffs):
    """Enumerate affine points by quadratic residuosity; the test oracle."""
    f = Poly(p, fcoeffs)
    pts = []
    for x0 in range(p):
        z = f.evaluate(x0)
        if z == 0:
            pts.append((x0, 0))
        elif legendre(z, p) == 1:
            roots = sorted(y for y in range(p) if y * y % p == z)
            pts.extend((x0, y) for y in roots)
    return pts


def test_rational_points_against_bruteforce():
    # p = 11 is the smallest supported modulus; compare against enumeration
    for p, fcoeffs in [(11, [1, 1, 0, 0, 0, 1]), (13, [1, 1, 0, 0, 0, 1]),
                       (11, [0, 1, 0, 0, 0, 1])]:
        curve = validate_curve(p, fcoeffs)
        places = rational_points(curve)
        assert places[0].is_infinite
        # u = x - x0 stores coefficients (-x0, 1)
        got = sorted(((-P.u.coeffs[0]) % p, P.v.evaluate(0)) for P in places[1:])
        want = sorted(brute_force_points(p, fcoeffs))
        assert got == want
        assert len(places) <= 2 * p + 1


def test_place_construction_and_conjugates():
    curve = validate_curve(101, [1, 1, 0, 0, 0, 1])
    pts = rational_points(curve)
    finite = [P for P in pts if not P.is_infinite]
    for P in finite:
        Q = P.conjugate()
        if P.ramified:
            assert Q == P
        else:
            assert Q != P and Q.conjugate() == P
    with pytest.raises(ValueError):
        Place.finite(curve, Poly.x_minus(101, 0), Poly.const(101, 5))  # 25 != f(0)=1


def test_place_degree_of_quadratic():
    curve = validate_curve(101, [1, 1, 0, 0, 0, 1])
    # find an irreducible quadratic u with f a square mod u (split place)
    from sectionring.fppoly import is_irreducible
    from sectionring.funcfield import places_over
    p = curve.p
    for c0 in range(p):
        u = Poly(p, [c0, 0, 1])
        if is_irreducible(u):
            pls = places_over(curve, u)
            if len(pls) == 2:
                assert all(P.degree == 2 for P in pls)
                return
    raise AssertionError("no split quadratic found")


def test_divisor_arithmetic():
    curve = validate_curve(101, [1, 1, 0, 0, 0, 1])
    pts = rational_points(curve)
    D = Divisor.of_places(curve, pts[1:4])
    assert D.degree() == 3
    assert (D - D).degree() == 0
    assert not (D - D)
    assert D.is_effective()
    assert not (-D).is_effective()
    E = D + D
    assert E.coeff(pts[1]) == 2
    assert (D + E).degree() == D.degree() + E.degree()


def test_divisor_weights_places_by_degree():
    curve = validate_curve(101, [1, 1, 0, 0, 0, 1])
    from sectionring.fppoly import is_irreducible
    from sectionring.funcfield import places_over
    p = curve.p
    for c0 in range(p):
        u = Poly(p, [c0, 0, 1])
        if is_irreducible(u):
            pls = places_over(curve, u)
            if len(pls) == 2:  # split quadratic: each place has degree 2
                D = Divisor(curve, {pls[0]: 1})
                assert D.degree() == 2
                return
    raise AssertionError("no split quadratic found")


def test_divisor_curve_mismatch():
    c1 = validate_curve(101, [1, 1, 0, 0, 0, 1])
    c2 = validate_curve(101, [3, 1, 0, 0, 0, 1])
    d1 = Divisor(c1, {Place.infinite(): 1})
    d2 = Divisor(c2, {Place.infinite(): 1})
    with pytest.raises(CurveMismatch):
        d1 + d2


def test_canonical_divisor_degree():
    for fcoeffs, g in [([1, 1, 0, 0, 0, 1], 2), ([1, 1, 0, 0, 0, 0, 0, 1], 3)]:
        curve = validate_curve(101, fcoeffs)
        K = canonical_divisor(curve)
        assert K.degree() == 2 * g - 2
        assert K.coeff(Place.infinite()) == 2 * g - 2
