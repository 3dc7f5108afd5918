"""Truncated graded model of the section rings of a certified divisor.

For a divisor D with two sections alpha, beta the model carries, up to a
truncation bound N,

* R_n = L(2nD)       (the even section ring, a graded k-algebra),
* M_n = L((2n+1)D)   (the odd sections, a graded R-module),
* K_n = L(W + 2nD)   (W a canonical divisor: the canonical module of R),

each as an echelonized coordinate space with an exact coordinate map, so
that multiplication of sections becomes integer matrices over GF(p).  The
grading rules R_n R_m into R_{n+m}, R_n M_m into M_{n+m}, M_n M_m into
R_{n+m+1}, R_n K_m into K_{n+m} are enforced: a product that fails to land
in its piece raises instead of being projected.

The verification entry points check the Hilbert data of R, that R is
standard graded (including generation of R_{n+1} by the three products
alpha^2, alpha beta, beta^2 against R_n), and the two families of exact
multiplication sequences that drive every resolution computation downstream.
"""

from dataclasses import dataclass, field

from .curve import canonical_divisor
from .errors import (GradingViolation, HilbertMismatch, NotStandardGraded,
                     SequenceFailure)
from .fppoly import Poly
from .linalg import echelon_coords, kernel_rows, rref_rows
from .riemann_roch import rr_space


@dataclass(frozen=True)
class GradedPiece:
    """One graded component with its ansatz-echelon coordinate structure."""

    kind: str
    twist: int
    divisor: object
    basis: tuple
    dim: int
    denominator: object
    deg_a: int
    deg_b: int
    kernel: tuple
    pivots: tuple

    def coords_of(self, e):
        """Coordinates of a function element in this piece's basis.

        Solves inside the shared ansatz (common denominator, echelon pivots).
        Raises GradingViolation if the element is not in the piece.
        """
        p = e.curve.p
        if e.is_zero():
            return [0] * self.dim
        quo, rem = divmod(self.denominator, e.d)
        if rem:
            raise GradingViolation(
                f"denominator {e.d} does not divide the piece denominator")
        a = e.a * quo
        b = e.b * quo
        if (a and a.degree > self.deg_a) or (b and b.degree > self.deg_b):
            raise GradingViolation("pole at infinity exceeds the piece bound")
        na = self.deg_a + 1 if self.deg_a >= 0 else 0
        nb = self.deg_b + 1 if self.deg_b >= 0 else 0
        vec = [a[i] for i in range(na)] + [b[j] for j in range(nb)]
        coords = echelon_coords(p, self.pivots, [list(v) for v in self.kernel],
                                vec)
        if coords is None:
            raise GradingViolation(
                f"element outside the {self.kind}_{self.twist} piece")
        return coords

    def element_from_coords(self, model, coords):
        """Linear combination of the basis, assembled inside the ansatz.

        All basis elements share the ansatz denominator, so the combination
        is one numerator sum and a single canonicalization.
        """
        from .funcfield import FunctionElement
        p = model.curve.p
        na = self.deg_a + 1 if self.deg_a >= 0 else 0
        nb = self.deg_b + 1 if self.deg_b >= 0 else 0
        vec = [0] * (na + nb)
        for c, kv in zip(coords, self.kernel):
            if c % p:
                for j, v in enumerate(kv):
                    if v:
                        vec[j] = (vec[j] + c * v) % p
        return FunctionElement(model.curve, Poly(p, vec[:na]),
                               Poly(p, vec[na:]), self.denominator)


@dataclass
class GradedModel:
    """All pieces up to the truncation bound, with cached multiplication maps."""

    curve: object
    cert: object
    N: int
    pieces: dict
    alpha: object
    beta: object
    _mult_cache: dict = field(default_factory=dict, repr=False)

    @property
    def genus(self):
        return self.curve.genus

    @property
    def p(self):
        return self.curve.p

    def piece(self, kind, n):
        return self.pieces[(kind, n)]

    def dim(self, kind, n):
        if n < 0:
            return 0
        return self.pieces[(kind, n)].dim

    def dims(self, kind):
        return [self.pieces[(kind, n)].dim for n in range(self.N + 1)]

    def mult_matrix(self, h, src_kind, src_n, dst_kind, dst_n):
        """Rows of the map 'multiply by h' from one piece into another.

        Shape dim(dst) x dim(src); column j holds the dst-coordinates of
        h * (j-th basis element of src).
        """
        key = (h.key(), src_kind, src_n, dst_kind, dst_n)
        hit = self._mult_cache.get(key)
        if hit is not None:
            return hit
        src = self.piece(src_kind, src_n)
        dst = self.piece(dst_kind, dst_n)
        cols = [dst.coords_of(h * e) for e in src.basis]
        rows = [[cols[j][i] for j in range(src.dim)] for i in range(dst.dim)]
        self._mult_cache[key] = rows
        return rows

    def section_map_rows(self, src_kind, src_n, dst_kind, dst_n):
        """Rows of (r, s) -> r alpha + s beta from a doubled piece.

        The source is piece^2 with the alpha block first, matching the
        splitting convention of syzygy vectors.
        """
        ma = self.mult_matrix(self.alpha, src_kind, src_n, dst_kind, dst_n)
        mb = self.mult_matrix(self.beta, src_kind, src_n, dst_kind, dst_n)
        return [ra + rb for ra, rb in zip(ma, mb)]


def build_graded_model(curve, cert, N=6):
    """Compute all pieces R_n, M_n, K_n for 0 <= n <= N."""
    if N < 3:
        raise ValueError("truncation bound N must be at least 3")
    D = cert.divisor
    W = canonical_divisor(curve)
    pieces = {}
    for n in range(N + 1):
        for kind, div in (("R", (2 * n) * D), ("M", (2 * n + 1) * D),
                          ("K", W + (2 * n) * D)):
            sp = rr_space(curve, div, with_h1=False)
            pieces[(kind, n)] = GradedPiece(
                kind=kind, twist=n, divisor=div, basis=sp.basis, dim=sp.h0,
                denominator=sp.denominator, deg_a=sp.deg_a, deg_b=sp.deg_b,
                kernel=sp.kernel, pivots=sp.pivots)
    model = GradedModel(curve=curve, cert=cert, N=N, pieces=pieces,
                        alpha=cert.alpha, beta=cert.beta)
    m0 = model.piece("M", 0)
    if m0.basis != (cert.alpha, cert.beta):
        raise GradingViolation(
            "echelon basis of L(D) does not match the certificate")
    return model


def hilbert_check(model):
    """Hilbert function of R against the closed form, plus the series identity.

    H(R, 0) = 1 and H(R, n) = (1 - g) + 2n(g + 1) for n >= 1; multiplying the
    truncated series by (1 - t)^2 must give 1 + (g+1) t + g t^2, and the first
    difference of H is the nonzero constant 2(g + 1), so the Hilbert
    polynomial has degree 1 and R has Krull dimension 2.
    """
    g = model.genus
    N = model.N
    dims = model.dims("R")
    expected = [1] + [(1 - g) + 2 * n * (g + 1) for n in range(1, N + 1)]
    if dims != expected:
        raise HilbertMismatch(f"H(R, *) = {dims}, expected {expected}")
    numerator = [1, g + 1, g]
    for n in range(N + 1):
        c = dims[n]
        if n >= 1:
            c -= 2 * dims[n - 1]
        if n >= 2:
            c += dims[n - 2]
        want = numerator[n] if n < 3 else 0
        if c != want:
            raise HilbertMismatch(
                f"(1-t)^2 H_R(t) coefficient {n} is {c}, expected {want}")
    diffs = {dims[n + 1] - dims[n] for n in range(1, N)}
    if diffs != {2 * (g + 1)}:
        raise HilbertMismatch(f"first differences {diffs} not constant")
    return {
        "H_R": dims,
        "H_M": model.dims("M"),
        "H_K": model.dims("K"),
        "numerator": numerator,
        "identity_degree_checked": N,
        "hilbert_polynomial_degree": 1,
        "krull_dimension": 2,
    }


def check_standard_graded(model):
    """R_1 R_n = R_{n+1} for n < N, and the three products of the sections
    generate each R_{n+1} over R_n for 1 <= n < N."""
    p = model.p
    N = model.N
    alpha, beta = model.alpha, model.beta
    squares = [alpha * alpha, alpha * beta, beta * beta]
    r1 = model.piece("R", 1)
    sq_rank, _, _ = rref_rows(p, [r1.coords_of(s) for s in squares])
    degree1 = []
    products = []
    for n in range(N):
        dst = model.piece("R", n + 1)
        rows = []
        for e in model.piece("R", n).basis:
            for e1 in r1.basis:
                rows.append(dst.coords_of(e1 * e))
        rank = rref_rows(p, rows)[0]
        degree1.append({"n": n, "rank": rank, "dim_target": dst.dim,
                        "surjective": rank == dst.dim})
        if rank != dst.dim:
            raise NotStandardGraded(
                f"R_1 R_{n} has rank {rank} < dim R_{n + 1} = {dst.dim}")
    for n in range(1, N):
        dst = model.piece("R", n + 1)
        rows = []
        for e in model.piece("R", n).basis:
            for s in squares:
                rows.append(dst.coords_of(s * e))
        rank = rref_rows(p, rows)[0]
        products.append({"n": n, "rank": rank, "dim_target": dst.dim,
                         "surjective": rank == dst.dim})
        if rank != dst.dim:
            raise NotStandardGraded(
                f"section squares times R_{n} span rank {rank} "
                f"< dim R_{n + 1} = {dst.dim}")
    return {
        "degree1_generation": degree1,
        "section_square_generation": products,
        "section_squares_rank_in_R1": sq_rank,
    }


def check_section_sequences(model):
    """Exactness data of the two multiplication sequences.

    (r, s) -> r alpha + s beta maps R_n^2 onto M_n with kernel of dimension
    dim M_{n-1} (n = 0: an isomorphism), and maps M_m^2 onto R_{m+1} with
    kernel of dimension dim R_m for m >= 1.
    """
    p = model.p
    N = model.N
    rm_records = []
    for n in range(N):
        rows = model.section_map_rows("R", n, "M", n)
        rank, _, _ = rref_rows(p, rows)
        src_dim = 2 * model.dim("R", n)
        ker = src_dim - rank
        want = model.dim("M", n - 1) if n >= 1 else 0
        rec = {"n": n, "rank": rank, "dim_target": model.dim("M", n),
               "kernel": ker, "kernel_expected": want}
        rm_records.append(rec)
        if rank != model.dim("M", n):
            raise SequenceFailure(f"R_{n}^2 -> M_{n} not surjective")
        if ker != want:
            raise SequenceFailure(
                f"kernel of R_{n}^2 -> M_{n} has dim {ker}, expected {want}")
    mr_records = []
    for m in range(1, N):
        rows = model.section_map_rows("M", m, "R", m + 1)
        rank, _, _ = rref_rows(p, rows)
        ker = 2 * model.dim("M", m) - rank
        want = model.dim("R", m)
        rec = {"m": m, "rank": rank, "dim_target": model.dim("R", m + 1),
               "kernel": ker, "kernel_expected": want}
        mr_records.append(rec)
        if rank != model.dim("R", m + 1):
            raise SequenceFailure(f"M_{m}^2 -> R_{m + 1} not surjective")
        if ker != want:
            raise SequenceFailure(
                f"kernel of M_{m}^2 -> R_{m + 1} has dim {ker}, expected {want}")
    return {"into_M": rm_records, "into_R": mr_records}


def syzygy_kernel(model):
    """RREF basis of the degree-1 kernel of (r, s) -> r alpha + s beta."""
    rows = model.section_map_rows("R", 1, "M", 1)
    return kernel_rows(model.p, rows, 2 * model.dim("R", 1))
