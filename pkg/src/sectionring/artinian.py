"""Artinian reduction: cut R by two degree-one parameters and certify there.

A pair x, y in R_1 is a homogeneous system of parameters exactly when the
quotient R/(x, y) has Hilbert vector (1, g+1, g, 0, ...); since that vector
equals (1-t)^2 H_R(t), the match simultaneously certifies that (x, y) is a
regular sequence, i.e. that R is Cohen-Macaulay.  The quotient is a finite
dimensional algebra of total dimension 2g + 2 and Loewy length 3, its socle
is the top graded piece (dimension g = the type of R), and the image of the
syzygy matrix acts on it as a square-zero endomorphism whose image equals its
kernel on both sides.  Because the resolution is 1-periodic, those two rank
identities are a complete, non-windowed certificate that the reduced module
is totally reflexive; comparing dimensions shows it is nonfree.
"""

import random
from dataclasses import dataclass

from .errors import (ArtinianExactnessFailure, ExhaustedTries,
                     FreenessDetected, SectionRingError, SocleMismatch)
from .linalg import rref_rows


def _expected_vector(genus, upto):
    return [1, genus + 1, genus] + [0] * (upto - 2)


def sop_quotient_dims(model, xc, yc):
    """Graded dimensions of R / (x R + y R) for candidate degree-1 classes."""
    p = model.p
    r1 = model.piece("R", 1)
    xe = r1.element_from_coords(model, xc)
    ye = r1.element_from_coords(model, yc)
    dims = [model.dim("R", 0)]
    for n in range(1, model.N + 1):
        dst = model.piece("R", n)
        rows = []
        for e in model.piece("R", n - 1).basis:
            rows.append(dst.coords_of(xe * e))
            rows.append(dst.coords_of(ye * e))
        dims.append(dst.dim - rref_rows(p, rows)[0])
    return dims


def find_sop(model, seed=0, max_tries=200):
    """Random degree-1 pairs until the quotient Hilbert vector certifies."""
    p = model.p
    dim_r1 = model.dim("R", 1)
    want = _expected_vector(model.genus, model.N)
    for t in range(max_tries):
        rng = random.Random(seed * 1_000_003 + t)
        xc = [rng.randrange(p) for _ in range(dim_r1)]
        yc = [rng.randrange(p) for _ in range(dim_r1)]
        if not any(xc) or not any(yc):
            continue
        if sop_quotient_dims(model, xc, yc) == want:
            return xc, yc
    raise ExhaustedTries(f"no system of parameters in {max_tries} tries")


@dataclass
class ArtinianModel:
    """R/(x, y) with multiplication tables, plus the reduced syzygy matrix.

    dims is the graded Hilbert vector (1, g+1, g); table11[k][j] holds the
    degree-2 quotient coordinates of the product of the k-th and j-th
    degree-1 quotient basis elements.  abar is the 2x2 matrix of degree-1
    quotient classes.  mbar_dims (graded dimensions of M/(x, y)M) is kept for
    cross-checking and may be None for synthetic models.
    """

    p: int
    dims: list
    table11: list
    abar: list
    sop: tuple
    seed: int
    mbar_dims: list = None

    @property
    def total_dim(self):
        return sum(self.dims)

    def mult_map(self, v):
        """Matrix of multiplication by a degree-1 class on the whole quotient."""
        n = self.total_dim
        d0, d1, d2 = self.dims
        rows = [[0] * n for _ in range(n)]
        for i in range(d1):
            rows[d0 + i][0] = v[i] % self.p
        for i in range(d2):
            for j in range(d1):
                acc = 0
                for k in range(d1):
                    if v[k]:
                        acc += v[k] * self.table11[k][j][i]
                rows[d0 + d1 + i][d0 + j] = acc % self.p
        return rows

    def block_matrix(self, entries):
        """2x2 matrix of degree-1 classes as one endomorphism of quotient^2."""
        n = self.total_dim
        blocks = [[self.mult_map(entries[i][j]) for j in range(2)]
                  for i in range(2)]
        return [blocks[i][0][r] + blocks[i][1][r]
                for i in range(2) for r in range(n)]

    def to_json(self):
        return {
            "hilbert_vector": list(self.dims),
            "sop": [list(self.sop[0]), list(self.sop[1])],
            "seed": self.seed,
            "abar": [[list(v) for v in row] for row in self.abar],
            "mbar_dims": None if self.mbar_dims is None else list(self.mbar_dims),
        }


def _quotient_frame(model, kind, n, x_el, y_el):
    """RREF of (x, y) times the previous piece, plus the complement basis."""
    p = model.p
    dst = model.piece(kind, n)
    rows = []
    if n >= 1:
        for e in model.piece(kind, n - 1).basis:
            rows.append(dst.coords_of(x_el * e))
            rows.append(dst.coords_of(y_el * e))
    rank, pivots, red = rref_rows(p, rows)
    complement = [c for c in range(dst.dim) if c not in set(pivots)]

    def reduce(vec):
        out = [v % p for v in vec]
        for pc, row in zip(pivots, red):
            c = out[pc]
            if c:
                for j, rv in enumerate(row):
                    if rv:
                        out[j] = (out[j] - c * rv) % p
        return [out[c] for c in complement]

    return reduce, complement, dst.dim - rank


def build_artinian(model, xc, yc, seed=0):
    """Quotient bases, multiplication table, and the reduced syzygy matrix."""
    from .reflexivity import syzygy_matrix
    p = model.p
    g = model.genus
    want = _expected_vector(g, model.N)
    got = sop_quotient_dims(model, xc, yc)
    if got != want:
        raise SectionRingError(f"not a system of parameters: quotient "
                               f"dimensions {got}, expected {want}")
    r1 = model.piece("R", 1)
    x_el = r1.element_from_coords(model, xc)
    y_el = r1.element_from_coords(model, yc)
    reduces, lifts = {}, {}
    for n in range(3):
        reduce, complement, qdim = _quotient_frame(model, "R", n, x_el, y_el)
        reduces[n] = reduce
        lifts[n] = [model.piece("R", n).basis[c] for c in complement]
    dims = [len(lifts[0]), len(lifts[1]), len(lifts[2])]
    r2 = model.piece("R", 2)
    table11 = [[reduces[2](r2.coords_of(ei * ej)) for ej in lifts[1]]
               for ei in lifts[1]]
    A = syzygy_matrix(model)
    abar = [[reduces[1](list(A.coords[i][j])) for j in range(2)]
            for i in range(2)]
    mbar_dims = []
    for n in range(model.N + 1):
        dst = model.piece("M", n)
        rows = []
        if n >= 1:
            for e in model.piece("M", n - 1).basis:
                rows.append(dst.coords_of(x_el * e))
                rows.append(dst.coords_of(y_el * e))
        mbar_dims.append(dst.dim - rref_rows(p, rows)[0])
    return ArtinianModel(p=p, dims=dims, table11=table11, abar=abar,
                         sop=(tuple(xc), tuple(yc)), seed=seed,
                         mbar_dims=mbar_dims)


def verify_total_reflexivity(am):
    """Complete (non-windowed) certificate: im = ker on both sides.

    The reduced complex ... -> Qbar^2 -> Qbar^2 -> ... repeats one square-zero
    endomorphism, so exactness everywhere reduces to two statements: the
    matrix of abar and the matrix of its entrywise transpose each have
    rank = nullity = total_dim with square zero.  Nonfreeness: the cokernel
    needs 2 generators but has dimension total_dim != 2 * total_dim.
    """
    p = am.p
    n = am.total_dim
    report = {"total_dim": n, "complete": True, "windowed": False}
    for tag, entries in (("direct", am.abar),
                         ("transpose", [[am.abar[j][i] for j in range(2)]
                                        for i in range(2)])):
        big = am.block_matrix(entries)
        rank = rref_rows(p, big)[0]
        nullity = 2 * n - rank
        sq = [[sum(big[i][k] * big[k][j] for k in range(2 * n)) % p
               for j in range(2 * n)] for i in range(2 * n)]
        square_zero = all(all(v == 0 for v in row) for row in sq)
        report[tag] = {"rank": rank, "nullity": nullity,
                       "square_zero": square_zero,
                       "im_equals_ker": square_zero and rank == nullity}
        if not report[tag]["im_equals_ker"]:
            raise ArtinianExactnessFailure(
                f"{tag}: rank {rank}, nullity {nullity}, "
                f"square zero: {square_zero}")
    coker = 2 * n - report["direct"]["rank"]
    report["mbar_total_dim"] = coker
    if am.mbar_dims is not None and sum(am.mbar_dims) != coker:
        raise ArtinianExactnessFailure(
            f"direct quotient dimension {sum(am.mbar_dims)} != cokernel "
            f"dimension {coker}")
    if coker == 2 * n:
        raise FreenessDetected("reduced module is free of rank 2")
    report["nonfree"] = {"min_generators": 2, "dim": coker,
                         "free_rank2_dim": 2 * n, "nonfree": coker != 2 * n}
    return report


def socle_and_type(am):
    """Socle of the quotient: must be exactly the top graded piece.

    Returns (socle dimension, Loewy length).  The socle is the kernel of
    multiplication by all degree-1 classes; degree-2 classes are killed for
    degree reasons, so the check is that nothing of lower degree joins them.
    """
    p = am.p
    n = am.total_dim
    d0, d1, d2 = am.dims
    rows = []
    for k in range(d1):
        v = [0] * d1
        v[k] = 1
        rows.extend(am.mult_map(v))
    kernel_dim = n - rref_rows(p, rows)[0]
    if kernel_dim != d2:
        raise SocleMismatch(f"socle dimension {kernel_dim} != dim of the "
                            f"top piece {d2}")
    # the kernel contains the top piece (degree reasons); equality of
    # dimensions pins socle = top piece exactly
    if d2 == 0:
        raise SocleMismatch("top graded piece is zero")
    loewy_length = 3
    return kernel_dim, loewy_length
