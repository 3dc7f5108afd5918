"""Exact certificates for section rings of hyperelliptic divisors.

From a curve y^2 = f(x) over a prime field the package finds a degree-(g+1)
divisor with two independent sections and vanishing first cohomology, builds
the even/odd section rings R and M and the canonical module K, extracts the
2x2 degree-one matrix whose periodic complex resolves M, and certifies
exactness, duality, Ext vanishing, type, and the artinian reduction, all by
exact linear algebra over GF(p), emitted as a reproducible JSON certificate.
"""

__version__ = "0.1.0"

from .curve import (Divisor, HyperellipticCurve, Place, canonical_divisor,
                    rational_points, validate_curve)
from .fppoly import Poly, poly_factor, poly_gcd
from .funcfield import (FunctionElement, LocalExpansion, local_expansion,
                        places_over, principal_divisor, valuation)
from .riemann_roch import (RRSpace, euler_check, h0, h1, is_base_point_free,
                           rr_space)
from .search import DivisorCertificate, find_good_divisor, verify_certificate
from .graded import (GradedModel, GradedPiece, build_graded_model,
                     check_section_sequences, check_standard_graded,
                     hilbert_check)
from .reflexivity import (SyzygyMatrix, betti_numbers, canonical_and_type,
                          ext_vanishing, syzygy_matrix, verify_complex_window,
                          verify_dual_and_hom)
from .artinian import (ArtinianModel, build_artinian, find_sop,
                       socle_and_type, sop_quotient_dims,
                       verify_total_reflexivity)
from .cli import (RunConfig, canonical_json, emit_report, masked_document,
                  run_pipeline)

__all__ = [
    "__version__",
    "Poly", "poly_gcd", "poly_factor",
    "HyperellipticCurve", "Place", "Divisor", "validate_curve",
    "rational_points", "canonical_divisor",
    "FunctionElement", "LocalExpansion", "valuation", "principal_divisor",
    "local_expansion", "places_over",
    "RRSpace", "rr_space", "h0", "h1", "euler_check", "is_base_point_free",
    "DivisorCertificate", "find_good_divisor", "verify_certificate",
    "GradedModel", "GradedPiece", "build_graded_model", "hilbert_check",
    "check_standard_graded", "check_section_sequences",
    "SyzygyMatrix", "syzygy_matrix", "verify_complex_window",
    "verify_dual_and_hom", "ext_vanishing", "canonical_and_type",
    "betti_numbers",
    "ArtinianModel", "find_sop", "sop_quotient_dims", "build_artinian",
    "verify_total_reflexivity", "socle_and_type",
    "RunConfig", "run_pipeline", "emit_report", "canonical_json",
    "masked_document",
]
