"""Shared reference runs for the two standard curves (built once per session)."""

from types import SimpleNamespace

import pytest

from sectionring.curve import validate_curve
from sectionring.graded import build_graded_model
from sectionring.reflexivity import syzygy_matrix
from sectionring.search import find_good_divisor

REFERENCE = {
    2: [1, 1, 0, 0, 0, 1],           # y^2 = x^5 + x + 1
    3: [1, 1, 0, 0, 0, 0, 0, 1],     # y^2 = x^7 + x + 1
}


def _reference_run(genus):
    curve = validate_curve(101, REFERENCE[genus])
    cert = find_good_divisor(curve, seed=0, max_tries=100)
    model = build_graded_model(curve, cert, N=6)
    A = syzygy_matrix(model)
    return SimpleNamespace(genus=genus, curve=curve, cert=cert, model=model,
                           A=A)


@pytest.fixture(scope="session")
def g2():
    return _reference_run(2)


@pytest.fixture(scope="session")
def g3():
    return _reference_run(3)


@pytest.fixture(scope="session", params=[2, 3])
def ref(request, g2, g3):
    return {2: g2, 3: g3}[request.param]
