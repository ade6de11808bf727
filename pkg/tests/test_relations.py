import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fockcap import (AlgebraSpec, Kind, build_annihilation, build_creation,
                     check_backend_agreement, check_cap, check_classical_limit,
                     check_hermiticity, check_mixed, check_number, check_pp,
                     check_vacuum_cyclic, run_grid, run_suite)
from fockcap.relations import EXACT, FLOAT, FLOAT_TOL

from conftest import small_grid


def test_exact_suite_spot_specs():
    for spec in (AlgebraSpec(Kind.FERMI, 2, 1), AlgebraSpec(Kind.BOSE, 2, 2),
                 AlgebraSpec(Kind.FERMI, 3, 3), AlgebraSpec(Kind.BOSE, 1, 4)):
        for rep in run_suite(spec, EXACT):
            assert rep.passed, (rep.relation, rep.indices, rep.residual)
            assert rep.residual == 0


def test_pp_reports_cover_all_pairs():
    spec = AlgebraSpec(Kind.BOSE, 3, 2)
    reports = check_pp(spec)
    pairs = {(rep.relation, rep.indices) for rep in reports}
    assert len(pairs) == 2 * 6  # i <= j over 3 modes, both ladder families
    assert all(rep.residual == 0 for rep in reports)


def test_fermi_creation_squares_to_zero():
    spec = AlgebraSpec(Kind.FERMI, 2, 2)
    up = build_creation(spec, 1)
    assert (up @ up).is_zero()


def test_mixed_relation_off_diagonal_pairs():
    spec = AlgebraSpec(Kind.BOSE, 2, 3)
    for rep in check_mixed(spec):
        assert rep.residual == 0


def test_mixed_relation_detects_wrong_cap():
    # same matrices checked against the relation for a different p must fail
    spec = AlgebraSpec(Kind.BOSE, 1, 3)
    up = build_creation(spec, 1)
    down = build_annihilation(spec, 1)
    wrong_p = 2
    from fockcap.operators import grade_diagonal
    c_upper = grade_diagonal(spec, lambda k: Fraction(1) - Fraction(k - 1, wrong_p))
    c_lower = grade_diagonal(spec, lambda k: Fraction(1) - Fraction(k, wrong_p))
    expr = c_upper @ (down @ up) - c_lower @ (up @ down) - c_lower @ c_upper
    assert not expr.is_zero()


def test_number_relation_and_multiplicities():
    for spec in small_grid(3, 3):
        for rep in check_number(spec):
            assert rep.passed


def test_cap_reports():
    spec = AlgebraSpec(Kind.FERMI, 3, 2)
    for rep in check_cap(spec):
        assert rep.residual == 0
    # cap 1 forbids two quanta outright
    spec = AlgebraSpec(Kind.BOSE, 1, 1)
    up = build_creation(spec, 1)
    assert (up @ up).is_zero()


def test_hermiticity_exact_and_float():
    spec = AlgebraSpec(Kind.BOSE, 2, 3)
    assert all(rep.residual == 0 for rep in check_hermiticity(spec, EXACT))
    assert all(rep.passed for rep in check_hermiticity(spec, FLOAT))


def test_vacuum_cyclic_rank_is_full():
    for spec in small_grid(3, 3):
        rep = check_vacuum_cyclic(spec)
        assert rep.passed and rep.residual == 0


def test_float_backend_suite():
    for spec in (AlgebraSpec(Kind.FERMI, 3, 2), AlgebraSpec(Kind.BOSE, 2, 4)):
        for rep in run_suite(spec, FLOAT):
            assert rep.passed, (rep.relation, rep.indices, rep.residual)
            assert float(rep.residual) <= FLOAT_TOL


def test_backend_agreement():
    for spec in small_grid(3, 3):
        for rep in check_backend_agreement(spec):
            assert rep.passed


def test_grid_runner_shape():
    reports = run_grid(2, 2, EXACT)
    specs = {(rep.spec.kind, rep.spec.n, rep.spec.p) for rep in reports}
    assert len(specs) == 8
    assert all(rep.passed for rep in reports)
    keys = [rep.sort_key() for rep in reports]
    assert keys == sorted(keys)


def test_report_serialization():
    rep = run_suite(AlgebraSpec(Kind.FERMI, 1, 1), EXACT)[0]
    payload = rep.as_dict()
    assert payload["kind"] == "fermi" and payload["pass"] is True
    assert payload["residual"] == "0"
    rep = run_suite(AlgebraSpec(Kind.FERMI, 1, 1), FLOAT)[0]
    assert isinstance(rep.as_dict()["residual"], float)


@given(st.sampled_from(["fermi", "bose"]), st.integers(1, 3), st.integers(1, 3),
       st.integers(1, 3), st.integers(1, 3))
def test_mixed_relation_property(kind, n, p, i, j):
    spec = AlgebraSpec(Kind(kind), n, p)
    i = 1 + (i - 1) % n
    j = 1 + (j - 1) % n
    reports = {rep.indices: rep for rep in check_mixed(spec)}
    assert reports[(i, j)].residual == 0


def test_classical_limit_boseding_values():
    report = check_classical_limit(Kind.BOSE, 1, 2, [10, 100, 1000])
    assert report.passed
    # deviation at p=100 is sqrt(2) - sqrt(2*99/100)
    assert report.deviations[1] == pytest.approx(
        math.sqrt(2) - math.sqrt(2 * 99 / 100), abs=1e-15)
    assert report.deviations[1] == pytest.approx(0.0071, abs=2e-4)
    assert all(d <= 6 / p for d, p in zip(report.deviations, report.p_values))
    assert report.deviations[0] > report.deviations[1] > report.deviations[2]


def test_classical_limit_fermi_grade_zero_is_exact():
    # the lowest creation coefficient is exactly 1, so a window of 1 shows
    # zero deviation for fermions at any cap
    report = check_classical_limit(Kind.FERMI, 2, 1, [10, 100])
    assert report.deviations == (0.0, 0.0)
    assert report.passed


def test_classical_limit_argument_validation():
    with pytest.raises(ValueError):
        check_classical_limit(Kind.BOSE, 1, 10, [10, 100])
    with pytest.raises(ValueError):
        check_classical_limit(Kind.BOSE, 1, 2, [100, 10])
    with pytest.raises(ValueError):
        check_classical_limit(Kind.BOSE, 1, 0, [10])
    with pytest.raises(ValueError):
        check_classical_limit(Kind.BOSE, 1, 2, [])


def test_classical_limit_serialization():
    report = check_classical_limit(Kind.FERMI, 2, 2, [10, 100])
    payload = report.as_dict()
    assert payload["kind"] == "fermi"
    assert payload["pass"] is True
    assert len(payload["deviations"]) == 2
