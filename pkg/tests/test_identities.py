import pytest

import identities
from groups import parse_group
from identities import (
    report_sign2,
    symmetric_side,
    verify_color_products,
    verify_main,
    verify_main2,
    verify_rr,
    verify_rr_general,
)
from partitions import InvalidInputError, Partition, RPartitePartition

Z2 = parse_group("Z2", presets={})


def test_symmetric_side_examples():
    # hat([1|1]) = (2,2), sign 1, chi_{2,2}(2,2) = 2
    assert symmetric_side(RPartitePartition.of([1], [1]), Partition((1, 1)), 2) == 2
    assert symmetric_side(RPartitePartition.of([1], [1]), Partition((2,)), 2) == 0
    # padding to a larger arity does not change the value
    lam = RPartitePartition.of([2], [])
    assert symmetric_side(lam, Partition((2,)), 2) == symmetric_side(lam.padded(3), Partition((2,)), 3)


def test_rr_smallest_case():
    report = verify_rr(1, Z2)
    assert report.cases == 2
    assert report.passed
    assert report.to_dict()["verdict"] == "pass"


@pytest.mark.parametrize("spec, n", [("Z2", 5), ("Z3", 3), ("Z2xZ2", 2), ("Z4", 2)])
def test_rr_holds(spec, n):
    report = verify_rr(n, parse_group(spec, presets={}))
    assert report.cases > 0
    assert report.passed, report.to_dict()["failures"]


def test_rr_needs_a_nontrivial_abelian_group(presets):
    with pytest.raises(InvalidInputError):
        verify_rr(2, parse_group("Z1", presets={}))
    with pytest.raises(InvalidInputError):
        verify_rr(2, parse_group("S3", presets))
    with pytest.raises(InvalidInputError):
        verify_rr(0, Z2)


def test_rr_general_on_s3(presets):
    s3 = parse_group("S3", presets)
    report = verify_rr_general(3, s3)
    assert report.passed, report.to_dict()["failures"]
    out = report.to_dict()
    assert out["parameters"]["degrees"] == [1, 2]
    assert set(out["cases_per_degree"]) == {"1", "2"}
    assert sum(out["cases_per_degree"].values()) == out["cases"]
    only_two = verify_rr_general(3, s3, degree=2)
    assert only_two.passed
    assert only_two.cases == out["cases_per_degree"]["2"]
    with pytest.raises(InvalidInputError):
        verify_rr_general(2, s3, degree=3)


@pytest.mark.parametrize("a", [(1,), (5,), (2,), (3,)])
def test_main_on_z6(a, presets):
    report = verify_main(2, parse_group("Z6ex", presets), a)
    assert report.passed, report.to_dict()["failures"]
    out = report.to_dict()
    assert out["parameters"]["r"] == {(1,): 6, (5,): 6, (2,): 3, (3,): 2}[a]
    assert out["fibers"]["order"] == out["parameters"]["r"]


def test_main_on_klein_four(presets):
    report = verify_main(3, parse_group("V4", presets), (1, 1))
    assert report.passed, report.to_dict()["failures"]
    assert report.to_dict()["fibers"]["fibers"] == [[0, 3], [1, 2]]


def test_main_at_identity_matches_rr():
    main = verify_main(3, Z2, (0,))
    rr = verify_rr(3, Z2)
    assert main.cases == rr.cases
    assert main.passed and rr.passed


def test_main_rejects_nonabelian_models(presets):
    with pytest.raises(InvalidInputError):
        verify_main(2, parse_group("S3", presets), (1,))


@pytest.mark.parametrize("a", [(0,), (1,)])
def test_main2_on_s3(a, presets):
    report = verify_main2(3, parse_group("S3", presets), a)
    assert report.passed, report.to_dict()["failures"]
    out = report.to_dict()
    assert out["labelling"]["degrees"] == [1, 1, 2]
    if a == (1,):
        assert out["single_index_agreement"]["n_1"] == out["cases"]


def test_main2_uses_the_distinguished_element(presets):
    report = verify_main2(2, parse_group("S3", presets))
    assert report.parameters["element"] == [1]
    with pytest.raises(InvalidInputError):
        verify_main2(2, parse_group("quot:d=6,s=2,ab=Z2", presets={}))


def test_sign2():
    report = report_sign2(5)
    assert report.passed
    out = report.to_dict()
    assert out["halved_agreement_rate"] == 1.0
    assert "2,1,1" in {d["shape"] for d in out["literal_disagreements"]}
    assert out["literal_agreement_rate"] < 1.0
    with pytest.raises(InvalidInputError):
        report_sign2(0)


def test_parallel_sweeps_are_deterministic(presets):
    model = parse_group("Z6ex", presets)
    serial = verify_main(2, model, (1,), jobs=1).to_dict(include_elapsed=False)
    parallel = verify_main(2, model, (1,), jobs=2).to_dict(include_elapsed=False)
    assert serial == parallel
    assert "elapsed_seconds" not in serial


def test_failures_are_collected_and_truncated(monkeypatch):
    monkeypatch.setattr(identities, "symmetric_side", lambda lam, mu, r: 99)
    report = verify_rr(2, Z2, max_failures=3)
    out = report.to_dict()
    assert out["verdict"] == "fail"
    assert out["failure_count"] == report.cases
    assert len(out["failures"]) == 3
    assert out["failures"][0]["rhs"] == 99
    assert out["schema"] == 1


def test_failed_cases_carry_cyclotomic_values(monkeypatch, presets):
    monkeypatch.setattr(identities, "symmetric_side", lambda lam, mu, r: 0)
    report = verify_main(1, parse_group("Z6ex", presets), (1,), max_failures=100)
    lhs = [f["lhs"] for f in report.to_dict()["failures"]]
    assert {"level": 6, "coeffs": [0, 1], "pretty": "z6"} in lhs


@pytest.mark.parametrize("spec, n", [("Z2", 4), ("Z4", 3), ("Z2xZ2", 3), ("Z6", 2)])
def test_color_products_sweep(spec, n):
    report = verify_color_products(n, parse_group(spec, presets={}))
    assert report.passed, report.to_dict()["failures"]


def test_color_products_sweep_cases():
    # sizes 1 and 2: (2 shapes * 1 weight + 5 shapes * 2 weights) * 2 elements
    report = verify_color_products(2, Z2)
    assert report.cases == 24
    with pytest.raises(InvalidInputError):
        verify_color_products(0, Z2)


def test_color_products_sweep_needs_an_abelian_group(presets):
    with pytest.raises(InvalidInputError):
        verify_color_products(2, parse_group("S3", presets))


def test_color_products_sweep_reports_the_differing_product(monkeypatch):
    monkeypatch.setattr(identities, "alpha", lambda lam, fibers: 1)
    report = verify_color_products(1, Z2)
    assert not report.passed
    for failure in report.failures:
        assert failure.detail["element"] == [1]
        assert failure.rhs == -1
        assert failure.lhs != failure.rhs
