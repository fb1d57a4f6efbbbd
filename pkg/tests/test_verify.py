# tests/test_verify.py
import pytest

from app.partitions.partition import Partition, SkewShape
from app.qjacobi.params import SpecParams
from app.verify.identity_registry import (
    IDENTITIES,
    REGISTRY,
    CheckResult,
    VerifyOptions,
    _jt_shapes,
    _run_item,
    get_identity,
    identity_table,
    run_identity,
    sample_tableau,
)


def test_registry_names_are_unique():
    assert len(REGISTRY) == len(IDENTITIES)
    assert [row[0] for row in identity_table()] == [identity.name for identity in IDENTITIES]
    assert {"jt", "product", "selberg", "lgv", "sample-tableau"} <= set(REGISTRY)


def test_unknown_identity():
    with pytest.raises(ValueError):
        get_identity("no-such-identity")


def test_check_result_lines():
    assert CheckResult("jt", "(2,1) n=3").line() == "PASS jt (2,1) n=3"
    failed = CheckResult("jt", "(2,1) n=3", False, "q^4 处 1 != 2")
    assert failed.line() == "FAIL jt (2,1) n=3: q^4 处 1 != 2"
    assert failed.to_json()["ok"] is False


def test_run_item_turns_errors_into_failures():
    def boom():
        raise ArithmeticError("分母为零")

    result = _run_item("det-lemma", "n=2", boom)
    assert not result.ok
    assert result.detail == "ArithmeticError: 分母为零"


def test_sample_tableau_identity():
    results = run_identity("sample-tableau", VerifyOptions())
    assert len(results) == 1 and results[0].ok
    assert sample_tableau().size == 41


def test_product_on_a_single_shape():
    opts = VerifyOptions(shape=SkewShape(Partition.of(2, 1)), n=3, cap=8, order_type="ge-gt")
    results = run_identity("product", opts)
    assert len(results) == 1
    assert results[0].ok, results[0].detail


def test_straight_only_identity_rejects_skew_shape():
    opts = VerifyOptions(shape=SkewShape(Partition.of(2, 1), Partition.of(1)), n=2)
    with pytest.raises(ValueError):
        run_identity("product", opts)


@pytest.mark.parametrize("name", ["lecture-hall", "anti-lecture-hall", "moments-inverse", "det-lemma", "det-prop", "paths", "lgv"])
def test_quick_runs_pass(name):
    results = run_identity(name, VerifyOptions(quick=True))
    assert results
    assert all(r.ok for r in results), [r.line() for r in results if not r.ok]


def test_results_keep_canonical_order():
    opts = VerifyOptions(quick=True, draws=2)
    labels = [r.item for r in run_identity("det-prop", opts)]
    assert labels == [f"n={n} draws=2 seed=0" for n in (1, 2, 3)]


def test_parameters_default_per_identity():
    opts = VerifyOptions()
    assert opts.params_or() == SpecParams.default()
    # expansion identities run at q=1/3, u=1/5, v=2/7 unless told otherwise
    assert opts.params_or(SpecParams.default_uv) == SpecParams.from_uv("1/3", "1/5", "2/7")
    given = SpecParams("1/2", "1/3", "1/5")
    assert VerifyOptions(params=given).params_or(SpecParams.default_uv) == given


def test_jacobi_trudi_battery_caps():
    battery = _jt_shapes(VerifyOptions())
    assert len(battery) >= 30
    assert all(cap >= 12 for _, _, cap in battery)
    assert all(cap == 6 for _, _, cap in _jt_shapes(VerifyOptions(quick=True)))
    assert _jt_shapes(VerifyOptions(cap=9, shape=SkewShape(Partition.of(2, 1)))) == [(SkewShape(Partition.of(2, 1)), 2, 9)]


def test_expansion_runs_at_uv_parameters():
    opts = VerifyOptions(shape=SkewShape(Partition.of(2, 1)), n=2, cap=6)
    results = run_identity("expansion", opts)
    assert len(results) == 1 and results[0].ok, results[0].detail
