from fractions import Fraction

import pytest

from coxhecke import affine as aff
from coxhecke.verify import VerifyScope, all_passed, check_twist_bound, format_report, run_verify


@pytest.fixture(scope="module")
def default_a2():
    scope = VerifyScope()
    return scope, run_verify(scope)


def test_default_scope_passes(default_a2):
    scope, results = default_a2
    assert all(r.failures == 0 for r in results), [r for r in results if r.failures]
    assert sum(r.cases for r in results) >= 1000
    names = {r.name for r in results}
    for required in ("root-signs", "simple-permutes", "inverse-inversions", "product-inversions", "root-exchange",
                     "length-exchange", "length-exchange-additive", "matsumoto", "associativity", "support-lengths",
                     "d-subset-dprime", "specialization", "sk-bound", "twist-bound-n2", "twist-bound-n3",
                     "model-agreement-n2", "model-agreement-n3"):
        assert required in names


def test_report_lines(default_a2):
    scope, results = default_a2
    text = format_report(results, scope, timing=False)
    lines = text.splitlines()
    assert lines[0] == "# seed=0 preset=A2 radius=8 samples=200"
    table = [line.split("\t") for line in lines if not line.startswith("#")]
    assert all(len(row) == 4 and row[3] == "0" for row in table)
    assert any(line.startswith("# paper-f holds at n=4") or line.startswith("# paper-f fails at n=4")
               for line in lines)
    assert any(line.startswith("# corrected-cap f holds at n=4") for line in lines)


def test_radius_zero_is_trivial():
    results = run_verify(VerifyScope(radius=0, samples=5))
    assert all_passed(results)
    assert all(r.failures == 0 for r in results)


def test_other_systems():
    for name in ("affine-A1", "I2(5)"):
        assert all_passed(run_verify(VerifyScope(preset=name, radius=4, samples=20, affine_ranks=(2,))))


def test_harness_detects_false_bound():
    # for n = 2 the defect is exactly 2l(v), so 3z is violated
    wrong = aff.BoundSpec(Fraction(3), Fraction(0), 0)
    tally = check_twist_bound(2, 4, wrong)
    assert tally.failures > 0
