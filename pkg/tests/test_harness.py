import random
from dataclasses import dataclass
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from conftest import seeds, specs
from infstab import convexfn as cf
from infstab.convexfn import PLView
from infstab.extreal import NEG_INF, ExtReal
from infstab.harness import (
    PerturbationFamily,
    PerturbKind,
    StabilityContractViolated,
    brute_force_inf_oracle,
    perturb_member,
    random_finite_pl,
    random_spec,
    run_convergence_trial,
)
from infstab.stability import PreconditionViolated, check
from infstab.witness import doubling_schedule

ABS = cf.proper([(0, 0)], -1, 1)
ABS_G = cf.view(ABS)
SHIFTED_ABS = cf.proper([(1, 0)], -1, 1)
IDENTITY = cf.proper([(0, 0)], 1, 1)
ZERO_G = PLView(((F(0), F(0)),), F(0), F(0))


def test_additive_shrink_slopes():
    fam = PerturbationFamily(PerturbKind.ADDITIVE_SHRINK, 0, ABS, ABS_G)
    v = cf.view(fam.member(4))
    assert (v.left_slope, v.right_slope) == (F(-5, 4), F(5, 4))


def test_additive_shrink_keeps_vertex():
    fam = PerturbationFamily(PerturbKind.ADDITIVE_SHRINK, 0, ABS, ABS_G)
    report = run_convergence_trial(fam, doubling_schedule(2**20))
    assert all(r["inf"] == "0" for r in report.rows)


def test_jitter_converges_at_breakpoints():
    fam = PerturbationFamily(PerturbKind.BREAKPOINT_JITTER, 3, SHIFTED_ABS)
    for n in (1, 10, 1000):
        member = fam.member(n)
        assert 0 <= cf.eval_at(member, 1).value <= F(1, n)


def test_jitter_gap_within_one_over_n():
    for seed in range(20):
        fam = PerturbationFamily(PerturbKind.BREAKPOINT_JITTER, seed, SHIFTED_ABS)
        for n in doubling_schedule(2**10):
            gap = cf.infimum(fam.member(n)).value - 0
            assert 0 <= gap <= F(1, n)


def test_tail_steepen_keeps_inf():
    fam = PerturbationFamily(PerturbKind.TAIL_STEEPEN, 0, ABS)
    for n in (1, 2, 100):
        m = fam.member(n)
        assert cf.infimum(m) == ExtReal(0)
        v = cf.view(m)
        assert (v.left_slope, v.right_slope) == (F(-1) - F(1, n), F(1) + F(1, n))


def test_minus_inf_base_stays_minus_inf():
    fam = PerturbationFamily(PerturbKind.ADDITIVE_SHRINK, 0, IDENTITY, ZERO_G)
    report = run_convergence_trial(fam, doubling_schedule(1024))
    assert all(r["inf"] == "-inf" for r in report.rows)


def _bulging(fam):
    # a middle weight above the end average breaks convexity at every scale
    w = fam.jitter_weights(3)
    return w[1] > (w[0] + w[2]) / 2


def test_collinear_knots_use_uniform_fallback():
    base = cf.proper([(0, 0), (1, 0), (2, 0)], domain=cf.Interval.closed(0, 2))
    fams = (PerturbationFamily(PerturbKind.BREAKPOINT_JITTER, s, base) for s in range(1000))
    fam = next(f for f in fams if _bulging(f))
    m = perturb_member(fam, 5)
    cf.validate(m)
    vals = [cf.eval_at(m, x) for x in (0, 1, 2)]
    assert len(set(vals)) == 1


def test_unstable_base_rejected():
    relu = cf.proper([(0, 0)], 0, 1)
    with pytest.raises(PreconditionViolated):
        run_convergence_trial(PerturbationFamily(PerturbKind.TAIL_STEEPEN, 0, relu), [1, 2])


@dataclass(frozen=True)
class _Overclaiming(PerturbationFamily):
    def bound_constant(self):
        return F(0)


def test_violation_is_reported():
    fam = _Overclaiming(PerturbKind.BREAKPOINT_JITTER, 0, SHIFTED_ABS)
    assert any(fam.jitter_weights(1))
    with pytest.raises(StabilityContractViolated):
        run_convergence_trial(fam, doubling_schedule(64))
    report = run_convergence_trial(fam, doubling_schedule(64), raise_on_failure=False)
    assert not report.ok and "exceeds" in report.failure


def test_oracle_examples():
    assert brute_force_inf_oracle(ABS) == ExtReal(0)
    assert brute_force_inf_oracle(cf.proper([(0, 0)], -1, -1)) == NEG_INF


@given(seeds, st.sampled_from(list(PerturbKind)))
def test_trials_deterministic(seed, kind):
    base = random_spec(random.Random(seed))
    assume(check(base).stable)
    a = run_convergence_trial(PerturbationFamily(kind, seed, base), doubling_schedule(64), False)
    b = run_convergence_trial(PerturbationFamily(kind, seed, base), doubling_schedule(64), False)
    assert a.to_json() == b.to_json()


@given(specs(), seeds, st.sampled_from(list(PerturbKind)))
def test_stable_bases_survive(spec, seed, kind):
    assume(check(spec).stable)
    fam = PerturbationFamily(kind, seed, spec)
    for n in (1, 3, 64):
        cf.validate(fam.member(n))
    report = run_convergence_trial(fam, doubling_schedule(2**12))
    assert report.ok


@given(seeds)
def test_random_finite_pl_is_finite_everywhere(seed):
    g = random_finite_pl(random.Random(seed))
    assert g.left_slope is not None and g.right_slope is not None
    cf.validate(cf.from_view(cf.REAL_LINE, g))


@given(seeds)
def test_random_spec_deterministic(seed):
    assert random_spec(random.Random(seed)) == random_spec(random.Random(seed))
