import random
from math import prod

import pytest

from oracles import ssyt_brute
from zasym.errors import PreconditionViolated, TheoremPreconditionViolated
from zasym.partitions import (
    Partition,
    content_sum,
    enumerate_partitions,
    enumerate_z_asymmetric,
    frobenius,
    from_frobenius,
    is_z_asymmetric,
    k_statistic,
)
from zasym.polynomials import TruncatedMultiPolynomial as T
from zasym.schur import schur_truncated
from zasym.tabloids import content_gf, count_content_tabloids
from zasym.verify import (
    CLAIMS,
    _thm22_polynomial_decision,
    sweep,
    thm22_direct,
    verify_cor34,
    verify_cor35,
    verify_cor_content,
    verify_lemma_k,
    verify_littlewood_1,
    verify_littlewood_2,
    verify_remark31,
    verify_thm21,
    verify_thm22,
    verify_thm33,
)


def test_littlewood_1_low_degree_by_hand():
    r = verify_littlewood_1(2, 2)
    assert r.passed
    # degree-2 part of (1 - x1^2)(1 - x1 x2)(1 - x2^2) is -s_(2)
    assert r.lhs == T(2, 2, {(0, 0): 1, (2, 0): -1, (1, 1): -1, (0, 2): -1})
    assert r.lhs.homogeneous_part(2) == -schur_truncated(Partition((2,)), 2, 2)
    assert verify_littlewood_1(3, 0).passed
    assert verify_littlewood_1(3, 8).passed


def test_littlewood_2_low_degree_by_hand():
    r = verify_littlewood_2(1, 2)
    assert r.passed
    assert r.lhs == T(2, 2, {(0, 0): 1, (1, 1): -1})
    assert verify_littlewood_2(2, 0).passed
    assert verify_littlewood_2(2, 8).passed


@pytest.mark.parametrize("fn", [verify_littlewood_1, verify_littlewood_2])
@pytest.mark.parametrize("n", [2, 3])
def test_littlewood_mutation_is_detected(fn, n):
    for D in range(2, 9):
        r = fn(n, D, signed=False)
        assert not r.passed
        # the witness is a monomial where the two expansions really differ
        mono = tuple(r.witness["monomial"])
        assert r.lhs.terms.get(mono, 0) != r.rhs.terms.get(mono, 0)


def test_dimension_product_worked_instance_against_brute_force():
    r = verify_thm21((1,), (0,), 1, 2, 2, oracle=True)
    assert r.passed
    assert r.lhs == [4, 2] and r.rhs == [8, 1]
    # the four dimensions recounted with itertools
    shapes = [((3,), 2), ((2, 1), 2), ((2, 1), 3), ((1, 1, 1), 3)]
    assert [len(ssyt_brute(s, n)) for s, n in shapes] == [4, 2, 8, 1]


def test_dimension_product_other_examples():
    assert verify_thm21((), (), 1, 0, 0).passed
    assert verify_thm21((2, 0), (1, 0), 2, 3, 4).passed
    with pytest.raises(TheoremPreconditionViolated):
        verify_thm21((2, 0), (1, 0), 2, 1, 4)
    with pytest.raises(PreconditionViolated):
        verify_thm21((1, 1), (1, 0), 1, 5, 5)


def test_asymmetry_characterisation_examples():
    r = verify_thm22(Partition((3, 3)), 1)
    assert r.passed and r.lhs is True and r.rhs is True
    r = verify_thm22(Partition(()), 2)
    assert r.passed and r.lhs and r.rhs
    r = verify_thm22(Partition((2, 1)), 1)
    assert r.passed and r.lhs is False and r.rhs is False
    # at n = 2 the two content products already differ
    assert _thm22_polynomial_decision(Partition((2, 1)), 1) == (False, 2)


def test_asymmetry_decision_against_direct_comparison():
    rng = random.Random(1)
    pool = [lam for w in range(11) for lam in enumerate_partitions(w)]
    for _ in range(20):
        lam, m = rng.choice(pool), rng.randint(0, 2)
        assert _thm22_polynomial_decision(lam, m)[0] == thm22_direct(lam, m)
    assert CLAIMS["thm22-reduction"](count=20, seed=3).passed


def test_specialization_identity_examples():
    assert verify_thm33(Partition((2, 1, 1)), 1, 2).passed
    assert verify_thm33(Partition(()), 1, 0).passed
    assert verify_thm33(Partition((3, 1, 1, 1)), 1, 4).passed
    with pytest.raises(PreconditionViolated):
        verify_thm33(Partition((2, 1)), 1, 3)
    with pytest.raises(PreconditionViolated):
        verify_thm33(Partition((2, 1, 1)), 1, 1)


def test_lemma_and_corollary_examples():
    r = verify_lemma_k(Partition((2, 2, 2)), 1)
    assert r.passed and r.lhs == 6 == r.rhs
    assert k_statistic(Partition((2, 2, 2))) == 6 and k_statistic(Partition((3, 3))) == 3
    assert verify_lemma_k(Partition(()), 0).passed
    r = verify_lemma_k(Partition((3, 1, 1, 1)), 1)
    assert r.lhs == 6 and r.passed
    r = verify_cor_content(Partition((2, 2, 2)), 1)
    assert r.passed and r.lhs == -6
    assert content_sum(Partition((2, 2, 2))) == -3 and content_sum(Partition((3, 3))) == 3
    with pytest.raises(PreconditionViolated):
        verify_lemma_k(Partition((2, 1)), 1)


def test_content_product_example():
    r = verify_cor34((3, 0), (2, 0), 1, 4)
    assert r.passed
    assert r.lhs == count_content_tabloids(Partition((5, 3, 1)), 4)
    assert r.rhs == count_content_tabloids(Partition((4, 2, 2, 1)), 5)
    assert verify_cor34((), (), 2, 0).passed
    with pytest.raises(PreconditionViolated):
        verify_cor34((3, 0), (2, 0), 1, 2)


def test_content_product_exhaustive_small():
    for w in range(11):
        for base in enumerate_partitions(w):
            f = frobenius(base)
            for m in range(4):
                for n in range(base.length, 11):
                    assert verify_cor34(f.alpha, f.beta, m, n).passed


def test_shifted_generating_function_examples():
    r = verify_cor35(Partition((2, 2, 2)), 1, 2)
    assert r.passed and "enumeration" in r.detail
    assert verify_cor35(Partition(()), 1, 0).passed
    with pytest.raises(PreconditionViolated):
        verify_cor35(Partition((2, 2, 2)), 1, 1)


def test_shifted_generating_function_generating_functions_small():
    for m in (1, 2):
        for w in range(15):
            for lam in enumerate_z_asymmetric(w, m):
                low = lam.conjugate.length
                for n in range(low, low + 4):
                    lhs = content_gf(lam, m + n)
                    assert lhs == content_gf(lam.conjugate, n).shift(m * lam.weight)


def test_hook_product_witness_is_genuine():
    r = verify_remark31(8)
    assert r.passed
    w = r.witness
    s = from_frobenius((tuple(a + w["m"] for a in w["alpha"]), tuple(w["beta"])))
    t = from_frobenius((tuple(w["alpha"]), tuple(b + w["m"] for b in w["beta"])))
    assert prod(s.hooks()) == w["hooks_source"] != w["hooks_target"] == prod(t.hooks())


def test_sweep_examples():
    assert all(r.passed for r in sweep("thm21", max_weight=8, max_m=2))
    assert all(r.passed for r in sweep("lemma-k", max_weight=14, max_m=3))
    reports = sweep("thm22", max_weight=8, max_m=2)
    assert all(r.passed for r in reports)
    # every m-asymmetric conjugate is detected, and only those
    positives = {(tuple(r.parameters["partition"]), r.parameters["m"]) for r in reports if r.claim == "thm22" and r.lhs}
    expected = {
        (lam.parts, m)
        for w in range(9)
        for lam in enumerate_partitions(w)
        for m in range(3)
        if is_z_asymmetric(lam.conjugate, m)
    }
    assert positives == expected


def test_sweep_order_is_deterministic_and_parallel_safe():
    a = [r.to_json() for r in sweep("cor35", max_weight=8, max_m=2)]
    b = [r.to_json() for r in sweep("cor35", max_weight=8, max_m=2, workers=2)]
    assert a == b


def test_failing_report_has_witness():
    r = verify_littlewood_1(2, 4, signed=False)
    assert r.status == "fail" and r.witness is not None
    data = r.to_json()
    assert data["witness"]["monomial"] is not None
    assert "elapsed" not in data and "elapsed" in r.to_json(timing=True)
