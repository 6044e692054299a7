"""Smoke tests for the python module built from the C++ core."""

import math

import numpy as np
import pytest

import complab


def test_gamma_identity_value():
    cov = complab.CovarianceSpec(np.eye(4))
    gamma = complab.compute_gamma(cov, 8).gamma
    assert np.allclose(gamma, 1.625 * np.eye(4))


def test_block_covariance_identity_case():
    cov = complab.make_block_covariance(2, 2, [1, 1], [1, 1], 0.0, 7)
    assert np.array_equal(cov.lambda_matrix, np.eye(4))


def test_sample_prompt_is_deterministic_and_linear():
    cov = complab.CovarianceSpec(np.eye(3))
    w = np.array([[1.0, -2.0, 0.5]])
    a = complab.sample_prompt(cov, w, 12, 42)
    b = complab.sample_prompt(cov, w, 12, 42)
    assert np.array_equal(a.xs, b.xs)
    assert np.allclose(a.ys, w @ a.xs)


def test_optimal_params_zero_gap():
    cov = complab.CovarianceSpec(np.diag([2.0, 1.0, 0.5]))
    params, point = complab.optimal_params(cov, 16, 1, 3)
    breakdown = complab.refactored_loss(point, cov, 16)
    assert abs(breakdown.gap) <= 1e-9
    assert abs(breakdown.loss - breakdown.min_loss) <= 1e-9
    pred_dim = params.w_kq.shape
    assert pred_dim == (4, 4)


def test_forward_pass_prediction():
    cov = complab.CovarianceSpec(np.eye(2))
    w = np.array([[1.0, 0.0]])
    prompt = complab.sample_prompt(cov, w, 40, 3)
    params, _ = complab.optimal_params(cov, 40, 1, 2)
    emb = complab.build_embedding(prompt)
    pred = complab.lsa_forward(params, emb, 40)
    assert pred.shape == (1,)
    assert math.copysign(1, pred[0]) == math.copysign(1, prompt.truth[0])


def test_scaling_curve_identity_value():
    cov = complab.CovarianceSpec(np.eye(4))
    curve = complab.scaling_bound_curve(cov, 16)
    assert curve[0][1] == 0.0
    assert abs(curve[4][1] - 64.0 / 21.0) <= 1e-12


def test_case_study_sign_patterns():
    assert complab.run_case_study() == [[1, 0], [0, 1], [1, 1]]


def test_sign_accuracy():
    assert complab.sign_accuracy(np.array([0.3, -2.0]), np.array([1.0, -1.0])) == 1.0
    assert complab.sign_accuracy(np.array([0.0, 1.0]), np.array([1.0, 1.0])) == 0.5


def test_logical_rules_table_rows():
    assert complab.apply_simple_rule("A", "apple") == "APPLE"
    assert complab.apply_simple_rule("C", "twenty @ eleven") == "thirty-one"
    assert complab.apply_composite_rule("A+F", "684 cat") == ["685 CAT"]
    assert complab.apply_composite_rule("G+H", "8 # 9 @ 7") == ["4", "11"]
    with pytest.raises(ValueError):
        complab.apply_simple_rule("B", "( one two three )")


def test_generate_and_render():
    data = complab.generate_dataset("A+F", "composite", n=5, k=4, seed=9)
    assert len(data) == 5
    inst = data[0]
    assert len(inst.demonstrations) == 4
    assert complab.apply_composite_rule("A+F", inst.test_input) == list(inst.gold)
    prompt = complab.render_prompt(inst)
    assert prompt.endswith("input: " + inst.test_input + "\noutput:")


def test_linguistic_fixture_composition():
    composite = complab.compose_T1(
        complab.fixtures.phrase_recombination_baby(),
        complab.fixtures.longer_chain_value(),
    )
    assert composite.target.startswith(
        "VALUE ( ON ( BABY , IN ( TRAY , HOUSE ) ) , NONE , NONE ) CCOMP"
    )
    t2 = complab.compose_T2(
        complab.fixtures.passive_book_squeeze(),
        complab.fixtures.object_cockroach_box(),
        "hedgehog",
    )
    assert t2.source == "A cockroach squeezed the hedgehog ."
    assert t2.target == "SQUEEZE ( COCKROACH , HEDGEHOG , NONE )"
    assert complab.rechain(t2.target) == t2.target


def test_metrics():
    assert complab.exact_match("FORD BELL", ["FORD BELL"]) == 1.0
    assert complab.exact_match("ford BELL", ["FORD BELL"]) == 0.5
    assert complab.word_error_rate("a x c d", "a b c d") == 0.25
    assert complab.normalize_prediction("output: 685 CAT\nmore") == "685 CAT"


def test_number_words_round_trip():
    for n in (1, 31, 53, 100, 181, 1000):
        assert complab.words_to_number(complab.number_to_words(n)) == n
