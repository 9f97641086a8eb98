"""
Exact Match and the weighted outcome + faithfulness reward
"""
import itertools

import numpy as np
import pytest

from errors import ConfigError, EmptyGoldSet, InvalidWeights
from reward_service import (
    WEIGHT_PRESETS,
    RewardBreakdown,
    RewardWeights,
    combined_reward,
    em_reward,
    exact_match,
    normalize_answer,
    weights_from_preset,
)
from trajectory_service import parse

VERITAS = WEIGHT_PRESETS["veritas"]

# (predicted, golden answers, hand label)
EM_CASES = [
    ("The Eiffel Tower", ["eiffel tower"], 1),
    ("Paris", ["Paris"], 1),
    ("Paris, France", ["Paris"], 0),
    ("paris", ["PARIS"], 1),
    ("  Paris  ", ["Paris"], 1),
    ("Paris.", ["Paris"], 1),
    ("A Tale of Two Cities", ["tale of two cities"], 1),
    ("an apple", ["apple"], 1),
    ("the the the", [""], 1),
    ("Theatre", ["atre"], 0),
    ("Anne Frank", ["Frank"], 0),
    ("New  York\tCity", ["new york city"], 1),
    ("new-york", ["newyork"], 1),
    ("new york", ["newyork"], 0),
    ("U.S.A.", ["USA"], 1),
    ("J.K. Rowling", ["jk rowling"], 1),
    ("1,000", ["1000"], 1),
    ("1 000", ["1000"], 0),
    ("3.14", ["314"], 1),
    ("Beethoven", ["Ludwig van Beethoven", "Beethoven"], 1),
    ("Ludwig Beethoven", ["Ludwig van Beethoven"], 0),
    ("The Nile", ["Nile", "The Nile River"], 1),
    ("\"Hamlet\"", ["Hamlet"], 1),
    ("Hamlet's", ["Hamlets"], 1),
    ("O'Neill", ["Neill"], 0),
]


class TestExactMatch:
    @pytest.mark.parametrize("predicted,golds,label", EM_CASES)
    def test_hand_labels(self, predicted, golds, label):
        assert exact_match(predicted, golds) == label

    def test_empty_gold_set(self):
        with pytest.raises(EmptyGoldSet):
            exact_match("Paris", [])

    def test_identity_normalizer(self):
        assert exact_match("The Eiffel Tower", ["eiffel tower"], normalizer="identity") == 0
        assert exact_match("Paris", ["Paris"], normalizer="identity") == 1

    def test_unknown_normalizer(self):
        with pytest.raises(ConfigError):
            exact_match("Paris", ["Paris"], normalizer="fuzzy")

    def test_symmetric(self):
        words = [p for p, _, _ in EM_CASES]
        for a, b in itertools.product(words, repeat=2):
            assert exact_match(a, [b]) == exact_match(b, [a])

    def test_normalize_answer(self):
        assert normalize_answer("  The  Quick, brown fox!  ") == "quick brown fox"


def _trajectory(answer="Paris", golds=("Paris",)):
    source = f"<think>capital is {answer}</think>" + (f"<answer>{answer}</answer>" if answer is not None else "")
    return parse(source, id="r1", golden_answers=golds)


class TestCombinedReward:
    def test_veritas_preset_weights(self):
        breakdown = combined_reward(_trajectory(), VERITAS, info_think=0.8, think_answer=1)
        assert breakdown.total == pytest.approx(0.96, abs=1e-12)
        assert breakdown.r_em == 1
        assert breakdown.format_valid

    def test_em_only_zero(self):
        breakdown = combined_reward(_trajectory(golds=("Rome",)), weights_from_preset("em-only"), 1.0, 1)
        assert breakdown.total == 0.0

    def test_undefined_components_are_zero(self):
        breakdown = combined_reward(_trajectory(golds=("Rome",)), VERITAS, info_think=None, think_answer=None)
        assert breakdown.total == 0.0
        assert breakdown.r_info_think == 0.0
        assert breakdown.r_think_answer == 0

    @pytest.mark.parametrize(
        "r_em,info_think,think_answer",
        list(itertools.product([0, 1], [None, 0.0, 0.25, 0.5, 1.0], [0, 1])),
    )
    def test_hand_totals(self, r_em, info_think, think_answer):
        golds = ("Paris",) if r_em else ("Rome",)
        breakdown = combined_reward(_trajectory(golds=golds), VERITAS, info_think, think_answer)
        expected = {
            (0, None, 0): 0.0, (0, None, 1): 0.02,
            (0, 0.0, 0): 0.0, (0, 0.0, 1): 0.02,
            (0, 0.25, 0): 0.0125, (0, 0.25, 1): 0.0325,
            (0, 0.5, 0): 0.025, (0, 0.5, 1): 0.045,
            (0, 1.0, 0): 0.05, (0, 1.0, 1): 0.07,
            (1, None, 0): 0.9, (1, None, 1): 0.92,
            (1, 0.0, 0): 0.9, (1, 0.0, 1): 0.92,
            (1, 0.25, 0): 0.9125, (1, 0.25, 1): 0.9325,
            (1, 0.5, 0): 0.925, (1, 0.5, 1): 0.945,
            (1, 1.0, 0): 0.95, (1, 1.0, 1): 0.97,
        }[(r_em, info_think, think_answer)]
        assert abs(breakdown.total - expected) <= 1e-12

    def test_missing_answer_scores_zero_em(self):
        trajectory = _trajectory(answer=None)
        assert em_reward(trajectory) == 0
        assert not combined_reward(trajectory, VERITAS, None, None).format_valid

    def test_empty_gold_set_scores_zero(self):
        assert em_reward(_trajectory(golds=())) == 0

    def test_last_answer_counts(self):
        trajectory = parse(
            "<think>a</think><answer>Rome</answer><think>b</think><answer>Paris</answer>",
            golden_answers=["Paris"],
        )
        breakdown = combined_reward(trajectory, VERITAS, None, None)
        assert breakdown.r_em == 1
        assert not breakdown.format_valid

    def test_format_bonus(self):
        weights = RewardWeights(w_em=0.9, w_info_think=0.05, w_think_answer=0.02, w_format=0.1)
        assert combined_reward(_trajectory(), weights, 1.0, 1).total == pytest.approx(1.07, abs=1e-12)
        assert weights.upper_bound == pytest.approx(1.07)

    def test_invalid_weights(self):
        with pytest.raises(InvalidWeights):
            combined_reward(_trajectory(), RewardWeights(w_em=-1, w_info_think=0, w_think_answer=0), None, None)
        with pytest.raises(InvalidWeights):
            combined_reward(_trajectory(), RewardWeights(w_em=0, w_info_think=0, w_think_answer=0), None, None)

    def test_unknown_preset(self):
        with pytest.raises(ConfigError):
            weights_from_preset("veritas-xl")

    def test_presets(self):
        assert weights_from_preset("veritas-info-think").w_think_answer == 0.0
        assert weights_from_preset("veritas-think-answer").w_info_think == 0.0

    def test_monotone_linear_and_bounded(self):
        rng = np.random.default_rng(11)
        trajectory = _trajectory()
        for _ in range(50):
            info = float(rng.random())
            low = combined_reward(trajectory, VERITAS, info, 0).total
            high = combined_reward(trajectory, VERITAS, min(1.0, info + 0.1), 1).total
            assert low <= high
            assert 0.0 <= high <= VERITAS.upper_bound + 1e-12
            alpha = float(rng.uniform(0.1, 5.0))
            scaled = combined_reward(trajectory, VERITAS.scaled(alpha), info, 1).total
            assert scaled == pytest.approx(alpha * combined_reward(trajectory, VERITAS, info, 1).total, rel=1e-12)

    def test_em_only_ranking_matches_em(self):
        em_only = weights_from_preset("em-only")
        right = combined_reward(_trajectory(golds=("Paris",)), em_only, 0.0, 0)
        wrong = combined_reward(_trajectory(golds=("Rome",)), em_only, 1.0, 1)
        assert right.total > wrong.total
        assert right.total == right.r_em

    def test_record_keys(self):
        record = combined_reward(_trajectory(), VERITAS, 0.5, 1).to_record()
        assert list(record) == ["id", "r_em", "r_info_think", "r_think_answer", "total", "format_valid"]
        assert RewardBreakdown.from_record(record).trajectory_id == "r1"
