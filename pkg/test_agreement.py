"""
Inter-rater agreement: consistent ratio and Cohen's kappa
"""
import io

import numpy as np
import pandas as pd
import pytest
from sklearn.metrics import cohen_kappa_score

from agreement_utils import (
    Confusion,
    LabelSequence,
    agreement,
    confusion_counts,
    drop_unparseable,
    kappa_from_counts,
    matrix_to_csv,
    pairwise_matrix,
)
from errors import DimensionMismatch, LengthMismatch
from judge_service import UNPARSEABLE
from metrics_service import FaithDimension

INFO = FaithDimension.INFO_THINK


def _seq(labels, rater="r", dimension=INFO):
    return LabelSequence(labels=list(labels), rater=rater, dimension=dimension)


def _brute_force(labels_a, labels_b):
    n = len(labels_a)
    p_o = sum(1 for x, y in zip(labels_a, labels_b) if x == y) / n
    pa1 = sum(labels_a) / n
    pb1 = sum(labels_b) / n
    p_e = pa1 * pb1 + (1 - pa1) * (1 - pb1)
    if abs(1 - p_e) < 1e-15:
        return p_o, (1.0 if p_o == 1 else 0.0)
    return p_o, (p_o - p_e) / (1 - p_e)


class TestKappa:
    def test_hand_example(self):
        report = agreement(_seq([1, 1, 0, 0], "a"), _seq([1, 0, 0, 0], "b"))
        assert report.consistent_ratio == pytest.approx(0.75)
        assert report.kappa == pytest.approx(0.5)
        assert report.confusion == Confusion(a=1, b=1, c=0, d=2)
        assert not report.degenerate

    def test_perfect_agreement(self):
        report = agreement(_seq([1, 0, 1, 0, 1]), _seq([1, 0, 1, 0, 1]))
        assert report.consistent_ratio == 1.0
        assert report.kappa == 1.0

    def test_complete_disagreement(self):
        report = agreement(_seq([1, 0, 1, 0]), _seq([0, 1, 0, 1]))
        assert report.consistent_ratio == 0.0
        assert report.kappa == pytest.approx(-1.0)

    def test_opposite_constant_raters(self):
        report = agreement(_seq([1, 1]), _seq([0, 0]))
        assert report.kappa == 0.0
        assert report.consistent_ratio == 0.0
        assert not report.degenerate

    def test_degenerate_same_constant(self):
        report = agreement(_seq([1, 1, 1]), _seq([1, 1, 1]))
        assert report.degenerate
        assert report.kappa == 1.0

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            agreement(_seq([1, 0]), _seq([1, 0, 1]))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            agreement(_seq([1, 0]), _seq([1, 0], dimension=FaithDimension.THINK_SEARCH))

    def test_empty_sequence_rejected(self):
        with pytest.raises(ValueError):
            _seq([])

    def test_matches_brute_force(self):
        rng = np.random.default_rng(42)
        for _ in range(1000):
            n = int(rng.integers(1, 201))
            bias_a, bias_b = rng.random(2)
            labels_a = [int(x) for x in rng.random(n) < bias_a]
            labels_b = [int(x) for x in rng.random(n) < bias_b]
            report = agreement(_seq(labels_a, "a"), _seq(labels_b, "b"))
            p_o, kappa = _brute_force(labels_a, labels_b)
            assert report.n == n
            assert report.consistent_ratio == pytest.approx(p_o, abs=1e-12)
            assert report.kappa == pytest.approx(kappa, abs=1e-9)
            assert -1.0 <= report.kappa <= 1.0
            if not report.degenerate:
                assert report.kappa == pytest.approx(cohen_kappa_score(labels_a, labels_b), abs=1e-9)

    def test_symmetric(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            n = int(rng.integers(1, 50))
            labels_a = [int(x) for x in rng.integers(0, 2, size=n)]
            labels_b = [int(x) for x in rng.integers(0, 2, size=n)]
            forward = agreement(_seq(labels_a), _seq(labels_b))
            backward = agreement(_seq(labels_b), _seq(labels_a))
            assert forward.kappa == pytest.approx(backward.kappa, abs=1e-12)
            assert forward.consistent_ratio == backward.consistent_ratio

    def test_independent_raters_near_zero(self):
        rng = np.random.default_rng(2024)
        kappas = []
        for _ in range(20):
            labels_a = [int(x) for x in rng.integers(0, 2, size=10000)]
            labels_b = [int(x) for x in rng.integers(0, 2, size=10000)]
            kappas.append(agreement(_seq(labels_a), _seq(labels_b)).kappa)
        assert abs(float(np.mean(kappas))) < 0.05

    def test_kappa_from_counts_integers(self):
        ratio, kappa, degenerate = kappa_from_counts(Confusion(a=20, b=5, c=10, d=15))
        assert ratio == pytest.approx(0.7)
        assert kappa == pytest.approx(0.4)
        assert not degenerate

    def test_confusion_orientation(self):
        assert confusion_counts([1, 1, 0, 0], [1, 0, 1, 0]) == Confusion(a=1, b=1, c=1, d=1)
        assert confusion_counts([1, 0], [0, 0]) == Confusion(a=0, b=1, c=0, d=1)


class TestDropUnparseable:
    def test_drops_either_side(self):
        kept_a, kept_b, dropped = drop_unparseable([1, UNPARSEABLE, 0, 1], [1, 0, UNPARSEABLE, 0])
        assert kept_a == [1, 1]
        assert kept_b == [1, 0]
        assert dropped == 2

    def test_nothing_to_drop(self):
        assert drop_unparseable([1, 0], [0, 0]) == ([1, 0], [0, 0], 0)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            drop_unparseable([1], [1, 0])


class TestPairwiseMatrix:
    RATERS = [
        _seq([1, 1, 0, 0, 1, 0], "gpt"),
        _seq([1, 0, 0, 0, 1, 1], "claude"),
        _seq([1, 1, 0, 1, 1, 0], "human"),
    ]

    def test_symmetric_with_unit_diagonal(self):
        matrix = pairwise_matrix(self.RATERS)
        assert len(matrix) == 3
        for i in range(3):
            assert matrix[i][i].kappa == 1.0
            for j in range(3):
                assert matrix[i][j].kappa == pytest.approx(matrix[j][i].kappa, abs=1e-12)
                assert matrix[i][j].rater_a == self.RATERS[i].rater
                assert matrix[i][j].rater_b == self.RATERS[j].rater
        assert matrix[1][0].confusion == matrix[0][1].confusion.transposed()

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            pairwise_matrix([_seq([1, 0]), _seq([1, 0, 1], "b")])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            pairwise_matrix([_seq([1, 0]), _seq([1, 0], "b", FaithDimension.THINK_SEARCH)])

    def test_empty(self):
        assert pairwise_matrix([]) == []

    def test_csv(self):
        text = matrix_to_csv(pairwise_matrix(self.RATERS))
        assert text.splitlines()[0] == "rater_a,rater_b,n,consistent_ratio,kappa"
        frame = pd.read_csv(io.StringIO(text))
        assert len(frame) == 9
        assert set(frame["rater_a"]) == {"gpt", "claude", "human"}
        diagonal = frame[frame["rater_a"] == frame["rater_b"]]
        assert list(diagonal["kappa"]) == [1.0, 1.0, 1.0]
