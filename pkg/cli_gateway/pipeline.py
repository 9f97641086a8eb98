"""Scoring pipeline shared by the score, judge, reward and export commands."""

import asyncio
from typing import Dict, List, Optional, Sequence, Set, Tuple

import structlog
from pydantic import BaseModel, Field

from config import Config
from errors import DuplicateTrajectory, MetricError, VeritasError
from judge_service.dispatcher import judge_pairs
from judge_service.models import UNPARSEABLE, JudgeVerdict
from llm_service.llm_client import create_judge_backend
from metrics_service.aggregate import aggregate, aggregate_labels
from metrics_service.models import FaithDimension, FaithfulnessPair, PairKey, PairScore, Provenance
from metrics_service.pairs import extract_pairs
from metrics_service.think_answer import think_answer_score
from report_service.models import TrajectoryScores
from reward_service.combined import combined_reward
from reward_service.models import RewardBreakdown
from trajectory_service.grammar import check_format
from trajectory_service.models import Trajectory
from .run_config import RunConfig

logger = structlog.get_logger(__name__)

JUDGED_DIMENSIONS = (FaithDimension.THINK_SEARCH, FaithDimension.INFO_THINK)


class ScoreResult(BaseModel):
    rewards: List[RewardBreakdown] = Field(default_factory=list)
    pair_scores: List[PairScore] = Field(default_factory=list)
    trajectory_scores: List[TrajectoryScores] = Field(default_factory=list)
    failures: int = 0
    missing_verdicts: int = 0


def judged_pairs(trajectories: Sequence[Trajectory]) -> List[FaithfulnessPair]:
    """ThinkSearch then InfoThink pairs, trajectory by trajectory"""
    return [
        pair
        for trajectory in trajectories
        for dimension in JUDGED_DIMENSIONS
        for pair in extract_pairs(trajectory, dimension)
    ]


def judge_corpus(pairs: Sequence[FaithfulnessPair], run: RunConfig, settings: Config) -> List[JudgeVerdict]:
    """Run the configured judge over all pairs on a private event loop"""
    backend = create_judge_backend(run.judge, api_key=settings.api_key())

    async def _run() -> List[JudgeVerdict]:
        try:
            return await judge_pairs(pairs, backend, run.judge)
        finally:
            await backend.aclose()

    return asyncio.run(_run())


def _judged_scores(
    trajectory: Trajectory,
    dimension: FaithDimension,
    verdicts: Dict[PairKey, JudgeVerdict],
) -> Tuple[List[PairScore], List[int], int]:
    # Parseable scores for the metric; training labels count unparseable and
    # missing verdicts as 0.
    scores: List[PairScore] = []
    training_labels: List[int] = []
    missing = 0
    for pair in extract_pairs(trajectory, dimension):
        verdict = verdicts.get(pair.key)
        if verdict is None:
            missing += 1
            training_labels.append(0)
            continue
        if verdict.label == UNPARSEABLE:
            training_labels.append(0)
            continue
        scores.append(PairScore(pair=pair, label=verdict.label, provenance=Provenance.JUDGE))
        training_labels.append(int(verdict.label))
    return scores, training_labels, missing


def score_trajectory(
    trajectory: Trajectory,
    verdicts: Dict[PairKey, JudgeVerdict],
    run: RunConfig,
) -> Tuple[RewardBreakdown, TrajectoryScores, List[PairScore], int]:
    think_search, _, missing_ts = _judged_scores(trajectory, FaithDimension.THINK_SEARCH, verdicts)
    info_think, info_think_training, missing_it = _judged_scores(trajectory, FaithDimension.INFO_THINK, verdicts)

    think_answer: Optional[PairScore]
    try:
        think_answer = think_answer_score(trajectory, run.match_scope)
    except MetricError as e:
        logger.debug("think_answer_undefined", trajectory_id=trajectory.id, reason=str(e))
        think_answer = None

    scores = TrajectoryScores(
        trajectory_id=trajectory.id,
        dataset=trajectory.dataset,
        think_search=aggregate(think_search, run.aggregation),
        info_think=aggregate(info_think, run.aggregation),
        think_answer=float(think_answer.label) if think_answer is not None else None,
        format_valid=check_format(trajectory).valid,
        metadata=dict(trajectory.metadata),
    )
    breakdown = combined_reward(
        trajectory,
        run.reward_weights(),
        info_think=aggregate_labels(info_think_training, run.aggregation),
        think_answer=think_answer.label if think_answer is not None else None,
        normalizer=run.normalizer,
    )

    pair_scores = think_search + info_think + ([think_answer] if think_answer is not None else [])
    return breakdown, scores, pair_scores, missing_ts + missing_it


def score_corpus(
    trajectories: Sequence[Trajectory],
    verdicts: Sequence[JudgeVerdict],
    run: RunConfig,
) -> ScoreResult:
    """Score every trajectory against already-collected verdicts.

    A trajectory that fails is logged and counted; the batch carries on.

    Raises:
        DuplicateTrajectory: two trajectories share an id, so verdicts
            cannot be told apart.
    """
    seen: Set[str] = set()
    for trajectory in trajectories:
        if trajectory.id in seen:
            raise DuplicateTrajectory(trajectory.id)
        seen.add(trajectory.id)

    by_key = {verdict.pair_ref.key: verdict for verdict in verdicts}
    result = ScoreResult()

    for trajectory in trajectories:
        try:
            breakdown, scores, pair_scores, missing = score_trajectory(trajectory, by_key, run)
        except VeritasError as e:
            result.failures += 1
            logger.error("trajectory_scoring_failed", trajectory_id=trajectory.id, error=str(e))
            continue
        result.rewards.append(breakdown)
        result.trajectory_scores.append(scores)
        result.pair_scores.extend(pair_scores)
        result.missing_verdicts += missing

    if result.missing_verdicts:
        logger.warning("verdicts_missing", pairs=result.missing_verdicts)
    logger.info(
        "corpus_scored",
        trajectories=len(result.rewards),
        failures=result.failures,
        pair_scores=len(result.pair_scores),
    )
    return result
