"""Exception hierarchy shared by every VERITAS package."""

from typing import Any


class VeritasError(Exception):
    """Base class for all toolkit errors"""


class ConfigError(VeritasError):
    """Invalid run, judge or environment configuration"""


# Trajectory parsing

class TrajectoryError(VeritasError):
    """Raised when rollout text cannot be parsed into blocks"""

    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.offset = offset


class UnclosedTag(TrajectoryError):
    def __init__(self, kind: Any, offset: int):
        super().__init__(f"unclosed <{kind.tag}> tag at offset {offset}", offset)
        self.kind = kind


class NestedTag(TrajectoryError):
    def __init__(self, offset: int):
        super().__init__(f"nested or overlapping tag at offset {offset}", offset)


# Metrics

class MetricError(VeritasError):
    pass


class MissingAnswer(MetricError):
    pass


class MissingThink(MetricError):
    pass


class MixedDimensions(MetricError):
    pass


# Judge

class JudgeError(VeritasError):
    pass


class UnsupportedDimension(JudgeError):
    pass


class JudgeBackendError(JudgeError):
    """A backend call failed; the dispatcher retries these"""


# Reward

class RewardError(VeritasError):
    pass


class InvalidWeights(RewardError):
    pass


class EmptyGoldSet(RewardError):
    pass


# Agreement

class AgreementError(VeritasError):
    pass


class LengthMismatch(AgreementError):
    pass


class DimensionMismatch(AgreementError):
    pass


# Dataset I/O

class DatasetError(VeritasError):
    pass


class CorpusIOError(DatasetError):
    pass


class SchemaError(DatasetError):
    def __init__(self, message: str, line: int):
        super().__init__(message)
        self.line = line


class RefMismatch(DatasetError):
    pass


class DuplicateTrajectory(DatasetError):
    """Two trajectories share an id, so their pair keys would collide"""

    def __init__(self, trajectory_id: str):
        super().__init__(f"duplicate trajectory id {trajectory_id!r}")
        self.trajectory_id = trajectory_id
