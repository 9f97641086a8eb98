import hashlib
import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from config import Config
from dataset_service.models import SplitSpec
from errors import ConfigError, CorpusIOError, InvalidWeights
from judge_service.models import JudgeBackendConfig
from metrics_service.models import AggregationPolicy, MatchScope
from reward_service.exact_match import NORMALIZERS
from reward_service.models import RewardWeights, weights_from_preset

try:
    import tomllib
except ImportError:  # Python < 3.11
    tomllib = None  # type: ignore[assignment]

# Keys of the structured run file. Everything else is rejected.
RUN_FILE_KEYS = {
    "inputs",
    "output_dir",
    "weights_preset",
    "weights",
    "judge",
    "aggregation",
    "match_scope",
    "normalizer",
    "split",
}


class RunConfig(BaseModel):
    """Everything a batch command needs, after file and flag layering"""
    model_config = ConfigDict(frozen=True)

    inputs: List[Path] = Field(default_factory=list)
    output_dir: Optional[Path] = None
    weights_preset: Optional[str] = "veritas"
    weights: Optional[RewardWeights] = None
    judge: JudgeBackendConfig = Field(default_factory=JudgeBackendConfig)
    aggregation: AggregationPolicy = AggregationPolicy.MEAN
    match_scope: MatchScope = MatchScope.LAST_THINK
    normalizer: str = "standard"
    split: SplitSpec = Field(default_factory=SplitSpec)

    def reward_weights(self) -> RewardWeights:
        """Explicit weights win over the preset; both are checked"""
        weights = self.weights or weights_from_preset(self.weights_preset or "veritas")
        try:
            return weights.check()
        except InvalidWeights as e:
            raise ConfigError(str(e)) from e

    def fingerprint(self) -> Dict[str, Any]:
        """The settings that determine outputs; paths are excluded"""
        return self.model_dump(mode="json", exclude={"inputs", "output_dir"})

    def config_hash(self) -> str:
        canonical = json.dumps(self.fingerprint(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def load_run_file(path: Path) -> Dict[str, Any]:
    """Read a JSON or TOML run file into a plain dict"""
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise CorpusIOError(f"cannot read run file {path}: {e}") from e

    if path.suffix.lower() == ".toml":
        if tomllib is None:
            raise ConfigError("TOML run files need Python 3.11 or newer; use JSON instead")
        try:
            data = tomllib.loads(raw.decode("utf-8"))
        except (tomllib.TOMLDecodeError, UnicodeDecodeError) as e:
            raise ConfigError(f"invalid TOML in {path}: {e}") from e
    else:
        try:
            data = json.loads(raw)
        except (json.JSONDecodeError, UnicodeDecodeError) as e:
            raise ConfigError(f"invalid JSON in {path}: {e}") from e

    if not isinstance(data, dict):
        raise ConfigError(f"run file {path} must hold a table/object at the top level")
    unknown = sorted(set(data) - RUN_FILE_KEYS)
    if unknown:
        raise ConfigError(f"unknown run file keys: {', '.join(unknown)}")
    return data


def _drop_none(values: Dict[str, Any]) -> Dict[str, Any]:
    return {key: value for key, value in values.items() if value is not None}


def build_run_config(
    settings: Config,
    run_file: Optional[Path] = None,
    overrides: Optional[Dict[str, Any]] = None,
    judge_overrides: Optional[Dict[str, Any]] = None,
    mock: bool = False,
) -> RunConfig:
    """Layer environment settings, the run file and command-line flags.

    Later layers win; unset flags (None) leave earlier values alone. ``mock``
    selects the deterministic judge and conflicts with any other explicitly
    requested backend.

    Raises:
        ConfigError: conflicting or invalid settings.
    """
    base: Dict[str, Any] = {
        "weights_preset": settings.weights_preset,
        "aggregation": settings.aggregation,
        "match_scope": settings.match_scope,
    }
    judge: Dict[str, Any] = dict(settings.get_judge_config())

    if run_file is not None:
        data = load_run_file(run_file)
        judge.update(_drop_none(data.pop("judge", None) or {}))
        if "weights" in data:
            # Explicit weights in the file replace the environment preset.
            base.pop("weights_preset")
        base.update(data)

    flags = _drop_none(overrides or {})
    if "weights_preset" in flags:
        base.pop("weights", None)
    split_flags = _drop_none(flags.pop("split", None) or {})
    if split_flags:
        base["split"] = {**(base.get("split") or {}), **split_flags}
    base.update(flags)

    requested = _drop_none(judge_overrides or {})
    if mock:
        chosen = requested.get("client_type")
        if chosen is not None and chosen != "mock":
            raise ConfigError(f"--mock conflicts with --judge-client {chosen}; select exactly one judge backend")
        requested["client_type"] = "mock"
    judge.update(requested)

    base["judge"] = JudgeBackendConfig.build(**judge)
    if base.get("normalizer", "standard") not in NORMALIZERS:
        raise ConfigError(f"unknown normalizer {base['normalizer']!r}; choose from {', '.join(sorted(NORMALIZERS))}")

    try:
        run = RunConfig.model_validate(base)
    except ValidationError as e:
        raise ConfigError(f"invalid run configuration: {e}") from e
    run.reward_weights()
    return run
