import asyncio
from typing import TYPE_CHECKING, List, Optional, Sequence

import structlog

from errors import ConfigError, JudgeBackendError
from metrics_service.models import FaithfulnessPair
from .models import UNPARSEABLE, JudgeBackendConfig, JudgePrompt, JudgeVerdict
from .prompts import render_prompt
from .verdicts import parse_verdict

if TYPE_CHECKING:
    from llm_service.llm_client import JudgeBackend

logger = structlog.get_logger(__name__)


async def _judge_one(
    prompt: JudgePrompt,
    backend: "JudgeBackend",
    semaphore: asyncio.Semaphore,
    config: JudgeBackendConfig,
) -> JudgeVerdict:
    failure = ""
    for attempt in range(config.max_attempts):
        try:
            async with semaphore:
                raw = await backend.complete(prompt)
            return JudgeVerdict(
                pair_ref=prompt.pair_ref,
                label=parse_verdict(raw),
                raw=raw,
                backend=backend.backend_id,
            )
        except JudgeBackendError as e:
            failure = str(e)
            logger.warning(
                "judge_request_failed",
                trajectory_id=prompt.pair_ref.trajectory_id,
                dimension=prompt.dimension.value,
                pair_index=prompt.pair_ref.pair_index,
                attempt=attempt + 1,
                error=failure,
            )
        if attempt < config.max_attempts - 1 and config.retry_backoff > 0:
            await asyncio.sleep(config.retry_backoff * 2 ** attempt)

    return JudgeVerdict(
        pair_ref=prompt.pair_ref,
        label=UNPARSEABLE,
        raw=f"judge failed after {config.max_attempts} attempts: {failure}",
        backend=backend.backend_id,
    )


async def judge_pairs(
    pairs: Sequence[FaithfulnessPair],
    backend: "JudgeBackend",
    config: Optional[JudgeBackendConfig] = None,
) -> List[JudgeVerdict]:
    """Judge ThinkSearch/InfoThink pairs with bounded concurrency.

    Verdicts come back in input order. Exhausted retries give an Unparseable
    verdict carrying the failure description; the batch never aborts on a
    single pair.

    Raises:
        ConfigError: invalid dispatch settings.
        UnsupportedDimension: a ThinkAnswer pair was passed in.
    """
    config = config or getattr(backend, "config", None) or JudgeBackendConfig()
    if config.parallelism < 1 or config.max_attempts < 1:
        raise ConfigError("judge parallelism and max_attempts must be at least 1")
    if not pairs:
        return []

    prompts = [render_prompt(pair) for pair in pairs]
    semaphore = asyncio.Semaphore(config.parallelism)
    verdicts = await asyncio.gather(
        *(_judge_one(prompt, backend, semaphore, config) for prompt in prompts)
    )

    unparseable = sum(1 for verdict in verdicts if not verdict.parseable)
    logger.info("judge_batch_complete", backend=backend.backend_id, pairs=len(verdicts), unparseable=unparseable)
    return list(verdicts)
