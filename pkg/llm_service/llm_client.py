from abc import ABC, abstractmethod
from typing import Optional

import httpx
import structlog
from anthropic import AsyncAnthropic
from openai import AsyncOpenAI

from errors import ConfigError, JudgeBackendError
from judge_service.mock import mock_judge
from judge_service.models import JudgeBackendConfig, JudgePrompt

logger = structlog.get_logger(__name__)

# Verdicts are a single digit; a little headroom for salvageable extra text.
MAX_JUDGE_TOKENS = 16


class JudgeBackend(ABC):
    """Abstract base class for judge backends"""

    backend_id: str = "judge"

    @abstractmethod
    async def complete(self, prompt: JudgePrompt) -> str:
        """Return the raw judge output for a rendered prompt.

        Raises JudgeBackendError on any failure the dispatcher may retry.
        """
        pass

    async def aclose(self) -> None:
        pass


class HTTPJudgeBackend(JudgeBackend):
    """Judge speaking the plain JSON contract: {"model", "prompt", "temperature"} -> {"text"}"""

    def __init__(
        self,
        config: JudgeBackendConfig,
        api_key: Optional[str] = None,
        transport: Optional[httpx.AsyncBaseTransport] = None,
    ):
        if not config.endpoint:
            raise ConfigError("the http judge backend requires an endpoint")
        self.config = config
        self.backend_id = f"http:{config.model}"
        headers = {"Content-Type": "application/json"}
        if api_key:
            headers["Authorization"] = f"Bearer {api_key}"
        self.client = httpx.AsyncClient(
            timeout=httpx.Timeout(config.timeout),
            limits=httpx.Limits(max_connections=config.parallelism),
            headers=headers,
            transport=transport,
        )
        logger.debug("judge_backend_ready", backend="http", endpoint=config.endpoint, model=config.model)

    async def complete(self, prompt: JudgePrompt) -> str:
        try:
            response = await self.client.post(
                self.config.endpoint,
                json={
                    "model": self.config.model,
                    "prompt": prompt.text,
                    "temperature": self.config.temperature,
                },
            )
            response.raise_for_status()
            payload = response.json()
        except (httpx.HTTPError, ValueError) as e:
            raise JudgeBackendError(f"http judge request failed: {e}") from e

        text = payload.get("text") if isinstance(payload, dict) else None
        if not isinstance(text, str):
            raise JudgeBackendError("http judge response has no 'text' field")
        return text

    async def aclose(self) -> None:
        await self.client.aclose()


class AnthropicJudgeBackend(JudgeBackend):
    """Claude as the LLM judge"""

    def __init__(self, config: JudgeBackendConfig, api_key: Optional[str] = None):
        self.config = config
        self.backend_id = f"anthropic:{config.model}"
        self.client = AsyncAnthropic(api_key=api_key, timeout=config.timeout, max_retries=0)

    async def complete(self, prompt: JudgePrompt) -> str:
        try:
            response = await self.client.messages.create(
                model=self.config.model,
                max_tokens=MAX_JUDGE_TOKENS,
                temperature=self.config.temperature,
                messages=[{"role": "user", "content": prompt.text}],
            )
        except Exception as e:
            raise JudgeBackendError(f"anthropic judge request failed: {e}") from e
        return "".join(getattr(part, "text", "") for part in response.content)

    async def aclose(self) -> None:
        await self.client.close()


class OpenAIJudgeBackend(JudgeBackend):
    """OpenAI-compatible chat completions, e.g. a vLLM server hosting a distilled reward model"""

    def __init__(self, config: JudgeBackendConfig, api_key: Optional[str] = None):
        self.config = config
        self.backend_id = f"openai:{config.model}"
        self.client = AsyncOpenAI(
            api_key=api_key or "EMPTY",
            base_url=config.endpoint,
            timeout=config.timeout,
            max_retries=0,
        )

    async def complete(self, prompt: JudgePrompt) -> str:
        try:
            response = await self.client.chat.completions.create(
                model=self.config.model,
                messages=[{"role": "user", "content": prompt.text}],
                max_tokens=MAX_JUDGE_TOKENS,
                temperature=self.config.temperature,
            )
        except Exception as e:
            raise JudgeBackendError(f"openai judge request failed: {e}") from e
        return response.choices[0].message.content or ""

    async def aclose(self) -> None:
        await self.client.close()


class MockJudgeBackend(JudgeBackend):
    """Deterministic word-overlap judge for development and testing"""

    backend_id = "mock"

    def __init__(self, config: Optional[JudgeBackendConfig] = None):
        self.config = config or JudgeBackendConfig()

    async def complete(self, prompt: JudgePrompt) -> str:
        return mock_judge(prompt)


def create_judge_backend(config: JudgeBackendConfig, api_key: Optional[str] = None) -> JudgeBackend:
    """Factory function to create judge backends"""
    if config.client_type == "http":
        return HTTPJudgeBackend(config, api_key=api_key)
    elif config.client_type == "anthropic":
        if not api_key:
            raise ConfigError("the anthropic judge requires VERITAS_JUDGE_API_KEY")
        return AnthropicJudgeBackend(config, api_key=api_key)
    elif config.client_type == "openai":
        return OpenAIJudgeBackend(config, api_key=api_key)
    elif config.client_type == "mock":
        return MockJudgeBackend(config)
    else:
        raise ConfigError(f"Unknown judge client type: {config.client_type}")
