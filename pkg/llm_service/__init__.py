from .llm_client import (
    AnthropicJudgeBackend,
    HTTPJudgeBackend,
    JudgeBackend,
    MockJudgeBackend,
    OpenAIJudgeBackend,
    create_judge_backend,
)

__all__ = [
    "AnthropicJudgeBackend",
    "HTTPJudgeBackend",
    "JudgeBackend",
    "MockJudgeBackend",
    "OpenAIJudgeBackend",
    "create_judge_backend",
]
