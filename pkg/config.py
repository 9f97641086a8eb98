from typing import List, Optional

from pydantic import SecretStr
from pydantic_settings import BaseSettings, SettingsConfigDict

TOOL_VERSION = "1.0.0"

JUDGE_CLIENT_TYPES = ["http", "anthropic", "openai", "mock"]


class Config(BaseSettings):
    """Configuration for the VERITAS toolkit, read from VERITAS_* variables"""

    model_config = SettingsConfigDict(env_prefix="VERITAS_", env_file=".env", extra="ignore")

    # Logging
    log_level: str = "INFO"
    log_format: str = "console"  # "console", "json"

    # Judge backend
    judge_client_type: str = "mock"
    judge_endpoint: Optional[str] = None
    judge_model: str = "claude-3-7-sonnet-20250219"
    judge_api_key: Optional[SecretStr] = None
    judge_temperature: float = 0.0
    judge_max_attempts: int = 3
    judge_timeout: float = 60.0
    judge_parallelism: int = 8
    judge_retry_backoff: float = 0.5

    # Scoring defaults
    weights_preset: str = "veritas"
    aggregation: str = "mean"
    match_scope: str = "last_think"

    def get_judge_config(self) -> dict:
        """Judge backend settings as plain keyword arguments (no credential)"""
        return {
            "client_type": self.judge_client_type,
            "endpoint": self.judge_endpoint,
            "model": self.judge_model,
            "temperature": self.judge_temperature,
            "max_attempts": self.judge_max_attempts,
            "timeout": self.judge_timeout,
            "parallelism": self.judge_parallelism,
            "retry_backoff": self.judge_retry_backoff,
        }

    def api_key(self) -> Optional[str]:
        return self.judge_api_key.get_secret_value() if self.judge_api_key else None

    def validate_config(self) -> List[str]:
        """Validate configuration and return any issues.

        Checks the environment as given. The http endpoint may still come
        from a flag or run file, so it is checked once the judge config is
        layered.
        """
        issues = []

        if self.judge_client_type not in JUDGE_CLIENT_TYPES:
            issues.append(f"Unknown judge client type: {self.judge_client_type}")
        if self.judge_client_type == "anthropic" and not self.judge_api_key:
            issues.append(f"VERITAS_JUDGE_API_KEY is required for the {self.judge_client_type} judge")
        if self.judge_max_attempts < 1:
            issues.append("Judge max_attempts must be at least 1")
        if self.judge_parallelism < 1:
            issues.append("Judge parallelism must be at least 1")
        if self.judge_temperature < 0:
            issues.append("Judge temperature must be non-negative")

        return issues


class DevelopmentConfig(Config):
    """Development configuration"""
    log_level: str = "DEBUG"
    judge_client_type: str = "mock"


class ProductionConfig(Config):
    """Production configuration"""
    log_format: str = "json"
    judge_client_type: str = "http"


class TestingConfig(Config):
    """Testing configuration"""
    log_level: str = "WARNING"
    judge_client_type: str = "mock"
    judge_retry_backoff: float = 0.0


def get_config(env: Optional[str] = None) -> Config:
    """Get configuration based on environment"""
    if env == "production":
        return ProductionConfig()
    elif env == "testing":
        return TestingConfig()
    elif env == "development":
        return DevelopmentConfig()
    else:
        return Config()
