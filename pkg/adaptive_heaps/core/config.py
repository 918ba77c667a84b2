from typing import Any

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    PROJECT_NAME: str = "Adaptive Heaps"

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    # Validation
    VALIDATE_EVERY_OP: bool = False
    CYCLE_LOG_ENABLED: bool = False
    DEGREE_BOUND_SLACK: int = Field(1, ge=0)

    # Adaptive Fibonacci heap consolidation
    SLOT_TABLE_INITIAL_SIZE: int = 91  # ceil(log_phi(2**63))
    SLOT_BOUND_SLACK: int = Field(2, ge=0)

    # Pairing-like heap consolidation
    PAIRING_BUDGET_FACTOR: int = 4

    # Experiments
    DEFAULT_SEED: int = 0x5EED
    DEFAULT_TRIALS: int = 1
    MAX_WORKERS: int = 1
    CSV_SCHEMA_VERSION: int = 1
    OUTPUT_DIR: str = "results"

    model_config = SettingsConfigDict(
        env_prefix="HEAPS_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def normalize_log_level(cls, v: Any) -> Any:
        """Accept lower-case level names from the environment"""
        if isinstance(v, str):
            return v.strip().upper()
        return v

    @field_validator(
        "SLOT_TABLE_INITIAL_SIZE",
        "PAIRING_BUDGET_FACTOR",
        "DEFAULT_TRIALS",
        "MAX_WORKERS",
    )
    @classmethod
    def must_be_positive(cls, v: int) -> int:
        if v <= 0:
            raise ValueError("must be a positive integer")
        return v


settings = Settings()
