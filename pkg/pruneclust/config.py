from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Project
    PROJECT_NAME: str = "pruneclust"
    VERSION: str = "1.0.0"

    # Logging
    LOG_LEVEL: str = "WARNING"

    # Parallelism: 0 means one worker per core
    THREADS: int = 0

    # Experiments
    DEFAULT_SEED: int = 2023
    GAP_REFERENCES: int = 10
    GAP_NORMALIZED: bool = False

    # Equal per-node rises are collapsed together within this relative tolerance
    TIE_RTOL: float = 1e-10

    # Output
    FLOAT_FORMAT: str = "%.17g"

    class Config:
        env_prefix = "PRUNECLUST_"
        env_file = ".env"


settings = Settings()
