import os

from pydantic_settings import BaseSettings, SettingsConfigDict

# Determinar el nombre del archivo de entorno
project_name = os.getenv("PROJECT_NAME", "meshroots")
custom_env_file = f".env.{project_name}"

env_file = custom_env_file if os.path.exists(custom_env_file) else ".env"


class Settings(BaseSettings):
    PROJECT_NAME: str = "meshroots"
    VERSION: str = "1.0.0"

    # Cutoffs
    CUTOFF: int = 200_000
    MATRIX_ENTRY_CUTOFF: int = 2_000_000
    ROOT_CLOSURE_LIMIT: int = 10_000

    # Logging
    LOG_LEVEL: str = "WARNING"
    JSON_LOGS: bool = False
    SERVICE_NAME: str = "meshroots"
    SERVICE_VERSION: str = "1.0.0"

    model_config = SettingsConfigDict(
        env_prefix="MESHROOTS_",
        env_file=env_file,
        case_sensitive=True,
        extra="ignore",
    )


settings = Settings()
