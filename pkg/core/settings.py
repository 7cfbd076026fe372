import os


DEFAULT_DATABASE_URL = "sqlite:///check_runs.sqlite3"


class Config:
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()

    DISPLAY_PRECISION = int(os.getenv("DISPLAY_PRECISION") or 4)
    FULL_PRECISION = int(os.getenv("FULL_PRECISION") or 17)

    DEFAULT_SEED = int(os.getenv("DEFAULT_SEED") or 20250901)
    DEFAULT_SAMPLES = int(os.getenv("DEFAULT_SAMPLES") or 1000)
    EXHAUSTIVE_COLUMN_LIMIT = int(os.getenv("EXHAUSTIVE_COLUMN_LIMIT") or 8)

    DATABASE_URL = os.getenv("DATABASE_URL", DEFAULT_DATABASE_URL)
    RECORD_RUNS = bool(int(os.getenv("RECORD_RUNS") or 0))
