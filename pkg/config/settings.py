"""Environment-driven settings (.env supported)."""
import os

from dotenv import load_dotenv

load_dotenv()

OUTPUT_DIR = os.getenv("MICROGRID_OUTPUT_DIR", "")
LOG_LEVEL = os.getenv("MICROGRID_LOG_LEVEL", "INFO").upper()


def output_dir_override() -> str:
    """Read at call time so tests and shells can set the variable after import."""
    return os.getenv("MICROGRID_OUTPUT_DIR", OUTPUT_DIR)
