import logging
import os

from dotenv import load_dotenv

load_dotenv(override=True)

# Generators and CLI
DEFAULT_HORIZON = int(os.getenv("LAMINA_HORIZON", "6"))
HORIZON_LIMIT = int(os.getenv("LAMINA_HORIZON_LIMIT", "256"))
SUBSTITUTION_MAX_ITERATIONS = int(os.getenv("LAMINA_SUBSTITUTION_MAX_ITERATIONS", "64"))

# Bounded cancellation search
BBT_WINDOW = int(os.getenv("LAMINA_BBT_WINDOW", "3"))
BBT_RADIUS_CAP = int(os.getenv("LAMINA_BBT_RADIUS_CAP", "10"))
ACT_BBT_RADIUS = int(os.getenv("LAMINA_ACT_BBT_RADIUS", "6"))

# Partitioned searches run in-process when WORKERS is 1
WORKERS = int(os.getenv("LAMINA_WORKERS", "1"))
SEED = int(os.getenv("LAMINA_SEED", "0"))

LOG_LEVEL = os.getenv("LAMINA_LOG_LEVEL", "WARNING")

# HTTP service
API_HOST = os.getenv("LAMINA_API_HOST", "0.0.0.0")
API_PORT = int(os.getenv("LAMINA_API_PORT", "8000"))


def configure_logging(level=None):
    """Set up root logging for command-line runs"""
    logging.basicConfig(
        level=(level or LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
