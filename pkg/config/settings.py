"""Global settings for the Hecke lattice toolkit."""
import os

# Base paths
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SUITE_GRID_PATH = os.environ.get("SUITE_GRID_PATH", os.path.join(BASE_DIR, "config", "suite.yaml"))

# Logging
LOG_LEVEL = os.environ.get("LOG_LEVEL", "WARNING")

# Weyl group limits
MAX_WEYL_RANK = int(os.environ.get("MAX_WEYL_RANK", "6"))
MAX_SUBSET_BITS = int(os.environ.get("MAX_SUBSET_BITS", "24"))

# Balanced weight enumeration
MAX_ENUM_RANK = int(os.environ.get("MAX_ENUM_RANK", "4"))
MAX_ENUM_AMPLITUDE = int(os.environ.get("MAX_ENUM_AMPLITUDE", "3"))

# Coefficient rings
MAX_FIELD_SIZE = int(os.environ.get("MAX_FIELD_SIZE", "64"))

# Oracle
MIN_PRECISION = 4
DEFAULT_PRECISION = int(os.environ.get("DEFAULT_PRECISION", "8"))
PRECISION_RETRIES = int(os.environ.get("PRECISION_RETRIES", "1"))
ORACLE_MAX_RANK = int(os.environ.get("ORACLE_MAX_RANK", "2"))
ORACLE_MAX_FIELD_SIZE = int(os.environ.get("ORACLE_MAX_FIELD_SIZE", "5"))

# Probes and sweeps
DEFAULT_SEED = int(os.environ.get("DEFAULT_SEED", "20240601"))
SUITE_CONCURRENCY = int(os.environ.get("SUITE_CONCURRENCY", "4"))
