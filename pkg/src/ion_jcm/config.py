"""
Centralized configuration for the ion-jcm project.
All environment variables and numerical defaults are managed here.
"""
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# --- Truncation Configuration ---
TAIL_TOL = float(os.environ.get("JCM_TAIL_TOL", "1e-12"))
TRUNCATION_MARGIN = int(os.environ.get("JCM_TRUNCATION_MARGIN", "10"))
ORACLE_BUFFER = int(os.environ.get("JCM_ORACLE_BUFFER", "10"))

# --- Series Configuration ---
# Relative size below which the coupling-operator series is cut.
SERIES_CUTOFF = float(os.environ.get("JCM_SERIES_CUTOFF", "1e-18"))

# --- Parallelism Configuration ---
THREADS = int(os.environ.get("JCM_THREADS", "1"))
CHUNK_SIZE = int(os.environ.get("JCM_CHUNK_SIZE", "256"))

# --- Analysis Configuration ---
COLLAPSE_FRAC = float(os.environ.get("JCM_COLLAPSE_FRAC", "0.2"))
REVIVAL_FRAC = float(os.environ.get("JCM_REVIVAL_FRAC", "0.5"))
WINDOW_PERIODS = float(os.environ.get("JCM_WINDOW_PERIODS", "3"))

# --- Verification Configuration ---
VERIFY_TOL = float(os.environ.get("JCM_VERIFY_TOL", "1e-8"))
VERIFY_T_POINTS = int(os.environ.get("JCM_VERIFY_T_POINTS", "200"))
VERIFY_T_MAX_US = float(os.environ.get("JCM_VERIFY_T_MAX_US", "300"))

# --- Figure Configuration ---
FIGURE_T_POINTS = int(os.environ.get("JCM_FIGURE_T_POINTS", "2000"))
SAMPLES_PER_PERIOD = int(os.environ.get("JCM_SAMPLES_PER_PERIOD", "40"))
# Figure time range in units of the estimated revival time.
REVIVAL_SPAN = float(os.environ.get("JCM_REVIVAL_SPAN", "4"))

# --- Output Configuration ---
CSV_FORMAT = os.environ.get("JCM_CSV_FORMAT", "%.11e")
OUTPUT_DIR = os.environ.get("JCM_OUTPUT_DIR", "figures")
