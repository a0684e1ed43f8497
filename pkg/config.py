import os
from dotenv import load_dotenv

load_dotenv()

TOOL_NAME = 'deformed-transport'
TOOL_VERSION = '1.0.0'

# Physical defaults (all energies and rates in units of J0, times in 1/J0)
DEFAULT_STEP = 1e-3
DEFAULT_T_EVAL = 20.0
DEFAULT_T_MAX = 20.0
GAMMA_OPT = 1.05
DEFAULT_SINK_RATE = 2.1  # 2 * GAMMA_OPT, shared by both configurations
DEFAULT_AMPLITUDE = 0.25
DEFAULT_OMEGA0 = 1.0

# Dephasing sweep defaults
SWEEP_GAMMA_MIN = 0.2
SWEEP_GAMMA_MAX = 3.0
SWEEP_POINTS = 29
SWEEP_RESOLUTION = 0.01

# Integrator health thresholds
BREACH_TOLERANCE = 1e-6  # evolve aborts beyond this
REPORT_TOLERANCE = 1e-8  # conservation checks in tests and summaries

# Use absolute paths based on script location for robustness
_SCRIPT_DIR = os.path.dirname(os.path.abspath(__file__))

LOG_FILE = os.getenv('TRANSPORT_LOG_FILE') or os.path.join(_SCRIPT_DIR, 'transport.log')

LOG_LEVEL = os.getenv('TRANSPORT_LOG_LEVEL', 'INFO').upper()
if LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
    raise ValueError(f"TRANSPORT_LOG_LEVEL must be a logging level name, got: {LOG_LEVEL}")

OUTPUT_DIR = os.getenv('TRANSPORT_OUTPUT_DIR', 'out')

# Validate TRANSPORT_SWEEP_WORKERS (number of sweep points evaluated at once)
_workers_str = os.getenv('TRANSPORT_SWEEP_WORKERS', '1')
try:
    SWEEP_WORKERS = int(_workers_str.strip())
except ValueError:
    raise ValueError(f"TRANSPORT_SWEEP_WORKERS must be an integer, got: {_workers_str}")
if SWEEP_WORKERS < 1:
    raise ValueError(f"TRANSPORT_SWEEP_WORKERS must be at least 1, got: {SWEEP_WORKERS}")
