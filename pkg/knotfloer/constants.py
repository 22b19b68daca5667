"""Constants used throughout the knotfloer package."""

from pathlib import Path

from colorama import Fore, Style

# Package information
PACKAGE_NAME = "knotfloer"

# Configuration paths
CONFIG_DIR = Path.home() / ".config" / "knotfloer"
CONFIG_FILE_NAME = "config.yaml"

# ANSI Color Codes (using colorama)
CLR_RESET = Style.RESET_ALL
CLR_RED = Fore.RED
CLR_BOLD_RED = Style.BRIGHT + Fore.RED
CLR_GREEN = Fore.GREEN
CLR_BOLD_GREEN = Style.BRIGHT + Fore.GREEN
CLR_YELLOW = Fore.YELLOW
CLR_BOLD_YELLOW = Style.BRIGHT + Fore.YELLOW
CLR_BLUE = Fore.BLUE
CLR_BOLD_BLUE = Style.BRIGHT + Fore.BLUE
CLR_MAGENTA = Fore.MAGENTA
CLR_BOLD_MAGENTA = Style.BRIGHT + Fore.MAGENTA
CLR_CYAN = Fore.CYAN
CLR_BOLD_CYAN = Style.BRIGHT + Fore.CYAN
CLR_WHITE = Fore.WHITE
CLR_BOLD_WHITE = Style.BRIGHT + Fore.WHITE

# Exit codes
EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_VERIFICATION = 4

# File format headers
KFC_HEADER = "# kfc v1"
KFC_FIELD = "F2"

# Default knot label used by piece lists without a `link` line
DEFAULT_KNOT_LABEL = "K"

# Default configuration values
DEFAULT_ENABLE_DEBUG = False
DEFAULT_DENOMINATOR_BOUND = None
DEFAULT_ALLOW_NON_KNOT = False
DEFAULT_WORKERS = 1
DEFAULT_CSV_STEP = "1/10"
DEFAULT_RANDOM_SEED = 0
DEFAULT_RANDOM_TRIALS = 200

# Identity suites understood by `knotfloer verify`
VERIFY_SUITES = [
    "sharpness",
    "mt-equivalence",
    "torus-pipeline",
    "tau",
    "crossing-change",
    "tau-bound",
    "additivity",
    "conjugation",
    "negdef",
]
