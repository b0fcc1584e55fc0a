import logging
from os import getenv, path

from dotenv import load_dotenv

dotenv_path = path.join(path.dirname(path.dirname(path.abspath(__file__))), '.env')

load_dotenv(dotenv_path)

### RUNTIME SETTINGS FROM DOTENV
WORKERS = int(getenv('SEGRE_WORKERS', '1'))
FILENAME_LOG = getenv('SEGRE_LOG_FILE', 'segre.log')
LOG_LEVEL = getenv('SEGRE_LOG_LEVEL', 'INFO')
RANDOM_SEED = int(getenv('SEGRE_RANDOM_SEED', '20230601'))
RANDOM_TRIALS = int(getenv('SEGRE_RANDOM_TRIALS', '10'))
MAX_PUZZLE_SIZE = int(getenv('SEGRE_MAX_PUZZLE_SIZE', '8'))

CELERY_BROKER_URL = getenv('CELERY_BROKER_URL', 'memory://')
CELERY_RESULT_BACKEND = getenv('CELERY_RESULT_BACKEND', 'cache+memory://')
CELERY_ALWAYS_EAGER = getenv('CELERY_ALWAYS_EAGER', 'true').lower() in {'1', 'true', 'yes'}

### SYMBOLS
SYMBOL_BETA = 'b'
SYMBOL_Q = 'q'
SYMBOL_SPECTRAL = 'z' ## PLACEHOLDER FOR FUGACITY TEMPLATES
SYMBOL_XQ = 'xq'
SYMBOL_X = 'x' ## PLACEHOLDER FOR CONNECTIVE TEMPLATES
PREFIX_Z = 'z'
PREFIX_X = 'x'
PREFIX_T = 't'

### PUZZLE LABELS AND COLORS
LABEL_ZERO = '0'
LABEL_ONE = '1'
LABEL_TEN = '10'
LABELS = (LABEL_ONE, LABEL_ZERO, LABEL_TEN)
COLORS = ('g', 'r', 'b')
PICTURE_K = 'k'
PICTURE_CONNECTIVE = 'connective'

RANDOM_COEFFICIENT_RANGE = (-3, 3)
RANDOM_EXPONENT_RANGE = (-1, 1)
RANDOM_TERMS = 3
RANDOM_POINT_RANGE = (2, 97)

### VERIFY SUITES
SUITE_LATTICE = 'lattice'
SUITE_OPERATORS = 'operators'
SUITE_ORACLE = 'oracle'
SUITE_POSITIVITY = 'positivity'
SUITE_YBE = 'ybe'
SUITE_BOOTSTRAP = 'bootstrap'
SUITE_UNITARITY = 'unitarity'
SUITE_EQUAL = 'equal'
SUITE_FACTORIZATION = 'factorization'
SUITE_SINGLE_NUMBER = 'single-number'
SUITE_QGROUP = 'qgroup'
SUITE_INTERTWINERS = 'intertwiners'
SUITE_GKM = 'gkm'
SUITE_ALL = 'all'
SUITES = (
    SUITE_LATTICE, SUITE_OPERATORS, SUITE_ORACLE, SUITE_POSITIVITY,
    SUITE_YBE, SUITE_BOOTSTRAP, SUITE_UNITARITY, SUITE_EQUAL,
    SUITE_FACTORIZATION, SUITE_SINGLE_NUMBER, SUITE_QGROUP,
    SUITE_INTERTWINERS, SUITE_GKM,
)
SUITE_MAX_N = 4 ## LARGEST n FOR SHAPE-WIDE SUITES
DEFAULT_GKM_SHAPES = ('0,2', '1,2', '2,2', '1,3', '2,3', '1,4', '2,4', '3,4', '1+1+1')
DIRECT_LOCALIZATION_MAX_N = 3 ## LARGER n LOCALIZE PUZZLE SUMS PIECE BY PIECE

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

### MESSAGES
MESSAGE_BASIS = 'basis built: {shape} ({count} classes)'
MESSAGE_EQUATION = '{0}: {1} [{2}]'
MESSAGE_SUITE = 'suite {name}: {passed}/{total} passed'
MESSAGE_PUZZLES = 'puzzles {0},{1},{2}: {3} fillings'
MESSAGE_INVERSE = 'inverted {pair} template'
MESSAGE_RECORDED = '{name} recorded (not asserted): {value}'
MESSAGE_PASS = 'pass'
MESSAGE_FAIL = 'FAIL'
WARNING_PUZZLE_SIZE = 'n={size} exceeds SEGRE_MAX_PUZZLE_SIZE={limit}; enumeration may be slow'

### ERRORS
ERROR_UNKNOWN_SYMBOL = 'Unknown symbol {symbol} for table {table}.'
ERROR_PARSE = 'Cannot parse {text}: {reason}'
ERROR_DUPLICATE_SYMBOL = 'Duplicate symbol {symbol}.'
ERROR_ZERO_DIVISION = 'Division by the zero polynomial.'
ERROR_SUBSTITUTION = 'Denominator vanishes under {bindings}: factor {factor}'
ERROR_SINGULAR = 'Matrix of size {size} is singular.'
ERROR_MATRIX_SHAPE = 'Incompatible shapes {left} and {right} for {operation}.'
ERROR_SHAPE = 'Invalid shape {shape}: {reason}'
ERROR_STRING = 'String {string} does not belong to shape {shape}.'
ERROR_INDEX = 'Index {index} out of range 1..{limit}.'
ERROR_UNREACHABLE = 'No descent path from {top} to {string}.'
ERROR_DIAGONAL = 'Diagonal restriction of {string} is zero.'
ERROR_TRIANGULAR = 'Class {string} is nonzero at {point}, which is not above it.'
ERROR_LATTICE_MISMATCH = 'Restriction {string}|{point} disagrees: {left} != {right}'
ERROR_CERTIFICATE = 'No positivity rewriting for piece {piece}.'
ERROR_GRASSMANNIAN = 'Shape {shape} is not a Grassmannian (two-block) shape.'
ERROR_SUITE = 'Unknown suite {name}.'
ERROR_PARSE_PUZZLE = 'Cannot parse puzzle diagram: {reason}'
ERROR_COLOR_PAIR = 'Unknown color pair {pair}.'


def configure_logging(level: str = None, filename: str = None) -> None:
    """Configure process-wide logging to the log file.

    Args:
        level (str): logging level name, defaults to SEGRE_LOG_LEVEL.
        filename (str): log file, defaults to SEGRE_LOG_FILE.
    """
    logging.basicConfig(
        level=getattr(logging, (level or LOG_LEVEL).upper(), logging.INFO),
        filename=filename or FILENAME_LOG,
        filemode='w',
    )
