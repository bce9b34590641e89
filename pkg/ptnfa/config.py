"""
Configuration module for ptnfa.

Contains the budgets, default names and logging settings used throughout
the library and the command-line interface.
Environment variables can override the defaults.
"""
import os

# -------------------- SEARCH BUDGETS --------------------
# Longest simple path is intractable in general; exhaustive search on cyclic
# automata is only attempted up to this many states
DEPTH_STATE_BUDGET = int(os.getenv("PTNFA_DEPTH_STATE_BUDGET", "20"))

# Reachable states of the (canonical ~k automaton x minimal DFA) product
PRODUCT_STATE_BUDGET = int(os.getenv("PTNFA_PRODUCT_STATE_BUDGET", "1000000"))

# Subsets created by the subset construction
SUBSET_STATE_BUDGET = int(os.getenv("PTNFA_SUBSET_STATE_BUDGET", "200000"))

# Largest alphabet accepted by the all-letters family (2^|sigma| states)
ALL_LETTERS_MAX_ALPHABET = int(os.getenv("PTNFA_ALL_LETTERS_MAX_ALPHABET", "10"))

# -------------------- UNARY REDUCTION --------------------
# Variables allowed in the 3CNF -> unary NFA reduction
UNARY_PRIME_CAP = int(os.getenv("PTNFA_UNARY_PRIME_CAP", "4"))

# Variable x_j is encoded by residues modulo PRIMES[j - 1]
PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)

# -------------------- STRUCTURE CHECKS --------------------
# Components up to this size are cross-checked against the
# unique-maximal-state formulation of UMS
UMS_CROSS_CHECK_LIMIT = int(os.getenv("PTNFA_UMS_CROSS_CHECK_LIMIT", "32"))

# -------------------- NAMING --------------------
# Name of the sink state added by completion
DEFAULT_SINK_NAME = "s"

# Fresh letter introduced by the lifting reductions
DEFAULT_FRESH_LETTER = "z"

# Letter of the unary families
UNARY_LETTER = "a"

# -------------------- LOGGING CONFIG --------------------
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
