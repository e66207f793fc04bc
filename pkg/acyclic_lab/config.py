from dotenv import load_dotenv
import os

load_dotenv()


def _optional_int(name):
    raw = os.getenv(name)
    return int(raw) if raw else None


# Solver budgets
SOLVE_SECONDS = float(os.getenv("ACYCLIC_LAB_SOLVE_SECONDS", "60"))
SOLVE_NODE_LIMIT = _optional_int("ACYCLIC_LAB_SOLVE_NODE_LIMIT")

# Enumeration / symmetry caps
ENUMERATION_CAP = int(os.getenv("ACYCLIC_LAB_ENUMERATION_CAP", "1000000"))
AUTOMORPHISM_CAP = int(os.getenv("ACYCLIC_LAB_AUTOMORPHISM_CAP", "1000000"))
AUTOMORPHISM_NODE_CAP = int(os.getenv("ACYCLIC_LAB_AUTOMORPHISM_NODE_CAP", "1000000"))

# mad is brute force over connected subsets
MAD_MAX_VERTICES = 20

# Verification suites
SUITE_CASE_SECONDS = float(os.getenv("ACYCLIC_LAB_SUITE_CASE_SECONDS", "120"))
SUITE_SWAP_AUTO_SECONDS = float(os.getenv("ACYCLIC_LAB_SUITE_SWAP_AUTO_SECONDS", "300"))
SUITE_WORKERS = int(os.getenv("ACYCLIC_LAB_WORKERS", "1"))
SAMPLING_SEED = int(os.getenv("ACYCLIC_LAB_SEED", "20240917"))

OUTPUT_DIR = os.getenv("ACYCLIC_LAB_OUTPUT_DIR", ".")

# Solve cache (unset = disabled)
SOLVE_CACHE_DB = os.getenv("ACYCLIC_LAB_SOLVE_CACHE_DB") or None
SOLVE_CACHE_MAX_ITEMS = 50_000  # LRU eviction
