"""Runtime limits.

The enumeration bound caps the ground-set size for which closed-set
families are enumerated (worst case 2**bound sets).  Order of
precedence: explicit argument, CONVEXITY_LAB_BOUND environment
variable, built-in default.
"""

import os

DEFAULT_ENUMERATION_BOUND = 20

ENV_BOUND = "CONVEXITY_LAB_BOUND"


def enumeration_bound(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(ENV_BOUND)
    if env is not None:
        return int(env)
    return DEFAULT_ENUMERATION_BOUND
