import os
from typing import Optional

from stanley_reisner_toolkit.utils.errors import GuardExceededError
from stanley_reisner_toolkit.utils.logger import logger

MAX_SUBSETS_ENV = "STANLEY_REISNER_MAX_SUBSETS"
MAX_FAMILIES_ENV = "STANLEY_REISNER_MAX_FAMILIES"

DEFAULT_MAX_SUBSETS = 1 << 20
DEFAULT_MAX_FAMILIES = 1 << 24
DEFAULT_MAX_TURAN_SETS = 40


def resolve_cap(explicit: Optional[int], env_name: str, default: int) -> int:
    """Explicit value wins, then the environment variable, then the default."""
    if explicit is not None:
        return int(explicit)
    raw = os.environ.get(env_name)
    if raw:
        try:
            return int(raw)
        except ValueError:
            logger.warning(f"Ignoring non-integer {env_name}={raw!r}")
    return default


def check_guard(what: str, count: int, cap: int, hint: str = "") -> None:
    if count > cap:
        raise GuardExceededError(what, count, cap, hint)
