"""Capacity ceilings. ``IDOM_MAX_N`` in the environment overrides the
enumeration and canonical-labelling ceilings."""
from __future__ import annotations

import os

ENUMERATION_CEILING = 12
CANON_CEILING = 14
ORACLE_CEILING = 20
ORACLE_NAIVE_CEILING = 16

CAMPAIGN_DEFAULTS = {"half-bound": 10, "characterization": 10, "conjecture": 12}


class CapacityError(ValueError):
    """Input is larger than a configured ceiling."""


def _env_override() -> int | None:
    raw = os.environ.get("IDOM_MAX_N")
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise CapacityError(f"IDOM_MAX_N must be an integer, got {raw!r}") from None


def enumeration_ceiling() -> int:
    v = _env_override()
    return ENUMERATION_CEILING if v is None else v


def canon_ceiling() -> int:
    v = _env_override()
    return CANON_CEILING if v is None else max(v, CANON_CEILING)
