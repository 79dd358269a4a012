"""Runtime limits for exhaustive enumerations.

The defaults keep every exhaustive sweep at desk scale.  A JSON file
pointed to by the FLAGCOMB_CONFIG environment variable may override them,
e.g. {"max_n_combinatorics": 16, "max_n_flag_exhaustive": 9}.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

ENV_VAR = "FLAGCOMB_CONFIG"

DEFAULT_MAX_N_COMBINATORICS = 14   # paths / partitions / frames
DEFAULT_MAX_N_FLAG_EXHAUSTIVE = 8  # flag-level exhaustive sweeps
DEFAULT_FLAG_FIELDS = (2, 3)


@dataclass(frozen=True)
class Config:
    max_n_combinatorics: int = DEFAULT_MAX_N_COMBINATORICS
    max_n_flag_exhaustive: int = DEFAULT_MAX_N_FLAG_EXHAUSTIVE


def load_config(path: str | None = None) -> Config:
    """Load limits from *path*, the env var, or fall back to defaults."""
    if path is None:
        path = os.environ.get(ENV_VAR)
    if not path:
        return Config()
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    return Config(
        max_n_combinatorics=int(raw.get("max_n_combinatorics",
                                        DEFAULT_MAX_N_COMBINATORICS)),
        max_n_flag_exhaustive=int(raw.get("max_n_flag_exhaustive",
                                          DEFAULT_MAX_N_FLAG_EXHAUSTIVE)),
    )
