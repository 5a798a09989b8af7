"""Resource caps and CLI defaults.

Configuration is explicit: the CLI reads a config file only when given
--config, never from environment variables, so identical invocations
behave identically everywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields

from .errors import DomainError

OUTPUT_FORMATS = ("json", "csv")


@dataclass(frozen=True)
class Config:
    #: Cap on m**n for the coarse chain DP and cell enumerations.
    max_grid_states: int = 10**7
    #: Cap on the number of fine lattice corners in the staircase DP.
    max_fine_states: int = 10**7
    #: Memory budget for Whitney coefficient tables, in bytes.
    max_table_bytes: int = 1 << 28
    #: Hard cap on the dimension accepted by the volume subcommand.
    max_dimension: int = 64
    default_format: str = "json"
    default_seed: int = 0
    #: Largest denominator tried by the automatic epsilon rule.
    epsilon_denominator_cap: int = 10**6

    def __post_init__(self) -> None:
        for cap in (
            self.max_grid_states,
            self.max_fine_states,
            self.max_table_bytes,
            self.max_dimension,
            self.epsilon_denominator_cap,
        ):
            if not isinstance(cap, int) or cap <= 0:
                raise DomainError(f"resource caps must be positive integers, got {cap!r}")
        if self.default_format not in OUTPUT_FORMATS:
            raise DomainError(
                f"default_format must be one of {OUTPUT_FORMATS}, got {self.default_format!r}"
            )

    @classmethod
    def from_file(cls, path: str) -> "Config":
        with open(path, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise DomainError(f"config file {path} is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise DomainError(f"config file {path} must hold a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise DomainError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)
