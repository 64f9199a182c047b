"""Settings for the construction, certificate checks and brute-force oracle.

Settings are plain frozen dataclasses. They can be loaded from a TOML file::

    [oracle]
    max_family_size = 10
    max_subset_scan = 20

    [construction]
    maximizer = "largest"
    fundamental_oracle_threshold = 9
    redundant_merge = true
"""

from __future__ import annotations

import os
import sys
from collections.abc import Mapping
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Final, Literal

from radohorn.exceptions import ConfigurationError

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover - exercised on 3.10 only
    import tomli as tomllib

CONFIG_ENV_VAR: Final[str] = "RADOHORN_CONFIG"

MaximizerPolicy = Literal["largest", "smallest"]
MAXIMIZER_POLICIES: Final[tuple[str, ...]] = ("largest", "smallest")


@dataclass(frozen=True)
class OracleBudget:
    """Size limits for exhaustive enumeration.

    Enumeration above a limit raises ``BudgetExceededError``; it never
    truncates silently.
    """

    max_family_size: int = 10
    max_subset_scan: int = 20

    def __post_init__(self) -> None:
        for name in ("max_family_size", "max_subset_scan"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ConfigurationError(f"oracle.{name} must be a natural number, got {value!r}")


@dataclass(frozen=True)
class ConstructionSettings:
    """Knobs of the staged construction and its certificates."""

    maximizer: MaximizerPolicy = "largest"
    fundamental_oracle_threshold: int = 9
    redundant_merge: bool = True

    def __post_init__(self) -> None:
        if self.maximizer not in MAXIMIZER_POLICIES:
            raise ConfigurationError(
                f"construction.maximizer must be one of {', '.join(MAXIMIZER_POLICIES)}, "
                f"got {self.maximizer!r}"
            )
        threshold = self.fundamental_oracle_threshold
        if isinstance(threshold, bool) or not isinstance(threshold, int) or threshold < 0:
            raise ConfigurationError(
                "construction.fundamental_oracle_threshold must be a natural number, "
                f"got {threshold!r}"
            )
        if not isinstance(self.redundant_merge, bool):
            raise ConfigurationError("construction.redundant_merge must be a boolean")


@dataclass(frozen=True)
class Settings:
    """Top-level settings."""

    oracle: OracleBudget = field(default_factory=OracleBudget)
    construction: ConstructionSettings = field(default_factory=ConstructionSettings)

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> Settings:
        """Build settings from a parsed TOML document.

        Raises:
            ConfigurationError: On unknown sections or keys, or bad values.
        """
        sections: dict[str, type[OracleBudget] | type[ConstructionSettings]] = {
            "oracle": OracleBudget,
            "construction": ConstructionSettings,
        }
        unknown = set(data) - set(sections)
        if unknown:
            raise ConfigurationError(f"unknown configuration sections: {', '.join(sorted(unknown))}")
        built: dict[str, Any] = {}
        for name, section_type in sections.items():
            raw = data.get(name, {})
            if not isinstance(raw, Mapping):
                raise ConfigurationError(f"[{name}] must be a table")
            allowed = {f.name for f in fields(section_type)}
            extra = set(raw) - allowed
            if extra:
                raise ConfigurationError(
                    f"unknown keys in [{name}]: {', '.join(sorted(extra))}"
                )
            built[name] = section_type(**raw)
        return cls(**built)

    @classmethod
    def from_toml(cls, path: str | Path) -> Settings:
        """Load settings from a TOML file.

        Raises:
            FileNotFoundError: If the file does not exist.
            ConfigurationError: If it is not valid TOML or has invalid values.
        """
        text = Path(path).read_text(encoding="utf-8")
        try:
            data = tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigurationError(f"{path}: {exc}") from exc
        return cls.from_mapping(data)

    def with_maximizer(self, policy: MaximizerPolicy) -> Settings:
        return replace(self, construction=replace(self.construction, maximizer=policy))


DEFAULT_SETTINGS: Final[Settings] = Settings()


def load_settings(path: str | Path | None = None) -> Settings:
    """Resolve settings: explicit path, then ``$RADOHORN_CONFIG``, then defaults."""
    if path is None:
        env_path = os.environ.get(CONFIG_ENV_VAR)
        if not env_path:
            return DEFAULT_SETTINGS
        path = env_path
    return Settings.from_toml(path)
