"""Tests for settings loading and validation."""

import pytest

from radohorn import ConfigurationError, ConstructionSettings, OracleBudget, Settings, load_settings
from radohorn.config import CONFIG_ENV_VAR, DEFAULT_SETTINGS


class TestDefaults:
    """Values used when nothing is configured."""

    def test_default_values(self):
        """Budgets and construction knobs."""
        settings = Settings()
        assert settings.oracle == OracleBudget(max_family_size=10, max_subset_scan=20)
        assert settings.construction.maximizer == "largest"
        assert settings.construction.fundamental_oracle_threshold == 9
        assert settings.construction.redundant_merge is True

    def test_with_maximizer(self):
        """Only the policy changes."""
        changed = DEFAULT_SETTINGS.with_maximizer("smallest")
        assert changed.construction.maximizer == "smallest"
        assert changed.oracle == DEFAULT_SETTINGS.oracle
        assert DEFAULT_SETTINGS.construction.maximizer == "largest"


class TestFromMapping:
    """Parsed TOML tables to settings."""

    def test_partial_tables(self):
        """Missing keys keep their defaults."""
        settings = Settings.from_mapping({"oracle": {"max_family_size": 6}})
        assert settings.oracle.max_family_size == 6
        assert settings.oracle.max_subset_scan == 20
        assert settings.construction == ConstructionSettings()

    def test_unknown_section(self):
        """Typos in section names are reported."""
        with pytest.raises(ConfigurationError, match="unknown configuration sections: oracel"):
            Settings.from_mapping({"oracel": {}})

    def test_unknown_key(self):
        """Typos in key names are reported."""
        with pytest.raises(ConfigurationError) as exc_info:
            Settings.from_mapping({"construction": {"maximiser": "largest"}})
        assert "unknown keys in [construction]: maximiser" in str(exc_info.value)

    def test_section_must_be_table(self):
        """A scalar where a table belongs."""
        with pytest.raises(ConfigurationError, match=r"\[oracle\] must be a table"):
            Settings.from_mapping({"oracle": 3})

    @pytest.mark.parametrize(
        ("data", "message"),
        [
            ({"construction": {"maximizer": "median"}}, "must be one of largest, smallest"),
            ({"oracle": {"max_family_size": -1}}, "oracle.max_family_size must be a natural number"),
            ({"oracle": {"max_subset_scan": True}}, "oracle.max_subset_scan must be a natural number"),
            (
                {"construction": {"fundamental_oracle_threshold": "9"}},
                "fundamental_oracle_threshold must be a natural number",
            ),
            ({"construction": {"redundant_merge": 1}}, "redundant_merge must be a boolean"),
        ],
    )
    def test_bad_values(self, data, message):
        """Values are checked when the dataclasses are built."""
        with pytest.raises(ConfigurationError) as exc_info:
            Settings.from_mapping(data)
        assert message in str(exc_info.value)


class TestFromToml:
    """Reading settings files."""

    def test_reads_file(self, tmp_path):
        """Both sections are read."""
        path = tmp_path / "radohorn.toml"
        path.write_text(
            '[oracle]\nmax_family_size = 8\n\n[construction]\nmaximizer = "smallest"\n',
            encoding="utf-8",
        )
        settings = Settings.from_toml(path)
        assert settings.oracle.max_family_size == 8
        assert settings.construction.maximizer == "smallest"

    def test_invalid_toml(self, tmp_path):
        """Parse errors become configuration errors."""
        path = tmp_path / "broken.toml"
        path.write_text("[oracle\n", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            Settings.from_toml(path)

    def test_missing_file(self, tmp_path):
        """A missing file is an OS error, not a configuration error."""
        with pytest.raises(FileNotFoundError):
            Settings.from_toml(tmp_path / "absent.toml")


class TestLoadSettings:
    """Explicit path, then environment, then defaults."""

    def test_defaults_without_env(self, monkeypatch):
        """No path and no variable."""
        monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)
        assert load_settings() is DEFAULT_SETTINGS

    def test_env_variable(self, monkeypatch, tmp_path):
        """The variable names a file."""
        path = tmp_path / "env.toml"
        path.write_text("[oracle]\nmax_subset_scan = 12\n", encoding="utf-8")
        monkeypatch.setenv(CONFIG_ENV_VAR, str(path))
        assert load_settings().oracle.max_subset_scan == 12

    def test_explicit_path_wins(self, monkeypatch, tmp_path):
        """An explicit path ignores the variable."""
        explicit = tmp_path / "explicit.toml"
        explicit.write_text("[oracle]\nmax_subset_scan = 5\n", encoding="utf-8")
        monkeypatch.setenv(CONFIG_ENV_VAR, str(tmp_path / "absent.toml"))
        assert load_settings(explicit).oracle.max_subset_scan == 5
