"""Tests for the optional YAML configuration."""

from fractions import Fraction

import pytest

from knotfloer.config import CONFIG_TEMPLATE, ConfigManager, Settings, create_config_manager
from knotfloer.utils.errors import DomainError


def write_config(tmp_path, text):
    (tmp_path / "config.yaml").write_text(text, encoding="utf-8")
    return create_config_manager(tmp_path)


class TestConfigManager:
    def test_defaults_without_file(self, tmp_path):
        manager = create_config_manager(tmp_path)
        assert manager.is_initialized()
        assert manager.settings == Settings()
        assert manager.settings.csv_step == Fraction(1, 10)
        assert "absent" in manager.summary()

    def test_settings_require_initialize(self, tmp_path):
        manager = ConfigManager(tmp_path)
        assert not manager.is_initialized()
        with pytest.raises(RuntimeError):
            manager.settings

    def test_template_round_trip(self, tmp_path):
        target = tmp_path / "nested"
        manager = ConfigManager(target)
        assert manager.write_template()
        assert manager.config_file.read_text(encoding="utf-8") == CONFIG_TEMPLATE
        assert not manager.write_template()
        assert create_config_manager(target).settings == Settings()

    def test_values_are_read(self, tmp_path):
        manager = write_config(
            tmp_path,
            "enable_debug: true\n"
            "upsilon:\n  denominator_bound: 12\n  allow_non_knot: true\n  workers: 4\n"
            "output:\n  csv_step: '1/4'\n"
            "verify:\n  random_seed: 9\n  random_trials: 30\n",
        )
        assert manager.settings == Settings(
            enable_debug=True,
            denominator_bound=12,
            allow_non_knot=True,
            workers=4,
            csv_step=Fraction(1, 4),
            random_seed=9,
            random_trials=30,
        )
        summary = manager.summary()
        assert "csv_step: 1/4" in summary
        assert "present" in summary

    def test_empty_file_uses_defaults(self, tmp_path):
        assert write_config(tmp_path, "").settings == Settings()

    def test_bad_boolean_falls_back(self, tmp_path):
        manager = write_config(tmp_path, "upsilon:\n  allow_non_knot: maybe\n")
        assert manager.settings.allow_non_knot is False

    @pytest.mark.parametrize(
        "text",
        [
            "upsilon:\n  workers: 0\n",
            "upsilon:\n  denominator_bound: -3\n",
            "output:\n  csv_step: '0'\n",
            "output:\n  csv_step: '0.5'\n",
            "verify:\n  random_seed: seven\n",
            "upsilon: [1, 2]\n",
            "- not\n- a mapping\n",
            "upsilon: {workers: 2\n",
        ],
    )
    def test_invalid_values(self, tmp_path, text):
        with pytest.raises(DomainError):
            write_config(tmp_path, text)
