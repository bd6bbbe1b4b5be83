#!/usr/bin/env python3
"""
Test script for the configuration system.
"""

import json
import shutil
import sys
from pathlib import Path

import pytest

from src import create_config
from src.config_manager import ConfigManager

DEFAULT_CONFIG = Path(__file__).resolve().parent.parent / "config.default.json"


@pytest.fixture
def default_config(tmp_path):
    target = tmp_path / "config.default.json"
    shutil.copy2(DEFAULT_CONFIG, target)
    return target


def test_config_loading_falls_back_to_default(tmp_path, default_config, capsys):
    """Test basic configuration loading."""
    config_manager = ConfigManager(str(tmp_path / "config.json"), str(default_config))
    verification = config_manager.get_verification_config()

    assert verification.grid_resolution == 2000
    assert verification.default_n_max == 8
    assert verification.seed == 20240611
    assert config_manager.get_output_directory() == Path("output")
    assert config_manager.get_decimal_digits() == 17
    assert config_manager.should_show_summary()
    assert not config_manager.is_verbose_logging()
    assert "Using default configuration" in capsys.readouterr().out
    assert config_manager.get_current_config_source().startswith("Default config")


def test_user_config_overrides(tmp_path, default_config):
    user = tmp_path / "config.json"
    user.write_text(json.dumps({
        "verification": {"grid_resolution": 500, "workers": 3},
        "render": {"curve_samples": 50},
    }), encoding="utf-8")
    config_manager = ConfigManager(str(user), str(default_config))

    assert config_manager.get_verification_config().grid_resolution == 500
    assert config_manager.get_verification_config().workers == 3
    # missing keys keep their built-in values
    assert config_manager.get_verification_config().n_max_ceiling == 10
    assert config_manager.get_render_config().curve_samples == 50
    assert config_manager.get_render_config().width_inches == 6.0
    assert config_manager.get_current_config_source() == f"User config: {user}"


def test_with_defaults_reads_no_file():
    config_manager = ConfigManager.with_defaults()
    assert config_manager.get_verification_config().boundary_grid_points == 10000
    assert config_manager.get_render_config().point_size == 6.0
    assert config_manager.get_output_config().output_directory == "output"


def test_missing_files(tmp_path):
    with pytest.raises(FileNotFoundError):
        ConfigManager(str(tmp_path / "config.json"), str(tmp_path / "config.default.json"))


def test_invalid_json(tmp_path, default_config):
    user = tmp_path / "config.json"
    user.write_text("{ not json", encoding="utf-8")
    with pytest.raises(ValueError):
        ConfigManager(str(user), str(default_config))


def test_invalid_value(tmp_path, default_config):
    user = tmp_path / "config.json"
    user.write_text(json.dumps({"verification": {"grid_resolution": "fine"}}), encoding="utf-8")
    with pytest.raises(RuntimeError):
        ConfigManager(str(user), str(default_config))


def test_create_user_config_from_default(tmp_path, default_config):
    user = tmp_path / "config.json"
    config_manager = ConfigManager(str(user), str(default_config))

    assert not config_manager.has_user_config()
    assert config_manager.create_user_config_from_default()
    assert user.exists()
    assert json.loads(user.read_text()) == json.loads(default_config.read_text())
    assert not config_manager.create_user_config_from_default()


def test_create_config_main(tmp_path, default_config, capsys):
    user = tmp_path / "config.json"
    assert create_config.main(str(user), str(default_config)) == 0
    assert user.exists()
    assert "Configuration setup completed successfully!" in capsys.readouterr().out

    assert create_config.main(str(user), str(default_config)) == 1
    assert "already exists" in capsys.readouterr().out


def test_create_config_main_without_default(tmp_path, capsys):
    result = create_config.main(str(tmp_path / "config.json"), str(tmp_path / "missing.json"))
    assert result == 1
    assert "Default configuration file not found" in capsys.readouterr().out


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
