"""
Configuration Manager for the phi-rho region toolkit

This module contains classes for managing program configuration and settings.
"""

import json
import shutil
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional


@dataclass
class VerificationConfig:
    """Configuration for the verification suites and the grid oracle."""
    grid_resolution: int
    grid_resolution_minimum: int
    n_max_ceiling: int
    default_n_max: int
    random_samples: int
    seed: int
    workers: int
    boundary_grid_points: int


@dataclass
class OutputConfig:
    """Configuration for output and logging."""
    output_directory: str
    decimal_digits: int
    show_summary: bool
    verbose_logging: bool


@dataclass
class RenderConfig:
    """Configuration for the SVG renderer."""
    width_inches: float
    height_inches: float
    curve_samples: int
    point_size: float


class ConfigManager:
    """Manages program configuration."""

    def __init__(self, config_file_path: str = "config.json",
                 default_config_path: str = "config.default.json"):
        """
        Initialize the configuration manager.

        Args:
            config_file_path: Path to the user configuration file
            default_config_path: Path to the shipped default configuration
        """
        self.config_file_path = Path(config_file_path)
        self.default_config_path = Path(default_config_path)
        self.config_data: Dict[str, Any] = {}
        self.verification_config: Optional[VerificationConfig] = None
        self.output_config: Optional[OutputConfig] = None
        self.render_config: Optional[RenderConfig] = None

        self._load_config()

    @classmethod
    def with_defaults(cls) -> "ConfigManager":
        """
        Build a manager from the built-in defaults without reading any file.

        Returns:
            ConfigManager whose sections hold the default values
        """
        manager = cls.__new__(cls)
        manager.config_file_path = Path("config.json")
        manager.default_config_path = Path("config.default.json")
        manager.config_data = {}
        manager._parse_verification_config()
        manager._parse_output_config()
        manager._parse_render_config()
        return manager

    def _load_config(self) -> None:
        """Load configuration from the JSON file."""
        # First try to load user config, then fall back to default
        config_to_load = self.config_file_path

        if not self.config_file_path.exists():
            if self.default_config_path.exists():
                print(f"User config file '{self.config_file_path}' not found.")
                print(f"Using default configuration from '{self.default_config_path}'")
                config_to_load = self.default_config_path
            else:
                raise FileNotFoundError(
                    f"Configuration file not found: {self.config_file_path}\n"
                    f"Default configuration file not found: {self.default_config_path}"
                )

        try:
            with open(config_to_load, 'r', encoding='utf-8') as file:
                self.config_data = json.load(file)

            self._parse_verification_config()
            self._parse_output_config()
            self._parse_render_config()

        except json.JSONDecodeError as e:
            raise ValueError(f"Invalid JSON in config file {config_to_load}: {e}")
        except Exception as e:
            raise RuntimeError(f"Error loading configuration from {config_to_load}: {e}")

    def _parse_verification_config(self) -> None:
        """Parse the verification section."""
        data = self.config_data.get('verification', {})

        self.verification_config = VerificationConfig(
            grid_resolution=int(data.get('grid_resolution', 2000)),
            grid_resolution_minimum=int(data.get('grid_resolution_minimum', 16)),
            n_max_ceiling=int(data.get('n_max_ceiling', 10)),
            default_n_max=int(data.get('default_n_max', 8)),
            random_samples=int(data.get('random_samples', 50)),
            seed=int(data.get('seed', 20240611)),
            workers=int(data.get('workers', 1)),
            boundary_grid_points=int(data.get('boundary_grid_points', 10000))
        )

    def _parse_output_config(self) -> None:
        """Parse the output section."""
        data = self.config_data.get('output', {})

        self.output_config = OutputConfig(
            output_directory=data.get('output_directory', 'output'),
            decimal_digits=int(data.get('decimal_digits', 17)),
            show_summary=bool(data.get('show_summary', True)),
            verbose_logging=bool(data.get('verbose_logging', False))
        )

    def _parse_render_config(self) -> None:
        """Parse the render section."""
        data = self.config_data.get('render', {})

        self.render_config = RenderConfig(
            width_inches=float(data.get('width_inches', 6.0)),
            height_inches=float(data.get('height_inches', 6.0)),
            curve_samples=int(data.get('curve_samples', 400)),
            point_size=float(data.get('point_size', 6.0))
        )

    def get_verification_config(self) -> VerificationConfig:
        """
        Get the verification configuration.

        Returns:
            VerificationConfig instance
        """
        if self.verification_config is None:
            raise RuntimeError("Verification configuration not loaded")
        return self.verification_config

    def get_output_config(self) -> OutputConfig:
        """
        Get the output configuration.

        Returns:
            OutputConfig instance
        """
        if self.output_config is None:
            raise RuntimeError("Output configuration not loaded")
        return self.output_config

    def get_render_config(self) -> RenderConfig:
        """
        Get the render configuration.

        Returns:
            RenderConfig instance
        """
        if self.render_config is None:
            raise RuntimeError("Render configuration not loaded")
        return self.render_config

    def get_output_directory(self) -> Path:
        """
        Get the directory where generated files are placed by default.

        Returns:
            Path to the output directory
        """
        return Path(self.get_output_config().output_directory)

    def get_decimal_digits(self) -> int:
        """
        Get the number of significant digits for decimal columns.

        Returns:
            Significant digits
        """
        return self.get_output_config().decimal_digits

    def should_show_summary(self) -> bool:
        """
        Check if summary should be shown.

        Returns:
            True if summary should be shown
        """
        return self.get_output_config().show_summary

    def is_verbose_logging(self) -> bool:
        """
        Check if verbose logging is enabled.

        Returns:
            True if verbose logging is enabled
        """
        return self.get_output_config().verbose_logging

    def has_user_config(self) -> bool:
        """
        Check if a user configuration file exists.

        Returns:
            True if user config exists, False otherwise
        """
        return self.config_file_path.exists()

    def has_default_config(self) -> bool:
        """
        Check if the default configuration file exists.

        Returns:
            True if default config exists, False otherwise
        """
        return self.default_config_path.exists()

    def create_user_config_from_default(self) -> bool:
        """
        Create a user configuration file by copying the default configuration.

        Returns:
            True if successful, False otherwise
        """
        if not self.has_default_config():
            print(f"Default configuration file not found: {self.default_config_path}")
            return False

        if self.has_user_config():
            print(f"User configuration file already exists: {self.config_file_path}")
            return False

        try:
            shutil.copy2(self.default_config_path, self.config_file_path)
            print(f"Created user configuration file: {self.config_file_path}")
            print("You can now modify this file with your custom settings.")
            return True
        except Exception as e:
            print(f"Failed to create user configuration file: {e}")
            return False

    def get_current_config_source(self) -> str:
        """
        Get the source of the currently loaded configuration.

        Returns:
            String indicating which config file is being used
        """
        if self.has_user_config():
            return f"User config: {self.config_file_path}"
        elif self.has_default_config():
            return f"Default config: {self.default_config_path}"
        else:
            return "No config file found"
