#!/usr/bin/env python3
"""
Utility to create a user configuration file from the default configuration.

Copies config.default.json to config.json, which can then be edited to
change grid resolutions, enumeration limits, output locations and figure
sizes.
"""

import sys

from .config_manager import ConfigManager


def main(config_path: str = "config.json", default_path: str = "config.default.json") -> int:
    """Create the user configuration; returns the exit status."""
    print("phi-rho region toolkit - Configuration Setup")
    print("=" * 50)

    try:
        config_manager = ConfigManager(config_path, default_path)

        if config_manager.has_user_config():
            print(f"User configuration file already exists: {config_manager.config_file_path}")
            print("If you want to recreate it, please delete the existing file first.")
            return 1

        if config_manager.create_user_config_from_default():
            print("\nConfiguration setup completed successfully!")
            print("\nNext steps:")
            print(f"1. Edit {config_path} with your custom settings")
            print("2. Run phirho verify --suite bounds")
            return 0
        else:
            print("Failed to create user configuration file.")
            return 1

    except FileNotFoundError:
        print(f"Default configuration file not found: {default_path}")
        print("Please ensure config.default.json exists in the current directory.")
        return 1
    except Exception as e:
        print(f"Error during configuration setup: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
