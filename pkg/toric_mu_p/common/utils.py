"""Common utility functions used across the toric-mu-p package."""

import json
import logging
import os
from typing import Any

import yaml

logger = logging.getLogger(__name__)


def _load_config_file(file_path: str) -> dict[str, Any]:
    """Loads a JSON or YAML config file into a dictionary."""
    try:
        with open(file_path, encoding="utf-8") as f:
            content = yaml.safe_load(f)
    except FileNotFoundError as err:
        raise ValueError(f"Config file not found at: {file_path}") from err
    except yaml.YAMLError as e:
        raise ValueError(f"Failed to parse config file '{file_path}': {e}") from e
    if content is None:
        return {}
    if not isinstance(content, dict):
        raise TypeError("Config file content is not an object.")
    return content


def parse_config_source(config_source: str | None) -> dict[str, Any] | None:
    """
    Parses run defaults from a JSON string, or a JSON/YAML file path.

    Args:
        config_source: A string containing either a JSON object or a path to
                       a .json/.yaml/.yml file.

    Returns:
        A dictionary of config values with '-' in keys normalised to '_',
        or None if config_source is None.

    Raises:
        ValueError: If the source cannot be parsed or the file is not found.
    """
    if not config_source:
        return None

    logger.info("Processing config source: %s", config_source)
    values: dict[str, Any] | None = None

    try:
        potential_json = json.loads(config_source)
        if isinstance(potential_json, dict):
            values = potential_json
            logger.info("Parsed config source as JSON string.")
        else:
            raise TypeError("JSON string is not an object.")
    except (json.JSONDecodeError, TypeError):
        logger.info("Could not parse as JSON string, attempting as file path.")
        if not os.path.exists(config_source):
            raise ValueError(
                f"File not found for config source: {config_source}"
            ) from None
        try:
            values = _load_config_file(config_source)
            logger.info("Loaded config from file: %s", config_source)
        except Exception as e:
            logger.exception("Failed to load config source file '%s'", config_source)
            raise ValueError(f"Failed to load config source file: {e}") from e

    return {str(k).replace("-", "_"): v for k, v in values.items()}
