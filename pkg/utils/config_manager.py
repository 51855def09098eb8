#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Configuration Manager

This module manages monocheck configuration: built-in defaults, an optional
JSON file, the MONOCHECK_FACTOR_BUDGET environment variable and command-line
overrides, in increasing order of precedence.
"""

import json
import logging
import os
from dataclasses import dataclass

from core.errors import ConfigError
from core.irreducibility import Policy

logger = logging.getLogger(__name__)

ENV_FACTOR_BUDGET = "MONOCHECK_FACTOR_BUDGET"
OUTPUT_FORMATS = ("text", "json", "tsv")
LANGUAGES = ("EN", "ZHT")


@dataclass(frozen=True)
class RunConfig:
    """
    Validated settings of one CLI run.

    Attributes:
        factor_budget: Rho iteration cap
        policy: Irreducibility policy
        witness_bound: Largest prime tried for a mod-p irreducibility witness
        output_format: "text", "json" or "tsv"
        cache_path: Factorization cache file, or "" for none
        workers: Worker cap for sweeps
        language: Message language code
        timings: Record per-stage timings
    """
    factor_budget: int
    policy: Policy
    witness_bound: int
    output_format: str
    cache_path: str = ""
    workers: int = 4
    language: str = "EN"
    timings: bool = False

    def __post_init__(self):
        for name in ("factor_budget", "witness_bound", "workers"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"output_format must be one of {', '.join(OUTPUT_FORMATS)}, got {self.output_format!r}")
        if self.language not in LANGUAGES:
            raise ConfigError(f"language must be one of {', '.join(LANGUAGES)}, got {self.language!r}")
        if not isinstance(self.policy, Policy):
            raise ConfigError(f"invalid irreducibility policy {self.policy!r}")


class ConfigManager:
    """
    Class for managing monocheck configuration.
    """

    def __init__(self, config_file=None, environ=None, defaults=None):
        """
        Initialize the configuration manager.

        Args:
            config_file: Path to the configuration file or None to use default
            environ: Environment mapping, defaults to os.environ
            defaults: Overrides of the built-in defaults, still below the file
        """
        self.config_file = config_file or self._get_default_config_path()
        self.environ = os.environ if environ is None else environ
        self.defaults = dict(defaults or {})
        self.config = self._load_config()

    def _get_default_config_path(self):
        return os.path.expanduser("~/.monocheck.json")

    def _load_config(self):
        """
        Load configuration from file over the defaults.

        Returns:
            Loaded configuration dictionary

        Raises:
            ConfigError: If the file exists but is not a JSON object
        """
        config = self._get_default_config()
        config.update(self.defaults)

        if os.path.exists(self.config_file):
            try:
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    loaded_config = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                raise ConfigError(f"cannot read configuration {self.config_file}: {e}") from e
            if not isinstance(loaded_config, dict):
                raise ConfigError(f"configuration {self.config_file} must hold a JSON object")
            unknown = sorted(set(loaded_config) - set(config))
            if unknown:
                logger.warning(f"Config Manager: ignoring unknown keys {unknown} in {self.config_file}")
            config.update({key: value for key, value in loaded_config.items() if key in config})

        return config

    def _get_default_config(self):
        """
        Get default configuration.

        The library default policy is require-certificate; the CLI passes
        "assume" as an override unless told otherwise.
        """
        return {
            "factor_budget": 200000,
            "irreducibility_policy": Policy.REQUIRE_CERTIFICATE.value,
            "witness_bound": 101,
            "output_format": "text",
            "cache_path": "",
            "workers": 4,
            "language": "EN",
            "timings": False,
        }

    def save_config(self):
        """
        Save configuration to file.

        Returns:
            True if save was successful, False otherwise
        """
        try:
            directory = os.path.dirname(self.config_file)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(self.config_file, 'w', encoding='utf-8') as f:
                json.dump(self.config, f, indent=4)
            return True
        except OSError as e:
            logger.error(f"Config Manager: error saving configuration to {self.config_file}: {e}")
            return False

    def get(self, key, default=None):
        return self.config.get(key, default)

    def set(self, key, value):
        self.config[key] = value

    def _env_overrides(self):
        raw = self.environ.get(ENV_FACTOR_BUDGET)
        if raw is None or raw == "":
            return {}
        try:
            return {"factor_budget": int(raw)}
        except ValueError:
            raise ConfigError(f"{ENV_FACTOR_BUDGET} must be an integer, got {raw!r}") from None

    def build_run_config(self, overrides=None):
        """
        Merge defaults, file, environment and overrides into a RunConfig.

        Args:
            overrides: Mapping of configuration keys to values; None values
                are ignored

        Returns:
            RunConfig

        Raises:
            ConfigError: If a value is invalid
        """
        merged = dict(self.config)
        merged.update(self._env_overrides())
        for key, value in (overrides or {}).items():
            if value is not None:
                merged[key] = value
        try:
            policy = Policy(merged["irreducibility_policy"])
        except ValueError:
            raise ConfigError(f"unknown irreducibility policy {merged['irreducibility_policy']!r}") from None
        return RunConfig(
            factor_budget=merged["factor_budget"],
            policy=policy,
            witness_bound=merged["witness_bound"],
            output_format=merged["output_format"],
            cache_path=merged["cache_path"] or "",
            workers=merged["workers"],
            language=merged["language"],
            timings=bool(merged["timings"]),
        )
