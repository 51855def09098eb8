#!/usr/bin/env python
# -*- coding: utf-8 -*-
import json
import logging

import pytest
import sympy

from core.errors import ConfigError
from core.intfactor import factor
from core.irreducibility import Policy
from utils.config_manager import ENV_FACTOR_BUDGET, ConfigManager, RunConfig
from utils.factor_cache import FactorCache, parse_factorization


def write_config(path, data):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f)


class Test_ConfigManager(object):
    def test_defaults(self, isolated_env):
        run_config = ConfigManager(isolated_env, environ={}).build_run_config()
        assert run_config.factor_budget == 200000
        assert run_config.policy is Policy.REQUIRE_CERTIFICATE
        assert run_config.witness_bound == 101
        assert run_config.output_format == "text"
        assert run_config.workers == 4

    def test_precedence(self, isolated_env):
        write_config(isolated_env, {"factor_budget": 5000, "witness_bound": 53, "output_format": "json"})
        manager = ConfigManager(isolated_env, environ={ENV_FACTOR_BUDGET: "7000"},
                                defaults={"irreducibility_policy": "assume", "witness_bound": 11})
        run_config = manager.build_run_config({"output_format": "tsv", "workers": None})
        assert run_config.witness_bound == 53
        assert run_config.factor_budget == 7000
        assert run_config.output_format == "tsv"
        assert run_config.policy is Policy.ASSUME
        assert run_config.workers == 4
        assert manager.build_run_config({"factor_budget": 9}).factor_budget == 9

    def test_file_overrides_injected_policy(self, isolated_env):
        write_config(isolated_env, {"irreducibility_policy": "require-certificate"})
        manager = ConfigManager(isolated_env, environ={}, defaults={"irreducibility_policy": "assume"})
        assert manager.build_run_config().policy is Policy.REQUIRE_CERTIFICATE

    def test_unknown_keys_ignored(self, isolated_env, caplog):
        write_config(isolated_env, {"colour": "blue", "workers": 2})
        with caplog.at_level(logging.WARNING):
            manager = ConfigManager(isolated_env, environ={})
        assert manager.get("colour") is None
        assert manager.get("workers") == 2
        assert "colour" in caplog.text

    @pytest.mark.parametrize("content", ["{not json", "[1, 2]"])
    def test_malformed_file(self, isolated_env, content):
        with open(isolated_env, "w", encoding="utf-8") as f:
            f.write(content)
        with pytest.raises(ConfigError):
            ConfigManager(isolated_env, environ={})

    def test_bad_environment(self, isolated_env):
        manager = ConfigManager(isolated_env, environ={ENV_FACTOR_BUDGET: "lots"})
        with pytest.raises(ConfigError):
            manager.build_run_config()

    def test_empty_environment_value(self, isolated_env):
        manager = ConfigManager(isolated_env, environ={ENV_FACTOR_BUDGET: ""})
        assert manager.build_run_config().factor_budget == 200000

    def test_unknown_policy(self, isolated_env):
        manager = ConfigManager(isolated_env, environ={})
        with pytest.raises(ConfigError):
            manager.build_run_config({"irreducibility_policy": "hope"})

    def test_save_and_reload(self, isolated_env):
        manager = ConfigManager(isolated_env, environ={})
        manager.set("witness_bound", 31)
        assert manager.save_config()
        assert ConfigManager(isolated_env, environ={}).get("witness_bound") == 31

    def test_reads_process_environment(self, isolated_env, monkeypatch):
        monkeypatch.setenv(ENV_FACTOR_BUDGET, "1234")
        assert ConfigManager(isolated_env).build_run_config().factor_budget == 1234


class Test_RunConfig(object):
    @pytest.mark.parametrize("field, value", [
        ("factor_budget", 0),
        ("factor_budget", True),
        ("witness_bound", -3),
        ("workers", "4"),
        ("output_format", "xml"),
        ("language", "FR"),
        ("policy", "assume"),
    ])
    def test_invalid(self, field, value):
        values = dict(factor_budget=10, policy=Policy.ASSUME, witness_bound=5, output_format="json")
        values[field] = value
        with pytest.raises(ConfigError):
            RunConfig(**values)


class Test_FactorCache(object):
    def test_parse_factorization(self):
        assert parse_factorization("2^4*3") == {2: 4, 3: 1}
        assert parse_factorization("1") == {}
        for text in ("", "2^0", "2*2", "x^2", "1*3"):
            with pytest.raises(ValueError):
                parse_factorization(text)

    def test_store_and_reload(self, tmp_path):
        path = str(tmp_path / "cache" / "factors.tsv")
        cache = FactorCache(path)
        factor(-1022117, cache=cache)
        assert 1022117 in cache
        with open(path, "r", encoding="utf-8") as f:
            assert f.read() == "1022117\t1009*1013\n"
        reloaded = FactorCache(path)
        assert len(reloaded) == 1
        assert reloaded.get(-1022117).factors == {1009: 1, 1013: 1}
        assert reloaded.hits == 1

    def test_corrupt_lines_skipped(self, tmp_path, caplog):
        path = tmp_path / "factors.tsv"
        path.write_text("48\t2^4*3\n49\t7*7\n50\t2*5^2\n51\t51\ngarbage\n\n", encoding="utf-8")
        with caplog.at_level(logging.WARNING):
            cache = FactorCache(str(path))
        assert len(cache) == 2
        assert 48 in cache and 50 in cache
        assert "line 2" in caplog.text
        assert "line 4" in caplog.text
        assert "line 5" in caplog.text

    def test_incomplete_not_stored(self, tmp_path):
        path = tmp_path / "factors.tsv"
        cache = FactorCache(str(path))
        p = int(sympy.nextprime(2 ** 40))
        q = int(sympy.nextprime(2 ** 41))
        factor(p * q, budget=1, cache=cache)
        assert len(cache) == 0
        assert not path.exists()
