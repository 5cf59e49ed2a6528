import json
import logging

import pytest
from hypothesis import given, settings, HealthCheck, strategies as st

from ballot_oop.cache import ENV_VAR, CountCache, resolve_dir


def test_round_trip(tmp_path):
    c = CountCache(tmp_path)
    c.store("ballot", (10, 4), 518324, "oracle")
    again = CountCache(tmp_path).lookup("ballot", (10, 4))
    assert again.count == 518324 and again.producer == "oracle"


def test_cold_lookup_misses(tmp_path):
    assert CountCache(tmp_path).lookup("ballot", (10, 4)) is None


def test_big_value_survives_as_decimal_string(tmp_path):
    big = 19930831004237505532
    CountCache(tmp_path).store("oop", (25, 5), big, "recurrence")
    line = (tmp_path / "counts.jsonl").read_text()
    assert json.loads(line)["value"] == str(big)
    assert CountCache(tmp_path).lookup("oop", (25, 5)).count == big


@settings(suppress_health_check=[HealthCheck.function_scoped_fixture], max_examples=30)
@given(st.integers(0, 10**40), st.integers(1, 30), st.text("01", min_size=1, max_size=6))
def test_round_trip_property(tmp_path, value, n, r):
    d = tmp_path / f"c{n}{r}{value % 97}"
    CountCache(d).store("f", (r, n), value, "oracle")
    assert CountCache(d).lookup("f", (r, n)).count == value


def test_values_are_immutable(tmp_path):
    c = CountCache(tmp_path)
    c.store("ballot", (7, 3), 604, "oracle")
    c.store("ballot", (7, 3), 604, "formula")  # same value: no-op
    with pytest.raises(ValueError):
        c.store("ballot", (7, 3), 605, "oracle")
    lines = (tmp_path / "counts.jsonl").read_text().splitlines()
    assert len(lines) == 1


def test_keys_store_strings_literally(tmp_path):
    c = CountCache(tmp_path)
    c.store("ud", (6, "0110"), 35, "oracle")
    assert c.lookup("ud", (6, "011")) is None
    assert CountCache(tmp_path).lookup("ud", (6, "0110")).count == 35


def test_corrupt_lines_skipped(tmp_path, caplog):
    path = tmp_path / "counts.jsonl"
    good = {"statistic": "ballot", "params": [5, 2], "value": "22",
            "producer": "oracle", "created_at": "2026-01-01T00:00:00+00:00"}
    path.write_text("not json\n" + json.dumps(good) + "\n{\"value\": 3}\n")
    with caplog.at_level(logging.WARNING):
        c = CountCache(tmp_path)
        assert c.lookup("ballot", (5, 2)).count == 22
    assert sum("corrupt" in r.message for r in caplog.records) == 2


def test_clear(tmp_path):
    c = CountCache(tmp_path)
    c.store("ballot", (5, 2), 22, "oracle")
    c.clear()
    assert c.entries() == [] and not (tmp_path / "counts.jsonl").exists()


def test_env_var_overrides_flag(tmp_path, monkeypatch):
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "env"))
    assert resolve_dir(tmp_path / "flag") == tmp_path / "env"
    monkeypatch.delenv(ENV_VAR)
    assert resolve_dir(tmp_path / "flag") == tmp_path / "flag"
