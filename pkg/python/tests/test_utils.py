"""
Unit tests for configuration loading, table rendering and size sharding.
"""

import io
import json
import os
import subprocess
import sys
from functools import partial
from pathlib import Path

import pytest

from lambda_playground.errors import ConfigError
from lambda_playground.utils.helpers import (
    PlaygroundConfig, get_config_path, load_playground_config, save_yaml_config,
)
from lambda_playground.utils.parallel import map_sizes
from lambda_playground.utils.tables import make_frame, render_table, write_table


def test_shipped_config_matches_defaults():
    """configs/playground.yaml restates the built-in defaults."""
    assert load_playground_config(get_config_path('playground')) == PlaygroundConfig()


def test_missing_config_name():
    with pytest.raises(FileNotFoundError):
        get_config_path('nonexistent')


def test_override(tmp_path):
    path = tmp_path / "custom.yaml"
    save_yaml_config({"random": {"seed": 7}, "runtime": {"jobs": 3}}, str(path))
    config = load_playground_config(str(path))
    assert config.random_seed == 7
    assert config.jobs == 3
    assert config.fuel == PlaygroundConfig().fuel


def test_empty_file_gives_defaults(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("")
    assert load_playground_config(str(path)) == PlaygroundConfig()


@pytest.mark.parametrize("text", [
    "reduction:\n  gas: 1\n",
    "reduction:\n  fuel: lots\n",
    "reduction:\n  fuel: true\n",
    "reduction: 5\n",
    "runtime:\n  jobs: 0\n",
    "reduction: [\n",
])
def test_bad_configs(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text)
    with pytest.raises(ConfigError):
        load_playground_config(str(path))


def test_unreadable_config(tmp_path):
    with pytest.raises(ConfigError):
        load_playground_config(str(tmp_path / "absent.yaml"))


def test_render_formats():
    df = make_frame([(1, 0.5), (2, 0.25)], ["size", "ratio"])
    assert render_table(df, "tsv") == "size\tratio\n1\t0.5\n2\t0.25\n"
    assert render_table(df, "csv") == "size,ratio\n1,0.5\n2,0.25\n"
    records = [json.loads(line) for line in render_table(df, "json").splitlines()]
    assert records == [{"size": 1, "ratio": 0.5}, {"size": 2, "ratio": 0.25}]
    with pytest.raises(ValueError):
        render_table(df, "xlsx")


def test_empty_json_table():
    assert render_table(make_frame([], ["size"]), "json") == ""


def test_write_table_to_stream():
    stream = io.StringIO()
    write_table(make_frame([(3,)], ["n"]), "csv", stream)
    assert stream.getvalue() == "n\n3\n"


def test_map_sizes_keeps_order():
    assert map_sizes(partial(pow, 2), [3, 1, 2]) == [8, 2, 4]
    assert map_sizes(abs, [], jobs=4) == []
    assert map_sizes(abs, [-5], jobs=4) == [5]



def test_library_runs_without_scipy():
    """scipy is a test dependency only; importing the command line must not load it."""
    snippet = "import sys, lambda_playground.cli; print('scipy' in sys.modules)"
    env_path = str(Path(__file__).resolve().parent.parent)
    out = subprocess.run([sys.executable, "-c", snippet], capture_output=True, text=True,
                         check=True, env={**os.environ, "PYTHONPATH": env_path})
    assert out.stdout.strip() == "False"


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
