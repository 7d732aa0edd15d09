"""
Helper utilities and configuration loading.
"""

import yaml
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Dict, Any, Optional

from lambda_playground.errors import ConfigError

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def load_yaml_config(config_path: str) -> Dict[str, Any]:
    """
    Load YAML configuration file.

    Args:
        config_path: Path to YAML file

    Returns:
        Configuration dictionary
    """
    with open(config_path, 'r') as f:
        return yaml.safe_load(f) or {}


def save_yaml_config(config: Dict, output_path: str):
    """Save configuration to YAML file."""
    with open(output_path, 'w') as f:
        yaml.dump(config, f)


def get_config_path(config_name: str) -> str:
    """Get path to a config file in configs/ directory."""
    repo_root = Path(__file__).parent.parent.parent.parent
    config_path = repo_root / 'configs' / f'{config_name}.yaml'
    if not config_path.exists():
        raise FileNotFoundError(f"Config file not found: {config_path}")
    return str(config_path)


@dataclass
class PlaygroundConfig:
    """Command-line defaults, one field per `section.key` of playground.yaml."""
    fuel: int = 100000
    random_bits: int = 10
    random_seed: int = 42
    census_top_k: int = 2
    iter_max_steps: int = 100
    orbit_steps: int = 20
    jobs: int = 1
    log_level: str = "INFO"

    def to_dict(self) -> Dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


# (section, key) in the YAML file -> PlaygroundConfig field
_CONFIG_KEYS = {
    ('reduction', 'fuel'): 'fuel',
    ('random', 'bits'): 'random_bits',
    ('random', 'seed'): 'random_seed',
    ('census', 'top_k'): 'census_top_k',
    ('itertype', 'max_steps'): 'iter_max_steps',
    ('orbit', 'steps'): 'orbit_steps',
    ('runtime', 'jobs'): 'jobs',
    ('runtime', 'log_level'): 'log_level',
}


def load_playground_config(config_path: Optional[str] = None) -> PlaygroundConfig:
    """
    Read playground.yaml (or the given file) into a PlaygroundConfig.

    Args:
        config_path: YAML file; defaults to configs/playground.yaml, and to
            built-in defaults when that file is absent

    Raises:
        ConfigError: unreadable file, unknown entry or wrongly typed value
    """
    if config_path is None:
        try:
            config_path = get_config_path('playground')
        except FileNotFoundError:
            return PlaygroundConfig()
    try:
        raw = load_yaml_config(config_path)
    except (OSError, yaml.YAMLError) as e:
        raise ConfigError(f"Cannot read config {config_path}: {e}") from e

    config = PlaygroundConfig()
    defaults = config.to_dict()
    for section, entries in raw.items():
        if not isinstance(entries, dict):
            raise ConfigError(f"Config section '{section}' must be a mapping")
        for key, value in entries.items():
            name = _CONFIG_KEYS.get((section, key))
            if name is None:
                raise ConfigError(f"Unknown config entry '{section}.{key}'")
            expected = type(defaults[name])
            if not isinstance(value, expected) or isinstance(value, bool):
                raise ConfigError(
                    f"Config entry '{section}.{key}' must be {expected.__name__}, "
                    f"got {value!r}")
            setattr(config, name, value)
    if config.jobs < 1:
        raise ConfigError("runtime.jobs must be at least 1")
    return config
