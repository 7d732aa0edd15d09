"""Utilities package."""

from lambda_playground.utils.helpers import (
    LOG_FORMAT, PlaygroundConfig, get_config_path, load_playground_config,
    load_yaml_config, save_yaml_config,
)
from lambda_playground.utils.parallel import map_sizes
from lambda_playground.utils.tables import (
    TABLE_FORMATS, make_frame, render_table, write_table,
)
