import dataclasses
import os

import fsspec
import pytest
from test_utils import check_load_config, parameterize_with_configs

import eqschubert.config
import eqschubert.main.convert as convert_main
import eqschubert.main.gkm_graph as gkm_graph_main
import eqschubert.main.localize as localize_main
import eqschubert.main.multiply as multiply_main
import eqschubert.main.roots as roots_main
from eqschubert.config import EXIT_COMPUTATION, EXIT_USAGE, ComputeConfig
from eqschubert.store import DiskStoreConfig, NoopStore, NoopStoreConfig
from eqschubert.weyl import DEFAULT_MAX_ELEMENTS, GroupTooLarge, current_limits, set_limits


COMMAND_CONFIGS = {
    "convert": convert_main.ConvertConfig,
    "gkm_graph": gkm_graph_main.GkmGraphConfig,
    "localize": localize_main.LocalizeConfig,
    "multiply": multiply_main.MultiplyConfig,
}


@parameterize_with_configs("*.yaml")
def test_shipped_configs_load(config_file):
    command = os.path.basename(config_file).split("_", 1)[1].removesuffix(".yaml")
    check_load_config(COMMAND_CONFIGS[command], config_file)


def test_main_wrapper_loads_from_fsspec():
    yaml = """
    type: C2
    compute:
        store:
            type: noop
        log_dir: null
        max_group_order: 100
    """
    args = ["--config_path", _write_yaml_to_memory(yaml), "--w", "1,2"]

    @eqschubert.config.main(args=args)
    def main(config: localize_main.LocalizeConfig):
        assert config.type == "C2"
        assert config.w == "1,2"
        assert config.v == "e"
        assert isinstance(config.compute.store, NoopStoreConfig)
        assert config.compute.log_dir is None
        assert config.compute.max_group_order == 100
        return "ran"

    assert main() == "ran"


def test_short_flag_spellings(tmp_path):
    expanded = eqschubert.config.expand_aliases(["--from", "gkm", "--to=borel", "--expr", "x1"])
    assert expanded == ["--source", "gkm", "--target=borel", "--expr", "x1"]
    args = ["--type", "A2", "--from", "borel", "--to=schubert", "--cache-dir", str(tmp_path), "--expr", "x1"]

    @eqschubert.config.main(args=args)
    def main(config: convert_main.ConvertConfig):
        assert (config.source, config.target) == ("borel", "schubert")
        assert isinstance(config.compute.store, DiskStoreConfig)
        assert config.compute.store.cache_dir == str(tmp_path)
        return "ran"

    assert main() == "ran"


def test_compute_defaults():
    config = ComputeConfig()
    assert isinstance(config.store, DiskStoreConfig)
    assert config.max_elements == DEFAULT_MAX_ELEMENTS
    assert config.log_dir == "logs"


def test_initialize_sets_limits(tmp_path):
    config = ComputeConfig(store=NoopStoreConfig(), log_dir=str(tmp_path), max_group_order=10)
    try:
        store = config.initialize("limits")
        assert isinstance(store, NoopStore)
        assert current_limits().max_group_order == 10
        assert (tmp_path / "limits.log").exists()
    finally:
        set_limits(max_group_order=2000)
        ComputeConfig(store=NoopStoreConfig(), log_dir=None).initialize("reset")


def _exit_code(fn, args):
    with pytest.raises(SystemExit) as e:
        eqschubert.config.main(fn, args=args)()
    return e.value.code


@dataclasses.dataclass
class _Config:
    n: int = 1


def test_usage_errors_exit_with_2():
    def bad_value(config: _Config):
        raise ValueError("bad input")

    def bad_key(config: _Config):
        raise KeyError("missing")

    assert _exit_code(bad_value, []) == EXIT_USAGE
    assert _exit_code(bad_key, []) == EXIT_USAGE
    assert _exit_code(bad_value, ["--n", "not-a-number"]) == EXIT_USAGE


def test_computation_errors_exit_with_3():
    def too_large(config: _Config):
        raise GroupTooLarge("|W| too large")

    def inexact(config: _Config):
        raise ArithmeticError("not divisible")

    assert _exit_code(too_large, []) == EXIT_COMPUTATION
    assert _exit_code(inexact, []) == EXIT_COMPUTATION


def test_unknown_cartan_type_from_the_command_line():
    yaml = _write_yaml_to_memory("compute:\n  store:\n    type: noop\n  log_dir: null\n", "memory://roots.yaml")
    assert _exit_code(roots_main.main, ["--config_path", yaml, "--type", "Z9"]) == EXIT_USAGE


def _write_yaml_to_memory(yaml: str, path: str = "memory://test.yaml"):
    with fsspec.open(path, "w") as f:
        f.write(yaml)
    return path
