import os
import uuid

import draccus
import fsspec
import pytest
from test_utils import elements, root_system, za

from eqschubert.presentations.borel import BorelClass
from eqschubert.presentations.convert import borel_to_schubert
from eqschubert.presentations.double_schubert import double_schubert_polynomial
from eqschubert.presentations.localization import localize
from eqschubert.presentations.sigma import sigma_for
from eqschubert.store import (
    CACHE_DIR_ENV,
    SCHEMA_VERSION,
    CacheKey,
    DiskStore,
    DiskStoreConfig,
    NoopStore,
    NoopStoreConfig,
    StoreConfig,
    current_store,
    default_cache_dir,
    get,
    put,
)
from eqschubert.structconst import multiply


KEY = CacheKey.of("sigma", "A2", "linear-system", "1,2")


def test_cache_key():
    assert KEY.text() == f"v{SCHEMA_VERSION}|A2|sigma|linear-system/1,2"
    assert KEY.digest() == CacheKey.of("sigma", "A2", "linear-system", "1,2").digest()
    assert KEY.digest() != CacheKey.of("sigma", "A3", "linear-system", "1,2").digest()
    with pytest.raises(ValueError):
        CacheKey.of("weights", "A2")


def test_disk_store_round_trip(tmp_path):
    store = DiskStore(str(tmp_path / "cache"))
    assert store.get(KEY) is None
    store.put(KEY, "x1^2 - x2\nsecond line")
    assert store.get(KEY) == "x1^2 - x2\nsecond line"
    assert (store.hits, store.misses, store.corrupt_entries) == (1, 1, 0)
    assert os.path.exists(store.path_for(KEY))


def test_disk_store_on_memory_fs():
    store = DiskStore(f"memory://eqschubert-{uuid.uuid4().hex}")
    store.put(KEY, "-x1")
    assert store.get(KEY) == "-x1"
    assert store.purge() == 1
    assert store.get(KEY) is None


def test_corrupt_entries_are_ignored(tmp_path):
    store = DiskStore(str(tmp_path))
    store.put(KEY, "-x1")
    with open(store.path_for(KEY)) as f:
        version, checksum, payload = f.read().split("\n")
    with open(store.path_for(KEY), "w") as f:
        f.write(f"{version}\n{checksum}\n-x2")
    assert store.get(KEY) is None
    assert store.corrupt_entries == 1


def test_other_schema_versions_are_ignored(tmp_path):
    store = DiskStore(str(tmp_path))
    store.put(KEY, "-x1")
    with fsspec.open(store.path_for(KEY), "r") as f:
        content = f.read()
    with fsspec.open(store.path_for(KEY), "w") as f:
        f.write(content.replace(f"{SCHEMA_VERSION}\n", "0\n", 1))
    assert store.get(KEY) is None
    assert store.corrupt_entries == 0


def test_purge(tmp_path):
    store = DiskStore(str(tmp_path))
    for word in ("1", "2", "1,2"):
        store.put(CacheKey.of("localization", "A2", word, word), "1")
    assert store.purge() == 3
    assert store.purge() == 0


def test_noop_store():
    store = NoopStore()
    store.put(KEY, "-x1")
    assert store.get(KEY) is None


def test_current_store_nests(tmp_path):
    outer, inner = DiskStore(str(tmp_path / "outer")), DiskStore(str(tmp_path / "inner"))
    assert isinstance(current_store(), NoopStore)
    with current_store(outer):
        put(KEY, "outer")
        with inner:
            assert current_store() is inner
            assert get(KEY) is None
        assert get(KEY) == "outer"
    assert get(KEY) is None


def test_store_config_choices(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_DIR_ENV, str(tmp_path / "env"))
    assert default_cache_dir() == str(tmp_path / "env")
    assert StoreConfig.default_choice_name() == "disk"

    built = DiskStoreConfig().build()
    assert isinstance(built, DiskStore)
    assert built.cache_dir == str(tmp_path / "env")
    assert isinstance(NoopStoreConfig().build(), NoopStore)

    cfg = draccus.decode(StoreConfig, {"type": "disk", "cache_dir": str(tmp_path / "explicit")})
    assert isinstance(cfg, DiskStoreConfig)
    assert cfg.build().cache_dir == str(tmp_path / "explicit")
    assert isinstance(draccus.decode(StoreConfig, {"type": "noop"}), NoopStoreConfig)


def test_default_cache_dir_without_env(monkeypatch, tmp_path):
    monkeypatch.delenv(CACHE_DIR_ENV, raising=False)
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path))
    assert default_cache_dir() == os.path.join(str(tmp_path), "eqschubert")


def _a2_results():
    rs = root_system("A2")
    ws = elements(rs)
    return {
        "localizations": {(w, v): localize(w, v) for w in ws for v in ws},
        "double-schubert": {(w, m): double_schubert_polynomial(w, m).rep for w in ws for m in ("ls", "linear-system")},
        "sigma": sigma_for(rs, ws, "linear-system").entries,
        "products": {(u, v): multiply(u, v, m).expansion for u in ws for v in ws for m in ("gkm", "borel")},
        "expansion": borel_to_schubert(BorelClass(rs, za("A2", "t1*x1*x2"))),
    }


def test_results_do_not_depend_on_the_store(tmp_path):
    with current_store(NoopStore()):
        uncached = _a2_results()
    disk = DiskStore(str(tmp_path))
    with current_store(disk):
        cold = _a2_results()
        warm = _a2_results()
    assert disk.hits > 0
    assert uncached == cold == warm
