"""
Persistent cache for expensive artifacts (sigma tables, double Schubert polynomials, localizations, structure
constants). One text file per entry; the filename is the sha256 of the key. The first line of a file is the schema
version, the second the sha256 of the payload, and the rest is the payload.

Meant to be used with the [eqschubert.store.current_store][] context manager, like this:

    >>> from eqschubert.store import DiskStore, current_store
    >>> with current_store(DiskStore("/tmp/eqschubert")):
    ...     multiply_via_gkm(u, v)
"""
import abc
import dataclasses
import hashlib
import logging
import os
import typing
import uuid
import warnings
from typing import Optional, Tuple

import draccus
import fsspec
from filelock import FileLock
from fsspec import AbstractFileSystem


logger = logging.getLogger(__name__)


SCHEMA_VERSION = 1
KINDS = ("sigma", "double-schubert", "localization", "structconst")
CACHE_DIR_ENV = "EQSCHUBERT_CACHE_DIR"


@dataclasses.dataclass(frozen=True)
class CacheKey:
    schema_version: int
    cartan_type: str
    kind: str
    words: Tuple[str, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"Unknown cache kind {self.kind!r}; expected one of {KINDS}")

    @staticmethod
    def of(kind: str, cartan_type, *words: str) -> "CacheKey":
        return CacheKey(SCHEMA_VERSION, str(cartan_type), kind, tuple(words))

    def text(self) -> str:
        return f"v{self.schema_version}|{self.cartan_type}|{self.kind}|{'/'.join(self.words)}"

    def digest(self) -> str:
        return hashlib.sha256(self.text().encode("utf-8")).hexdigest()


def _checksum(payload: str) -> str:
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class Store(abc.ABC):
    """A key/value cache of text payloads. ``get`` returns None on a miss."""

    name: str

    @abc.abstractmethod
    def get(self, key: CacheKey) -> Optional[str]:
        pass

    @abc.abstractmethod
    def put(self, key: CacheKey, payload: str):
        pass

    def __enter__(self):
        if hasattr(self, "_store_cm"):
            raise RuntimeError("This store is already set as the global store")
        setattr(self, "_store_cm", current_store(self))
        self._store_cm.__enter__()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if not hasattr(self, "_store_cm"):
            raise RuntimeError("This store is not set as the global store")
        self._store_cm.__exit__(exc_type, exc_val, exc_tb)
        delattr(self, "_store_cm")


class NoopStore(Store):
    name: str = "noop"

    def get(self, key: CacheKey) -> Optional[str]:
        return None

    def put(self, key: CacheKey, payload: str):
        pass


class DiskStore(Store):
    name: str = "disk"

    def __init__(self, cache_dir: str):
        self.cache_dir = cache_dir
        self.hits = 0
        self.misses = 0
        self.corrupt_entries = 0
        fs: AbstractFileSystem = fsspec.core.url_to_fs(cache_dir)[0]
        self._fs = fs
        self._is_local = "file" in _protocols(fs)
        fs.makedirs(fsspec.core.url_to_fs(cache_dir)[1], exist_ok=True)

    def path_for(self, key: CacheKey) -> str:
        return os.path.join(self.cache_dir, f"{key.digest()}.txt")

    def get(self, key: CacheKey) -> Optional[str]:
        path = self.path_for(key)
        try:
            with fsspec.open(path, "rb") as f:
                content = f.read().decode("utf-8")
        except FileNotFoundError:
            self.misses += 1
            return None

        version, _, rest = content.partition("\n")
        checksum, _, payload = rest.partition("\n")
        if version != str(key.schema_version):
            logger.debug(f"Ignoring cache entry {path} with schema version {version!r}")
            self.misses += 1
            return None
        if checksum != _checksum(payload):
            logger.warning(f"Cache entry {path} for {key.text()} failed its checksum; recomputing")
            self.corrupt_entries += 1
            self.misses += 1
            return None
        self.hits += 1
        return payload

    def put(self, key: CacheKey, payload: str):
        path = self.path_for(key)
        content = f"{key.schema_version}\n{_checksum(payload)}\n{payload}".encode("utf-8")
        # write to a temp file and rename, so readers never see a partial entry
        tmp_path = f"{path}.{uuid.uuid4().hex}.tmp"
        if self._is_local:
            with FileLock(f"{_local_path(path)}.lock"):
                self._commit(tmp_path, path, content)
        else:
            self._commit(tmp_path, path, content)

    def _commit(self, tmp_path: str, path: str, content: bytes):
        with fsspec.open(tmp_path, "wb") as f:
            f.write(content)
        self._fs.mv(fsspec.core.url_to_fs(tmp_path)[1], fsspec.core.url_to_fs(path)[1])

    def purge(self) -> int:
        """Deletes every entry. Returns the number of entries removed."""
        root = fsspec.core.url_to_fs(self.cache_dir)[1]
        removed = 0
        for p in self._fs.ls(root, detail=False):
            if p.endswith(".txt"):
                self._fs.rm(p)
                removed += 1
        logger.info(f"Purged {removed} cache entries from {self.cache_dir}")
        return removed


def _protocols(fs: AbstractFileSystem):
    protocol = fs.protocol
    return protocol if isinstance(protocol, tuple) else (protocol,)


def _local_path(path: str) -> str:
    return fsspec.core.url_to_fs(path)[1]


def default_cache_dir() -> str:
    """``$EQSCHUBERT_CACHE_DIR``, else ``$XDG_CACHE_HOME/eqschubert``, else ``~/.cache/eqschubert``."""
    env = os.environ.get(CACHE_DIR_ENV)
    if env:
        return env
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return os.path.join(base, "eqschubert")


class StoreConfig(draccus.ChoiceRegistry, abc.ABC):
    @abc.abstractmethod
    def build(self) -> Store:
        raise NotImplementedError

    @classmethod
    def default_choice_name(cls) -> Optional[str]:
        return "disk"


@StoreConfig.register_subclass("disk")
@dataclasses.dataclass
class DiskStoreConfig(StoreConfig):
    cache_dir: Optional[str] = None  # defaults to $EQSCHUBERT_CACHE_DIR or the per-user cache directory

    def build(self) -> Store:
        cache_dir = self.cache_dir or default_cache_dir()
        logger.info(f"Using cache directory {cache_dir}")
        return DiskStore(cache_dir)


@StoreConfig.register_subclass("noop")
@dataclasses.dataclass
class NoopStoreConfig(StoreConfig):
    def build(self) -> Store:
        return NoopStore()


_global_store: Optional[Store] = None
_noop_store = NoopStore()


def set_global_store(store: Optional[Store]):
    """
    Set the global store. Prefer the context manager returned by `current_store` except for once at the beginning
    of a program.
    """
    global _global_store
    if _global_store is not None and store is not None:
        warnings.warn("Global store is already set. Overwriting it.")
    _global_store = store


@typing.overload
def current_store() -> Store:
    ...


@typing.overload
def current_store(store: Store) -> typing.ContextManager:
    ...


def current_store(store: Optional[Store] = None):
    """
    Get or set the global store. With no global store set, lookups go to a no-op store, so library calls work
    without a cache.

    Args:
        store: If provided, returns a context manager that makes it the global store while active.
    """
    if store is None:
        return _global_store if _global_store is not None else _noop_store
    return _GlobalStoreContextManager(store)


def get(key: CacheKey) -> Optional[str]:
    return current_store().get(key)


def put(key: CacheKey, payload: str):
    current_store().put(key, payload)


class _GlobalStoreContextManager(typing.ContextManager):
    def __init__(self, store: Store):
        self.store = store
        self.old_store: Optional[Store] = None

    def __enter__(self):
        global _global_store
        self.old_store = _global_store
        _global_store = self.store
        return self.store

    def __exit__(self, exc_type, exc_val, exc_tb):
        global _global_store
        _global_store = self.old_store
