"""On-disk memo of character tables.

One JSON file per group, named by the SHA-256 of the group's canonical
element list (which fixes its multiplication table).  Values are exact
integers; a record whose key or schema does not match is ignored and
recomputed.
"""
from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

import numpy as np

from .chartable import CharacterTable, character_table
from .group import Group

__all__ = ["SCHEMA", "group_key", "TableCache", "default_cache_dir"]

SCHEMA = 1


def group_key(G: Group) -> str:
    h = hashlib.sha256()
    h.update(f"perm-group:{G.degree}:{G.order}:".encode())
    h.update(np.ascontiguousarray(G.perms, dtype=np.int32).tobytes())
    h.update(np.ascontiguousarray(G.rmul, dtype=np.int64).tobytes())
    return h.hexdigest()


def default_cache_dir() -> Path:
    env = os.environ.get("GINV_CACHE")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "ginv"


class TableCache:
    def __init__(self, directory: str | os.PathLike | None):
        self.dir = Path(directory) if directory is not None else None
        self.hits = 0
        self.misses = 0

    def _path(self, key: str) -> Path:
        return self.dir / f"chartable-{key}.json"

    def load(self, G: Group) -> CharacterTable | None:
        if self.dir is None:
            return None
        key = group_key(G)
        try:
            rec = json.loads(self._path(key).read_text())
        except (OSError, ValueError):
            return None
        if rec.get("schema") != SCHEMA or rec.get("key") != key:
            return None
        values = np.array(rec["values"], dtype=np.int64)
        return CharacterTable(G, int(rec["m"]), values, tuple(rec["degrees"]), int(rec["prime"]))

    def store(self, G: Group, T: CharacterTable) -> None:
        if self.dir is None:
            return
        key = group_key(G)
        rec = {"schema": SCHEMA, "key": key, "order": G.order, "m": T.m, "prime": T.prime,
               "degrees": list(T.degrees), "values": T.values.tolist()}
        self.dir.mkdir(parents=True, exist_ok=True)
        tmp = self._path(key).with_suffix(".tmp")
        tmp.write_text(json.dumps(rec, separators=(",", ":")))
        os.replace(tmp, self._path(key))

    def table(self, G: Group) -> CharacterTable:
        T = self.load(G)
        if T is not None:
            self.hits += 1
            return T
        self.misses += 1
        T = character_table(G)
        self.store(G, T)
        return T
