"""Persistent cache for configuration-space homology results.

One file per (k, coefficient system) key.  Files are JSON beginning with a
format/version tag and the key itself; writes go through a temporary file and
an atomic rename so concurrent readers never see a partial entry.  Anything
unreadable is treated as a miss (corrupt entries additionally warn) and gets
recomputed.
"""

from __future__ import annotations

import json
import os
import tempfile
import warnings
from dataclasses import dataclass
from pathlib import Path

from .abelian import GradedAbelianGroup

CACHE_FORMAT = "polystab-braid-homology"
CACHE_VERSION = 1
ENV_CACHE_DIR = "POLYSTAB_CACHE"


@dataclass(frozen=True)
class BraidHomologyKey:
    k: int
    system: str

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.system not in ("trivial", "sign"):
            raise ValueError(f"unknown coefficient system {self.system!r}")


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "polystab"


class HomologyCache:
    """Directory-backed store of integral homology tables."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def path_for(self, key: BraidHomologyKey) -> Path:
        return self.directory / f"braid_v{CACHE_VERSION}_k{key.k}_{key.system}.json"

    def get(self, key: BraidHomologyKey) -> GradedAbelianGroup | None:
        path = self.path_for(key)
        try:
            raw = path.read_text(encoding="utf-8")
        except OSError:
            return None
        try:
            doc = json.loads(raw)
            if doc.get("format") != CACHE_FORMAT:
                raise ValueError("unexpected format tag")
            if doc.get("version") != CACHE_VERSION:
                return None  # version mismatch is a plain miss
            if doc.get("k") != key.k or doc.get("system") != key.system:
                raise ValueError("key mismatch")
            return GradedAbelianGroup.from_payload(doc["homology"])
        except (ValueError, KeyError, TypeError) as exc:
            warnings.warn(f"discarding corrupted cache entry {path}: {exc}")
            return None

    def put(self, key: BraidHomologyKey, value: GradedAbelianGroup) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        doc = {
            "format": CACHE_FORMAT,
            "version": CACHE_VERSION,
            "k": key.k,
            "system": key.system,
            "homology": value.to_payload(),
        }
        path = self.path_for(key)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(doc, handle)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    def _entries(self) -> list[Path]:
        if not self.directory.is_dir():
            return []
        return sorted(self.directory.glob("braid_v*_k*_*.json"))

    def stats(self) -> dict:
        entries = self._entries()
        return {
            "directory": str(self.directory),
            "entries": len(entries),
            "bytes": sum(p.stat().st_size for p in entries),
        }

    def clear(self) -> int:
        removed = 0
        for path in self._entries():
            try:
                path.unlink()
                removed += 1
            except OSError:
                pass
        return removed
