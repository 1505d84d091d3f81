import json

import pytest

from polystab import braid
from polystab.abelian import AbelianGroup, GradedAbelianGroup
from polystab.cache import CACHE_VERSION, BraidHomologyKey, HomologyCache, default_cache_dir


@pytest.fixture
def cache(tmp_path):
    return HomologyCache(tmp_path / "store")


SAMPLE = GradedAbelianGroup({0: AbelianGroup(1), 3: AbelianGroup(2, (2, 6))})
KEY = BraidHomologyKey(4, "sign")


def test_roundtrip_is_exact(cache):
    cache.put(KEY, SAMPLE)
    assert cache.get(KEY) == SAMPLE


def test_file_starts_with_format_version_and_key(cache):
    cache.put(KEY, SAMPLE)
    doc = json.loads(cache.path_for(KEY).read_text())
    head = list(doc)[:4]
    assert head == ["format", "version", "k", "system"]
    assert doc["version"] == CACHE_VERSION
    assert (doc["k"], doc["system"]) == (KEY.k, KEY.system)


def test_miss_on_empty(cache):
    assert cache.get(KEY) is None


def test_version_mismatch_is_a_miss(cache):
    cache.put(KEY, SAMPLE)
    path = cache.path_for(KEY)
    doc = json.loads(path.read_text())
    doc["version"] = CACHE_VERSION + 1
    path.write_text(json.dumps(doc))
    assert cache.get(KEY) is None


def test_corrupted_entry_warns_and_misses(cache):
    cache.put(KEY, SAMPLE)
    cache.path_for(KEY).write_text("{not json")
    with pytest.warns(UserWarning, match="corrupted"):
        assert cache.get(KEY) is None


def test_key_mismatch_warns_and_misses(cache):
    cache.put(KEY, SAMPLE)
    path = cache.path_for(KEY)
    doc = json.loads(path.read_text())
    doc["k"] = 99
    path.write_text(json.dumps(doc))
    with pytest.warns(UserWarning):
        assert cache.get(KEY) is None


def test_put_leaves_no_temporaries(cache):
    cache.put(KEY, SAMPLE)
    leftovers = [p for p in cache.directory.iterdir() if p.suffix == ".tmp"]
    assert leftovers == []


def test_stats_and_clear(cache):
    assert cache.stats()["entries"] == 0
    cache.put(KEY, SAMPLE)
    cache.put(BraidHomologyKey(2, "trivial"), SAMPLE)
    stats = cache.stats()
    assert stats["entries"] == 2
    assert stats["bytes"] > 0
    assert cache.clear() == 2
    assert cache.stats()["entries"] == 0


def test_key_validation():
    with pytest.raises(ValueError):
        BraidHomologyKey(0, "sign")
    with pytest.raises(ValueError):
        BraidHomologyKey(2, "weird")


def test_config_homology_persists_and_reloads(cache, monkeypatch):
    monkeypatch.setattr(braid, "_memo", {})
    value = braid.config_homology(5, braid.SIGN, cache=cache)
    key = BraidHomologyKey(5, "sign")
    assert cache.get(key) == value
    # fresh memo: the answer must now come from disk, not a recomputation
    monkeypatch.setattr(braid, "_memo", {})
    sentinel = GradedAbelianGroup({40: AbelianGroup(7)})
    cache.put(key, sentinel)
    assert braid.config_homology(5, braid.SIGN, cache=cache) == sentinel


def test_corrupt_cache_recomputes(cache, monkeypatch):
    monkeypatch.setattr(braid, "_memo", {})
    value = braid.config_homology(4, braid.SIGN, cache=cache)
    path = cache.path_for(BraidHomologyKey(4, "sign"))
    path.write_text("garbage")
    monkeypatch.setattr(braid, "_memo", {})
    with pytest.warns(UserWarning):
        again = braid.config_homology(4, braid.SIGN, cache=cache)
    assert again == value
    assert cache.get(BraidHomologyKey(4, "sign")) == value  # rewritten


def test_default_cache_dir_env(monkeypatch, tmp_path):
    monkeypatch.setenv("POLYSTAB_CACHE", str(tmp_path / "envcache"))
    assert default_cache_dir() == tmp_path / "envcache"
