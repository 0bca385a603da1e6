"""Disk cache for parity series, keyed by (a, b, m, n).

One JSON file per key, carrying a format version and a checksum over the
key plus the packed bits; anything that fails validation is treated as a
miss and recomputed.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .params import CpParams
from .series import ParitySeries, copartition_parity

CACHE_VERSION = 1
CACHE_DIR_ENV = "COPARTITIONS_CACHE_DIR"


def default_cache_dir() -> str | None:
    return os.environ.get(CACHE_DIR_ENV)


def _entry_path(cache_dir, params: CpParams, n: int) -> Path:
    name = f"parity-v{CACHE_VERSION}-a{params.a}-b{params.b}-m{params.m}-n{n}.json"
    return Path(cache_dir) / name


def _digest(params: CpParams, n: int, bits_hex: str) -> str:
    payload = f"{params.a}:{params.b}:{params.m}:{n}:{bits_hex}"
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


def load_parity(cache_dir, params: CpParams, n: int) -> ParitySeries | None:
    path = _entry_path(cache_dir, params, n)
    try:
        entry = json.loads(path.read_text("ascii"))
    except (OSError, ValueError):
        return None
    try:
        if entry["version"] != CACHE_VERSION:
            return None
        if (entry["a"], entry["b"], entry["m"], entry["n"]) != (params.a, params.b, params.m, n):
            return None
        bits_hex = entry["bits_hex"]
        if entry["sha256"] != _digest(params, n, bits_hex):
            return None
        return ParitySeries(n, int(bits_hex, 16))
    except (KeyError, TypeError, ValueError):
        return None


def store_parity(cache_dir, params: CpParams, n: int, series: ParitySeries):
    if series.trunc != n:
        raise ValueError(f"series truncated at {series.trunc}, expected {n}")
    path = _entry_path(cache_dir, params, n)
    path.parent.mkdir(parents=True, exist_ok=True)
    bits_hex = format(series.bits, "x")
    entry = {
        "version": CACHE_VERSION,
        "a": params.a,
        "b": params.b,
        "m": params.m,
        "n": n,
        "bits_hex": bits_hex,
        "sha256": _digest(params, n, bits_hex),
    }
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(entry), "ascii")
    os.replace(tmp, path)


def cached_copartition_parity(params: CpParams, n: int, cache_dir=None) -> ParitySeries:
    """Parity series through n, read from the cache when possible."""
    if cache_dir:
        hit = load_parity(cache_dir, params, n)
        if hit is not None:
            return hit
    series = copartition_parity(params, n)
    if cache_dir:
        store_parity(cache_dir, params, n, series)
    return series
