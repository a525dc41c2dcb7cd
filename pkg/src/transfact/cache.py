"""On-disk persistence for the character table and Jack expansions.

The file is versioned JSON and every scalar is an exact decimal string.  A
missing, unreadable or version-mismatched file means a cold start.
"""
from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from .charalg import CHARACTERS
from .core import Partition
from .jackseries import JACKS, SymFunc
from .ratfunc import AlphaRational

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
FILENAME = "transfact-cache.json"
ENV_VAR = "TRANSFACT_CACHE_DIR"


def default_cache_dir() -> Path | None:
    d = os.environ.get(ENV_VAR)
    return Path(d) if d else None


def _cache_file(path) -> Path:
    path = Path(path)
    return path / FILENAME if path.suffix != ".json" else path


def snapshot() -> dict:
    chars = sorted(([str(l), str(t), str(v)] for (l, t), v in CHARACTERS.items()),
                   key=lambda r: (Partition.parse(r[0]).weight, r[0], r[1]))
    jacks = {}
    for n in sorted(JACKS.by_weight):
        jacks[str(n)] = {
            str(theta): {str(k): v.to_json() for k, v in sorted(J.coeffs.items())}
            for theta, J in sorted(JACKS.by_weight[n].items())
        }
    return {"version": SCHEMA_VERSION, "characters": chars, "jacks": jacks}


def store(path) -> str:
    f = _cache_file(path)
    f.parent.mkdir(parents=True, exist_ok=True)
    tmp = f.with_suffix(".tmp")
    tmp.write_text(json.dumps(snapshot(), sort_keys=True, indent=1))
    os.replace(tmp, f)
    return "stored"


def load(path) -> str:
    """Populate the in-memory caches; returns a status string, never raises on bad files."""
    f = _cache_file(path)
    if not f.exists():
        return "cold: missing"
    try:
        data = json.loads(f.read_text())
    except (OSError, ValueError) as e:
        log.warning("unreadable cache %s (%s); starting cold", f, e)
        return "cold: unreadable"
    if not isinstance(data, dict) or data.get("version") != SCHEMA_VERSION:
        return "cold: version"
    try:
        chars = [((Partition.parse(l), Partition.parse(t)), int(v)) for l, t, v in data["characters"]]
        jacks = {}
        for n, table in data["jacks"].items():
            jacks[int(n)] = {
                Partition.parse(theta): SymFunc(int(n), {Partition.parse(k): AlphaRational.from_json(v)
                                                         for k, v in coeffs.items()})
                for theta, coeffs in table.items()
            }
    except (KeyError, TypeError, ValueError) as e:
        log.warning("malformed cache %s (%s); starting cold", f, e)
        return "cold: malformed"
    CHARACTERS.update(chars)
    with JACKS.lock:
        JACKS.by_weight.update(jacks)
    return "loaded"


def cache_io(direction: str, path) -> str:
    if direction == "load":
        return load(path)
    if direction == "store":
        return store(path)
    raise ValueError("direction must be 'load' or 'store'")
