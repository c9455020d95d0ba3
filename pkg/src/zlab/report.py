"""Tabular output and the append-only JSONL run cache."""

from __future__ import annotations

import csv
import dataclasses
import hashlib
import io
import json
import os
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

SCHEMA_VERSION = 1
FLOAT_DIGITS = 6


class CacheError(RuntimeError):
    pass


def _row(rec: Any) -> dict:
    if isinstance(rec, dict):
        return dict(rec)
    if hasattr(rec, "as_dict"):
        return rec.as_dict()
    if dataclasses.is_dataclass(rec):
        return dataclasses.asdict(rec)
    raise TypeError(f"cannot tabulate {type(rec).__name__}")


def _columns_for(record_type: Optional[type]) -> list[str]:
    if record_type is None:
        return []
    if hasattr(record_type, "columns"):
        return list(record_type.columns)
    if dataclasses.is_dataclass(record_type):
        names = [f.name for f in dataclasses.fields(record_type)]
        if hasattr(record_type, "exponent") and "exponent" not in names:
            names.insert(names.index("cf") + 1, "exponent")
        return names
    return []


def format_value(v: Any) -> Any:
    if isinstance(v, float):
        return f"{v:.{FLOAT_DIGITS}f}"
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return v


def _json_value(v: Any) -> Any:
    if isinstance(v, float):
        return float(f"{v:.{FLOAT_DIGITS}f}") if v == v and abs(v) != float("inf") else str(v)
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    if isinstance(v, dict):
        return {k: _json_value(x) for k, x in v.items()}
    return v


def normalize(records: Sequence[Any], record_type: Optional[type] = None,
              sort_key: Optional[str] = "p") -> tuple[list[str], list[dict]]:
    """Column order and rows for a homogeneous record list."""
    kinds = {type(r) for r in records}
    if len(kinds) > 1:
        raise TypeError("mixed record types: " + ", ".join(sorted(k.__name__ for k in kinds)))
    if record_type is not None and kinds and kinds != {record_type}:
        raise TypeError(f"expected {record_type.__name__} records")
    rows = [_row(r) for r in records]
    cols = _columns_for(record_type or (next(iter(kinds)) if kinds else None))
    if rows:
        cols = cols or list(rows[0])
        for r in rows:
            if set(r) - set(cols) or set(cols) - set(r):
                raise TypeError("records do not share the same fields")
    if sort_key and rows and sort_key in cols:
        rows.sort(key=lambda r: r[sort_key])
    return cols, rows


def report_table(records: Sequence[Any], fmt: str = "csv", record_type: Optional[type] = None,
                 sort_key: Optional[str] = "p") -> str:
    """Render records as CSV (RFC 4180) or a JSON array with stable column order."""
    cols, rows = normalize(records, record_type, sort_key)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        if cols:
            w.writerow(cols)
        for r in rows:
            w.writerow([format_value(r[c]) for c in cols])
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([{c: _json_value(r[c]) for c in cols} for r in rows], ensure_ascii=False)
    raise ValueError(f"unknown table format {fmt!r}")


# ---------------------------------------------------------------------------
# cache


def default_cache_path() -> Path:
    env = os.environ.get("ZLAB_CACHE")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(Path.home(), ".cache")
    return Path(base) / "zlab" / "runs.jsonl"


def code_fingerprint() -> str:
    """Hash of the package sources; stored with each cache entry."""
    h = hashlib.sha256()
    pkg = Path(__file__).parent
    for path in sorted(pkg.glob("*.py")):
        h.update(path.name.encode())
        h.update(path.read_bytes())
    return h.hexdigest()[:16]


def cache_key(command: str, params: dict, seed: int) -> str:
    return json.dumps({"command": command, "params": params, "seed": seed}, sort_keys=True)


class RunCache:
    """Append-only JSONL file, one run per line."""

    def __init__(self, path: Path):
        self.path = Path(path)

    def entries(self) -> list[dict]:
        if not self.path.exists():
            return []
        out = []
        with self.path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    entry = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise CacheError(f"{self.path}:{lineno}: not valid JSON ({exc.msg})") from None
                if not isinstance(entry, dict) or "schema_version" not in entry or "key" not in entry:
                    raise CacheError(f"{self.path}:{lineno}: missing schema_version/key")
                if entry["schema_version"] != SCHEMA_VERSION:
                    raise CacheError(f"{self.path}:{lineno}: unsupported schema_version "
                                     f"{entry['schema_version']!r}")
                out.append(entry)
        return out

    def lookup(self, key: str) -> Optional[dict]:
        hit = None
        for entry in self.entries():
            if entry["key"] == key:
                hit = entry
        return hit

    def append(self, entry: dict) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        line = json.dumps({"schema_version": SCHEMA_VERSION, **entry}, ensure_ascii=False)
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(line + "\n")


def jsonl(records: Iterable[dict]) -> str:
    return "".join(json.dumps(_json_value(r), ensure_ascii=False) + "\n" for r in records)
