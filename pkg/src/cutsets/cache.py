"""Persistent CSV cache of computed g_n(m, l) values.

The file has the header ``n,m,l,g`` and one row per value. Existing rows are
never rewritten; new rows are appended by writing the whole file to a
temporary sibling and renaming it over the original.
"""
from __future__ import annotations

import csv
import io
import os
import tempfile
from pathlib import Path

HEADER = ["n", "m", "l", "g"]
ENV_VAR = "CUTSET_CACHE"


class CacheError(ValueError):
    pass


def default_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "cutsets" / "g.csv"


class GCache:
    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._rows: dict[tuple[int, int, int], int] = {}
        self._order: list[tuple[int, int, int]] = []
        self._new: list[tuple[int, int, int]] = []
        if self.path.exists():
            self._load()

    def _load(self):
        with open(self.path, newline="") as fh:
            text = fh.read()
        lines = text.splitlines()
        if not lines:
            return
        if lines[0].strip() != ",".join(HEADER):
            raise CacheError(f"{self.path}:1: expected header {','.join(HEADER)!r}, got {lines[0]!r}")
        for lineno, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            parts = line.strip().split(",")
            try:
                if len(parts) != 4:
                    raise ValueError
                n, m, l, g = (int(x) for x in parts)
            except ValueError:
                raise CacheError(f"{self.path}:{lineno}: malformed cache row {line!r}") from None
            if not (0 <= m <= l <= n and g >= 0):
                raise CacheError(f"{self.path}:{lineno}: invalid cache row {line!r}")
            key = (n, m, l)
            if key in self._rows and self._rows[key] != g:
                raise CacheError(f"{self.path}:{lineno}: conflicting value for n={n}, m={m}, l={l}")
            if key not in self._rows:
                self._order.append(key)
            self._rows[key] = g

    def get(self, n: int, m: int, l: int) -> int | None:
        return self._rows.get((n, m, l))

    def put(self, n: int, m: int, l: int, g: int):
        key = (n, m, l)
        if key in self._rows:
            if self._rows[key] != g:
                raise CacheError(f"cache already holds {self._rows[key]} for n={n}, m={m}, l={l}, not {g}")
            return
        self._rows[key] = g
        self._order.append(key)
        self._new.append(key)

    def __len__(self) -> int:
        return len(self._rows)

    def flush(self):
        """Write pending rows; a no-op when nothing new was added."""
        if not self._new:
            return
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(HEADER)
        for key in self._order:
            w.writerow([*key, self._rows[key]])
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(prefix=self.path.name, suffix=".tmp", dir=self.path.parent)
        try:
            with os.fdopen(fd, "w", newline="") as fh:
                fh.write(buf.getvalue())
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        self._new.clear()
