"""OEIS b-files: "n a(n)" lines with optional '#' comments."""

from __future__ import annotations

import re
import urllib.request
from dataclasses import dataclass, field
from pathlib import Path

_ID = re.compile(r"A\d{6}")


class BFileError(ValueError):
    pass


@dataclass
class BFile:
    seq_id: str
    entries: list[tuple[int, int]] = field(default_factory=list)
    # raw lines in file order; None marks the position of the next entry
    _layout: list = field(default_factory=list, repr=False)
    trailing_newline: bool = True

    def values(self) -> list[int]:
        return [v for _, v in self.entries]

    @property
    def offset(self) -> int | None:
        return self.entries[0][0] if self.entries else None


def parse(text: str, seq_id: str = "") -> BFile:
    entries, layout = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            if not seq_id:
                m = _ID.search(line)
                seq_id = m.group(0) if m else ""
            layout.append(raw)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            n, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"line {lineno}: non-integer field in {raw!r}") from None
        if entries and n <= entries[-1][0]:
            raise BFileError(f"line {lineno}: index {n} not increasing")
        entries.append((n, v))
        layout.append(None if raw == f"{n} {v}" else raw)
    return BFile(seq_id, entries, layout, text.endswith("\n") or not text)


def serialize(bf: BFile) -> str:
    lines = []
    it = iter(bf.entries)
    for item in bf._layout:
        if item is None:
            n, v = next(it)
            lines.append(f"{n} {v}")
        elif item.strip() and not item.strip().startswith("#"):
            next(it)
            lines.append(item)
        else:
            lines.append(item)
    # entries added after parsing go at the end
    lines.extend(f"{n} {v}" for n, v in it)
    text = "\n".join(lines)
    return text + "\n" if lines and bf.trailing_newline else text


def read(path) -> BFile:
    path = Path(path)
    m = _ID.search(path.stem.replace("b", "A", 1)) if path.stem.startswith("b") else None
    return parse(path.read_text(), m.group(0) if m else "")


def fetch(seq_id: str, timeout: float = 30.0) -> str:
    """Download a b-file from oeis.org (explicit opt-in; tests never call this)."""
    if not _ID.fullmatch(seq_id):
        raise BFileError(f"not an OEIS id: {seq_id!r}")
    url = f"https://oeis.org/{seq_id}/b{seq_id[1:]}.txt"
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        return resp.read().decode("utf-8")
