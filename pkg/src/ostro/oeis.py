"""Generators for the OEIS sequences that live inside the arrays."""

from __future__ import annotations

from itertools import count

from .numer import decode, row_word
from .towers import first_column, terrace_class, wall_term


def _a049472(n: int) -> int:
    # wall column of the d = 2 array; index 0 is the empty row
    return 0 if n == 0 else wall_term(2, n)


def _a001950(n: int) -> int:
    # first column of the Wythoff array, shifted up by one
    return decode(1, row_word(1, n)) + 1


def _complement_first_column(offset: int, terms: int) -> list[int]:
    out, m, nxt = [], 1, first_column(2, 1)
    for v in count(1):
        if len(out) >= terms:
            return out
        if v == nxt:
            m += 1
            nxt = first_column(2, m)
        else:
            out.append(v)


def _coinciding(offset: int, terms: int) -> list[int]:
    out = []
    for N in count(1):
        if len(out) >= terms:
            return out
        if terrace_class(2, N) == "coinciding":
            out.append(N)


def _by_index(fn):
    return lambda offset, terms: [fn(n) for n in range(offset, offset + terms)]


SEQUENCES = {
    "A049472": (0, _by_index(_a049472), "wall terms floor(m/sqrt(2)), d=2"),
    "A001950": (1, _by_index(_a001950), "first column of the d=1 array plus one"),
    "A082845": (1, _complement_first_column, "complement of the d=2 first column"),
    "A276879": (1, _coinciding, "numbers next to coinciding walls, d=2"),
}


def generate(seq_id: str, terms: int, offset: int | None = None) -> list[int]:
    if seq_id not in SEQUENCES:
        raise KeyError(seq_id)
    default, gen, _ = SEQUENCES[seq_id]
    return gen(default if offset is None else offset, terms) if terms > 0 else []
