"""Alphabets, finite words, and ultimately periodic infinite words.

Two disjoint symbol universes are used throughout the package:

* coded words: plain strings over the four characters ``0 1 a b``,
  where ``a`` and ``b`` are the two coding letters,
* staged words: tuples mixing the integer letters ``0``/``1`` with
  indexed backspace symbols ``Eraser(j)``.

Keeping the universes as distinct Python types (str vs tuple) rules out
accidental mixing; conversion happens only through the coding module.

An ultimately periodic infinite word is a pair prefix|period over either
universe.  Everything here is immutable and all functions are pure.

Text formats
------------
coded word    one character per symbol, e.g. ``0abba1``
staged word   whitespace separated tokens ``0``, ``1``, ``E<j>``,
              e.g. ``0 E2 1``; the empty string is the empty word
infinite word ``<prefix>|<period>``, e.g. ``|01`` or ``1 1|E1 0``
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

ALPHA = "a"
BETA = "b"
CODED_CHARS = "01ab"
BINARY_CHARS = "01"


class MalformedInput(ValueError):
    """Rejected input, tagged with a 1-based text position when one is known."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        super().__init__(message)


@dataclass(frozen=True, slots=True)
class Eraser:
    """Backspace symbol of a given stage.

    During stage j only ``Eraser(j)`` is active; it may erase a letter or
    an eraser of strictly larger index, never one of its own kind.
    """

    index: int

    def __post_init__(self):
        if self.index < 1:
            raise MalformedInput(f"eraser index must be >= 1, got {self.index}")


StagedSymbol = Union[int, Eraser]
StagedWord = tuple
CodedWord = str
# a finite word of either universe
AnyWord = Union[str, tuple]

_STAGED_TOKEN = re.compile(r"E[1-9][0-9]*$")


def parse_coded(text: str) -> str:
    """Validate a coded word; returns the word itself."""
    for i, ch in enumerate(text):
        if ch not in CODED_CHARS:
            raise MalformedInput(
                f"unexpected character {ch!r} at position {i + 1}", i + 1)
    return text


def parse_binary(text: str) -> str:
    for i, ch in enumerate(text):
        if ch not in BINARY_CHARS:
            raise MalformedInput(
                f"unexpected character {ch!r} at position {i + 1}", i + 1)
    return text


def parse_staged(text: str) -> StagedWord:
    """Parse whitespace separated tokens ``0 | 1 | E<j>`` into a staged word."""
    symbols = []
    for m in re.finditer(r"\S+", text):
        tok = m.group()
        if tok == "0":
            symbols.append(0)
        elif tok == "1":
            symbols.append(1)
        elif _STAGED_TOKEN.match(tok):
            symbols.append(Eraser(int(tok[1:])))
        else:
            raise MalformedInput(
                f"unexpected token {tok!r} at position {m.start() + 1}",
                m.start() + 1)
    return tuple(symbols)


def format_staged(word: StagedWord) -> str:
    parts = []
    for sym in word:
        if isinstance(sym, Eraser):
            parts.append(f"E{sym.index}")
        else:
            parts.append(str(sym))
    return " ".join(parts)


def format_word(word: AnyWord) -> str:
    return word if isinstance(word, str) else format_staged(word)


@dataclass(frozen=True, slots=True)
class UPWord:
    """Ultimately periodic infinite word ``prefix . period^omega``.

    prefix and period must come from the same universe (both str or both
    tuple) and the period must be nonempty.  Structural equality compares
    the fields; use up_equal for equality of the denoted infinite words.
    """

    prefix: AnyWord
    period: AnyWord

    def __post_init__(self):
        if len(self.period) == 0:
            raise MalformedInput("period must be nonempty")
        if type(self.prefix) is not type(self.period):
            raise MalformedInput("prefix and period use different alphabets")


def parse_up(text: str, kind: str = "coded") -> UPWord:
    """Parse ``<prefix>|<period>``; kind is coded, staged or binary."""
    if text.count("|") != 1:
        raise MalformedInput("expected exactly one '|' separator")
    left, right = text.split("|")
    if kind == "staged":
        prefix, period = parse_staged(left), parse_staged(right)
    elif kind == "binary":
        prefix, period = parse_binary(left), parse_binary(right)
    elif kind == "coded":
        prefix, period = parse_coded(left), parse_coded(right)
    else:
        raise ValueError(f"unknown word kind {kind!r}")
    if len(period) == 0:
        raise MalformedInput("period must be nonempty", len(left) + 2)
    return UPWord(prefix, period)


def format_up(x: UPWord) -> str:
    return f"{format_word(x.prefix)}|{format_word(x.period)}"


def up_prefix(x: UPWord, n: int) -> AnyWord:
    """The first n symbols of the denoted infinite word."""
    if n < 0:
        raise ValueError("length must be >= 0")
    if n <= len(x.prefix):
        return x.prefix[:n]
    rest = n - len(x.prefix)
    reps = -(-rest // len(x.period))
    return x.prefix + (x.period * reps)[:rest]


def _primitive_root(v: AnyWord) -> AnyWord:
    n = len(v)
    for d in range(1, n + 1):
        if n % d == 0 and v[:d] * (n // d) == v:
            return v[:d]
    raise AssertionError("unreachable")


def up_normalize(x: UPWord) -> UPWord:
    """Canonical form: primitive period, shortest prefix.

    While the prefix ends with the same symbol the period ends with, that
    symbol can be absorbed by rotating the period right; the result is the
    unique shortest representation of the denoted word.
    """
    v = _primitive_root(x.period)
    u = x.prefix
    while len(u) > 0 and u[-1] == v[-1]:
        v = v[-1:] + v[:-1]
        u = u[:-1]
    return UPWord(u, v)


def up_equal(x: UPWord, y: UPWord) -> bool:
    """Do x and y denote the same infinite word?"""
    return up_normalize(x) == up_normalize(y)
