"""Shared read-only lookup resources: dictionary, stopwords, abbreviations,
suffix stemmer.

All loaders take binary streams so callers control where the bytes come
from; ``LexiconResources.from_paths`` wires up file paths and falls back to
the data files bundled with the package.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass
from typing import BinaryIO, Iterator, Protocol, Sequence

from .errors import ParseError
from .tokenizer import turkish_lowercase

__all__ = [
    "Dictionary",
    "Stemmer",
    "SuffixStemmer",
    "LexiconResources",
    "load_dictionary",
    "dump_dictionary",
    "load_stopwords",
    "load_abbreviations",
    "load_suffixes",
]

# Marker key for "a word ends here" in the nested-dict trie. The empty
# string can never be a character, so it cannot collide with an edge.
_WORD = ""


class Dictionary:
    """Known words with usage frequencies; membership is diacritic-exact."""

    __slots__ = ("_entries", "_trie")

    def __init__(self, entries: dict[str, int] | None = None):
        self._entries: dict[str, int] = dict(entries) if entries else {}
        self._trie: dict | None = None

    def add(self, word: str, frequency: int = 1) -> None:
        """Insert a word, summing frequencies on repeat insertions."""
        self._entries[word] = self._entries.get(word, 0) + frequency
        self._trie = None

    def __contains__(self, word: str) -> bool:
        return word in self._entries

    def is_known(self, word: str) -> bool:
        """Exact membership; "cok" is not known just because "çok" is."""
        return word in self._entries

    def frequency(self, word: str) -> int:
        return self._entries.get(word, 0)

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dictionary):
            return NotImplemented
        return self._entries == other._entries

    def items(self) -> Iterator[tuple[str, int]]:
        return iter(self._entries.items())

    def trie(self) -> dict:
        """Prefix tree over all entries, built once and cached.

        Nodes are plain dicts keyed by character; the empty-string key
        holds the word frequency at terminal nodes.
        """
        if self._trie is None:
            root: dict = {}
            for word, freq in self._entries.items():
                node = root
                for ch in word:
                    node = node.setdefault(ch, {})
                node[_WORD] = freq
            self._trie = root
        return self._trie


def load_dictionary(source: BinaryIO, name: str | None = None) -> Dictionary:
    """Parse "word<TAB>frequency" lines into a Dictionary.

    The frequency column is optional and defaults to 1. Words are
    normalized with turkish_lowercase and duplicate words sum their
    frequencies. A malformed frequency raises ParseError with the line
    number.
    """
    dictionary = Dictionary()
    try:
        text = source.read().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not valid UTF-8: {exc}", source=name) from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) > 2:
            raise ParseError(f"expected word<TAB>frequency, got {line!r}", lineno, name)
        word = turkish_lowercase(parts[0].strip())
        if not word:
            raise ParseError("empty word column", lineno, name)
        if len(parts) == 2:
            try:
                frequency = int(parts[1].strip())
            except ValueError:
                raise ParseError(f"frequency is not an integer: {parts[1]!r}", lineno, name) from None
            if frequency < 0:
                raise ParseError(f"frequency must be non-negative: {frequency}", lineno, name)
        else:
            frequency = 1
        dictionary.add(word, frequency)
    return dictionary


def dump_dictionary(dictionary: Dictionary, sink: BinaryIO) -> None:
    """Serialize a dictionary as sorted "word<TAB>frequency" lines."""
    for word, freq in sorted(dictionary.items()):
        sink.write(f"{word}\t{freq}\n".encode("utf-8"))


def load_stopwords(source: BinaryIO, name: str | None = None) -> frozenset[str]:
    """One stopword per line; blank lines and '#' comments are ignored."""
    words = set()
    text = source.read().decode("utf-8")
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.add(turkish_lowercase(line))
    return frozenset(words)


def load_abbreviations(source: BinaryIO, name: str | None = None) -> dict[str, str]:
    """Parse "abbreviation<TAB>expansion" lines into a lookup table."""
    table: dict[str, str] = {}
    text = source.read().decode("utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            raise ParseError(f"expected abbreviation<TAB>expansion, got {line!r}", lineno, name)
        table[turkish_lowercase(parts[0].strip())] = turkish_lowercase(parts[1].strip())
    return table


def load_suffixes(source: BinaryIO, name: str | None = None) -> list[str]:
    """One suffix per line in priority order; '#' comment lines are ignored."""
    suffixes = []
    text = source.read().decode("utf-8")
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        suffixes.append(turkish_lowercase(line))
    return suffixes


class Stemmer(Protocol):
    """Anything that maps an inflected surface form to a stem."""

    def stem(self, word: str) -> str: ...


class SuffixStemmer:
    """Plain longest-suffix stripper over a fixed inventory.

    Repeatedly removes the longest inventory suffix whose removal keeps at
    least ``min_stem_len`` characters, so stacked endings come off one at a
    time ("zamanlarda" -> "zamanlar" -> "zaman"). Ties between equally long
    suffixes follow inventory order. The output never matches another
    strippable suffix, which makes stemming idempotent by construction.
    """

    def __init__(self, suffixes: Sequence[str], min_stem_len: int = 3):
        if min_stem_len < 1:
            raise ValueError("min_stem_len must be at least 1")
        # Stable sort: longest first, inventory order within a length.
        self._suffixes = sorted((s for s in suffixes if s), key=len, reverse=True)
        self.min_stem_len = min_stem_len

    def stem(self, word: str) -> str:
        current = word
        while True:
            for suffix in self._suffixes:
                if len(current) - len(suffix) >= self.min_stem_len and current.endswith(suffix):
                    current = current[: -len(suffix)]
                    break
            else:
                return current


@dataclass(frozen=True)
class LexiconResources:
    """The read-only bundle every correction and pipeline run works from."""

    dictionary: Dictionary
    stopwords: frozenset[str]
    abbreviations: dict[str, str]
    stemmer: Stemmer

    @classmethod
    def from_paths(
        cls,
        dictionary: str | None = None,
        stopwords: str | None = None,
        abbreviations: str | None = None,
        suffixes: str | None = None,
        min_stem_len: int = 3,
    ) -> "LexiconResources":
        """Load resources from the given paths; None selects the bundled file."""

        def opened(path: str | None, bundled_name: str):
            if path is None:
                return _bundled(bundled_name).open("rb"), bundled_name
            return open(path, "rb"), path

        stream, name = opened(dictionary, "dictionary.tsv")
        with stream:
            loaded_dictionary = load_dictionary(stream, name)
        stream, name = opened(stopwords, "stopwords.txt")
        with stream:
            loaded_stopwords = load_stopwords(stream, name)
        stream, name = opened(abbreviations, "abbreviations.tsv")
        with stream:
            loaded_abbreviations = load_abbreviations(stream, name)
        stream, name = opened(suffixes, "suffixes.txt")
        with stream:
            suffix_list = load_suffixes(stream, name)
        return cls(
            dictionary=loaded_dictionary,
            stopwords=loaded_stopwords,
            abbreviations=loaded_abbreviations,
            stemmer=SuffixStemmer(suffix_list, min_stem_len=min_stem_len),
        )

    @classmethod
    def bundled(cls) -> "LexiconResources":
        """The resource set shipped with the package."""
        return cls.from_paths()


def _bundled(name: str):
    return importlib.resources.files("turlex").joinpath("data").joinpath(name)
