"""Corpus ingestion and the sparse co-occurrence store.

Counts are directed: in a windowed build the earlier token is the head,
in a dependency triple the governor is the head. Symmetric consumers sum
both directions. Plain windowed co-occurrence lives under the reserved
relation name ``"window"``; syntactic relations only enter through triple
ingestion.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Any, Iterable, Iterator, Mapping, Sequence

from . import assoc
from .errors import (
    InvalidParameterError,
    NotFoundError,
    ParseError,
    StoreFormatError,
)

WINDOW_RELATION = "window"

HEAD = 0
DEP = 1

_MAGIC = "#distsim-store v1"


class Semantics(Enum):
    """Strength function used for profile values."""

    RAW = "raw"
    CP = "cp"
    PMI = "pmi"


@dataclass(frozen=True)
class TokenizerConfig:
    """Deliberately naive tokenizer settings: case folding plus a token regex."""

    lowercase: bool = True
    token_pattern: str = r"[^\W_]+"


DEFAULT_TOKENIZER = TokenizerConfig()


@lru_cache(maxsize=16)
def _compiled(pattern: str) -> re.Pattern[str]:
    return re.compile(pattern)


def tokenize(document: str, config: TokenizerConfig = DEFAULT_TOKENIZER) -> list[str]:
    """Split a document into tokens on runs of non-alphanumeric characters."""
    text = document.lower() if config.lowercase else document
    return _compiled(config.token_pattern).findall(text)


@dataclass(frozen=True)
class Vocabulary:
    """Bijection between word strings and dense 0-based ids."""

    words: tuple[str, ...]
    index: Mapping[str, int]

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "Vocabulary":
        ordered = tuple(words)
        index = {w: i for i, w in enumerate(ordered)}
        if len(index) != len(ordered):
            raise InvalidParameterError("vocabulary contains duplicate words")
        return cls(words=ordered, index=index)

    def id(self, word: str) -> int:
        try:
            return self.index[word]
        except KeyError:
            raise NotFoundError(f"unknown word: {word!r}") from None

    def word(self, word_id: int) -> str:
        return self.words[word_id]

    def __contains__(self, word: str) -> bool:
        return word in self.index

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class CooccurrenceStore:
    """Immutable directed pair counts bucketed by relation.

    ``pair_counts`` maps (relation-id, head-id, dep-id) to a count,
    ``marginal_counts`` maps (relation-id, word-id, side) to a count with
    side HEAD or DEP, and ``total_pairs`` maps relation-id to the sum of
    its pair counts. ``window_size`` is recorded for provenance only
    (0 for stores built from triples).
    """

    vocab: Vocabulary
    relations: tuple[str, ...]
    pair_counts: Mapping[tuple[int, int, int], int]
    marginal_counts: Mapping[tuple[int, int, int], int]
    total_pairs: Mapping[int, int]
    window_size: int = 0

    @cached_property
    def relation_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.relations)}

    @cached_property
    def _adjacency(self) -> dict[int, dict[tuple[int, int], int]]:
        """Combined-direction neighbor counts, indexed by word id."""
        adj: dict[int, dict[tuple[int, int], int]] = {}
        for (rel, head, dep), count in self.pair_counts.items():
            adj.setdefault(head, {})
            adj[head][(rel, dep)] = adj[head].get((rel, dep), 0) + count
            adj.setdefault(dep, {})
            adj[dep][(rel, head)] = adj[dep].get((rel, head), 0) + count
        return adj

    def relation_id(self, name: str) -> int:
        try:
            return self.relation_index[name]
        except KeyError:
            raise NotFoundError(f"unknown relation: {name!r}") from None

    def resolve_relations(self, relations: Sequence[str] | None) -> tuple[int, ...]:
        if relations is None:
            return tuple(range(len(self.relations)))
        if not relations:
            raise InvalidParameterError("relation filter must not be empty")
        return tuple(self.relation_id(name) for name in relations)

    def directed_count(self, head: int, dep: int, rel_ids: Sequence[int]) -> int:
        return sum(self.pair_counts.get((r, head, dep), 0) for r in rel_ids)

    def combined_count(self, x: int, y: int, rel_ids: Sequence[int]) -> int:
        return self.directed_count(x, y, rel_ids) + self.directed_count(y, x, rel_ids)

    def marginal(self, word: int, rel_ids: Sequence[int]) -> int:
        """Total co-occurrences of a word (both sides) under the filter."""
        counts = self.marginal_counts
        return sum(
            counts.get((r, word, HEAD), 0) + counts.get((r, word, DEP), 0)
            for r in rel_ids
        )

    def total(self, rel_ids: Sequence[int]) -> int:
        return sum(self.total_pairs.get(r, 0) for r in rel_ids)

    def neighbor_counts(self, word: int, rel_ids: Sequence[int]) -> dict[tuple[int, int], int]:
        """Combined-direction counts of every (relation, word) feature of a word."""
        wanted = set(rel_ids)
        items = self._adjacency.get(word, {})
        return {feat: c for feat, c in items.items() if feat[0] in wanted}

    def canonical_pairs(self) -> list[tuple[tuple[int, int, int], int]]:
        """Pair rows sorted by relation id, then head id, then dep id."""
        return sorted(self.pair_counts.items())

    def validate(self) -> None:
        """Check marginal/total consistency; raises StoreFormatError on violation."""
        totals: Counter[int] = Counter()
        margins: Counter[tuple[int, int, int]] = Counter()
        for (rel, head, dep), count in self.pair_counts.items():
            if count < 0:
                raise StoreFormatError(f"[PAIRS]: negative count for {(rel, head, dep)}")
            totals[rel] += count
            margins[(rel, head, HEAD)] += count
            margins[(rel, dep, DEP)] += count
        if totals != Counter({r: t for r, t in self.total_pairs.items() if t}):
            raise StoreFormatError("[PAIRS]: totals inconsistent with pair counts")
        if margins != Counter({k: v for k, v in self.marginal_counts.items() if v}):
            raise StoreFormatError("[PAIRS]: marginals inconsistent with pair counts")


class StoreBuilder:
    """Accumulates directed pair counts; counts merge additively."""

    def __init__(self, window_size: int = 0):
        self.window_size = window_size
        self._words: dict[str, int] = {}
        self._relations: dict[str, int] = {}
        self._pairs: Counter[tuple[int, int, int]] = Counter()

    def add_word(self, word: str) -> int:
        if word not in self._words:
            self._words[word] = len(self._words)
        return self._words[word]

    def add_relation(self, name: str) -> int:
        if name not in self._relations:
            self._relations[name] = len(self._relations)
        return self._relations[name]

    def add_pair(self, relation: str, head: str, dep: str, count: int = 1) -> None:
        key = (self.add_relation(relation), self.add_word(head), self.add_word(dep))
        self._pairs[key] += count

    def build(self) -> CooccurrenceStore:
        totals: Counter[int] = Counter()
        margins: Counter[tuple[int, int, int]] = Counter()
        for (rel, head, dep), count in self._pairs.items():
            totals[rel] += count
            margins[(rel, head, HEAD)] += count
            margins[(rel, dep, DEP)] += count
        return CooccurrenceStore(
            vocab=Vocabulary.from_words(self._words),
            relations=tuple(self._relations),
            pair_counts=dict(self._pairs),
            marginal_counts=dict(margins),
            total_pairs=dict(totals),
            window_size=self.window_size,
        )


def build_windowed(
    corpus: Iterable[str],
    window: int,
    config: TokenizerConfig = DEFAULT_TOKENIZER,
) -> CooccurrenceStore:
    """Count directed windowed co-occurrences, one document per corpus item.

    For a token at position i, every token at positions (i, i+window] in the
    same document is counted once as (earlier, later). Windows never cross
    document boundaries.
    """
    if window < 1:
        raise InvalidParameterError(f"window must be >= 1, got {window}")
    builder = StoreBuilder(window_size=window)
    builder.add_relation(WINDOW_RELATION)
    for document in corpus:
        tokens = tokenize(document, config)
        for token in tokens:
            builder.add_word(token)
        for i, head in enumerate(tokens):
            for j in range(i + 1, min(i + window, len(tokens) - 1) + 1):
                builder.add_pair(WINDOW_RELATION, head, tokens[j])
    return builder.build()


TripleRow = tuple[str, str, str, int]


def ingest_triples(rows: Iterable[TripleRow]) -> CooccurrenceStore:
    """Build a store from (head, relation, dependent, count) rows."""
    builder = StoreBuilder(window_size=0)
    for head, relation, dep, count in rows:
        if not relation:
            raise InvalidParameterError("relation name must be nonempty")
        if count <= 0:
            raise InvalidParameterError(f"count must be >= 1, got {count}")
        for text in (head, relation, dep):
            if not text or "\t" in text or "\n" in text:
                raise InvalidParameterError(f"bad field in triple row: {text!r}")
        builder.add_word(head)
        builder.add_word(dep)
        builder.add_pair(relation, head, dep, count)
    return builder.build()


def read_triples(path: str) -> Iterator[TripleRow]:
    """Yield rows from a head<TAB>relation<TAB>dependent<TAB>count file."""
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 4:
                raise ParseError(f"{path}:{lineno}: expected 4 tab-separated fields")
            head, relation, dep, raw_count = fields
            try:
                count = int(raw_count)
            except ValueError:
                raise ParseError(f"{path}:{lineno}: count is not an integer") from None
            if count <= 0:
                raise ParseError(f"{path}:{lineno}: count must be >= 1")
            if not head or not relation or not dep:
                raise ParseError(f"{path}:{lineno}: empty field")
            yield head, relation, dep, count


def merge_stores(stores: Sequence[CooccurrenceStore]) -> CooccurrenceStore:
    """Additively merge shard stores; vocab keeps first-appearance order."""
    if not stores:
        raise InvalidParameterError("need at least one store to merge")
    sizes = {s.window_size for s in stores}
    if len(sizes) != 1:
        raise InvalidParameterError("cannot merge stores with differing window sizes")
    builder = StoreBuilder(window_size=stores[0].window_size)
    for store in stores:
        for name in store.relations:
            builder.add_relation(name)
        for word in store.vocab.words:
            builder.add_word(word)
        for (rel, head, dep), count in store.canonical_pairs():
            builder.add_pair(
                store.relations[rel],
                store.vocab.word(head),
                store.vocab.word(dep),
                count,
            )
    return builder.build()


@dataclass(frozen=True)
class ContextProfile:
    """One target word's sparse (relation, word) -> strength map.

    Keys are (relation-id, word-id) for store-built profiles, but the
    measures treat them as opaque features, so hand-built profiles may use
    any sortable keys. ``semantics`` tags how the strengths were computed.
    """

    target: Any
    strengths: Mapping[Any, float]
    semantics: Semantics

    @cached_property
    def total(self) -> float:
        return sum(self.strengths[key] for key in sorted(self.strengths))

    @property
    def support(self):
        return self.strengths.keys()

    def __len__(self) -> int:
        return len(self.strengths)


def profile(
    store: CooccurrenceStore,
    target: str,
    relations: Sequence[str] | None = None,
    semantics: Semantics = Semantics.CP,
    assoc_params: "assoc.AssocParams | None" = None,
) -> ContextProfile:
    """Build the context profile of a word under a relation filter.

    Support is every (relation, word) feature with a nonzero combined
    (head+dep) count. CP strengths normalize by the target's total count
    over the whole filter; PMI strengths are computed within each
    feature's own relation.
    """
    target_id = store.vocab.id(target)
    rel_ids = store.resolve_relations(relations)
    counts = store.neighbor_counts(target_id, rel_ids)
    strengths: dict[tuple[int, int], float]
    if semantics is Semantics.RAW:
        strengths = dict(counts)
    elif semantics is Semantics.CP:
        denom = store.marginal(target_id, rel_ids)
        strengths = {feat: c / denom for feat, c in counts.items()}
    elif semantics is Semantics.PMI:
        params = assoc_params if assoc_params is not None else assoc.AssocParams()
        strengths = {}
        for (rel, other), joint in counts.items():
            strengths[(rel, other)] = assoc.pmi_from_counts(
                joint,
                store.marginal(target_id, (rel,)),
                store.marginal(other, (rel,)),
                store.total((rel,)),
                params,
            )
    else:  # pragma: no cover - enum is exhaustive
        raise InvalidParameterError(f"unknown semantics: {semantics!r}")
    return ContextProfile(target=target_id, strengths=strengths, semantics=semantics)


def save_store(store: CooccurrenceStore, path: str) -> None:
    """Write the line-oriented store file.

    Layout: the magic header, a ``#window=N`` provenance line, then the
    [RELATIONS], [VOCAB], and [PAIRS] sections. Pair rows are
    rel-id<TAB>head-id<TAB>dep-id<TAB>count in canonical order.
    """
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(f"{_MAGIC}\n")
        handle.write(f"#window={store.window_size}\n")
        handle.write("[RELATIONS]\n")
        for name in store.relations:
            handle.write(f"{name}\n")
        handle.write("[VOCAB]\n")
        for word in store.vocab.words:
            handle.write(f"{word}\n")
        handle.write("[PAIRS]\n")
        for (rel, head, dep), count in store.canonical_pairs():
            handle.write(f"{rel}\t{head}\t{dep}\t{count}\n")


def load_store(path: str) -> CooccurrenceStore:
    """Read a store file; marginals and totals are recomputed and verified."""
    with open(path, encoding="utf-8") as handle:
        lines = handle.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    cursor = 0

    def take() -> str:
        nonlocal cursor
        if cursor >= len(lines):
            raise StoreFormatError("unexpected end of file")
        line = lines[cursor]
        cursor += 1
        return line

    if take() != _MAGIC:
        raise StoreFormatError(f"header: expected {_MAGIC!r}")
    window_line = take()
    if not window_line.startswith("#window="):
        raise StoreFormatError("header: missing #window line")
    try:
        window_size = int(window_line.removeprefix("#window="))
    except ValueError:
        raise StoreFormatError("header: #window is not an integer") from None

    if take() != "[RELATIONS]":
        raise StoreFormatError("[RELATIONS]: section missing")
    relations: list[str] = []
    while True:
        line = take()
        if line == "[VOCAB]":
            break
        if not line or line.startswith("["):
            raise StoreFormatError(f"[RELATIONS]: bad line {line!r}")
        relations.append(line)

    words: list[str] = []
    while True:
        line = take()
        if line == "[PAIRS]":
            break
        if not line or line.startswith("["):
            raise StoreFormatError(f"[VOCAB]: bad line {line!r}")
        words.append(line)

    pairs: dict[tuple[int, int, int], int] = {}
    previous: tuple[int, int, int] | None = None
    while cursor < len(lines):
        lineno = cursor + 1
        fields = take().split("\t")
        if len(fields) != 4:
            raise StoreFormatError(f"[PAIRS] line {lineno}: expected 4 fields")
        try:
            rel, head, dep, count = (int(f) for f in fields)
        except ValueError:
            raise StoreFormatError(f"[PAIRS] line {lineno}: non-integer field") from None
        if not 0 <= rel < len(relations):
            raise StoreFormatError(f"[PAIRS] line {lineno}: relation id out of range")
        if not (0 <= head < len(words) and 0 <= dep < len(words)):
            raise StoreFormatError(f"[PAIRS] line {lineno}: word id out of range")
        if count < 1:
            raise StoreFormatError(f"[PAIRS] line {lineno}: count must be >= 1")
        key = (rel, head, dep)
        if previous is not None and key <= previous:
            raise StoreFormatError(f"[PAIRS] line {lineno}: rows out of canonical order")
        previous = key
        pairs[key] = count

    if len(set(relations)) != len(relations):
        raise StoreFormatError("[RELATIONS]: duplicate name")
    if len(set(words)) != len(words):
        raise StoreFormatError("[VOCAB]: duplicate word")
    builder = StoreBuilder(window_size=window_size)
    for name in relations:
        builder.add_relation(name)
    for word in words:
        builder.add_word(word)
    for (rel, head, dep), count in pairs.items():
        builder.add_pair(relations[rel], words[head], words[dep], count)
    store = builder.build()
    store.validate()
    return store
