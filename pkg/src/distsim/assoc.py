"""Association strengths between word pairs: conditional probability and
PMI variants, estimated from store counts.

All functions combine head and dep directions except association_ratio,
whose joint count is directed. Pure functions over an immutable store.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Sequence

from .errors import (
    InvalidParameterError,
    NegativeInfinityError,
    UndefinedProbabilityError,
)

if TYPE_CHECKING:  # pragma: no cover
    from .cooccur import CooccurrenceStore


class NegativePmiPolicy(Enum):
    CLAMP_TO_ZERO = "clamp"
    KEEP = "keep"


@dataclass(frozen=True)
class AssocParams:
    """PMI options: logarithm base and what to do with negative values."""

    log_base: float = 2.0
    negative_pmi_policy: NegativePmiPolicy = NegativePmiPolicy.CLAMP_TO_ZERO
    smoothing: None = None  # reserved; no smoothing is ever applied

    def __post_init__(self) -> None:
        if not self.log_base > 1:
            raise InvalidParameterError(f"log_base must be > 1, got {self.log_base}")


def pmi_from_counts(
    joint: int,
    marginal_x: int,
    marginal_y: int,
    total: int,
    params: AssocParams,
) -> float:
    """log(P(x,y) / (P(x)P(y))) from raw counts, under the negative-value policy."""
    if marginal_x <= 0 or marginal_y <= 0 or total <= 0:
        raise UndefinedProbabilityError("zero marginal count under the relation filter")
    if joint <= 0:
        if params.negative_pmi_policy is NegativePmiPolicy.KEEP:
            raise NegativeInfinityError(
                "pair never co-occurs; PMI is negative infinity under KEEP"
            )
        return 0.0
    value = math.log(joint * total / (marginal_x * marginal_y), params.log_base)
    if params.negative_pmi_policy is NegativePmiPolicy.CLAMP_TO_ZERO:
        return max(0.0, value)
    return value


def conditional_probability(
    store: "CooccurrenceStore",
    word: str,
    target: str,
    relations: Sequence[str] | None = None,
) -> float:
    """P(word | target): the fraction of the target's co-occurrences made with word."""
    word_id = store.vocab.id(word)
    target_id = store.vocab.id(target)
    rel_ids = store.resolve_relations(relations)
    denom = store.marginal(target_id, rel_ids)
    if denom == 0:
        raise UndefinedProbabilityError(
            f"{target!r} has no co-occurrences under the relation filter"
        )
    return store.combined_count(word_id, target_id, rel_ids) / denom


def pmi(
    store: "CooccurrenceStore",
    x: str,
    y: str,
    relations: Sequence[str] | None = None,
    params: AssocParams | None = None,
) -> float:
    """Pointwise mutual information of two words from combined-direction counts."""
    params = params if params is not None else AssocParams()
    x_id = store.vocab.id(x)
    y_id = store.vocab.id(y)
    rel_ids = store.resolve_relations(relations)
    return pmi_from_counts(
        store.combined_count(x_id, y_id, rel_ids),
        store.marginal(x_id, rel_ids),
        store.marginal(y_id, rel_ids),
        store.total(rel_ids),
        params,
    )


def corrected_pmi(
    store: "CooccurrenceStore",
    x: str,
    y: str,
    relations: Sequence[str] | None = None,
    params: AssocParams | None = None,
) -> float:
    """PMI shrunk by min(freq)/(min(freq)+1) to damp low-frequency spikes.

    freq is each word's marginal co-occurrence count under the filter.
    """
    params = params if params is not None else AssocParams()
    value = pmi(store, x, y, relations, params)
    rel_ids = store.resolve_relations(relations)
    low = min(
        store.marginal(store.vocab.id(x), rel_ids),
        store.marginal(store.vocab.id(y), rel_ids),
    )
    return value * low / (low + 1)


def association_ratio(
    store: "CooccurrenceStore",
    x: str,
    y: str,
    relations: Sequence[str] | None = None,
    params: AssocParams | None = None,
) -> float:
    """Directional PMI: the joint counts only x before (or governing) y."""
    params = params if params is not None else AssocParams()
    x_id = store.vocab.id(x)
    y_id = store.vocab.id(y)
    rel_ids = store.resolve_relations(relations)
    return pmi_from_counts(
        store.directed_count(x_id, y_id, rel_ids),
        store.marginal(x_id, rel_ids),
        store.marginal(y_id, rel_ids),
        store.total(rel_ids),
        params,
    )
