"""Rank word pairs with a measure, correlate against human gold ratings,
and extract nearest neighbors.

Distance measures are oriented by negating their scores before ranking,
driven by the measure's declared polarity; the raw score is reported
unchanged. Pairs whose evaluation fails are recorded as skipped, never
silently dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from scipy import stats

from .cooccur import CooccurrenceStore
from .errors import (
    DistsimError,
    EmptyReportError,
    InvalidParameterError,
    NotFoundError,
    ParseError,
    UndefinedCorrelationError,
)
from .measures import (
    MeasureSpec,
    Polarity,
    evaluate_profiles,
    get_measure,
    profile_for_measure,
)


@dataclass(frozen=True)
class GoldStandard:
    """Human-rated word pairs: (word1, word2, rating)."""

    pairs: tuple[tuple[str, str, float], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[tuple[str, str, float]]) -> "GoldStandard":
        seen: set[frozenset[str]] = set()
        for word1, word2, rating in rows:
            if not math.isfinite(rating):
                raise InvalidParameterError(
                    f"rating for ({word1}, {word2}) is not finite"
                )
            key = frozenset((word1, word2))
            if key in seen:
                raise InvalidParameterError(
                    f"duplicate unordered pair ({word1}, {word2})"
                )
            seen.add(key)
        return cls(pairs=tuple((w1, w2, float(r)) for w1, w2, r in rows))

    def __len__(self) -> int:
        return len(self.pairs)


def load_gold(path: str) -> GoldStandard:
    """Read a word1<TAB>word2<TAB>rating file; # lines are comments."""
    rows: list[tuple[str, str, float]] = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise ParseError(f"{path}:{lineno}: expected 3 tab-separated fields")
            word1, word2, raw = fields
            try:
                rating = float(raw)
            except ValueError:
                raise ParseError(f"{path}:{lineno}: rating is not a number") from None
            rows.append((word1, word2, rating))
    try:
        return GoldStandard.from_rows(rows)
    except InvalidParameterError as exc:
        raise ParseError(f"{path}: {exc}") from None


@dataclass(frozen=True)
class ScoredPair:
    word1: str
    word2: str
    score: float
    rank: float


@dataclass(frozen=True)
class SkippedPair:
    word1: str
    word2: str
    reason: str


@dataclass(frozen=True)
class EvalReport:
    """Scored pairs with average-ranks over ties plus rank correlations."""

    measure: str
    scored_pairs: tuple[ScoredPair, ...]
    spearman: float | None
    pearson: float | None
    skipped: tuple[SkippedPair, ...]


def _check_lengths(xs: Sequence[float], ys: Sequence[float]) -> None:
    if len(xs) != len(ys):
        raise InvalidParameterError(f"length mismatch: {len(xs)} vs {len(ys)}")
    if len(xs) < 2:
        raise InvalidParameterError("need at least 2 observations")


def spearman(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Spearman rho with average ranks over ties."""
    _check_lengths(xs, ys)
    if len(set(xs)) == 1 or len(set(ys)) == 1:
        raise UndefinedCorrelationError("zero rank variance")
    return float(stats.spearmanr(xs, ys).statistic)


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Product-moment correlation."""
    _check_lengths(xs, ys)
    if len(set(xs)) == 1 or len(set(ys)) == 1:
        raise UndefinedCorrelationError("zero variance")
    return float(stats.pearsonr(xs, ys).statistic)


def rank_concordance(scores_a: Sequence[float], scores_b: Sequence[float]) -> float:
    """Fraction of unordered index pairs where both lists agree in order/tie.

    1.0 means the two score lists induce identical rankings, ties included.
    """
    if len(scores_a) != len(scores_b):
        raise InvalidParameterError(
            f"length mismatch: {len(scores_a)} vs {len(scores_b)}"
        )
    n = len(scores_a)
    if n < 2:
        raise InvalidParameterError("need at least 2 scores")
    agree = 0
    for i in range(n):
        ai, bi = scores_a[i], scores_b[i]
        for j in range(i + 1, n):
            sign_a = (ai > scores_a[j]) - (ai < scores_a[j])
            sign_b = (bi > scores_b[j]) - (bi < scores_b[j])
            agree += sign_a == sign_b
    return agree / (n * (n - 1) // 2)


def _oriented(value: float, polarity: Polarity) -> float:
    return value if polarity is Polarity.RELATEDNESS else -value


def score_pairs(
    store: CooccurrenceStore,
    gold: GoldStandard,
    spec: MeasureSpec,
    relations: Sequence[str] | None = None,
) -> EvalReport:
    """Score every gold pair with the measure and rank-correlate with ratings."""
    info = get_measure(spec.measure)
    scored: list[tuple[str, str, float, float]] = []
    skipped: list[SkippedPair] = []
    for word1, word2, rating in gold.pairs:
        try:
            p1 = profile_for_measure(store, word1, spec, relations)
            p2 = profile_for_measure(store, word2, spec, relations)
            score = evaluate_profiles(p1, p2, spec)
        except DistsimError as exc:
            skipped.append(SkippedPair(word1, word2, f"{type(exc).__name__}: {exc}"))
            continue
        scored.append((word1, word2, score.value, rating))
    if not scored:
        raise EmptyReportError(f"every gold pair was skipped for measure {info.id!r}")

    oriented = [_oriented(value, info.polarity) for _, _, value, _ in scored]
    ranks = stats.rankdata([-v for v in oriented])  # rank 1 = most related
    ratings = [rating for _, _, _, rating in scored]
    try:
        rho = spearman(ratings, oriented)
    except (InvalidParameterError, UndefinedCorrelationError):
        rho = None
    try:
        r = pearson(ratings, oriented)
    except (InvalidParameterError, UndefinedCorrelationError):
        r = None
    pairs = tuple(
        ScoredPair(w1, w2, value, float(rank))
        for (w1, w2, value, _), rank in zip(scored, ranks)
    )
    return EvalReport(
        measure=info.id,
        scored_pairs=pairs,
        spearman=rho,
        pearson=r,
        skipped=tuple(skipped),
    )


def neighbors(
    store: CooccurrenceStore,
    target: str,
    spec: MeasureSpec,
    k: int,
    relations: Sequence[str] | None = None,
) -> list[tuple[str, float]]:
    """Top-k nearest vocabulary words by the measure, target excluded.

    The measure is evaluated as measure(target, candidate). Candidates
    whose evaluation fails are left out; ties break lexicographically.
    """
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    if target not in store.vocab:
        raise NotFoundError(f"unknown word: {target!r}")
    info = get_measure(spec.measure)
    target_profile = profile_for_measure(store, target, spec, relations)
    results: list[tuple[str, float]] = []
    for word in sorted(store.vocab.words):
        if word == target:
            continue
        try:
            candidate = profile_for_measure(store, word, spec, relations)
            score = evaluate_profiles(target_profile, candidate, spec)
        except DistsimError:
            continue
        results.append((word, score.value))
    results.sort(key=lambda item: (-_oriented(item[1], info.polarity), item[0]))
    return results[:k]


def _format_correlation(value: float | None) -> str:
    return "nan" if value is None else repr(value)


def render_report_tsv(report: EvalReport) -> str:
    """Scored pairs as TSV rows plus skipped lines and correlation trailers."""
    lines = [f"#measure={report.measure}"]
    for pair in report.scored_pairs:
        lines.append(f"{pair.word1}\t{pair.word2}\t{pair.score!r}\t{pair.rank!r}")
    for skip in report.skipped:
        lines.append(f"#skipped\t{skip.word1}\t{skip.word2}\t{skip.reason}")
    lines.append(f"#spearman={_format_correlation(report.spearman)}")
    lines.append(f"#pearson={_format_correlation(report.pearson)}")
    return "\n".join(lines) + "\n"


def report_to_dict(report: EvalReport) -> dict:
    """JSON-ready structured dump of a report."""
    return {
        "measure": report.measure,
        "scored_pairs": [
            {"word1": p.word1, "word2": p.word2, "score": p.score, "rank": p.rank}
            for p in report.scored_pairs
        ],
        "spearman": report.spearman,
        "pearson": report.pearson,
        "skipped": [
            {"word1": s.word1, "word2": s.word2, "reason": s.reason}
            for s in report.skipped
        ],
    }
