"""Distributional distance/relatedness measures over context profiles.

Every operation takes two ContextProfiles with matching semantics and
returns a Score tagged with its polarity (distance vs relatedness is
reported, never auto-inverted). The measure catalog at the bottom is
enumerable with machine-readable metadata so front ends can render the
summary table and validate parameter combinations.

All feature sums iterate keys in sorted order, so results are
bit-reproducible regardless of how the profiles were assembled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Sequence

from .assoc import AssocParams, NegativePmiPolicy
from .cooccur import ContextProfile, CooccurrenceStore, Semantics, profile
from .errors import (
    InvalidParameterError,
    InvalidSpecError,
    NotFoundError,
    UndefinedMeasureError,
    ZeroDenominatorError,
)


class Polarity(Enum):
    DISTANCE = "distance"
    RELATEDNESS = "relatedness"


class SupportMode(Enum):
    UNION = "union"
    INTERSECTION = "intersection"


class KldMode(Enum):
    """STRICT raises on zero denominators; ERROR_FREE restricts divergence
    sums to the common support, which can never hit one."""

    STRICT = "strict"
    ERROR_FREE = "error_free"


class KldVariant(Enum):
    STANDARD = "standard"
    COMMON = "common"
    ABS = "abs"
    ABS_UNWEIGHTED = "abs_unweighted"
    AVGWT = "avgwt"
    MAXWT = "maxwt"


class OverlapKind(Enum):
    JACCARD = "jaccard"
    DICE = "dice"


class PcmKind(Enum):
    DIF = "dif"
    DIV = "div"
    PDT_AVG = "pdt_avg"
    PDT_AVGWT = "pdt_avgwt"


class CrmFamily(Enum):
    TYPE = "type"
    TOKEN = "token"
    MI = "mi"


class CrmWeighting(Enum):
    ADD = "add"
    DW = "dw"


class SymmetrizeMode(Enum):
    MAX = "max"
    AVG = "avg"


class CombineMode(Enum):
    AVG = "avg"
    MAX = "max"


@dataclass(frozen=True)
class Score:
    value: float
    direction: Polarity
    measure: str
    symmetric: bool


def _log(x: float, base: float) -> float:
    return math.log(x) if base == math.e else math.log(x, base)


def _require_same_semantics(p1: ContextProfile, p2: ContextProfile) -> None:
    if p1.semantics is not p2.semantics:
        raise InvalidSpecError(
            f"profiles have mismatched semantics: {p1.semantics} vs {p2.semantics}"
        )


def _require_semantics(p: ContextProfile, allowed: tuple[Semantics, ...], name: str) -> None:
    if p.semantics not in allowed:
        wanted = "/".join(s.value for s in allowed)
        raise InvalidSpecError(f"{name} requires {wanted} semantics, got {p.semantics.value}")


def _union(p1: ContextProfile, p2: ContextProfile) -> list:
    return sorted(p1.strengths.keys() | p2.strengths.keys())


def _intersection(p1: ContextProfile, p2: ContextProfile) -> list:
    return sorted(p1.strengths.keys() & p2.strengths.keys())


def _effective(p1: ContextProfile, p2: ContextProfile, mode: SupportMode) -> list:
    if mode is SupportMode.INTERSECTION:
        return _intersection(p1, p2)
    return _union(p1, p2)


def cosine(p1: ContextProfile, p2: ContextProfile) -> Score:
    """Cosine of the angle between the two strength vectors."""
    _require_same_semantics(p1, p2)
    if len(p1) == 0 or len(p2) == 0:
        raise UndefinedMeasureError("cosine is undefined for an empty profile")
    norm1 = math.sqrt(sum(p1.strengths[w] ** 2 for w in sorted(p1.strengths)))
    norm2 = math.sqrt(sum(p2.strengths[w] ** 2 for w in sorted(p2.strengths)))
    if norm1 == 0.0 or norm2 == 0.0:
        raise UndefinedMeasureError("cosine is undefined for a zero-norm profile")
    dot = sum(p1.strengths[w] * p2.strengths[w] for w in _intersection(p1, p2))
    return Score(dot / (norm1 * norm2), Polarity.RELATEDNESS, "cosine", True)


def l_norm(
    p1: ContextProfile,
    p2: ContextProfile,
    order: int = 1,
    support_mode: SupportMode = SupportMode.UNION,
) -> Score:
    """Manhattan (order 1) or Euclidean (order 2) distance between strengths."""
    _require_same_semantics(p1, p2)
    if order not in (1, 2):
        raise InvalidParameterError(f"order must be 1 or 2, got {order}")
    keys = _effective(p1, p2, support_mode)
    diffs = (p1.strengths.get(w, 0.0) - p2.strengths.get(w, 0.0) for w in keys)
    if order == 1:
        value = sum(abs(d) for d in diffs)
    else:
        value = math.sqrt(sum(d * d for d in diffs))
    return Score(value, Polarity.DISTANCE, f"l{order}", True)


def crisp_overlap(p1: ContextProfile, p2: ContextProfile, kind: OverlapKind) -> Score:
    """Jaccard or Dice coefficient of the two supports as crisp sets."""
    s1 = set(p1.strengths)
    s2 = set(p2.strengths)
    if not s1 and not s2:
        raise UndefinedMeasureError("overlap of two empty supports is undefined")
    common = len(s1 & s2)
    if kind is OverlapKind.JACCARD:
        value = common / len(s1 | s2)
    else:
        value = 2 * common / (len(s1) + len(s2))
    return Score(value, Polarity.RELATEDNESS, kind.value, True)


def fuzzy_overlap(
    p1: ContextProfile,
    p2: ContextProfile,
    kind: OverlapKind,
    support_mode: SupportMode = SupportMode.UNION,
) -> Score:
    """Jaccard or Dice on pseudo-fuzzy sets whose memberships are strengths.

    Jaccard is sum(min)/sum(max); Dice is 2*sum(min) over the two profiles'
    total strengths. On unrestricted conditional-probability profiles the
    Dice value reduces to sum(min) because each total is 1.
    """
    _require_same_semantics(p1, p2)
    keys = _effective(p1, p2, support_mode)
    minsum = sum(min(p1.strengths.get(w, 0.0), p2.strengths.get(w, 0.0)) for w in keys)
    if kind is OverlapKind.JACCARD:
        maxsum = sum(max(p1.strengths.get(w, 0.0), p2.strengths.get(w, 0.0)) for w in keys)
        if maxsum == 0.0:
            raise UndefinedMeasureError("fuzzy jaccard has a zero denominator")
        value = minsum / maxsum
    else:
        denom = p1.total + p2.total
        if denom == 0.0:
            raise UndefinedMeasureError("fuzzy dice has a zero denominator")
        value = 2 * minsum / denom
    return Score(value, Polarity.RELATEDNESS, f"{kind.value}_fuzzy", True)


def hindle(p1: ContextProfile, p2: ContextProfile) -> Score:
    """Sum of piecewise-matched PMI strengths over the support union.

    A feature contributes min of the two values when both are positive,
    the absolute max when both are negative, and 0 otherwise, so the
    profiles should be built with the KEEP negative-PMI policy.
    """
    _require_same_semantics(p1, p2)
    _require_semantics(p1, (Semantics.PMI,), "hindle")
    total = 0.0
    for w in _union(p1, p2):
        a = p1.strengths.get(w, 0.0)
        b = p2.strengths.get(w, 0.0)
        if a > 0 and b > 0:
            total += min(a, b)
        elif a < 0 and b < 0:
            total += abs(max(a, b))
    return Score(total, Polarity.RELATEDNESS, "hindle", True)


def lin(p1: ContextProfile, p2: ContextProfile) -> Score:
    """Shared positive strengths (summed) normalized by both profiles' totals."""
    _require_same_semantics(p1, p2)
    _require_semantics(p1, (Semantics.PMI, Semantics.CP), "lin")
    denom = p1.total + p2.total
    if denom == 0.0:
        raise UndefinedMeasureError("lin has a zero denominator")
    shared = sum(
        p1.strengths[w] + p2.strengths[w]
        for w in _intersection(p1, p2)
        if p1.strengths[w] > 0 and p2.strengths[w] > 0
    )
    return Score(shared / denom, Polarity.RELATEDNESS, "lin", True)


def saif(p1: ContextProfile, p2: ContextProfile) -> Score:
    """Twice the shared minimum strengths, normalized like lin.

    Using the minimum penalizes mismatched strengths of shared features;
    the factor of two restores the 0..1 range.
    """
    _require_same_semantics(p1, p2)
    _require_semantics(p1, (Semantics.PMI, Semantics.CP), "saif")
    denom = p1.total + p2.total
    if denom == 0.0:
        raise UndefinedMeasureError("saif has a zero denominator")
    shared = sum(
        min(p1.strengths[w], p2.strengths[w])
        for w in _intersection(p1, p2)
        if p1.strengths[w] > 0 and p2.strengths[w] > 0
    )
    return Score(2 * shared / denom, Polarity.RELATEDNESS, "saif", True)


_KLD_SYMMETRIC = {
    KldVariant.STANDARD: False,
    KldVariant.COMMON: False,
    KldVariant.ABS: False,
    KldVariant.ABS_UNWEIGHTED: True,
    KldVariant.AVGWT: True,
    KldVariant.MAXWT: True,
}


def kld(
    p1: ContextProfile,
    p2: ContextProfile,
    variant: KldVariant = KldVariant.STANDARD,
    log_base: float = math.e,
    support_mode: SupportMode = SupportMode.UNION,
    mode: KldMode = KldMode.STRICT,
) -> Score:
    """Relative-entropy family over conditional-probability profiles.

    STANDARD sums p1*log(p1/p2); COMMON restricts it to the shared support;
    ABS takes the absolute value of each log; ABS_UNWEIGHTED drops the
    weight entirely; AVGWT weights |log| by the mean strength and MAXWT by
    the max strength normalized over the support. STANDARD and ABS raise
    on a zero denominator unless mode is ERROR_FREE.
    """
    _require_same_semantics(p1, p2)
    _require_semantics(p1, (Semantics.CP,), "kld")
    restrict = (
        variant is KldVariant.COMMON
        or mode is KldMode.ERROR_FREE
        or support_mode is SupportMode.INTERSECTION
    )
    keys = _intersection(p1, p2) if restrict else _union(p1, p2)
    total = 0.0
    if variant in (KldVariant.STANDARD, KldVariant.COMMON, KldVariant.ABS):
        for w in keys:
            s1 = p1.strengths.get(w, 0.0)
            if s1 == 0.0:
                continue
            s2 = p2.strengths.get(w, 0.0)
            if s2 == 0.0:
                raise ZeroDenominatorError(
                    "strict divergence hit P(w|w2)=0 with P(w|w1)>0; use the skew "
                    "divergence, jsd, or the common-co-occurrence variant"
                )
            term = _log(s1 / s2, log_base)
            total += s1 * (abs(term) if variant is KldVariant.ABS else term)
    else:
        weights: list[float] = []
        logs: list[float] = []
        for w in keys:
            s1 = p1.strengths.get(w, 0.0)
            s2 = p2.strengths.get(w, 0.0)
            if s1 == 0.0 or s2 == 0.0:
                raise ZeroDenominatorError(
                    "unweighted/weighted division divergence needs both strengths "
                    "nonzero on every summed feature"
                )
            logs.append(abs(_log(s1 / s2, log_base)))
            if variant is KldVariant.AVGWT:
                weights.append(0.5 * (s1 + s2))
            elif variant is KldVariant.MAXWT:
                weights.append(max(s1, s2))
            else:
                weights.append(1.0)
        if variant is KldVariant.MAXWT:
            scale = sum(weights)
            if scale > 0.0:
                weights = [w / scale for w in weights]
        total = sum(w * term for w, term in zip(weights, logs))
    name = "kld" if variant is KldVariant.STANDARD else f"kld_{variant.value}"
    return Score(total, Polarity.DISTANCE, name, _KLD_SYMMETRIC[variant])


def asd(
    p1: ContextProfile,
    p2: ContextProfile,
    alpha: float = 0.99,
    log_base: float = math.e,
    support_mode: SupportMode = SupportMode.UNION,
) -> Score:
    """Skew divergence: p1*log(p1 / (alpha*p2 + (1-alpha)*p1)).

    Mixing the numerator into the denominator keeps every term finite for
    alpha < 1 without smoothing; alpha = 1 degenerates to strict kld.
    """
    _require_same_semantics(p1, p2)
    _require_semantics(p1, (Semantics.CP,), "asd")
    if not 0.0 <= alpha <= 1.0:
        raise InvalidParameterError(f"alpha must be in [0, 1], got {alpha}")
    total = 0.0
    for w in _effective(p1, p2, support_mode):
        s1 = p1.strengths.get(w, 0.0)
        if s1 == 0.0:
            continue
        denom = alpha * p2.strengths.get(w, 0.0) + (1 - alpha) * s1
        if denom == 0.0:
            raise ZeroDenominatorError("skew divergence with alpha=1 hit P(w|w2)=0")
        total += s1 * _log(s1 / denom, log_base)
    return Score(total, Polarity.DISTANCE, "asd", False)


def jsd(
    p1: ContextProfile,
    p2: ContextProfile,
    abs_variant: bool = False,
    log_base: float = math.e,
    support_mode: SupportMode = SupportMode.UNION,
) -> Score:
    """Total divergence of both profiles to their pointwise average."""
    _require_same_semantics(p1, p2)
    _require_semantics(p1, (Semantics.CP,), "jsd")
    total = 0.0
    for w in _effective(p1, p2, support_mode):
        s1 = p1.strengths.get(w, 0.0)
        s2 = p2.strengths.get(w, 0.0)
        avg = 0.5 * (s1 + s2)
        if avg == 0.0:
            continue
        term1 = term2 = 0.0
        if s1 > 0.0:
            term = _log(s1 / avg, log_base)
            term1 = s1 * (abs(term) if abs_variant else term)
        if s2 > 0.0:
            term = _log(s2 / avg, log_base)
            term2 = s2 * (abs(term) if abs_variant else term)
        # one addition per feature keeps the sum bitwise symmetric in p1, p2
        total += term1 + term2
    return Score(total, Polarity.DISTANCE, "jsd_abs" if abs_variant else "jsd", True)


def pcm(
    p1: ContextProfile,
    p2: ContextProfile,
    kind: PcmKind,
    log_base: float = math.e,
    support_mode: SupportMode = SupportMode.UNION,
) -> Score:
    """Primary compositional measures: per-feature difference, division, or product.

    DIV interprets strengths per semantics: CP strengths contribute
    |log(s1/s2)| while PMI strengths, already being logs of probability
    ratios, contribute |s1 - s2|; both require each summed feature to be
    present in both profiles.
    """
    _require_same_semantics(p1, p2)
    if kind is PcmKind.DIV:
        _require_semantics(p1, (Semantics.CP, Semantics.PMI), "pcm DIV")
    else:
        _require_semantics(p1, (Semantics.CP,), f"pcm {kind.name}")
    keys = _effective(p1, p2, support_mode)
    total = 0.0
    if kind is PcmKind.DIF:
        total = sum(
            abs(p1.strengths.get(w, 0.0) - p2.strengths.get(w, 0.0)) for w in keys
        )
        return Score(total, Polarity.DISTANCE, "dif", True)
    if kind is PcmKind.DIV:
        for w in keys:
            if w not in p1.strengths or w not in p2.strengths:
                raise ZeroDenominatorError(
                    "division measure needs every summed feature in both profiles"
                )
            s1 = p1.strengths[w]
            s2 = p2.strengths[w]
            if p1.semantics is Semantics.CP:
                if s1 <= 0.0 or s2 <= 0.0:
                    raise ZeroDenominatorError("division measure hit a zero strength")
                total += abs(_log(s1 / s2, log_base))
            else:
                total += abs(s1 - s2)
        return Score(total, Polarity.DISTANCE, "div", True)
    for w in keys:
        s1 = p1.strengths.get(w, 0.0)
        s2 = p2.strengths.get(w, 0.0)
        if s1 <= 0.0 or s2 <= 0.0:
            continue
        avg = 0.5 * (s1 + s2)
        if kind is PcmKind.PDT_AVG:
            total += s1 * s2 / (avg * avg)
        else:
            total += s1 * s2 / avg
    return Score(total, Polarity.RELATEDNESS, kind.value, True)


def crm_precision_recall(
    p1: ContextProfile,
    p2: ContextProfile,
    family: CrmFamily,
    weighting: CrmWeighting,
) -> tuple[float, float]:
    """Precision/recall of substituting word 1 for word 2 in co-occurrence retrieval.

    TYPE counts shared support members, TOKEN sums conditional
    probabilities, MI sums PMI strengths normalized by each profile's
    total. The difference-weighted (DW) forms penalize strength mismatch
    through the min of the two strengths.
    """
    _require_same_semantics(p1, p2)
    if family is CrmFamily.MI:
        _require_semantics(p1, (Semantics.PMI,), "mi-based crm")
    elif family is CrmFamily.TOKEN or weighting is CrmWeighting.DW:
        _require_semantics(p1, (Semantics.CP,), f"{family.value}-based crm")
    shared = _intersection(p1, p2)
    if family is CrmFamily.TYPE:
        if len(p1) == 0 or len(p2) == 0:
            raise UndefinedMeasureError("type-based crm needs nonempty supports")
        if weighting is CrmWeighting.ADD:
            return len(shared) / len(p1), len(shared) / len(p2)
        precision = sum(
            min(p1.strengths[w], p2.strengths[w]) / p1.strengths[w] for w in shared
        ) / len(p1)
        recall = sum(
            min(p1.strengths[w], p2.strengths[w]) / p2.strengths[w] for w in shared
        ) / len(p2)
        return precision, recall
    if family is CrmFamily.TOKEN:
        if weighting is CrmWeighting.ADD:
            return (
                sum(p1.strengths[w] for w in shared),
                sum(p2.strengths[w] for w in shared),
            )
        matched = sum(min(p1.strengths[w], p2.strengths[w]) for w in shared)
        return matched, matched
    total1 = p1.total
    total2 = p2.total
    if total1 <= 0.0 or total2 <= 0.0:
        raise UndefinedMeasureError("mi-based crm needs positive total strength")
    if weighting is CrmWeighting.ADD:
        return (
            sum(p1.strengths[w] for w in shared) / total1,
            sum(p2.strengths[w] for w in shared) / total2,
        )
    matched = sum(min(p1.strengths[w], p2.strengths[w]) for w in shared)
    return matched / total1, matched / total2


def crm(
    p1: ContextProfile,
    p2: ContextProfile,
    family: CrmFamily,
    weighting: CrmWeighting,
    gamma: float = 0.5,
    beta: float = 0.5,
) -> Score:
    """gamma-weighted F-score plus beta-weighted precision/recall mix."""
    if not 0.0 <= gamma <= 1.0:
        raise InvalidParameterError(f"gamma must be in [0, 1], got {gamma}")
    if not 0.0 <= beta <= 1.0:
        raise InvalidParameterError(f"beta must be in [0, 1], got {beta}")
    precision, recall = crm_precision_recall(p1, p2, family, weighting)
    f_score = 0.0 if precision + recall == 0 else (
        2 * precision * recall / (precision + recall)
    )
    value = gamma * f_score + (1 - gamma) * (beta * precision + (1 - beta) * recall)
    symmetric = (
        (family is CrmFamily.TOKEN and weighting is CrmWeighting.DW)
        or gamma == 1.0
        or beta == 0.5
    )
    name = f"crm_{family.value}_{weighting.value}"
    return Score(value, Polarity.RELATEDNESS, name, symmetric)


def symmetrize(
    measure: Callable[[ContextProfile, ContextProfile], Score],
    p1: ContextProfile,
    p2: ContextProfile,
    mode: SymmetrizeMode,
) -> Score:
    """Max or mean of a measure evaluated in both argument orders."""
    forward = measure(p1, p2)
    backward = measure(p2, p1)
    if mode is SymmetrizeMode.MAX:
        value = max(forward.value, backward.value)
    else:
        value = 0.5 * (forward.value + backward.value)
    return Score(value, forward.direction, forward.measure, True)


@dataclass(frozen=True)
class MeasureSpec:
    """A catalog measure identifier plus every free parameter it may use."""

    measure: str = "cosine"
    association: str | None = None  # "cp" | "pmi"; None picks the measure default
    log_base: float = math.e
    alpha: float = 0.99
    gamma: float = 0.5
    beta: float = 0.5
    negative_pmi_policy: NegativePmiPolicy | None = None
    support_mode: SupportMode = SupportMode.UNION
    kld_mode: KldMode = KldMode.STRICT
    symmetrize: SymmetrizeMode | None = None

    def __post_init__(self) -> None:
        if not self.log_base > 1:
            raise InvalidParameterError(f"log_base must be > 1, got {self.log_base}")
        if not 0.0 < self.alpha <= 1.0:
            raise InvalidParameterError(f"alpha must be in (0, 1], got {self.alpha}")
        if not 0.0 <= self.gamma <= 1.0:
            raise InvalidParameterError(f"gamma must be in [0, 1], got {self.gamma}")
        if not 0.0 <= self.beta <= 1.0:
            raise InvalidParameterError(f"beta must be in [0, 1], got {self.beta}")
        if self.association not in (None, "cp", "pmi"):
            raise InvalidParameterError(
                f"association must be 'cp' or 'pmi', got {self.association!r}"
            )

    @property
    def polarity(self) -> Polarity:
        return get_measure(self.measure).polarity


Evaluator = Callable[[ContextProfile, ContextProfile, MeasureSpec], Score]


@dataclass(frozen=True)
class MeasureInfo:
    """Machine-readable catalog entry for one measure."""

    id: str
    description: str
    polarity: Polarity
    symmetric: bool
    associations: tuple[str, ...]
    default_association: str
    pmi_policy: NegativePmiPolicy
    parameters: tuple[str, ...]
    compositional: str | None
    evaluator: Evaluator
    aliases: tuple[str, ...] = ()


_CATALOG: dict[str, MeasureInfo] = {}
_ALIASES: dict[str, str] = {}


def _register(info: MeasureInfo) -> None:
    _CATALOG[info.id] = info
    for alias in info.aliases:
        _ALIASES[alias] = info.id


def get_measure(measure_id: str) -> MeasureInfo:
    key = _ALIASES.get(measure_id, measure_id)
    try:
        return _CATALOG[key]
    except KeyError:
        known = ", ".join(sorted(set(_CATALOG) | set(_ALIASES)))
        raise NotFoundError(f"unknown measure {measure_id!r}; known: {known}") from None


def list_measures() -> tuple[MeasureInfo, ...]:
    """Catalog entries in registration order: distance first, then relatedness."""
    return tuple(_CATALOG.values())


def evaluate_profiles(p1: ContextProfile, p2: ContextProfile, spec: MeasureSpec) -> Score:
    """Evaluate a catalog measure on two prebuilt profiles."""
    info = get_measure(spec.measure)
    if spec.symmetrize is None:
        score = info.evaluator(p1, p2, spec)
    else:
        score = symmetrize(
            lambda a, b: info.evaluator(a, b, spec), p1, p2, spec.symmetrize
        )
    return replace(score, measure=info.id)


def profile_for_measure(
    store: CooccurrenceStore,
    word: str,
    spec: MeasureSpec,
    relations: Sequence[str] | None = None,
) -> ContextProfile:
    """Build the profile a measure needs: semantics and PMI policy per catalog."""
    info = get_measure(spec.measure)
    association = spec.association or info.default_association
    if association not in info.associations:
        raise InvalidSpecError(
            f"measure {info.id!r} does not support association {association!r}"
        )
    if association == "cp":
        return profile(store, word, relations, Semantics.CP)
    policy = spec.negative_pmi_policy or info.pmi_policy
    params = AssocParams(log_base=2.0, negative_pmi_policy=policy)
    return profile(store, word, relations, Semantics.PMI, params)


def evaluate_pair(
    store: CooccurrenceStore,
    word1: str,
    word2: str,
    spec: MeasureSpec,
    relations: Sequence[str] | None = None,
) -> Score:
    """Score one word pair from the store with a catalog measure."""
    p1 = profile_for_measure(store, word1, spec, relations)
    p2 = profile_for_measure(store, word2, spec, relations)
    return evaluate_profiles(p1, p2, spec)


def combine_relations(
    store: CooccurrenceStore,
    word1: str,
    word2: str,
    spec: MeasureSpec,
    relations: Sequence[str],
    mode: CombineMode,
) -> Score:
    """Evaluate a relatedness measure once per relation and combine the scores.

    AVG divides by the number of requested relations; a relation where
    either profile is empty scores 0, and a relation whose evaluation is
    undefined also scores 0 unless that happens for every relation.
    """
    if not relations:
        raise InvalidParameterError("need at least one relation")
    info = get_measure(spec.measure)
    if info.polarity is not Polarity.RELATEDNESS:
        raise InvalidSpecError("combine_relations needs a relatedness measure")
    values: list[float] = []
    undefined = 0
    for name in relations:
        p1 = profile_for_measure(store, word1, spec, [name])
        p2 = profile_for_measure(store, word2, spec, [name])
        if len(p1) == 0 or len(p2) == 0:
            values.append(0.0)
            continue
        try:
            values.append(evaluate_profiles(p1, p2, spec).value)
        except UndefinedMeasureError:
            undefined += 1
            values.append(0.0)
    if undefined == len(relations):
        raise UndefinedMeasureError("every per-relation evaluation was undefined")
    value = max(values) if mode is CombineMode.MAX else sum(values) / len(relations)
    return Score(value, Polarity.RELATEDNESS, info.id, info.symmetric)


def _kld_evaluator(variant: KldVariant) -> Evaluator:
    def run(p1: ContextProfile, p2: ContextProfile, spec: MeasureSpec) -> Score:
        return kld(p1, p2, variant, spec.log_base, spec.support_mode, spec.kld_mode)

    return run


def _symmetrized_kld(mode: SymmetrizeMode) -> Evaluator:
    def run(p1: ContextProfile, p2: ContextProfile, spec: MeasureSpec) -> Score:
        return symmetrize(
            lambda a, b: kld(a, b, KldVariant.STANDARD, spec.log_base,
                             spec.support_mode, spec.kld_mode),
            p1, p2, mode,
        )

    return run


def _crm_evaluator(family: CrmFamily, weighting: CrmWeighting) -> Evaluator:
    def run(p1: ContextProfile, p2: ContextProfile, spec: MeasureSpec) -> Score:
        return crm(p1, p2, family, weighting, spec.gamma, spec.beta)

    return run


def _pcm_evaluator(kind: PcmKind) -> Evaluator:
    def run(p1: ContextProfile, p2: ContextProfile, spec: MeasureSpec) -> Score:
        return pcm(p1, p2, kind, spec.log_base, spec.support_mode)

    return run


_CLAMP = NegativePmiPolicy.CLAMP_TO_ZERO
_BOTH = ("cp", "pmi")

_register(MeasureInfo(
    "l1", "sum of absolute strength differences (Manhattan)",
    Polarity.DISTANCE, True, _BOTH, "cp", _CLAMP, ("support",), "difference",
    lambda p1, p2, spec: l_norm(p1, p2, 1, spec.support_mode), aliases=("dif",),
))
_register(MeasureInfo(
    "l2", "root of summed squared strength differences (Euclidean)",
    Polarity.DISTANCE, True, _BOTH, "cp", _CLAMP, ("support",), "difference",
    lambda p1, p2, spec: l_norm(p1, p2, 2, spec.support_mode),
))
_register(MeasureInfo(
    "kld", "relative entropy of profile 1 from profile 2 (strict)",
    Polarity.DISTANCE, False, ("cp",), "cp", _CLAMP,
    ("log_base", "support", "kld_mode"), "division",
    _kld_evaluator(KldVariant.STANDARD),
))
_register(MeasureInfo(
    "kld_com", "relative entropy restricted to common co-occurrences",
    Polarity.DISTANCE, False, ("cp",), "cp", _CLAMP, ("log_base",), "division",
    _kld_evaluator(KldVariant.COMMON),
))
_register(MeasureInfo(
    "kld_abs", "relative entropy with absolute-valued log terms",
    Polarity.DISTANCE, False, ("cp",), "cp", _CLAMP,
    ("log_base", "support", "kld_mode"), "division",
    _kld_evaluator(KldVariant.ABS),
))
_register(MeasureInfo(
    "kld_unw_abs", "unweighted absolute log-ratio sum",
    Polarity.DISTANCE, True, ("cp",), "cp", _CLAMP,
    ("log_base", "support", "kld_mode"), "division",
    _kld_evaluator(KldVariant.ABS_UNWEIGHTED), aliases=("div",),
))
_register(MeasureInfo(
    "saif_div_avgwt", "absolute log-ratio sum weighted by mean strength",
    Polarity.DISTANCE, True, ("cp",), "cp", _CLAMP,
    ("log_base", "support", "kld_mode"), "division",
    _kld_evaluator(KldVariant.AVGWT),
))
_register(MeasureInfo(
    "saif_div_maxwt", "absolute log-ratio sum weighted by normalized max strength",
    Polarity.DISTANCE, True, ("cp",), "cp", _CLAMP,
    ("log_base", "support", "kld_mode"), "division",
    _kld_evaluator(KldVariant.MAXWT),
))
_register(MeasureInfo(
    "kld_avg", "mean of the two directed relative entropies",
    Polarity.DISTANCE, True, ("cp",), "cp", _CLAMP,
    ("log_base", "support", "kld_mode"), "division",
    _symmetrized_kld(SymmetrizeMode.AVG),
))
_register(MeasureInfo(
    "kld_max", "max of the two directed relative entropies",
    Polarity.DISTANCE, True, ("cp",), "cp", _CLAMP,
    ("log_base", "support", "kld_mode"), "division",
    _symmetrized_kld(SymmetrizeMode.MAX),
))
_register(MeasureInfo(
    "asd", "skew divergence: smoothing-free asymmetric relative entropy",
    Polarity.DISTANCE, False, ("cp",), "cp", _CLAMP,
    ("alpha", "log_base", "support"), "division",
    lambda p1, p2, spec: asd(p1, p2, spec.alpha, spec.log_base, spec.support_mode),
))
_register(MeasureInfo(
    "jsd", "total divergence of both profiles to their average",
    Polarity.DISTANCE, True, ("cp",), "cp", _CLAMP, ("log_base", "support"), "division",
    lambda p1, p2, spec: jsd(p1, p2, False, spec.log_base, spec.support_mode),
))
_register(MeasureInfo(
    "jsd_abs", "total divergence to the average with absolute-valued logs",
    Polarity.DISTANCE, True, ("cp",), "cp", _CLAMP, ("log_base", "support"), "division",
    lambda p1, p2, spec: jsd(p1, p2, True, spec.log_base, spec.support_mode),
))
_register(MeasureInfo(
    "cosine", "cosine of the angle between strength vectors",
    Polarity.RELATEDNESS, True, _BOTH, "cp", _CLAMP, (), None,
    lambda p1, p2, spec: cosine(p1, p2),
))
_register(MeasureInfo(
    "jaccard", "shared support size over union support size",
    Polarity.RELATEDNESS, True, _BOTH, "cp", _CLAMP, (), None,
    lambda p1, p2, spec: crisp_overlap(p1, p2, OverlapKind.JACCARD),
))
_register(MeasureInfo(
    "dice", "twice the shared support size over both support sizes",
    Polarity.RELATEDNESS, True, _BOTH, "cp", _CLAMP, (), None,
    lambda p1, p2, spec: crisp_overlap(p1, p2, OverlapKind.DICE),
))
_register(MeasureInfo(
    "jaccard_fuzzy", "sum of min strengths over sum of max strengths",
    Polarity.RELATEDNESS, True, _BOTH, "cp", _CLAMP, ("support",), None,
    lambda p1, p2, spec: fuzzy_overlap(p1, p2, OverlapKind.JACCARD, spec.support_mode),
))
_register(MeasureInfo(
    "dice_fuzzy", "twice the sum of min strengths over both strength totals",
    Polarity.RELATEDNESS, True, _BOTH, "cp", _CLAMP, ("support",), None,
    lambda p1, p2, spec: fuzzy_overlap(p1, p2, OverlapKind.DICE, spec.support_mode),
))
_register(MeasureInfo(
    "hindle", "piecewise-matched PMI strengths summed over the union",
    Polarity.RELATEDNESS, True, ("pmi",), "pmi", NegativePmiPolicy.KEEP, (), None,
    lambda p1, p2, spec: hindle(p1, p2),
))
_register(MeasureInfo(
    "lin", "shared strengths summed and normalized by both totals",
    Polarity.RELATEDNESS, True, ("pmi", "cp"), "pmi", _CLAMP, (), None,
    lambda p1, p2, spec: lin(p1, p2),
))
_register(MeasureInfo(
    "saif", "twice the shared min strengths normalized by both totals",
    Polarity.RELATEDNESS, True, ("pmi",), "pmi", _CLAMP, (), None,
    lambda p1, p2, spec: saif(p1, p2),
))
_register(MeasureInfo(
    "pdt_avg", "product over squared average strength, summed",
    Polarity.RELATEDNESS, True, ("cp",), "cp", _CLAMP, ("support",), "product",
    _pcm_evaluator(PcmKind.PDT_AVG),
))
_register(MeasureInfo(
    "pdt_avgwt", "product over average strength, summed (bounded by 1)",
    Polarity.RELATEDNESS, True, ("cp",), "cp", _CLAMP, ("support",), "product",
    _pcm_evaluator(PcmKind.PDT_AVGWT),
))
_register(MeasureInfo(
    "crm_type_add", "co-occurrence retrieval on supports, no mismatch penalty",
    Polarity.RELATEDNESS, False, _BOTH, "cp", _CLAMP, ("gamma", "beta"), None,
    _crm_evaluator(CrmFamily.TYPE, CrmWeighting.ADD),
))
_register(MeasureInfo(
    "crm_type_dw", "co-occurrence retrieval on supports, difference-weighted",
    Polarity.RELATEDNESS, False, ("cp",), "cp", _CLAMP, ("gamma", "beta"), None,
    _crm_evaluator(CrmFamily.TYPE, CrmWeighting.DW),
))
_register(MeasureInfo(
    "crm_token_add", "co-occurrence retrieval on probabilities, no penalty",
    Polarity.RELATEDNESS, False, ("cp",), "cp", _CLAMP, ("gamma", "beta"), None,
    _crm_evaluator(CrmFamily.TOKEN, CrmWeighting.ADD),
))
_register(MeasureInfo(
    "crm_token_dw", "co-occurrence retrieval on probabilities, difference-weighted",
    Polarity.RELATEDNESS, True, ("cp",), "cp", _CLAMP, ("gamma", "beta"), None,
    _crm_evaluator(CrmFamily.TOKEN, CrmWeighting.DW),
))
_register(MeasureInfo(
    "crm_mi_add", "co-occurrence retrieval on PMI strengths, no penalty",
    Polarity.RELATEDNESS, False, ("pmi",), "pmi", _CLAMP, ("gamma", "beta"), None,
    _crm_evaluator(CrmFamily.MI, CrmWeighting.ADD),
))
_register(MeasureInfo(
    "crm_mi_dw", "co-occurrence retrieval on PMI strengths, difference-weighted",
    Polarity.RELATEDNESS, False, ("pmi",), "pmi", _CLAMP, ("gamma", "beta"), None,
    _crm_evaluator(CrmFamily.MI, CrmWeighting.DW),
))
