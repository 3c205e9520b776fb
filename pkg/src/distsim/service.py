"""HTTP query service over a loaded co-occurrence store.

The store is loaded once at startup and shared read-only by all requests;
every endpoint is a pure function of the request body. Payload models
mirror the CLI flags one to one.
"""

from __future__ import annotations

import math
from typing import Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .cooccur import CooccurrenceStore
from .errors import DistsimError, NotFoundError
from .evaluation import (
    EvalReport,
    GoldStandard,
    neighbors,
    report_to_dict,
    score_pairs,
)
from .measures import (
    KldMode,
    MeasureInfo,
    MeasureSpec,
    SupportMode,
    SymmetrizeMode,
    evaluate_pair,
    list_measures,
)


class MeasureOptions(BaseModel):
    measure: str = "cosine"
    association: Literal["cp", "pmi"] | None = None
    log_base: float = Field(default=math.e, gt=1.0)
    alpha: float = Field(default=0.99, gt=0.0, le=1.0)
    gamma: float = Field(default=0.5, ge=0.0, le=1.0)
    beta: float = Field(default=0.5, ge=0.0, le=1.0)
    support: Literal["union", "intersection"] = "union"
    kld_mode: Literal["strict", "error_free"] = "strict"
    symmetrize: Literal["max", "avg"] | None = None
    relations: list[str] | None = None

    def to_spec(self) -> MeasureSpec:
        return MeasureSpec(
            measure=self.measure,
            association=self.association,
            log_base=self.log_base,
            alpha=self.alpha,
            gamma=self.gamma,
            beta=self.beta,
            support_mode=SupportMode(self.support),
            kld_mode=KldMode(self.kld_mode),
            symmetrize=None if self.symmetrize is None else SymmetrizeMode(self.symmetrize),
        )


class SimRequest(BaseModel):
    word1: str
    word2: str
    options: MeasureOptions = MeasureOptions()


class ScoreResponse(BaseModel):
    measure: str
    value: float
    direction: str
    symmetric: bool


class NeighborsRequest(BaseModel):
    target: str
    k: int = Field(default=10, ge=1)
    options: MeasureOptions = MeasureOptions()


class NeighborEntry(BaseModel):
    word: str
    value: float


class NeighborsResponse(BaseModel):
    target: str
    measure: str
    neighbors: list[NeighborEntry]


class GoldPairModel(BaseModel):
    word1: str
    word2: str
    rating: float


class EvalRequest(BaseModel):
    pairs: list[GoldPairModel]
    options: MeasureOptions = MeasureOptions()


class ScoredPairModel(BaseModel):
    word1: str
    word2: str
    score: float
    rank: float


class SkippedPairModel(BaseModel):
    word1: str
    word2: str
    reason: str


class EvalResponse(BaseModel):
    measure: str
    scored_pairs: list[ScoredPairModel]
    spearman: float | None
    pearson: float | None
    skipped: list[SkippedPairModel]


class StoreInfoResponse(BaseModel):
    relations: list[str]
    vocabulary_size: int
    window_size: int
    total_pairs: dict[str, int]


class MeasureEntry(BaseModel):
    id: str
    description: str
    polarity: str
    symmetric: bool
    associations: list[str]
    default_association: str
    parameters: list[str]
    compositional: str | None
    aliases: list[str]


def measure_entry(info: MeasureInfo) -> MeasureEntry:
    return MeasureEntry(
        id=info.id,
        description=info.description,
        polarity=info.polarity.value,
        symmetric=info.symmetric,
        associations=list(info.associations),
        default_association=info.default_association,
        parameters=list(info.parameters),
        compositional=info.compositional,
        aliases=list(info.aliases),
    )


def eval_response(report: EvalReport) -> EvalResponse:
    return EvalResponse(**report_to_dict(report))


def create_app(store: CooccurrenceStore) -> FastAPI:
    app = FastAPI(title="distsim", version="0.1.0")

    def fail(exc: DistsimError) -> HTTPException:
        status = 404 if isinstance(exc, NotFoundError) else 400
        return HTTPException(status_code=status, detail=f"{type(exc).__name__}: {exc}")

    @app.get("/health")
    def health() -> dict[str, str]:
        return {"status": "ok"}

    @app.get("/measures", response_model=list[MeasureEntry])
    def measures() -> list[MeasureEntry]:
        return [measure_entry(info) for info in list_measures()]

    @app.get("/store", response_model=StoreInfoResponse)
    def store_info() -> StoreInfoResponse:
        return StoreInfoResponse(
            relations=list(store.relations),
            vocabulary_size=len(store.vocab),
            window_size=store.window_size,
            total_pairs={
                name: store.total_pairs.get(i, 0)
                for i, name in enumerate(store.relations)
            },
        )

    @app.post("/sim", response_model=ScoreResponse)
    def sim(request: SimRequest) -> ScoreResponse:
        try:
            score = evaluate_pair(
                store, request.word1, request.word2,
                request.options.to_spec(), request.options.relations,
            )
        except DistsimError as exc:
            raise fail(exc) from None
        return ScoreResponse(
            measure=score.measure,
            value=score.value,
            direction=score.direction.value,
            symmetric=score.symmetric,
        )

    @app.post("/neighbors", response_model=NeighborsResponse)
    def nearest(request: NeighborsRequest) -> NeighborsResponse:
        try:
            ranked = neighbors(
                store, request.target, request.options.to_spec(),
                request.k, request.options.relations,
            )
        except DistsimError as exc:
            raise fail(exc) from None
        return NeighborsResponse(
            target=request.target,
            measure=request.options.measure,
            neighbors=[NeighborEntry(word=w, value=v) for w, v in ranked],
        )

    @app.post("/eval", response_model=EvalResponse)
    def evaluate(request: EvalRequest) -> EvalResponse:
        try:
            gold = GoldStandard.from_rows(
                [(p.word1, p.word2, p.rating) for p in request.pairs]
            )
            report = score_pairs(
                store, gold, request.options.to_spec(), request.options.relations
            )
        except DistsimError as exc:
            raise fail(exc) from None
        return eval_response(report)

    return app
