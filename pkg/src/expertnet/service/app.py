"""HTTP facade over the Engine.

Endpoints: POST /categorize, GET /experts, GET /person/{id}, POST /vote,
GET /stats. JSON bodies use the exact field names the UI contract names;
malformed input is a 400 (not FastAPI's default 422), unknown ids are
404, oversized categorize text is 413.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from ..corpus import AcademicStatus
from ..engine import Engine, UnknownCategoryError
from ..ranking import UnknownPersonError
from .schemas import (
    CategorizeRequest,
    CategorizeResponse,
    ExpertOut,
    ExpertsResponse,
    PersonResponse,
    PublicationOut,
    StatsResponse,
    SuggestionOut,
    VoteRequest,
    VoteResponse,
)

MAX_CATEGORIZE_BYTES = 64 * 1024


def _parse_statuses(raw: str | None) -> set[AcademicStatus] | None:
    if raw is None or raw.strip() == "":
        return None
    statuses = set()
    for token in raw.split(","):
        try:
            statuses.add(AcademicStatus.parse(token.strip()))
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
    return statuses


def create_app(engine: Engine) -> FastAPI:
    app = FastAPI(title="expertnet", docs_url="/docs")
    app.state.engine = engine

    @app.exception_handler(RequestValidationError)
    async def _bad_request(_request: Request, exc: RequestValidationError):
        # Malformed bodies/params are client errors, plain 400.
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.post("/categorize", response_model=CategorizeResponse)
    def categorize(body: CategorizeRequest) -> CategorizeResponse:
        if len(body.text.encode("utf-8")) > MAX_CATEGORIZE_BYTES:
            raise HTTPException(status_code=413, detail="text exceeds 64 KiB")
        if not body.text.strip():
            raise HTTPException(status_code=400, detail="text must be non-empty")
        suggestions = engine.categorize(body.text)
        return CategorizeResponse(
            suggestions=[
                SuggestionOut(
                    category_id=s.category_id, label=s.label, score=s.score, rank=s.rank
                )
                for s in suggestions
            ]
        )

    @app.get("/experts", response_model=ExpertsResponse)
    def experts(category: str, status: str | None = None, k: int = 20) -> ExpertsResponse:
        statuses = _parse_statuses(status)
        try:
            rows = engine.experts(category, statuses, k)
        except UnknownCategoryError:
            raise HTTPException(status_code=404, detail=f"unknown category {category!r}") from None
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        return ExpertsResponse(
            results=[
                ExpertOut(
                    person_id=person.person_id,
                    name=person.display_name,
                    status=person.academic_status.value,
                    score=score,
                    rank=rank,
                )
                for rank, person, score in rows
            ]
        )

    @app.get("/person/{person_id}", response_model=PersonResponse)
    def person(person_id: str) -> PersonResponse:
        try:
            detail = engine.person(person_id)
        except UnknownPersonError:
            raise HTTPException(status_code=404, detail=f"unknown person {person_id!r}") from None
        return PersonResponse(
            name=detail.name,
            status=detail.status.value,
            research_interests=list(detail.research_interests),
            publications=[
                PublicationOut(
                    pub_id=p.pub_id,
                    title=p.title,
                    journal=p.journal,
                    category_id=p.category_id,
                    reader_count=p.reader_count,
                )
                for p in detail.publications
            ],
            vote_tally=detail.vote_tally,
        )

    @app.post("/vote", response_model=VoteResponse)
    def vote(body: VoteRequest) -> VoteResponse:
        try:
            tally = engine.vote(body.voter_token, body.person_id, body.delta)
        except UnknownPersonError:
            raise HTTPException(
                status_code=404, detail=f"unknown person {body.person_id!r}"
            ) from None
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        return VoteResponse(tally=tally)

    @app.get("/stats", response_model=StatsResponse)
    def stats() -> StatsResponse:
        s = engine.stats()
        return StatsResponse(
            node_count=s.node_count,
            edge_count=s.edge_count,
            connected_component_count=s.connected_component_count,
            largest_component_size=s.largest_component_size,
            clique_like_component_count=s.clique_like_component_count,
        )

    return app
