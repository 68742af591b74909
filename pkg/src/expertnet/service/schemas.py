"""Pydantic request/response models; the wire contract for UI and CLI."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel


class CategorizeRequest(BaseModel):
    text: str


class SuggestionOut(BaseModel):
    category_id: str
    label: str
    score: float
    rank: int


class CategorizeResponse(BaseModel):
    suggestions: list[SuggestionOut]


class ExpertOut(BaseModel):
    person_id: str
    name: str
    status: str
    score: float
    rank: int


class ExpertsResponse(BaseModel):
    results: list[ExpertOut]


class PublicationOut(BaseModel):
    pub_id: str
    title: str
    journal: str | None
    category_id: str | None
    reader_count: int


class PersonResponse(BaseModel):
    name: str
    status: str
    research_interests: list[str]
    publications: list[PublicationOut]
    vote_tally: int


class VoteRequest(BaseModel):
    person_id: str
    delta: Literal[1, -1]
    voter_token: str


class VoteResponse(BaseModel):
    tally: int


class StatsResponse(BaseModel):
    node_count: int
    edge_count: int
    connected_component_count: int
    largest_component_size: int
    clique_like_component_count: int
