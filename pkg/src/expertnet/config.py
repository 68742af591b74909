"""Service configuration: a small JSON file plus one env override.

Relative paths in the file resolve against the file's own directory, so a
config can travel with its corpus. EXPERTNET_PORT overrides the port.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .centrality import DEFAULT_DAMPING
from .engine import DEFAULT_CACHE_SIZE, Engine
from .graph import DEFAULT_ALPHA
from .names import DEFAULT_MATCH_THRESHOLD

PORT_ENV_VAR = "EXPERTNET_PORT"


@dataclass
class ServiceConfig:
    corpus_dir: str
    port: int = 8000
    model_path: str | None = None
    alpha: float = DEFAULT_ALPHA
    damping: float = DEFAULT_DAMPING
    cache_size: int = DEFAULT_CACHE_SIZE
    strict: bool = True
    vote_log: str | None = None
    match_threshold: float = DEFAULT_MATCH_THRESHOLD
    full_graph_features: bool = False

    def __post_init__(self):
        port_override = os.environ.get(PORT_ENV_VAR)
        if port_override:
            self.port = int(port_override)
        if not 1 <= self.port <= 65535:
            raise ValueError(f"port must be in [1,65535], got {self.port}")
        if not Path(self.corpus_dir).is_dir():
            raise ValueError(f"corpus directory {self.corpus_dir!r} is not readable")

    @classmethod
    def load(cls, path) -> "ServiceConfig":
        path = Path(path)
        raw = json.loads(path.read_text(encoding="utf-8"))
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
        if "corpus_dir" not in raw:
            raise ValueError("config must set corpus_dir")
        base = path.parent
        for key in ("corpus_dir", "model_path", "vote_log"):
            if raw.get(key):
                raw[key] = str((base / raw[key]).resolve())
        return cls(**raw)

    def build_engine(self) -> Engine:
        """Engine per this config; corpus_dir may also be a built index dir."""
        corpus = Path(self.corpus_dir)
        vote_log = self.vote_log or str(corpus / "votes.log")
        if (corpus / "manifest.json").exists():
            engine = Engine.from_index(
                corpus,
                model_path=self.model_path,
                damping=self.damping,
                vote_log=vote_log,
                cache_size=self.cache_size,
                full_graph_features=self.full_graph_features,
            )
        else:
            engine = Engine.from_corpus(
                corpus,
                model_path=self.model_path,
                alpha=self.alpha,
                damping=self.damping,
                strict=self.strict,
                match_threshold=self.match_threshold,
                vote_log=vote_log,
                cache_size=self.cache_size,
                full_graph_features=self.full_graph_features,
            )
        if engine.model is None:
            engine.train()
        return engine
