import shutil
from importlib import resources
from pathlib import Path

import pytest

from expertnet.corpus import Corpus
from expertnet.engine import Engine, build_index


@pytest.fixture(scope="session")
def sample_corpus_dir() -> Path:
    return Path(resources.files("expertnet")) / "data" / "sample_corpus"


@pytest.fixture(scope="session")
def fixture_text() -> str:
    return (Path(resources.files("expertnet")) / "data" / "conference_call.txt").read_text("utf-8")


@pytest.fixture(scope="session")
def sample_corpus(sample_corpus_dir) -> Corpus:
    return Corpus.load(sample_corpus_dir)


@pytest.fixture(scope="session")
def built_index(sample_corpus_dir, tmp_path_factory) -> Path:
    """A built index over the sample corpus, shared read-only."""
    out = tmp_path_factory.mktemp("index") / "index"
    build_index(sample_corpus_dir, out)
    return out


@pytest.fixture()
def engine(sample_corpus_dir) -> Engine:
    """Fresh engine per test; votes stay in memory."""
    return Engine.from_corpus(sample_corpus_dir)


@pytest.fixture()
def trained_engine(engine) -> Engine:
    engine.train()
    return engine


@pytest.fixture()
def scratch_corpus_dir(sample_corpus_dir, tmp_path) -> Path:
    """A writable copy of the sample corpus."""
    dst = tmp_path / "corpus"
    shutil.copytree(sample_corpus_dir, dst)
    return dst
