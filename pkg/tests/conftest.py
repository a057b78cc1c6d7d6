import pytest

from muwm import load_corpus
from muwm.corpus import corpus_dir


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def by_label(corpus):
    return {f.label(0): f for f in corpus}


@pytest.fixture(scope="session")
def data_dir():
    return corpus_dir()
