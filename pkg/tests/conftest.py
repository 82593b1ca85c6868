import pytest

from repcensus.lemmas import random_corpus

CORPUS_SIZE = 10_000
CORPUS_MAX_LEN = 60
CORPUS_SEED = 42


@pytest.fixture(scope="session")
def corpus():
    return random_corpus(CORPUS_SIZE, CORPUS_MAX_LEN, CORPUS_SEED)
