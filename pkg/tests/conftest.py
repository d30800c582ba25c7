import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sigmagraph.zoo import corpus, standard_partitions


@pytest.fixture(scope="session")
def corpus_groups():
    return corpus()


@pytest.fixture(scope="session")
def partitions():
    return standard_partitions()
