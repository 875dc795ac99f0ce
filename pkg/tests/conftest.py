from pathlib import Path

import pytest
from hypothesis import settings

from cocharlab.partitions import partitions_of

GOLDEN = Path(__file__).parent / "golden"

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def read_golden(name: str) -> str:
    return (GOLDEN / name).read_text()


@pytest.fixture
def golden():
    return read_golden


def all_partitions(max_n: int):
    return [lam for n in range(max_n + 1) for lam in partitions_of(n)]
