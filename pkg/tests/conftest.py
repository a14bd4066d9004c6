from __future__ import annotations

from pathlib import Path

import pytest

from fibcat import ALL_THEORIES, Theory

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def read_fixture(relpath: str) -> str:
    return (FIXTURES / relpath).read_text(encoding="utf-8")


@pytest.fixture
def theory() -> Theory:
    return Theory()


@pytest.fixture(params=ALL_THEORIES,
                ids=lambda t: f"{t.epsilon_sign}-{t.beta_sign}")
def any_theory(request) -> Theory:
    return request.param


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
