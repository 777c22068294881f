import os
import sys
from pathlib import Path

import pytest
from click.testing import CliRunner
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from bundles.hn_core import Bundle, bundle_from_factors  # noqa: E402
from cli.parser import parse_bundle  # noqa: E402
from verify.config import get_settings  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Isola cada teste das variáveis HNFF_* do ambiente."""
    for name in list(os.environ):
        if name.startswith("HNFF_"):
            monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def B(text: str) -> Bundle:
    """Atalho de leitura para os testes."""
    return parse_bundle(text)


slopes = st.fractions(min_value=-3, max_value=3, max_denominator=3)

bundles = st.lists(
    st.tuples(slopes, st.integers(min_value=0, max_value=2)), max_size=3
).map(bundle_from_factors)

nonzero_bundles = bundles.filter(lambda b: not b.is_zero)

integral_bundles = st.lists(
    st.tuples(st.integers(min_value=-2, max_value=2), st.integers(min_value=0, max_value=2)),
    max_size=3,
).map(bundle_from_factors)
