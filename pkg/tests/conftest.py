import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nhcomplex.core import make_complex  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


def cx(*facets, ground=None):
    """Shorthand: ``cx("ab", "c")`` is the complex with facets {a,b} and {c}."""
    return make_complex(ground, [list(f) for f in facets])


@pytest.fixture
def fixtures_dir():
    return FIXTURES
