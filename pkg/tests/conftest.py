import os

import pytest

from toricgraph.atlas import CACHE_ENV


@pytest.fixture(scope="session", autouse=True)
def _hermetic_atlas_cache(tmp_path_factory):
    os.environ[CACHE_ENV] = str(tmp_path_factory.mktemp("atlas-cache"))
    yield
