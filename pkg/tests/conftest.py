import time

import pytest

from skewalg import generate_model_suite


@pytest.fixture(scope="session")
def suite_info():
    """Full desk-scale model suite plus the wall time it took to build."""
    t0 = time.perf_counter()
    instances = generate_model_suite()
    return {"instances": instances, "build_seconds": time.perf_counter() - t0}


@pytest.fixture(scope="session")
def suite(suite_info):
    return suite_info["instances"]
