import json
import math
import os

import pytest

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


@pytest.fixture(scope="session")
def pins():
    with open(os.path.join(FIXTURES, "pins.json")) as fh:
        return json.load(fh)


def ulp_err(got: float, exact: float) -> float:
    """|got - exact| in units of the ulp of exact."""
    if exact == 0.0:
        return abs(got) / 5e-324
    return abs(got - exact) / math.ulp(abs(exact))


def rel_err(got: float, exact: float) -> float:
    return abs(got - exact) / max(abs(exact), 5e-324)
