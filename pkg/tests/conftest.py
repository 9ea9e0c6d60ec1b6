import json
from logging import basicConfig

import pytest
from dotenv import load_dotenv

from gkm_kirwan.lie import build_root_datum
from gkm_kirwan.models import parse_config
from gkm_kirwan.schubert import build_schubert_datum, moment_graph

load_dotenv()

basicConfig(level="DEBUG")

# Gr(2, 4): lambda = omega_2, circle direction a = diag(-3, -1, 0, 4)
A_VALS = (-2, -1, -4)
X312 = (3, 1, 2)
FULL_ORBIT = (2, 3, 1, 2)

JOB = {
    "schema_version": "1",
    "type": "A",
    "rank": 3,
    "lambda": [0, 1, 0],
    "w": list(X312),
    "a": list(A_VALS),
    "r0": "2/1",
    "degree_bound": 6,
}


@pytest.fixture(scope="module")
def a3():
    return build_root_datum("A", 3)


@pytest.fixture(scope="module")
def omega2(a3):
    return a3.fundamental_weight(2)


@pytest.fixture(scope="module")
def x312(a3, omega2):
    return build_schubert_datum(a3, omega2, X312)


@pytest.fixture(scope="module")
def x312_graph(x312):
    return moment_graph(x312, A_VALS)


@pytest.fixture(scope="module")
def full_orbit(a3, omega2):
    return build_schubert_datum(a3, omega2, FULL_ORBIT)


@pytest.fixture(scope="module")
def full_orbit_graph(full_orbit):
    return moment_graph(full_orbit, A_VALS)


@pytest.fixture(scope="module")
def point(a3, omega2):
    return build_schubert_datum(a3, omega2, ())


@pytest.fixture
def job():
    return dict(JOB)


@pytest.fixture
def job_config(job):
    return parse_config(job)


@pytest.fixture
def job_file(tmp_path):
    def write(**overrides):
        document = dict(JOB, **overrides)
        path = tmp_path / "job.json"
        path.write_text(json.dumps(document))
        return str(path)

    return write
