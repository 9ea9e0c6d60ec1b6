import json
from fractions import Fraction

import mock
import pytest

from gkm_kirwan import KirwanSession, dumps, load_config, run_command
from gkm_kirwan.exceptions import InconsistencyError, ValidationError
from gkm_kirwan.models import JobConfig, parse_config

from tests.conftest import JOB


def _walk(value):
    if isinstance(value, dict):
        for item in value.values():
            yield from _walk(item)
    elif isinstance(value, list):
        for item in value:
            yield from _walk(item)
    else:
        yield value


@pytest.fixture(scope="module")
def session():
    return KirwanSession(parse_config(dict(JOB)))


def test_header(session):
    document = session.run("validate")
    assert document["schema_version"] == "1"
    assert document["command"] == "validate"
    assert document["generator"].startswith("gkm_kirwan/")
    assert document["config"]["r0"] == "2"
    print(session)


def test_validate(session):
    result = session.run("validate")["result"]
    assert result["assumption_1"]["passed"]
    assert result["assumption_3_i"]["passed"]
    assert result["assumption_2_evidence"]["details"]["flagged"] == ["e"]


def test_validate_names_critical_level(job):
    job["r0"] = -3
    document = run_command("validate", parse_config(job))
    report = document["result"]["assumption_3_i"]
    assert not report["passed"]
    assert "Phi_a(s2lambda)" in report["failures"][0]


def test_graph_of_point(job):
    job["w"] = []
    result = run_command("graph", parse_config(job))["result"]
    assert result["dot"].count("[phi=") == 1
    assert " -- " not in result["dot"]
    assert result["graph"]["edges"] == []
    assert result["graph"]["vertices"][0]["word"] == "e"


def test_graph_section(session):
    graph = session.run("graph")["result"]["graph"]
    assert [vertex["phi"] for vertex in graph["vertices"]] == [
        "-4", "-3", "-1", "1", "3",
    ]
    assert graph["vertices"][4]["weight"] == ["-1/2", "0", "-1/2"]
    assert graph["edges"][3] == {"u": "e", "v": "3-1-2", "label": "a1+a2+a3"}
    assert graph["poincare"] == [1, 1, 2, 1]
    assert all(vertex["extreme"] for vertex in graph["vertices"])


def test_cohomology(session):
    result = session.run("cohomology")["result"]
    assert result["degrees"] == [0, 2, 4, 6, 8, 10, 12]
    assert result["ht_dimensions"][:4] == [1, 4, 11, 23]
    assert result["hs_dimensions"] == [1, 2, 4, 5, 5, 5, 5]


def test_cohomology_oracle_mismatch(session):
    with mock.patch(
        "gkm_kirwan.session.formality_dimensions",
        return_value=([0] * 7, [0] * 7),
    ):
        document = session.run("cohomology")
        assert document["error"]["message"] == "formality_mismatch"
        assert document["error"]["code"] == 4
        with pytest.raises(InconsistencyError):
            session.cohomology()


def test_quotient(session):
    result = session.run("quotient")["result"]
    assert result["betti"] == [1, 1, 1, 0, 0, 0, 0]
    assert result["euler_characteristic"] == 3
    assert result["palindromic"] is True
    assert {
        "left": [2, 0],
        "right": [2, 0],
        "product": ["1"],
    } in result["structure_constants"]
    assert {
        "left": [2, 0],
        "right": [4, 0],
        "product": [],
    } in result["structure_constants"]
    assert result["kernels"][3]["k_minus_basis"] == [["0", "0", "0", "0", "1"]]
    ext = result["assumptions"]["assumption_3_ii"]
    assert ext["passed"]
    assert ext["bound"] == "verified up to cohomological degree 12"


def test_quotient_assumption_failure(job):
    job["r0"] = "1"
    document = run_command("quotient", parse_config(job))
    assert document["error"]["message"] == "assumption_3_i_failed"
    assert document["error"]["code"] == 3
    assert "result" not in document


def test_degree_bound_override(job):
    document = run_command("quotient", parse_config(job), degree_bound=2)
    assert document["result"]["betti"] == [1, 1, 1]


def test_regimes(session):
    regimes = session.run("regimes")["result"]
    assert [regime["interval"] for regime in regimes] == [
        ["-4", "-3"],
        ["-3", "-1"],
        ["-1", "1"],
        ["1", "3"],
    ]
    assert regimes[0]["r0"] == "-7/2"


def test_unknown_command(session):
    document = session.run("plot")
    assert document["error"]["message"] == "unknown_command"
    assert document["error"]["code"] == 2


def test_unexpected_failure_becomes_error_document(session):
    with mock.patch.object(
        KirwanSession, "validate", side_effect=RuntimeError("boom")
    ):
        document = session.run("validate")
    assert document["error"]["message"] == "internal_inconsistency"
    assert document["error"]["data"] == "RuntimeError: boom"


def test_session_setup_failure():
    config = JobConfig(
        type_letter="A",
        rank=7,
        lam=(1, 0, 0, 0, 0, 0, 0),
        w=(),
        a_vals=(-1,) * 7,
        r0=Fraction(0),
        degree_bound=None,
    )
    document = run_command("validate", config)
    assert document["error"]["message"] == "rank_too_large"
    assert document["error"]["code"] == 2


def test_report_is_deterministic_and_exact(job):
    first = dumps(run_command("report", parse_config(dict(job))))
    second = dumps(run_command("report", parse_config(dict(job))))
    assert first == second
    document = json.loads(first)
    assert set(document["result"]) == {
        "validate",
        "graph",
        "cohomology",
        "quotient",
        "regimes",
    }
    assert not any(isinstance(value, float) for value in _walk(document))


def test_load_config(job_file):
    config = load_config(job_file(r0="3/2"))
    assert config.r0 == Fraction(3, 2)


@pytest.mark.parametrize(
    "content", [b"{not json", b'{"type": "\xff\xfe"}', b"\xef\xbb"]
)
def test_load_config_rejects_undecodable(tmp_path, content):
    path = tmp_path / "job.json"
    path.write_bytes(content)
    with pytest.raises(ValidationError) as err:
        load_config(str(path))
    assert err.value.error == "bad_config"
    assert err.value.code == 2


def test_rank_cap_from_environment(job):
    with mock.patch("gkm_kirwan.session.RANK_CAP", 2):
        document = run_command("validate", parse_config(job))
    assert document["error"]["message"] == "rank_too_large"


def test_orbit_cap_from_environment(job):
    # the orbit of omega_2 in A3 has six weights
    with mock.patch("gkm_kirwan.session.WEYL_ORDER_CAP", 5):
        document = run_command("validate", parse_config(job))
    assert document["error"]["message"] == "orbit_too_large"
    with mock.patch("gkm_kirwan.session.WEYL_ORDER_CAP", 6):
        document = run_command("validate", parse_config(job))
    assert "error" not in document
