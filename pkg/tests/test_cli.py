import json
import subprocess
import sys

import pytest

from orbigroups import cli, suites
from orbigroups.suites import SuiteResult

S4_PAIR = '{"genus": 0, "points": [{"coeff": "1/2"}, {"coeff": "2/3"}, {"coeff": "3/4"}]}'
P123 = '{"rays": [[1,0],[0,1],[-2,-3]]}'


def ok(argv):
    res = cli.run(argv)
    assert res.code == 0, res.payload
    assert res.payload["schema"] == 1 and res.payload["status"] == "ok"
    return res.payload["result"]


def code(argv):
    return cli.run(argv).code


# commands

def test_classify_sporadic():
    out = ok(["classify", S4_PAIR])
    assert out["class"]["label"] == "Sporadic(2,3,4)"
    assert out["group"]["order"] == 24 and out["group"]["name"] == "S4"
    assert out["abelianization_cover"]["degree"] == 24


def test_classify_elliptic_cover():
    pair = '{"genus": 0, "points": [{"label": "x", "coeff": "1/2"}, {"label": "y", "coeff": "3/4"},' \
           ' {"label": "z", "coeff": "3/4"}]}'
    out = ok(["classify", pair])
    assert out["class"]["kind"] == "Elliptic"
    assert out["abelianization_cover"]["degree"] == 4


def test_enumerate_counts_sporadic_triples():
    out = ok(["enumerate", "--max-denominator", "12"])
    sporadic = sorted(sorted(p["coeffs"]) for p in out["pairs"] if p["kind"] == "Sporadic")
    assert sporadic == [["1/2", "2/3", "2/3"], ["1/2", "2/3", "3/4"], ["1/2", "2/3", "4/5"]]
    assert sum(out["counts"].values()) == len(out["pairs"])


def test_coset_and_abelianize():
    out = ok(["coset", "<a,b | a^2, b^3, (ab)^5>"])
    assert out["index"] == 60 and out["status"] == "complete"
    out = ok(["abelianize", "<a,b,c | [a,b]c^-6, [a,c], [b,c]>"])
    assert out["abelianization"] == {"torsion": [6], "free_rank": 2}
    out = ok(["abelianize", "<a,b | a^2, b^3, (ab)^5>", "--subgroup", "ab"])
    assert out["index"] == 12 and out["abelianization"] == {"torsion": [5], "free_rank": 0}


def test_heisenberg_commands():
    assert ok(["heis", "comm", "--k", "2", "--u", "3,0,0", "--v", "0,3,0"])["result"] == "0,0,18"
    assert ok(["heis", "mul", "--k", "1", "--u", "0,1,0", "--v", "1,0,0"])["result"] == "1,1,-1"
    assert ok(["heis", "minindex", "--k", "1", "--m", "9"])["index"] == 9
    out = ok(["heis", "vabelian", "--k", "3"])
    assert out["virtually_abelian"] is False and out["witness"] is not None
    assert ok(["heis", "vabelian", "--k", "0"])["witness"] is None


def test_fan_commands():
    assert ok(["fan", "index", "--v=-2,-3", "--w", "1,0"])["index"] == 3
    out = ok(["fan", "subdivide", P123, "--ray=0,-1"])
    assert [c["index"] for c in out["cones"]] == [2, 1, 1, 2]
    out = ok(["fan", "resolve", "--v", "1,0", "--w=-1,3"])
    assert out["label"] == "C_3" and out["resolution"] == [{"ray": [0, 1], "self_intersection": -3}]
    out = ok(["fan", "selfint", '{"rays": [[1,0],[0,1],[-1,2],[0,-1]]}', "--ray", "0,1"])
    assert out["self_intersections"] == [{"ray": [0, 1], "self_intersection": "-2"}]
    assert ok(["fan", "recognize", P123])["surface"] == "P(1,2,3)"
    out = ok(["fan", "complexity", "--rho", "1", "--coeff-sum", "5/2"])
    assert out["complexity"] == "1/2" and out["toric"] is True


def test_coefficient_commands():
    assert ok(["adj", "--m", "2", "--contrib", "1/2:1"])["coefficient"] == "3/4"
    assert ok(["basepair", "--m", "2", "--a", "1/2"])["delta"] == "3/4"
    assert ok(["compat", "--m", "2", "--b", "3/4", "--a", "1/2"])["compatible"] is True
    assert ok(["pullback", "--m", "2", "--b", "3/4"])["a"] == "1/2"


def test_cert_command():
    out = ok(["cert", "--fiber", "Toric", "--base", "Elliptic", "--k", "2"])
    assert out["subgroup_kind"] == "HeisenbergQuotient" and out["index_bound"] == 864
    assert out["heisenberg_k"] == 2
    assert ok(["cert", "--fiber", "Sporadic", "--base", "Toric"])["index_bound"] == 7200


# exit codes

@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["classify", "{not json"],
    ["coset", "<a,b | a^>"],
    ["fan", "index", "--v", "1", "--w", "0,1"],
    ["adj", "--m", "2", "--contrib", "half:1"],
    ["heis", "minindex", "--k", "1"],
])
def test_parse_errors_exit_2(argv):
    res = cli.run(argv)
    assert res.code == 2 and res.payload["status"] == "error"
    assert res.payload["error"]["kind"] == "parse"


@pytest.mark.parametrize("argv", [
    ["classify", '{"genus": 0, "points": [{"coeff": "3/5"}]}'],
    ["pullback", "--m", "3", "--b", "1/2"],
    ["fan", "index", "--v", "1,2", "--w", "2,4"],
    ["fan", "subdivide", P123, "--ray", "1,0"],
    ["basepair", "--m", "2", "--a", "3/5"],
    ["heis", "minindex", "--k", "0", "--m", "4"],
])
def test_precondition_errors_exit_3(argv):
    assert code(argv) == 3


def test_budget_exceeded_exit_4():
    res = cli.run(["coset", "<a,b | a^2, b^3, (ab)^6>", "--max-cosets", "500"])
    assert res.code == 4
    assert res.payload["error"]["kind"] == "budget"
    assert res.payload["result"]["status"] != "complete" and "index" not in res.payload["result"]


def test_verification_failure_exit_5(monkeypatch):
    monkeypatch.setitem(suites.SUITES, "fans", lambda: SuiteResult("fans", [("broken", False, None)]))
    res = cli.run(["verify", "fans"])
    assert res.code == 5 and res.payload["result"]["passed"] is False


@pytest.mark.parametrize("name", ["trichotomy", "elliptic", "heisenberg", "lattice", "gadgets",
                                  "cremona", "fans", "coefficients", "bundles"])
def test_verify_individual_suites(name):
    out = ok(["verify", name])
    assert out["passed"] and out["suites"][0]["suite"] == name


# output stability

@pytest.mark.parametrize("argv", [
    ["classify", S4_PAIR],
    ["fan", "recognize", P123],
    ["cert", "--fiber", "Elliptic", "--base", "Elliptic"],
    ["enumerate", "--max-denominator", "8"],
])
def test_output_is_byte_stable(argv):
    first = cli.run(argv).render()
    assert first == cli.run(argv).render()
    assert json.dumps(json.loads(first), sort_keys=True) == first


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "orbigroups", "heis", "comm", "--k", "2",
                           "--u", "3,0,0", "--v", "0,3,0"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["result"] == "0,0,18"
    proc = subprocess.run([sys.executable, "-m", "orbigroups", "fan", "index", "--v", "1,2",
                           "--w", "2,4"], capture_output=True, text=True)
    assert proc.returncode == 3 and json.loads(proc.stdout)["status"] == "error"
