import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from detgb.blockwise import Ladder
from detgb.cli import (
    EXIT_FAIL, EXIT_INTERNAL, EXIT_OK, EXIT_PARSE, EXIT_SCALE, EXIT_UNSUPPORTED, dump_ladder,
    dump_minor, dump_permutation, dump_polynomial, load_ladder, load_minor, load_permutation,
    load_polynomial, main,
)
from detgb.minor_term import Minor, expand_minor
from detgb.permutation import Permutation
from detgb.term_order import TermOrder


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def spec_file(tmp_path):
    def write(data):
        path = tmp_path / "spec.json"
        path.write_text(json.dumps(data))
        return str(path)
    return write


class TestSchubert:
    def test_ess(self, capsys):
        code, out, _ = run(capsys, "schubert", "ess", "2143")
        assert code == EXIT_OK
        assert out.strip() == "(1,1) rank 0; (3,3) rank 2"

    def test_elusive_stats(self, capsys):
        code, out, _ = run(capsys, "schubert", "elusive", "[1,9,4,2,7,6,3,5,10,8]", "--stats")
        assert code == EXIT_OK
        assert "elusive: 91" in out.splitlines()

    def test_redgb_identity(self, capsys):
        code, out, _ = run(capsys, "schubert", "redgb", "1", "2", "3")
        assert code == EXIT_OK and out.strip() == ""

    def test_redgb_text(self, capsys):
        code, out, _ = run(capsys, "schubert", "redgb", "2143")
        lines = out.strip().splitlines()
        assert code == EXIT_OK and len(lines) == 2
        cubic = load_polynomial(lines[0])
        assert len(cubic) == 4 and load_polynomial(lines[1]) == load_polynomial("x[1,1]")

    def test_redgb_json(self, capsys):
        code, out, _ = run(capsys, "schubert", "redgb", "2143", "--format", "json")
        data = json.loads(out)
        assert data["schema"] == 1 and data["order"] == "NEW"
        assert sum(e["removed"] for e in data["basis"]) == 2

    def test_wchar_and_rothe(self, capsys):
        code, out, _ = run(capsys, "schubert", "wchar", "1453276")
        assert code == EXIT_OK and "normal: no" in out
        code, out, _ = run(capsys, "schubert", "rothe", "2143")
        assert out.splitlines()[0] == "#*.."

    def test_diagonal_non_vexillary(self, capsys):
        code, _, err = run(capsys, "schubert", "redgb", "2143", "--order", "nwe")
        assert code == EXIT_UNSUPPORTED and "vexillary" in err

    def test_bad_permutation(self, capsys):
        code, out, err = run(capsys, "schubert", "ess", "1134")
        assert code == EXIT_PARSE and out == "" and err


class TestVerify:
    def test_gb(self, capsys):
        code, out, _ = run(capsys, "verify", "gb", "--schubert", "2143", "--order", "new")
        assert code == EXIT_OK and json.loads(out)["pass"] is True
        code, out, _ = run(capsys, "verify", "gb", "--schubert", "2143", "--order", "nwe")
        assert code == EXIT_FAIL and json.loads(out)["pass"] is False

    def test_reduced(self, capsys):
        assert run(capsys, "verify", "reduced", "--elusive", "2143")[0] == EXIT_FAIL
        assert run(capsys, "verify", "reduced", "--redgb", "2143")[0] == EXIT_OK
        assert run(capsys, "verify", "minimal", "--elusive", "2143")[0] == EXIT_OK

    def test_normality(self, capsys):
        code, out, _ = run(capsys, "verify", "normality", "--redgb", "1453276")
        data = json.loads(out)
        assert code == EXIT_FAIL
        assert [3, 2] in [v["variable"] for v in data["violations"]]
        assert data["leading_variables"][-1] == [1, 6]
        assert run(capsys, "verify", "strongpair", "--redgb", "1453276")[0] == EXIT_OK

    def test_scale_guard(self, capsys):
        code, _, err = run(capsys, "verify", "gb", "--schubert", "[1,9,4,2,7,6,3,5,10,8]")
        assert code == EXIT_SCALE and "DETGB_MAX_SCALE" in err

    def test_needs_one_target(self, capsys):
        assert run(capsys, "verify", "gb")[0] == EXIT_PARSE

    def test_ladder(self, capsys, spec_file):
        path = spec_file({"lower": [[5, 5]], "upper": [[1, 4], [4, 1]], "r": [2, 2]})
        assert run(capsys, "verify", "gb", "--ladder", path, "--order", "nwe")[0] == EXIT_OK
        assert run(capsys, "verify", "reduced", "--ladder", path, "--order", "sen")[0] == EXIT_OK


class TestLadder:
    def test_onesided_count(self, capsys, spec_file):
        code, out, _ = run(capsys, "ladder", "onesided", spec_file({"lower": [[3, 4]], "r": [2]}))
        assert code == EXIT_OK and "total: 18" in out

    def test_tovex(self, capsys, spec_file):
        code, out, _ = run(capsys, "ladder", "tovex", spec_file({"lower": [[3, 3]], "r": [3]}))
        assert code == EXIT_OK and "ess match: yes" in out

    def test_tovex_bound(self, capsys, spec_file):
        path = spec_file({"lower": [[3, 3]], "r": [3], "n_perm": 5})
        assert run(capsys, "ladder", "tovex", path)[0] == EXIT_PARSE

    def test_rank_gap(self, capsys, spec_file):
        code, _, err = run(capsys, "ladder", "onesided", spec_file({"lower": [[2, 2]], "r": [3]}))
        assert code == EXIT_PARSE and "a_1-r_1" in err

    def test_twosided(self, capsys, spec_file):
        path = spec_file({"lower": [[4, 5]], "upper": [[1, 4], [2, 2]], "r": [2, 2]})
        code, out, _ = run(capsys, "ladder", "twosided", path, "--format", "json")
        default = json.loads(out)
        code, out, _ = run(capsys, "ladder", "twosided", path, "--literal", "--format", "json")
        literal = json.loads(out)
        missing = {"rows": [2, 3], "cols": [4, 5]}
        assert missing in [m for g in default["groups"] for m in g]
        assert missing not in [m for g in literal["groups"] for m in g]

    def test_criteria(self, capsys, spec_file):
        path = spec_file({"lower": [[2, 5], [5, 2]], "r": [1, 2]})
        code, out, _ = run(capsys, "ladder", "criteria", path, "--format", "json")
        data = json.loads(out)
        assert code in (EXIT_OK, EXIT_FAIL)
        assert set(data["criteria"]) == {"disjoint_blocks", "disjoint_leading_vars", "attend_or_lcm",
                                         "rowcolumn", "fewer_rows"}

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "ladder", "onesided", str(tmp_path / "nope.json"))[0] == EXIT_PARSE


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", "5", "--count", "10")
    assert code == EXIT_OK and out.strip().endswith("ok")


def test_internal_assertion_exit_code(capsys, monkeypatch):
    import detgb.cli as cli

    def boom(*_):
        raise AssertionError("broken invariant")

    monkeypatch.setattr(cli, "essential_set", boom)
    assert run(capsys, "schubert", "ess", "2143")[0] == EXIT_INTERNAL


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "detgb", "schubert", "ess", "2143"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "(1,1) rank 0; (3,3) rank 2"


perms = st.integers(1, 12).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)
minors = st.integers(1, 4).flatmap(lambda r: st.tuples(
    st.lists(st.integers(1, 9), min_size=r, max_size=r, unique=True).map(sorted),
    st.lists(st.integers(1, 9), min_size=r, max_size=r, unique=True).map(sorted),
)).map(lambda rc: Minor(tuple(rc[0]), tuple(rc[1])))


@given(perms)
def test_permutation_json_round_trip(w):
    assert load_permutation(json.loads(json.dumps(dump_permutation(w)))) == w


@given(minors, minors)
def test_minor_and_polynomial_round_trip(m, k):
    assert load_minor(json.loads(json.dumps(dump_minor(m)))) == m
    p = expand_minor(m) * expand_minor(k) - expand_minor(k)
    order = TermOrder.scanning("NES", 9)
    assert load_polynomial(json.loads(json.dumps(dump_polynomial(p, order)))) == p


def test_ladder_round_trip():
    lad = Ladder(((1, 9), (2, 8), (5, 7), (6, 5), (8, 4), (9, 1)), ((1, 6), (3, 4), (4, 2), (6, 1)))
    assert load_ladder(json.loads(json.dumps(dump_ladder(lad)))) == lad
