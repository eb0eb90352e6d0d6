"""Command-line behavior: pinned examples, exit codes, round trips."""

import json
from fractions import Fraction

import pytest

from valtree.cli import main
from valtree.jsonio import canonical_from_json, valuation_from_json
from valtree.valuation import canonicalize, equal_valuations, monomial, normalize


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def tree_file(tmp_path):
    doc = {
        "nodes": {
            "root": {
                "children": [
                    {
                        "edge": "3/2",
                        "node": {
                            "children": [
                                {"edge": "1", "node": {}},
                                {"edge": "inf", "node": {}},
                            ]
                        },
                    },
                    {"edge": "1/2", "node": {}},
                ]
            }
        },
        "psi": "arclength+1",
    }
    path = tmp_path / "tree.json"
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def fork_file(tmp_path):
    path = tmp_path / "fork.json"
    path.write_text('{"poset": "forked-interval"}')
    return str(path)


class TestValCommands:
    def test_eval_prints_the_bare_value(self, capsys):
        code, out, err = run(
            capsys, "val", "eval", "--valuation", '{"weights":["1","2"]}', "--poly", "y"
        )
        assert (code, out) == (0, "2\n")
        assert err.startswith("config:")

    def test_eval_json_mode(self, capsys):
        code, out, _ = run(
            capsys,
            "val", "eval", "--valuation", '{"weights":["1","2"]}',
            "--poly", "x*y^2", "--json",
        )
        assert code == 0
        assert json.loads(out) == {"poly": "x*y^2", "value": "5"}

    def test_inf_of_transverse_monomials(self, capsys, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        a.write_text('{"weights": ["1", "2"]}')
        b.write_text('{"weights": ["2", "1"]}')
        code, out, _ = run(capsys, "val", "inf", "--in", str(a), "--in", str(b))
        assert code == 0
        assert json.loads(out) == {"steps": [], "terminal": {"divisorial": "1"}}

    def test_inf_mixes_files_and_inline(self, capsys, tmp_path):
        a = tmp_path / "a.json"
        a.write_text('{"weights": ["1", "2"]}')
        code, out, _ = run(
            capsys, "val", "inf", "--in", str(a), "--valuation", '{"weights":["1","3"]}'
        )
        assert json.loads(out) == {
            "steps": [{"center": "0"}],
            "terminal": {"divisorial": "1"},
        }

    def test_stream_euclid_fixture(self, capsys):
        code, out, _ = run(
            capsys, "val", "stream", "--valuation", '{"weights":["1","5/2"]}'
        )
        lines = out.splitlines()
        assert lines[0].split() == ["level", "center", "m"]
        assert [ln.split() for ln in lines[1:4]] == [
            ["0", "0", "1"],
            ["1", "0", "1"],
            ["2", "inf", "1/2"],
        ]
        assert "lambda = 4" in out

    def test_stream_m_adic(self, capsys):
        _, out, _ = run(capsys, "val", "stream", "--valuation", '{"weights":["1","1"]}')
        assert "lambda = 1" in out
        assert '"divisorial": "1"' in out

    def test_stream_curve_tail(self, capsys):
        _, out, _ = run(
            capsys, "val", "stream", "--valuation", '{"weights":["1","inf"]}'
        )
        assert "center 0, m=1 (repeats)" in out
        assert "lambda = inf" in out

    def test_normalize_round_trips(self, capsys):
        code, out, _ = run(
            capsys, "val", "normalize", "--valuation", '{"weights":["2","3"]}'
        )
        nu = valuation_from_json(json.loads(out))
        assert equal_valuations(nu, normalize(monomial(2, 3)))

    def test_canon_round_trips(self, capsys):
        code, out, _ = run(
            capsys, "val", "canon", "--valuation", '{"weights":["1","5/2"]}'
        )
        form = canonical_from_json(json.loads(out))
        assert form == canonicalize(monomial(1, Fraction(5, 2)))

    def test_compare(self, capsys):
        code, out, _ = run(
            capsys,
            "val", "compare",
            "--valuation", '{"weights":["1","2"]}',
            "--valuation", '{"weights":["1","3"]}',
        )
        assert (code, out) == (0, "LT\n")

    def test_krull_rank2(self, capsys):
        code, out, _ = run(
            capsys,
            "val", "krull", "--valuation", '{"weights":["1","inf"]}',
            "--poly", "x", "--poly", "y", "--poly", "x*y^2", "--json",
        )
        doc = json.loads(out)
        assert doc["result"] == "rank-2"
        assert doc["values"] == [["0", "1"], ["1", "0"]]
        assert [p["value"] for p in doc["poly_values"]] == [
            "(0, 1)", "(1, 0)", "(2, 1)",
        ]

    def test_krull_same_rank1(self, capsys):
        code, out, _ = run(
            capsys, "val", "krull", "--valuation", '{"weights":["1","1"]}'
        )
        assert code == 0
        assert "same rank 1" in out

    def test_common_min(self, capsys):
        code, out, _ = run(
            capsys,
            "val", "common-min",
            "--valuation", '{"weights":["1","2"]}',
            "--valuation", '{"weights":["2","1"]}',
            "--json",
        )
        doc = json.loads(out)
        assert (doc["a"], doc["b"]) == ("1", "1")

    def test_witness_incomparable(self, capsys):
        code, out, _ = run(
            capsys,
            "val", "witness",
            "--valuation", '{"weights":["1","2"]}',
            "--valuation", '{"weights":["2","1"]}',
        )
        assert code == 0
        assert out.splitlines()[0] == "INCOMPARABLE"
        assert "left>right" in out and "right>left" in out

    def test_mvalue(self, capsys):
        code, out, _ = run(
            capsys, "val", "mvalue", "--valuation", '{"weights":["2","3"]}'
        )
        assert (code, out) == (0, "2\n")


class TestTreeCommands:
    def test_check_passes(self, capsys, tree_file):
        code, out, _ = run(capsys, "tree", "check", "--tree", tree_file)
        assert code == 0
        assert out.count("pass") == 4

    def test_check_poset_fails_t4(self, capsys, fork_file):
        code, out, _ = run(capsys, "tree", "check", "--tree", fork_file)
        assert code == 1
        assert "T4: FAIL" in out
        assert "witness" in out

    def test_inf_no_infimum_exit_1(self, capsys, fork_file):
        code, out, _ = run(
            capsys, "tree", "inf", "--tree", fork_file, "--points", "X", "Y"
        )
        assert code == 1
        assert "no infimum" in out

    def test_inf_with_a_segment_point(self, capsys, fork_file):
        code, out, _ = run(
            capsys, "tree", "inf", "--tree", fork_file, "--points", "X", "1/4"
        )
        assert (code, out) == (0, "1/4\n")

    def test_inf_on_a_tree(self, capsys, tree_file):
        code, out, _ = run(
            capsys, "tree", "inf", "--tree", tree_file, "--points", "0/0", "0/1@2"
        )
        assert code == 0
        assert out.startswith("0 ")

    def test_dist(self, capsys, tree_file):
        code, out, _ = run(
            capsys, "tree", "dist", "--tree", tree_file, "--points", "root", "0"
        )
        assert (code, out) == (0, "3/5\n")

    def test_nbhd_membership(self, capsys, tree_file):
        code, out, _ = run(
            capsys,
            "tree", "nbhd", "--tree", tree_file,
            "--points", "0@1", "0/0", "0/1@2", "root", "--json",
        )
        doc = json.loads(out)
        assert [m["member"] for m in doc["members"]] == [True, False]

    def test_ball_check(self, capsys, tree_file):
        code, out, _ = run(
            capsys,
            "tree", "ball-check", "--tree", tree_file,
            "--points", "0/0", "0@1", "0/0@1/2", "--json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["violations"] == []
        assert doc["epsilon"] == "1/6"

    def test_countability_witness(self, capsys):
        code, out, _ = run(
            capsys, "tree", "countability", "--samples", "5", "--seed", "3", "--json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc == {
            "branches": 1000,
            "neighborhoods": 5,
            "witness": doc["witness"],
            "in_all": True,
        }


class TestExitCodes:
    def test_malformed_valuation_is_2(self, capsys):
        code, _, err = run(
            capsys, "val", "eval", "--valuation", '{"weights":["inf","inf"]}',
            "--poly", "y",
        )
        assert code == 2
        assert "error:" in err

    def test_bad_poly_is_2(self, capsys):
        code, _, err = run(
            capsys, "val", "eval", "--valuation", '{"weights":["1","1"]}',
            "--poly", "z",
        )
        assert code == 2

    def test_missing_count_is_2(self, capsys):
        code, _, err = run(
            capsys, "val", "compare", "--valuation", '{"weights":["1","2"]}'
        )
        assert code == 2

    def test_unknown_flag_is_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["val", "eval", "--bogus"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_missing_tree_file_is_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["tree", "check", "--tree", "/nonexistent.json"])
        assert exc.value.code == 2
        capsys.readouterr()
