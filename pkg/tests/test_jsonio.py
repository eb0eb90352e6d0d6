"""Wire formats: field names are contracts, every print re-parses equal."""

import json
from fractions import Fraction

import pytest

from valtree.jsonio import (
    FORKED_INTERVAL_TAG,
    FormatError,
    canonical_from_json,
    canonical_to_json,
    format_direction,
    format_fi_point,
    format_point,
    is_poset_doc,
    parse_direction,
    parse_fi_point,
    parse_point,
    rank2_values_from_json,
    rank2_values_to_json,
    tree_from_json,
    tree_to_json,
    valuation_from_json,
    valuation_to_json,
)
from valtree.rationals import INF, ONE
from valtree.testkit import gen_qmv, gen_tree
from valtree.tree import FI_X, RootedTree, fi_seg
from valtree.valuation import (
    INF_POINT,
    ProjPoint,
    QuasiMonomialVal,
    canonicalize,
    equal_valuations,
    monomial,
)


class TestValuationDoc:
    def test_exact_fields(self):
        nu = monomial(1, Fraction(3, 2))
        assert valuation_to_json(nu) == {
            "steps": [],
            "frame": [["1", "0"], ["0", "1"]],
            "weights": ["1", "3/2"],
        }

    def test_steps_and_infinity(self):
        nu = QuasiMonomialVal(
            (ProjPoint(Fraction(-1, 2)), INF_POINT), weights=(Fraction(1), Fraction(2))
        )
        doc = valuation_to_json(nu)
        assert doc["steps"] == [{"center": "-1/2"}, {"center": "inf"}]
        assert valuation_to_json(monomial(1, INF))["weights"] == ["1", "inf"]

    def test_defaults(self):
        nu = valuation_from_json({"weights": ["1", "2"]})
        assert equal_valuations(nu, monomial(1, 2))

    def test_round_trip_seeded(self):
        for s in range(40):
            nu = gen_qmv(s)
            assert valuation_from_json(valuation_to_json(nu)) == nu

    def test_json_text_round_trip(self):
        nu = gen_qmv(11)
        assert valuation_from_json(json.loads(json.dumps(valuation_to_json(nu)))) == nu

    @pytest.mark.parametrize(
        "bad",
        [
            [],
            {"weights": ["1"]},
            {"weights": ["1", "0"]},
            {"weights": ["inf", "inf"]},
            {"weights": ["1", "2"], "frame": [["1", "2"], ["2", "4"]]},
            {"weights": ["1", "2"], "steps": [{"centre": "0"}]},
        ],
    )
    def test_rejects(self, bad):
        with pytest.raises(FormatError):
            valuation_from_json(bad)


class TestCanonicalDoc:
    def test_divisorial(self):
        form = canonicalize(monomial(1, Fraction(5, 2)))
        assert canonical_to_json(form) == {
            "steps": [{"center": "0"}, {"center": "0"}, {"center": "inf"}],
            "terminal": {"divisorial": "1/2"},
        }

    def test_curve(self):
        form = canonicalize(monomial(1, INF))
        assert canonical_to_json(form) == {
            "steps": [],
            "terminal": {"curve": {"direction": "[0:1]", "weight": "1"}},
        }

    def test_round_trip_seeded(self):
        for s in range(40):
            form = canonicalize(gen_qmv(s + 70))
            assert canonical_from_json(canonical_to_json(form)) == form

    def test_rejects_missing_terminal(self):
        with pytest.raises(FormatError):
            canonical_from_json({"steps": []})


class TestDirections:
    def test_fixtures(self):
        assert format_direction(INF_POINT) == "[1:0]"
        assert format_direction(ProjPoint(Fraction(-1, 2))) == "[-1:2]"
        assert parse_direction("[2:1]") == ProjPoint(2)

    def test_round_trip(self):
        for d in (INF_POINT, ProjPoint(0), ProjPoint(Fraction(7, 3)), ProjPoint(-4)):
            assert parse_direction(format_direction(d)) == d

    @pytest.mark.parametrize("bad", ["", "[0:0]", "[1:2", "(1:2)", "[1.5:2]"])
    def test_rejects(self, bad):
        with pytest.raises(FormatError):
            parse_direction(bad)


class TestRank2Doc:
    def test_shape(self):
        doc = rank2_values_to_json((0, Fraction(1)), (1, Fraction(0)))
        assert doc == [["0", "1"], ["1", "0"]]
        assert rank2_values_from_json(doc) == ((0, Fraction(1)), (1, Fraction(0)))

    def test_rejects(self):
        with pytest.raises(FormatError):
            rank2_values_from_json([["0", "1"]])


class TestTreeDoc:
    def test_exact_fields(self):
        tree = RootedTree({(0,): Fraction(3, 2)})
        assert tree_to_json(tree) == {
            "nodes": {"root": {"children": [{"edge": "3/2", "node": {}}]}},
            "psi": "arclength+1",
        }

    def test_round_trip_seeded(self):
        for s in range(25):
            tree = gen_tree(s, max_nodes=12)
            back, _psi = tree_from_json(tree_to_json(tree))
            assert back.edges == tree.edges

    def test_rejects_unknown_psi(self):
        doc = {"nodes": {"root": {}}, "psi": "other"}
        with pytest.raises(FormatError):
            tree_from_json(doc)


class TestPoints:
    def test_fixtures(self):
        tree = RootedTree({(0,): Fraction(3, 2), (0, 0): INF, (1,): ONE})
        assert format_point(tree.root_point()) == "root"
        assert format_point(tree.node_point((0,))) == "0"
        assert format_point(tree.point((0, 0), Fraction(3, 4))) == "0/0@3/4"
        # the infinite end is the node end itself, so the offset is omitted
        assert format_point(tree.point((0, 0), INF)) == "0/0"
        assert parse_point(tree, "0/0") == tree.point((0, 0), INF)

    def test_round_trip_grid(self):
        tree = gen_tree(3, max_nodes=10)
        for p in tree.grid_points(3):
            assert parse_point(tree, format_point(p)) == p

    def test_rejects(self):
        tree = RootedTree({(0,): ONE})
        for bad in ("5", "0@7", "zero", "0@"):
            with pytest.raises(FormatError):
                parse_point(tree, bad)


class TestPosetDoc:
    def test_tag(self):
        assert is_poset_doc({"poset": FORKED_INTERVAL_TAG})
        assert not is_poset_doc({"nodes": {}})

    def test_points(self):
        assert parse_fi_point("X") == FI_X
        assert parse_fi_point("1/4") == fi_seg(Fraction(1, 4))
        assert format_fi_point(FI_X) == "X"
        assert format_fi_point(fi_seg(Fraction(1, 4))) == "1/4"
        with pytest.raises(FormatError):
            parse_fi_point("Z")
