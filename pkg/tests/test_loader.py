"""
Tests for reading systems, ideals, r-tables and W-graphs from files.
"""
import json
import pytest
import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from heckeideal.errors import ConfigError
from heckeideal.hecke import HeckeAlgebra
from heckeideal.ideal_module import validate_ideal_module
from heckeideal.laurent import Scalar
from heckeideal.loader import (
    load_ideal,
    load_rtable,
    load_system,
    load_wgraph,
    parse_poly,
    parse_subset,
    parse_words,
    rtable_to_document,
)
from heckeideal.parabolic import Variant
from heckeideal.wgraph import validate_wgraph

SYSTEMS = Path(__file__).parent.parent / "systems"

q = Scalar.q(1)


class TestLoadSystem:
    """Named types and system files"""

    def test_named_type(self):
        """A3 without a file"""
        W, weights = load_system("A3")
        assert W.order() == 24
        assert weights.rank == 1

    def test_json_file(self):
        """A2.json"""
        W, weights = load_system(str(SYSTEMS / "A2.json"))
        assert W.name == "A2"
        assert W.order() == 6
        assert W.names == ("s1", "s2")

    def test_unequal_weights(self):
        """B3 with L(s3) = 3"""
        W, weights = load_system(str(SYSTEMS / "B3_unequal.yaml"))
        assert W.order() == 48
        assert [weights.units(s) for s in W.generators] == [(1,), (1,), (3,)]

    def test_generic_weights(self):
        """I2(4) with two independent parameters"""
        W, weights = load_system(str(SYSTEMS / "I2_4_generic.yaml"))
        assert weights.rank == 2
        assert weights.units(0) != weights.units(1)

    def test_missing_weight(self, tmp_path):
        """Every generator needs a weight"""
        path = tmp_path / "bad.yaml"
        path.write_text("matrix: [[1, 3], [3, 1]]\nweights: {s1: 1}\n")
        with pytest.raises(ConfigError, match="No weight for s2"):
            load_system(str(path))

    def test_missing_file(self):
        """Unknown names that are not files"""
        with pytest.raises(ConfigError, match="File not found"):
            load_system("no-such-system.yaml")

    def test_no_matrix(self, tmp_path):
        """A file needs a type or a matrix"""
        path = tmp_path / "empty.yaml"
        path.write_text("name: nothing\n")
        with pytest.raises(ConfigError):
            load_system(str(path))

    def test_not_a_mapping(self, tmp_path):
        """Top-level lists are rejected"""
        path = tmp_path / "list.json"
        path.write_text("[1, 2]")
        with pytest.raises(ConfigError, match="expected a mapping"):
            load_system(str(path))


class TestParsing:
    """Words, subsets and polynomials"""

    def setup_method(self):
        self.W, _ = load_system("A2")

    def test_words(self):
        """Comma-separated words"""
        assert [self.W.format(w) for w in parse_words(self.W, "s2s1,s1")] == ["s2s1", "s1"]

    def test_empty_words_give_identity(self):
        """An empty string is {e}"""
        assert parse_words(self.W, "") == [self.W.identity]

    def test_subset(self):
        """Names with or without braces"""
        assert parse_subset(self.W, "{s1,s2}") == frozenset({0, 1})
        assert parse_subset(self.W, "{}") == frozenset()
        assert parse_subset(self.W, None) == frozenset()

    def test_unknown_generator(self):
        """s7 is not a generator"""
        with pytest.raises(ConfigError):
            parse_subset(self.W, "s7")

    def test_poly(self):
        """Printed form, integers and exponent lists"""
        assert parse_poly("q^2", 1) == q ** 2
        assert parse_poly(3, 1) == 3
        assert parse_poly("q-1", 1) == q - 1

    def test_bad_poly(self):
        """Garbage and booleans are rejected"""
        with pytest.raises(ConfigError, match="Bad polynomial"):
            parse_poly("q^^2", 1)
        with pytest.raises(ConfigError):
            parse_poly(True, 1)


class TestLoadIdeal:
    """Ideals from words or files"""

    def setup_method(self):
        self.W, _ = load_system("A2")

    def test_from_words(self):
        """<s2s1> = {e, s1, s2s1}"""
        E, J = load_ideal("s2s1", self.W)
        assert [self.W.format(y) for y in E.sorted()] == ["e", "s1", "s2s1"]
        assert J is None

    def test_from_file(self):
        """The file also names J"""
        E, J = load_ideal(str(SYSTEMS / "ideal_A2_s1.json"), self.W)
        assert len(E) == 2
        assert J == frozenset({1})


class TestLoadRTable:
    """r-table files"""

    def setup_method(self):
        self.W, self.weights = load_system("A2")
        self.H = HeckeAlgebra(self.W, self.weights)

    def test_sample_table(self):
        """r^{s2}_{e,s1} = q^2 gives a module"""
        datum = load_rtable(SYSTEMS / "rtable_A2_s1.json", self.W, self.weights)
        assert datum.variant == Variant.MINUS_ONE
        assert datum.r(1, self.W.parse("s1"), self.W.identity, self.weights) == q ** 2
        assert validate_ideal_module(self.H, datum).passed

    def test_entry_outside_e(self, tmp_path):
        """z = s2 is not in E"""
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({
            "E": ["s1"],
            "J": ["s2"],
            "entries": [{"s": "s2", "y": "s1", "z": "s2", "poly": "q"}],
        }))
        with pytest.raises(ConfigError, match="outside E"):
            load_rtable(path, self.W, self.weights)

    def test_no_ideal(self, tmp_path):
        """E must come from the file or the caller"""
        path = tmp_path / "noideal.json"
        path.write_text(json.dumps({"J": ["s2"], "entries": []}))
        with pytest.raises(ConfigError, match="no ideal"):
            load_rtable(path, self.W, self.weights)

    def test_document_round_trip(self, tmp_path):
        """rtable_to_document output loads back to the same table"""
        datum = load_rtable(SYSTEMS / "rtable_A2_s1.json", self.W, self.weights)
        path = tmp_path / "rtable.json"
        path.write_text(json.dumps(rtable_to_document(datum, self.W)))
        again = load_rtable(path, self.W, self.weights)
        assert again.E.members == datum.E.members
        assert again.J == datum.J
        assert again.r(1, self.W.parse("s1"), self.W.identity, self.weights) == q ** 2


class TestLoadWGraph:
    """W-graph files"""

    def test_sample_graph(self):
        """The D_{s1} graph in A2 is a representation"""
        W, weights = load_system("A2")
        datum = load_wgraph(SYSTEMS / "wgraph_A2_J_s1.json", W, weights)
        assert datum.vertices == ["e", "s2", "s1s2"]
        assert datum.I["s1s2"] == frozenset({0, 1})
        report = validate_wgraph(datum, HeckeAlgebra(W, weights))
        assert report.passed, report.witnesses

    def test_unknown_vertex(self, tmp_path):
        """Edges must join listed vertices"""
        W, weights = load_system("A2")
        path = tmp_path / "graph.json"
        path.write_text(json.dumps({
            "vertices": ["e"],
            "I": {"e": ["s1"]},
            "mu": [{"x": "e", "y": "x9", "s": "s1", "value": 1}],
        }))
        with pytest.raises(ConfigError, match="unknown vertices"):
            load_wgraph(path, W, weights)
