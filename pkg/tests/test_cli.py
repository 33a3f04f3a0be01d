import json
from fractions import Fraction
from pathlib import Path

import pytest

from paracon.cli import main
from paracon.langsets import FiniteSet, SymbolicSet
from paracon.serialization import (
    DocumentError,
    action_json,
    element_json,
    parse_action,
    parse_element,
    parse_rational,
    parse_set,
    rational_str,
    set_json,
)
from paracon.words import Permutation, parse_word

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def run_fixture(capsys, name, *command):
    return run(capsys, *command, "--input", str(FIXTURES / name))


class TestFixtures:
    def test_eq_solve_f2_infeasible(self, capsys):
        code, report = run_fixture(capsys, "f2-ab-5block.json", "eq", "solve")
        assert code == 0
        assert report["status"] == "infeasible"
        assert report["data"]["certificate"]
        assert report["input_digest"].startswith("sha256:")

    def test_eq_solve_trivial_feasible(self, capsys):
        code, report = run_fixture(capsys, "trivial-action.json", "eq", "solve")
        assert code == 0
        assert report["status"] == "feasible"
        values = [parse_rational(v, "x") for v in report["data"]["solution"]]
        assert sum(values) == 1 and all(v >= 0 for v in values)

    def test_eq_verify_uniform_trivial(self, capsys):
        code, report = run_fixture(capsys, "trivial-action.json", "eq", "verify")
        assert code == 0
        assert report["status"] == "ok"
        assert report["data"]["kind"] == "solution"

    def test_eq_verify_z3(self, capsys):
        code, report = run_fixture(capsys, "z3-cycle.json", "eq", "verify")
        assert code == 0 and report["status"] == "ok"

    def test_con_compute_z3(self, capsys):
        code, report = run_fixture(capsys, "z3-cycle.json", "con", "compute")
        assert code == 0
        assert report["data"]["configurations"] == [[1, 2], [2, 1], [2, 2]]
        assert report["data"]["cell_partition_ok"]

    def test_paradox_verify_classical(self, capsys):
        code, report = run_fixture(capsys, "f2-classical-decomposition.json",
                                   "paradox", "verify")
        assert code == 0
        assert report["status"] == "ok"
        assert report["data"]["piece_count"] == 4

    def test_paradox_verify_strict_flag(self, capsys):
        # the four cones never contain e, so the exact-cover variant fails
        code, report = run(capsys, "paradox", "verify",
                           "--input", str(FIXTURES / "f2-classical-decomposition.json"),
                           "--strict-partition")
        assert code == 0
        assert report["status"] == "failed"
        assert report["data"]["problem"] == "pieces-not-exhaustive"
        assert report["data"]["witness"] == "e"

    def test_paradox_chain_fixture(self, capsys):
        code, report = run_fixture(capsys, "f2-chain-n2.json", "paradox", "chain")
        assert code == 0
        assert report["status"] == "ok"
        assert report["data"]["piece_bound"] == 4
        assert report["data"]["stage_elements"] == ["ababA", "ab", "e"]

    def test_pingpong_cyclic_fixture(self, capsys):
        code, report = run_fixture(capsys, "f2-pingpong-cyclic.json", "pingpong", "cyclic")
        assert code == 0
        assert report["status"] == "ok"
        assert "free subgroup" in report["data"]["conclusion"]

    def test_witness_nonabelian_fixture(self, capsys):
        code, report = run_fixture(capsys, "s3-nonabelian-witness.json",
                                   "witness", "nonabelian")
        assert code == 0
        assert report["status"] == "ok"
        assert report["data"]["verified"]
        assert len(report["data"]["sets"]) == 5

    def test_compare_con_quotient(self, capsys):
        code, report = run_fixture(capsys, "z4-quotient.json", "compare", "con")
        assert code == 0
        assert report["status"] == "included-up-to-bounds"
        assert report["bounds"]["max_blocks"] == 2


class TestOtherCommands:
    def test_probe_cardinality(self, capsys, tmp_path):
        doc = {"action": {"backend": "free-self", "rank": 2}, "n": 4}
        path = tmp_path / "probe.json"
        path.write_text(json.dumps(doc))
        code, report = run(capsys, "probe", "cardinality", "--input", str(path))
        assert code == 0
        assert report["status"] == "yes"
        assert len(report["data"]["witness_partition"]) == 4

    def test_paradox_search(self, capsys, tmp_path):
        doc = {"action": {"backend": "free-self", "rank": 2},
               "max_pieces": 4, "cone_depth": 1, "translator_length": 1}
        path = tmp_path / "search.json"
        path.write_text(json.dumps(doc))
        code, report = run(capsys, "paradox", "search", "--input", str(path))
        assert code == 0
        assert report["status"] == "found"
        assert report["data"]["decomposition"]["piece_count"] == 4

    def test_paradox_pattern(self, capsys, tmp_path):
        doc = {
            "action": {"backend": "free-self", "rank": 2},
            "tuple": ["A", "B"],
            "partition": [
                {"kind": "singleton", "word": "e"},
                {"kind": "cone", "word": "a"},
                {"kind": "cone", "word": "A"},
                {"kind": "cone", "word": "b"},
                {"kind": "cone", "word": "B"},
            ],
            "pattern": {"family_a": [[0, 2], [1, 3]], "family_b": [[0, 4], [2, 5]]},
        }
        path = tmp_path / "pattern.json"
        path.write_text(json.dumps(doc))
        code, report = run(capsys, "paradox", "pattern", "--input", str(path))
        assert code == 0 and report["status"] == "holds"

    def test_coarsen_command(self, capsys, tmp_path):
        doc = {
            "action": {"backend": "trivial", "degree": 4},
            "mode": "partition",
            "fine": {"tuple": ["a"],
                     "partition": [{"kind": "points", "points": [p]} for p in range(4)]},
            "coarse": {"tuple": ["a"],
                       "partition": [{"kind": "points", "points": [0, 1]},
                                      {"kind": "points", "points": [2, 3]}]},
            "solution": ["1/4", "1/4", "1/4", "1/4"],
        }
        path = tmp_path / "coarsen.json"
        path.write_text(json.dumps(doc))
        code, report = run(capsys, "coarsen", "--input", str(path))
        assert code == 0
        assert report["data"]["solution"] == ["1/2", "1/2"]

    def test_pingpong_subgroups_command(self, capsys, tmp_path):
        doc = {
            "action": {"backend": "free-self", "rank": 2},
            "subgroups": [
                {"kind": "cyclic", "generator": "a", "exponent_bound": 3},
                {"kind": "cyclic", "generator": "b", "exponent_bound": 3},
            ],
            "sets": [
                {"kind": "union", "of": [{"kind": "cone", "word": "a"},
                                          {"kind": "cone", "word": "A"}]},
                {"kind": "union", "of": [{"kind": "cone", "word": "b"},
                                          {"kind": "cone", "word": "B"}]},
            ],
        }
        path = tmp_path / "subgroups.json"
        path.write_text(json.dumps(doc))
        code, report = run(capsys, "pingpong", "subgroups", "--input", str(path))
        assert code == 0
        assert report["status"] == "ok"
        assert report["data"]["checks"] == 12

    def test_witness_infinite_order_finite_backend(self, capsys, tmp_path):
        doc = {
            "action": {"backend": "finite-regular",
                       "generators": {"a": [1, 0, 2], "b": [0, 2, 1]}},
            "element": "a",
        }
        path = tmp_path / "order.json"
        path.write_text(json.dumps(doc))
        code, report = run(capsys, "witness", "infinite-order", "--input", str(path))
        assert code == 0
        assert report["status"] == "finite-order"
        assert report["data"]["order"] == 2

    def test_witness_infinite_order_free(self, capsys, tmp_path):
        doc = {"action": {"backend": "free-self", "rank": 2}, "element": "abA"}
        path = tmp_path / "order2.json"
        path.write_text(json.dumps(doc))
        code, report = run(capsys, "witness", "infinite-order", "--input", str(path))
        assert code == 0
        assert report["status"] == "ok" and report["data"]["verified"]


class TestExitCodes:
    def test_bad_word_is_parse_error(self, capsys, tmp_path):
        doc = {"action": {"backend": "free-self", "rank": 2},
               "tuple": ["aX"], "partition": [{"kind": "full"}]}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, report = run(capsys, "con", "compute", "--input", str(path))
        assert code == 2
        assert report["status"] == "error"
        assert "offset 1" in report["error"]["message"]
        assert report["error"]["location"] == ".tuple[0]"

    def test_invalid_json(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, report = run(capsys, "eq", "solve", "--input", str(path))
        assert code == 2
        assert "line" in report["error"]["location"]

    def test_invalid_partition(self, capsys, tmp_path):
        doc = {"action": {"backend": "free-self", "rank": 2},
               "tuple": ["a"],
               "partition": [{"kind": "cone", "word": "a"},
                              {"kind": "cone", "word": "ab"}]}
        path = tmp_path / "overlap.json"
        path.write_text(json.dumps(doc))
        code, report = run(capsys, "con", "compute", "--input", str(path))
        assert code == 2
        assert "overlap" in report["error"]["message"]

    def test_bound_exceeded(self, capsys, tmp_path):
        doc = {"action": {"backend": "free-self", "rank": 2}, "max_pieces": 99}
        path = tmp_path / "big.json"
        path.write_text(json.dumps(doc))
        code, report = run(capsys, "paradox", "search", "--input", str(path))
        assert code == 3
        assert report["status"] == "bound-exceeded"
        assert report["error"]["requested"] == 99

    def test_bound_flag_raises_cap(self, capsys, tmp_path):
        doc = {"action": {"backend": "free-self", "rank": 2},
               "max_pieces": 4, "cone_depth": 1, "translator_length": 1}
        path = tmp_path / "ok.json"
        path.write_text(json.dumps(doc))
        code, report = run(capsys, "paradox", "search", "--input", str(path),
                           "--bound-pieces", "4")
        assert code == 0


class TestDeterminism:
    def test_reports_are_byte_stable(self, capsys):
        outputs = []
        for _ in range(2):
            code = main(["eq", "solve", "--input", str(FIXTURES / "f2-ab-5block.json")])
            assert code == 0
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code = main(["eq", "solve", "--input", str(FIXTURES / "z3-cycle.json"),
                     "--output", str(target)])
        assert code == 0
        assert json.loads(target.read_text())["status"] == "feasible"


class TestRoundTrips:
    def test_rationals(self):
        for value in (Fraction(1, 3), Fraction(0), Fraction(-7, 2), Fraction(5)):
            assert parse_rational(rational_str(value), "x") == value

    def test_elements(self):
        from paracon.actions import FreeSelfAction, FinitePermutationAction
        f2 = FreeSelfAction(2)
        w = parse_word("aBab")
        assert parse_element(element_json(w), f2, "x") == w
        z3 = FinitePermutationAction(3, {1: Permutation((1, 2, 0))})
        p = Permutation((2, 0, 1))
        assert parse_element(element_json(p), z3, "x") == p

    def test_actions(self):
        docs = [
            {"backend": "free-self", "rank": 3},
            {"backend": "trivial", "degree": 5},
            {"backend": "trivial", "rank": 2},
            {"backend": "finite-permutation", "degree": 3, "generators": {"a": [1, 2, 0]}},
            {"backend": "finite-regular", "generators": {"a": [1, 0, 2], "b": [0, 2, 1]}},
        ]
        for doc in docs:
            assert action_json(parse_action(doc)) == doc

    def test_symbolic_sets(self):
        from paracon.actions import FreeSelfAction
        f2 = FreeSelfAction(2)
        values = [
            SymbolicSet.cone(parse_word("ab"), 2),
            SymbolicSet.singleton(parse_word("e"), 2),
            SymbolicSet.powers(parse_word("abA"), 2),
            SymbolicSet.cone(parse_word("a"), 2).complement(),
            SymbolicSet.empty(2),
            SymbolicSet.full(2),
        ]
        for value in values:
            assert parse_set(set_json(value), f2, "x") == value

    def test_finite_sets(self):
        from paracon.actions import FinitePermutationAction
        z4 = FinitePermutationAction(4, {1: Permutation((1, 2, 3, 0))})
        value = FiniteSet.of(4, [0, 3])
        assert parse_set(set_json(value), z4, "x") == value

    def test_expression_parsing_matches_algebra(self):
        from paracon.actions import FreeSelfAction
        f2 = FreeSelfAction(2)
        expr = {"kind": "difference",
                "left": {"kind": "complement", "of": {"kind": "cone", "word": "a"}},
                "right": {"kind": "singleton", "word": "e"}}
        expected = SymbolicSet.cone(parse_word("a"), 2).complement().difference(
            SymbolicSet.singleton(parse_word("e"), 2))
        assert parse_set(expr, f2, "x") == expected

    def test_malformed_set_location(self):
        from paracon.actions import FreeSelfAction
        f2 = FreeSelfAction(2)
        with pytest.raises(DocumentError) as err:
            parse_set({"kind": "union", "of": [{"kind": "cone", "word": "zz"}]}, f2, "sets")
        assert "sets.of[0]" in str(err.value)
