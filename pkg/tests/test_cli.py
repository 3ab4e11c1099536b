"""Command line front end: output values, JSON schema, exit codes."""

import json

import pytest

from klrdim.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def invoke_json(capsys, *argv):
    code, out, err = invoke(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


class TestGdim:
    def test_affine_example(self, capsys):
        code, out, _ = invoke(
            capsys, "gdim", "--cartan", "A1~", "--weight", "1,2",
            "--nu", "2,1", "--nuprime", "2,1",
        )
        assert code == 0
        assert out.strip() == "q^6+2q^4+2q^2+1"

    def test_nuprime_defaults_to_nu(self, capsys):
        code, out, _ = invoke(
            capsys, "gdim", "--cartan", "A1~", "--weight", "1,2", "--nu", "2",
        )
        assert code == 0
        assert out.strip() == "q^2+1"

    def test_json_document(self, capsys):
        code, doc, _ = invoke_json(
            capsys, "gdim", "--cartan", "A1~", "--weight", "1,2",
            "--nu", "2,1", "--nuprime", "2,1",
        )
        assert code == 0
        assert doc["schema"] == "klr/1"
        assert doc["value"]["display"] == "q^6+2q^4+2q^2+1"
        assert doc["value"]["pairs"] == [[0, 1], [2, 2], [4, 2], [6, 1]]


class TestDim:
    def test_all_pairs_table(self, capsys):
        code, out, _ = invoke(
            capsys, "dim", "--cartan", "A2", "--weight", "1,1",
            "--beta", "1,1", "--all-pairs",
        )
        assert code == 0
        lines = out.strip().splitlines()
        values = [int(line.rsplit(" ", 1)[1]) for line in lines[:-1]]
        assert values == [2, 1, 1, 2]
        assert lines[-1].endswith("6")

    def test_pair(self, capsys):
        code, out, _ = invoke(
            capsys, "dim", "--cartan", "A2", "--weight", "3,2",
            "--nu", "1,2", "--nuprime", "2,1",
        )
        assert code == 0 and out.strip() == "6"

    def test_block_total(self, capsys):
        code, out, _ = invoke(
            capsys, "dim", "--cartan", "A2", "--weight", "3,2", "--beta", "1,1",
        )
        assert code == 0 and out.strip() == "29"

    def test_json_roundtrip(self, capsys):
        code, doc, _ = invoke_json(
            capsys, "dim", "--cartan", "A2", "--weight", "1,1",
            "--beta", "1,1", "--all-pairs",
        )
        assert code == 0
        assert doc["total"] == 6
        assert [p["value"] for p in doc["pairs"]] == [2, 1, 1, 2]

    def test_missing_selector(self, capsys):
        code, _, err = invoke(capsys, "dim", "--cartan", "A2", "--weight", "1,1")
        assert code == 1
        assert "PreconditionFail" in err


class TestBlockAlgebra:
    def test_block(self, capsys):
        code, out, _ = invoke(
            capsys, "block", "--cartan", "A1~", "--weight", "1,2", "--beta", "0,2",
        )
        assert code == 0
        assert "q^2+2+q^-2" in out
        assert "ungraded 4" in out

    def test_algebra(self, capsys):
        code, doc, _ = invoke_json(
            capsys, "algebra", "--cartan", "A1~", "--weight", "1,2", "--n", "2",
        )
        assert code == 0
        assert doc["total"]["graded"]["display"] == "2q^6+5q^4+6q^2+4+q^-2"
        assert doc["total"]["ungraded"] == 18


class TestNonzero:
    def test_direct(self, capsys):
        code, doc, _ = invoke_json(
            capsys, "nonzero", "--cartan", "A2", "--weight", "1,1", "--nu", "1,2",
        )
        assert code == 0
        assert doc["nonzero"] is True and doc["witness"] == 2

    def test_blockwise(self, capsys):
        code, doc, _ = invoke_json(
            capsys, "nonzero", "--cartan", "A2", "--weight", "1,0",
            "--nu", "1,1", "--method", "blockwise",
        )
        assert code == 0
        assert doc["nonzero"] is False and doc["witness"] == [[1, 2]]

    def test_tilde_method_alias(self, capsys):
        code, doc, _ = invoke_json(
            capsys, "nonzero", "--cartan", "A2", "--weight", "1,0",
            "--nu", "1,1", "--method", "tilde",
        )
        assert code == 0
        assert doc["method"] == "blockwise" and doc["nonzero"] is False

    def test_shuffle_witness_uses_labels(self, capsys):
        code, doc, _ = invoke_json(
            capsys, "nonzero", "--cartan", "A2", "--weight", "1,1",
            "--nu", "1,2", "--method", "shuffle",
        )
        assert code == 0
        assert doc["nonzero"] is True
        assert sorted(map(tuple, doc["witness"])) in ([(), (1, 2)], [((1, 2)), ()])


class TestBasisTilde:
    def test_basis_bounds(self, capsys):
        code, doc, _ = invoke_json(
            capsys, "basis", "--cartan", "A1", "--weight", "5", "--mu", "1,1",
        )
        assert code == 0
        assert doc["bounds"] == [5, 4]
        assert doc["cardinality"] == 40
        assert doc["empty"] is False

    def test_basis_list(self, capsys):
        code, doc, _ = invoke_json(
            capsys, "basis", "--cartan", "A1", "--weight", "2",
            "--mu", "1,1", "--list",
        )
        assert code == 0
        assert len(doc["elements"]) == doc["cardinality"] == 4
        assert doc["elements"][0] == {"w": [1, 2], "r": [0, 0]}

    def test_tilde(self, capsys):
        code, doc, _ = invoke_json(
            capsys, "tilde", "--cartan", "A2", "--mu", "2,1,1", "--letters", "1,2",
        )
        assert code == 0
        assert doc["grouped"] == [1, 1, 2]
        assert doc["sorting_perm"] == [3, 1, 2]

    def test_tilde_with_weight_bounds(self, capsys):
        code, doc, _ = invoke_json(
            capsys, "tilde", "--cartan", "A2", "--weight", "3,2",
            "--mu", "2,1,1", "--letters", "1,2",
        )
        assert code == 0
        assert doc["bounds"] == [2, 3, 2]


class TestReduce:
    def test_pair(self, capsys):
        code, doc, _ = invoke_json(
            capsys, "reduce", "--cartan", "A1", "--weight", "2",
            "--split", "1;1", "--nu", "1,1", "--mu", "1,1",
        )
        assert code == 0
        assert doc["reduced"] == doc["direct"] == 4 and doc["match"] is True

    def test_block(self, capsys):
        code, doc, _ = invoke_json(
            capsys, "reduce", "--cartan", "A1~", "--weight", "1,2",
            "--split", "1,0;0,1;0,1", "--beta", "1,1",
        )
        assert code == 0
        assert doc["match"] is True


class TestVerify:
    def test_oracle_suite(self, capsys):
        code, out, _ = invoke(
            capsys, "verify", "--cartan", "A2", "--weight", "1,1",
            "--suite", "oracle", "--max-n", "3",
        )
        assert code == 0
        assert "OK" in out and "0 mismatches" in out

    def test_all_suites_json(self, capsys):
        code, doc, _ = invoke_json(
            capsys, "verify", "--cartan", "A2", "--weight", "1,1",
            "--suite", "all", "--max-n", "2",
        )
        assert code == 0
        assert doc["ok"] is True
        assert {r["suite"] for r in doc["reports"]} == {
            "oracle", "divided", "levelred", "basis",
        }


class TestJsonSchema:
    @pytest.mark.parametrize(
        "argv",
        [
            ("gdim", "--cartan", "A2", "--weight", "1,1", "--nu", "1,2"),
            ("dim", "--cartan", "A2", "--weight", "1,1", "--beta", "1,1"),
            ("dim", "--cartan", "A2", "--weight", "1,1", "--beta", "1,1",
             "--all-pairs"),
            ("block", "--cartan", "A2", "--weight", "1,1", "--beta", "1,1"),
            ("algebra", "--cartan", "A2", "--weight", "1,1", "--n", "1"),
            ("nonzero", "--cartan", "A2", "--weight", "1,1", "--nu", "1,2"),
            ("basis", "--cartan", "A2", "--weight", "1,1", "--mu", "1,2",
             "--list"),
            ("reduce", "--cartan", "A2", "--weight", "1,1",
             "--split", "1,0;0,1", "--beta", "1,1"),
            ("tilde", "--cartan", "A2", "--mu", "1,2,1"),
            ("verify", "--cartan", "A2", "--weight", "1,1", "--suite",
             "divided", "--max-n", "2"),
        ],
    )
    def test_every_command_emits_versioned_json(self, capsys, argv):
        code, doc, err = invoke_json(capsys, *argv)
        assert code == 0 and err == ""
        assert doc["schema"] == "klr/1"
        assert doc["command"] == argv[0]


class TestErrorsAndDeterminism:
    def test_unknown_label(self, capsys):
        code, _, err = invoke(
            capsys, "gdim", "--cartan", "A2", "--weight", "1,1", "--nu", "7,1",
        )
        assert code == 1 and "OutOfRange" in err

    def test_unknown_type_json(self, capsys):
        code, doc, _ = invoke_json(
            capsys, "block", "--cartan", "Z9", "--weight", "1", "--beta", "1",
        )
        assert code == 1
        assert doc["error"]["type"] == "UnknownType"

    def test_non_dominant_weight(self, capsys):
        code, _, err = invoke(
            capsys, "dim", "--cartan", "A2", "--weight", "1,-1", "--beta", "1,1",
        )
        assert code == 1 and "PreconditionFail" in err

    def test_usage_error_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["gdim", "--cartan", "A2"])
        assert exc.value.code == 2

    def test_unknown_command_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["frobnicate"])
        assert exc.value.code == 2

    def test_time_budget_aborts(self, capsys):
        code, _, err = invoke(
            capsys, "dim", "--cartan", "A1", "--weight", "6",
            "--nu", "1,1,1,1,1,1,1,1,1,1", "--nuprime", "1,1,1,1,1,1,1,1,1,1",
            "--time-budget", "0.005",
        )
        assert code == 1 and "TimeBudgetExceeded" in err

    def test_byte_identical_reruns(self, capsys):
        args = [
            "algebra", "--cartan", "A1~", "--weight", "1,2", "--n", "2",
            "--format", "json",
        ]
        first = invoke(capsys, *args)
        second = invoke(capsys, *args)
        assert first == second

    def test_cartan_json_file(self, capsys, tmp_path):
        path = tmp_path / "cartan.json"
        path.write_text(json.dumps({"matrix": [[2, -2], [-2, 2]], "labels": [0, 1]}))
        code, out, _ = invoke(
            capsys, "gdim", "--cartan", str(path), "--weight", "1,2",
            "--nu", "1,0", "--nuprime", "1,0",
        )
        assert code == 0
        assert out.strip() == "q^6+2q^4+2q^2+1"

    def test_invalid_cartan_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"matrix": [[2, -1], [0, 2]]}))
        code, _, err = invoke(capsys, "block", "--cartan", str(path),
                              "--weight", "1,1", "--beta", "1,0")
        assert code == 1 and "BadSign" in err

    def test_missing_cartan_file(self, capsys, tmp_path):
        code, _, err = invoke(capsys, "block", "--cartan",
                              str(tmp_path / "nope.json"),
                              "--weight", "1,1", "--beta", "1,0")
        assert code == 1 and "BadShape" in err

    def test_garbled_int_list(self, capsys):
        code, _, err = invoke(
            capsys, "dim", "--cartan", "A2", "--weight", "one,two",
            "--beta", "1,1",
        )
        assert code == 1 and "PreconditionFail" in err

    def test_threads_flag(self, capsys):
        code, out, _ = invoke(
            capsys, "block", "--cartan", "A2", "--weight", "3,2",
            "--beta", "1,1", "--threads", "2",
        )
        assert code == 0 and "ungraded 29" in out
