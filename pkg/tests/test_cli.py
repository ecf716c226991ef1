"""End-to-end CLI behavior: dispatch, JSON round trips, determinism,
and exit codes."""

import json
import subprocess
import sys

import pytest

from multidegree.cli import main

OCTAHEDRON = {
    "nverts": 6,
    "facets": [
        [1, 2, 3], [1, 2, 6], [1, 3, 5], [1, 5, 6],
        [2, 3, 4], [2, 4, 6], [3, 4, 5], [4, 5, 6],
    ],
}
INTRO_SUBSPACES = {
    "ambient": 3,
    "field": "Q",
    "subspaces": [
        [["1", "0", "0"]],
        [["1", "0", "0"], ["0", "1", "0"]],
        [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    ],
}


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(args, capsys):
    code, out, err = run_cli(args, capsys)
    assert code == 0, err
    return json.loads(out)


class TestSubcommands:
    def test_schubert_longest(self, capsys):
        doc = run_json(["schubert", "--perm", "3,2,1"], capsys)
        assert doc["polynomial"] == {
            "nvars": 3,
            "terms": [{"coef": "1", "exp": [2, 1, 0]}],
        }
        assert doc["pretty"] == "t1^2*t2"
        assert doc["support"]["points"] == [[0, 1, 2]]
        assert doc["agrees"] is True

    def test_schubert_exponent_convention(self, capsys):
        doc = run_json(
            ["schubert", "--perm", "3,2,1", "--exponent-coordinates"], capsys
        )
        assert doc["support"]["points"] == [[2, 1, 0]]
        assert doc["support_convention"] == "exponent"

    def test_theta_anchor(self, capsys):
        doc = run_json(["theta", "--perm", "4,2,5,3,1", "--subset", "2,3"], capsys)
        assert doc["theta"] == 3
        assert doc["length"] == 7

    def test_theta_from_diagram_json(self, capsys):
        diagram = {"p": 2, "cells": [[2, 1]]}
        doc = run_json(
            ["theta", "--json", json.dumps(diagram), "--subset", "1"], capsys
        )
        assert doc["theta"] == 1

    def test_msupp_rank_intro(self, capsys):
        doc = run_json(
            ["msupp-rank", "--json", '{"p":3,"values":[0,1,2,2,3,3,3,3]}'],
            capsys,
        )
        assert doc["count"] == 5
        assert doc["support"]["points"] == [
            [0, 0, 3], [0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 1, 1],
        ]

    def test_msupp_linear_intro(self, capsys):
        doc = run_json(["msupp-linear", "--json", json.dumps(INTRO_SUBSPACES)], capsys)
        assert doc["rank_function"]["values"] == [0, 1, 2, 2, 3, 3, 3, 3]
        assert doc["count"] == 5

    def test_mconvex(self, capsys):
        support = {"p": 2, "points": [[1, 2], [2, 1]]}
        doc = run_json(["mconvex", "--json", json.dumps(support)], capsys)
        assert doc == {"mconvex": True, "witness": None}

    def test_kpoly(self, capsys):
        ideal = {"nvars": 2, "p": 2, "degrees": [[1, 0], [0, 1]], "generators": [[1, 1]]}
        doc = run_json(["kpoly", "--json", json.dumps(ideal)], capsys)
        assert doc["pretty"] == "1 - t1*t2"

    def test_multidegree_warns(self, capsys):
        ideal = {"nvars": 2, "p": 2, "degrees": [[1, 0], [0, 1]], "generators": [[1, 1]]}
        code, out, err = run_cli(["multidegree", "--json", json.dumps(ideal)], capsys)
        assert code == 0
        assert "warning" in err
        assert json.loads(out)["pretty"] == "t2 + t1"

    def test_sr_ideal_and_facet_support(self, capsys):
        doc = run_json(["sr-ideal", "--json", json.dumps(OCTAHEDRON)], capsys)
        assert len(doc["generators"]) == 3
        doc = run_json(["facet-support", "--json", json.dumps(OCTAHEDRON)], capsys)
        assert doc["count"] == 8

    def test_mixedvol_and_positivity(self, capsys):
        body = {
            "polytopes": [
                {"d": 2, "vertices": [["0", "0"], ["1", "0"]]},
                {"d": 2, "vertices": [["0", "0"], ["0", "1"]]},
            ]
        }
        doc = run_json(["mixedvol", "--json", json.dumps(body)], capsys)
        assert {"n": [1, 1], "v": "1/2"} in doc["entries"]
        body["n"] = [1, 1]
        doc = run_json(["positivity", "--json", json.dumps(body)], capsys)
        assert doc == {"n": [1, 1], "positive": True, "segments": True}

    def test_flag_report(self, capsys):
        doc = run_json(["flag", "--p", "2"], capsys)
        assert doc["support"]["points"] == [[1, 2], [2, 1]]
        assert doc["comparator"]["agree"] is False

    def test_m0n(self, capsys):
        doc = run_json(["m0n", "--p", "4"], capsys)
        assert doc["count"] == 14
        code, out, _err = run_cli(["m0n", "--p", "4", "--count-only"], capsys)
        assert code == 0
        assert out == "14\n"

    def test_schema(self, capsys):
        doc = run_json(["--schema", "rank_function"], capsys)
        assert doc["title"] == "rank_function"


class TestRoundTrips:
    def test_sr_ideal_output_feeds_kpoly(self, capsys, tmp_path):
        path = tmp_path / "ideal.json"
        code, out, _ = run_cli(
            ["sr-ideal", "--json", json.dumps(OCTAHEDRON), "--output", str(path)],
            capsys,
        )
        assert code == 0
        assert path.read_text() == out
        doc = run_json(["kpoly", "--input", str(path)], capsys)
        assert doc["pretty"].startswith("1 -")

    def test_support_output_feeds_mconvex(self, capsys):
        doc = run_json(
            ["msupp-rank", "--json", '{"p":3,"values":[0,1,2,2,3,3,3,3]}'], capsys
        )
        doc2 = run_json(["mconvex", "--json", json.dumps(doc["support"])], capsys)
        assert doc2["mconvex"] is True


class TestDeterminismAndErrors:
    def test_identical_bytes(self, capsys):
        _code, out1, _ = run_cli(["schubert", "--perm", "4,2,5,3,1"], capsys)
        _code, out2, _ = run_cli(["schubert", "--perm", "4,2,5,3,1"], capsys)
        assert out1 == out2

    def test_malformed_json_exit_2(self, capsys):
        code, out, err = run_cli(["mconvex", "--json", "{not json"], capsys)
        assert code == 2
        assert out == ""
        assert "line 1" in err

    def test_invalid_rank_table_exit_2(self, capsys):
        code, out, err = run_cli(
            ["msupp-rank", "--json", '{"p":2,"values":[0,1,1,3]}'], capsys
        )
        assert code == 2
        assert "submodularity" in err

    def test_unsupported_dimension_exit_3(self, capsys):
        body = {"polytopes": [{"d": 4, "vertices": [["0", "0", "0", "0"]]}]}
        code, _out, err = run_cli(["mixedvol", "--json", json.dumps(body)], capsys)
        assert code == 3
        assert "dimension" in err

    def test_budget_exit_3(self, capsys):
        ideal = {
            "nvars": 21,
            "p": 1,
            "degrees": [[1]] * 21,
            "generators": [[1, 1] + [0] * 19],
        }
        code, _out, err = run_cli(["multidegree", "--json", json.dumps(ideal)], capsys)
        assert code == 3
        assert "20" in err

    def test_missing_subcommand_exit_2(self, capsys):
        code, out, _err = run_cli([], capsys)
        assert code == 2
        assert out == ""

    def test_bad_permutation_exit_2(self, capsys):
        code, _out, _err = run_cli(["schubert", "--perm", "1,1,2"], capsys)
        assert code == 2

    def test_threads_flag_accepted(self, capsys):
        doc = run_json(["m0n", "--p", "3", "--threads", "4"], capsys)
        assert doc["count"] == 5


class TestConsoleScript:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "multidegree.cli", "m0n", "--p", "5", "--count-only"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "42\n"
