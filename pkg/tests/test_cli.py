"""CLI: every subcommand smoke-tested, byte-stable output, exit codes."""
import json
import subprocess
import sys

import pytest

from fracdense.cli import COMMAND_TABLE, build_parser, main


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "fracdense.cli", *argv],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


class TestCommandTable:
    def test_every_operation_has_one_subcommand(self):
        assert len(set(COMMAND_TABLE.values())) == len(COMMAND_TABLE)

    def test_table_matches_parser(self):
        parser = build_parser()
        sub = next(
            a for a in parser._actions
            if isinstance(a, type(parser._subparsers._group_actions[0]))
        )
        registered = set(sub.choices)
        assert registered == set(COMMAND_TABLE.values())


SMOKE = [
    (["enumerate", "--set", "digit-prefix:1,2,10", "--bound", "25"], "19"),
    (["quotient", "--numer", "explicit-list:1,2", "--denom", "explicit-list:1,2",
      "--bound", "10"], "1/2"),
    (["coverage", "--numer", "ap-integers:0,1", "--grid", "1/2,3/2", "--eps",
      "1/100", "--bound", "100"], "coverage 1"),
    (["brute-gap", "--numer", "digit-prefix:1,2,10", "--lo", "2", "--hi", "5",
      "--bound", "10000"], "hit=False"),
    (["classify", "--a", "1", "--c", "2", "--b", "3"], "dense-with-powers"),
    (["approximate", "--a", "1", "--c", "2", "--b", "3", "--target", "5",
      "--eps", "1/10"], "error="),
    (["gap", "--family", "1,2,10", "--j", "0", "--verify-bound", "100000"],
     "lo=2 hi=5"),
    (["density", "--set", "ap-integers:0,2", "--mode", "natural", "--points",
      "1000"], "ratio=1/2"),
    (["ratio-window", "--u", "ap-integers:0,2", "--v", "explicit-list:10",
      "--window", "1,2"], "12/10"),
    (["finite-v-gap", "--u", "ap-integers:0,1", "--v-values", "2",
      "--target", "1/4"], "finite-V"),
    (["primes-interval", "--class", "1/4", "--lo", "16", "--hi", "32"], "17 29"),
    (["lemma1", "--class", "1/2", "--alpha", "3/2", "--n-lo", "10",
      "--n-hi", "10"], "prime=59"),
    (["dirichlet", "--class", "1/4", "--x", "10000"], "G=1.12"),
    (["theorem7", "--p-class", "1/4", "--q-class", "3/4", "--window", "1,2"],
     "ratio="),
    (["band-classify", "--d", "1", "--x", "2", "--y", "1"], "band=A"),
    (["band-gaps", "--d", "1", "--band", "C", "--l-lo", "0", "--l-hi", "0"],
     "lo=5/3 hi=3"),
    (["ideal-enum", "--d", "1", "--gens", "1,1;0,0", "--bound", "2"], "(1,1)"),
    (["quad-primes", "--d", "1", "--bound", "5"], "(2,1)"),
    (["bertrand-probe", "--d", "1", "--B", "4", "--x-lo", "2", "--x-hi", "100"],
     "ok=True"),
    (["theorem6", "--d", "1", "--B", "2", "--n-max", "3"], "norm=2"),
    (["away-round", "--x=-23/10"], "-3"),
    (["witness", "--d", "1", "--gens", "1,0;0,0", "--gamma", "10,0",
      "--alpha", "1,0", "--beta", "1,0"], "s=(10,0)"),
    (["partition-check", "--d", "1", "--coloring", "norm-parity",
      "--grid-n", "4", "--eps", "1/10", "--bound", "2000"], "dense-side="),
    (["cert-cat", "--cert",
      'gapcert v1 band-C region=annulus lo=5/3 hi=3 params={"band":"C","d":1,"l":0} verified=0'],
     "band-C"),
    (["cert-verify", "--cert",
      'gapcert v1 theorem1-part2 region=interval lo=2 hi=5 params={"a":1,"b":10,"c":2,"j":0} verified=0',
      "--bound", "10000"], "verified=10000"),
]


class TestSmoke:
    @pytest.mark.parametrize("argv,needle", SMOKE, ids=[a[0][0] for a in SMOKE])
    def test_subcommand(self, argv, needle):
        rc, out, err = run_cli(*argv)
        assert rc == 0, err
        assert needle in out

    def test_json_mode_is_versioned(self):
        rc, out, _ = run_cli(
            "approximate", "--a", "1", "--c", "2", "--b", "3",
            "--target", "5", "--eps", "1/10", "--json",
        )
        payload = json.loads(out)
        assert payload["v"] == 1
        assert payload["op"] == "approximate"
        assert payload["params"]["target"] == "5"

    def test_csv_mode_has_header(self):
        rc, out, _ = run_cli(
            "lemma1", "--class", "1/4", "--alpha", "2", "--n-lo", "4",
            "--n-hi", "6", "--csv",
        )
        lines = out.strip().splitlines()
        assert lines[0] == "n,least_prime"
        assert len(lines) == 4


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["theorem7", "--p-class", "1/4", "--q-class", "3/4",
             "--window", "1,2", "--json"],
            ["theorem6", "--d", "1", "--B", "2", "--n-max", "4", "--json"],
            ["coverage", "--numer", "digit-prefix-with-powers:1,2,3",
             "--grid", "1/2,2,7/2", "--eps", "1/50", "--bound", "1000", "--json"],
        ],
    )
    def test_byte_stable(self, argv):
        rc1, out1, _ = run_cli(*argv)
        rc2, out2, _ = run_cli(*argv)
        assert rc1 == rc2 == 0
        assert out1 == out2


class TestExitCodes:
    def test_parameter_error(self):
        rc, _, err = run_cli("classify", "--a", "3", "--c", "3", "--b", "10")
        assert rc == 1
        assert "error" in err

    def test_float_rejected(self):
        rc, _, err = run_cli(
            "approximate", "--a", "1", "--c", "2", "--b", "3",
            "--target", "5.0", "--eps", "1/10",
        )
        assert rc == 1
        assert "float" in err

    def test_bounded_search_exhausted(self):
        rc, _, err = run_cli(
            "ratio-window", "--u", "explicit-list:1", "--v", "explicit-list:1",
            "--window", "5,6", "--bound", "10",
        )
        assert rc == 2

    def test_certified_family_refused(self):
        rc, _, err = run_cli(
            "approximate", "--a", "1", "--c", "2", "--b", "10",
            "--target", "3", "--eps", "1/10",
        )
        assert rc == 1
        assert "gap_certificate" in err

    def test_in_process_main_matches(self):
        assert main(["classify", "--a", "1", "--c", "2", "--b", "3"]) == 0
