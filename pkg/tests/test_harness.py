import json
import subprocess
import sys

import jsonschema
import pytest

from posmap_ineq.checkers import CHECKERS
from posmap_ineq.harness import (
    EXIT_FAIL,
    EXIT_OK,
    EXIT_USAGE,
    RECORD_SCHEMAS,
    SuiteConfig,
    UsageError,
    example_values,
    main,
    merge_searches,
    parse_band,
    read_corpus,
    run_repro,
    run_search,
    run_suite,
    write_corpus,
)
from posmap_ineq.generators import suite_instance

EX1_BAND = "1.21,16,20.25,25"


def _validate(records):
    for rec in records:
        jsonschema.validate(rec, RECORD_SCHEMAS[rec["record"]])


def _lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


# ---- repro -----------------------------------------------------------------


def test_repro_values():
    v1, v2 = example_values(1), example_values(2)
    assert v1["geometric"] == pytest.approx(9.7211, abs=1e-4)
    assert v1["unrefined"] == pytest.approx(11.2, abs=0.02)
    assert v1["refined"] == pytest.approx(11.12, abs=0.02)
    assert v2["refined"] == pytest.approx(2.84, abs=0.02)


def test_repro_report():
    rep = run_repro()
    assert rep.exit_code == EXIT_OK
    assert len(rep.records) == 6 and all(r["reproduced"] for r in rep.records)
    _validate(rep.records)
    assert "example,quantity" in rep.to_csv()


# ---- suites ----------------------------------------------------------------


def test_suite_thm5_all_pass():
    rep = run_suite(SuiteConfig(["thm5"], 100, [2, 3], seed=1))
    st = rep.stats["thm5"]
    assert (st.instances, st.passed, st.failed) == (100, 100, 0)
    assert rep.exit_code == EXIT_OK
    _validate(rep.records)


def test_suite_unknown_id():
    with pytest.raises(UsageError):
        SuiteConfig(["thm99"])


@pytest.mark.parametrize("kw", [{"instance_count": 0}, {"dims": [0]}, {"tolerance": -1.0},
                                {"seed": -1}])
def test_suite_config_validation(kw):
    with pytest.raises(UsageError):
        SuiteConfig(["thm5"], **kw)


def test_suite_byte_identical():
    cfg = SuiteConfig(["thm5", "choi", "norms"], 20, [2, 3], seed=5)
    assert run_suite(cfg).to_ldo() == run_suite(cfg).to_ldo()
    assert run_suite(cfg).to_csv() == run_suite(cfg).to_csv()


def test_suite_counts_and_order():
    cfg = SuiteConfig(sorted(CHECKERS), 8, [2, 3], seed=2)
    rep = run_suite(cfg)
    _validate(rep.records)
    for st in rep.stats.values():
        assert st.passed + st.failed == st.instances == 8
    checks = [r for r in rep.records if r["record"] == "check"]
    norm_ids = {"lemma6": "norms", "lemma8": "norms", "lemma50": "norms"}
    groups = [norm_ids.get(r["theorem_id"], r["theorem_id"]) for r in checks]
    assert groups == sorted(groups)
    # within each theorem the lines are sorted by digest
    by_tid = {}
    for r in checks:
        by_tid.setdefault(r["theorem_id"], []).append(r["instance_digest"])
    for digests in by_tid.values():
        assert digests == sorted(digests)


def test_suite_failure_sets_exit_code():
    # the refined Polya-Szego bound fails on part of the random sweep
    rep = run_suite(SuiteConfig(["thm46"], 40, [2, 3], seed=0))
    assert rep.stats["thm46"].failed > 0 and rep.exit_code == EXIT_FAIL
    failing = [r for r in rep.records if r["record"] == "check" and not r["verdict"]]
    assert failing and all("witness" in r for r in failing)
    _validate(rep.records)


def test_suite_parallel_matches_serial():
    cfg = SuiteConfig(["thm5", "ando"], 10, [2, 4], seed=3)
    par = SuiteConfig(["thm5", "ando"], 10, [2, 4], seed=3, workers=2)
    assert run_suite(cfg).to_ldo() == run_suite(par).to_ldo()


# ---- search ----------------------------------------------------------------


def test_search_report():
    rep = run_search(EX1_BAND, 1000, 2)
    rec = rep.records[0]
    _validate(rep.records)
    assert rec["best_ratio"] > 0
    assert rep.exit_code == (EXIT_FAIL if rec["exceeds_bound"] else EXIT_OK)
    assert "catalog" in rec["map_family"]


def test_search_budget_zero():
    with pytest.raises(UsageError):
        run_search(EX1_BAND, 0, 2)


@pytest.mark.parametrize("band", ["1,2,3", "a,b,c,d", "1,4,2,9", "4,1,9,16"])
def test_parse_band_errors(band):
    with pytest.raises(UsageError):
        parse_band(band)


def test_merge_searches():
    a, b = run_search(EX1_BAND, 300, 1), run_search(EX1_BAND, 300, 2)
    merged = merge_searches([a, b])
    _validate([merged])
    assert merged["seeds"] == [1, 2]
    assert merged["best_ratio"] == max(a.records[0]["best_ratio"], b.records[0]["best_ratio"])


# ---- corpus files ----------------------------------------------------------


def test_corpus_round_trip(tmp_path):
    insts = [suite_instance("sandwich", 3, 1, i) for i in range(5)]
    path = tmp_path / "corpus.jsonl"
    write_corpus(insts, path)
    back = read_corpus(path)
    assert [i.digest for i in back] == [i.digest for i in insts]


# ---- command line ----------------------------------------------------------


def test_cli_repro(capsys):
    assert main(["repro"]) == EXIT_OK
    _validate(_lines(capsys.readouterr().out))


def test_cli_verify_ok(capsys):
    code = main(["verify", "--theorems", "thm5,choi", "--count", "10", "--dims", "2,3",
                 "--seed", "1"])
    assert code == EXIT_OK
    recs = _lines(capsys.readouterr().out)
    _validate(recs)
    assert recs[-1]["record"] == "total" and "wall_time_s" not in recs[-1]


def test_cli_verify_fail(capsys):
    assert main(["verify", "--theorems", "thm46", "--count", "40", "--dims", "2"]) == EXIT_FAIL


def test_cli_verify_csv(capsys):
    main(["verify", "--theorems", "thm5", "--count", "5", "--format", "csv"])
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("theorem_id,instances") and out[1].startswith("thm5,5,5,0")


def test_cli_timing_flag(capsys):
    main(["verify", "--theorems", "choi", "--count", "3", "--timing"])
    assert "wall_time_s" in _lines(capsys.readouterr().out)[-1]


@pytest.mark.parametrize("argv", [
    ["verify", "--theorems", "thm99"],
    ["verify", "--count", "0"],
    ["verify", "--dims", "2,x"],
    ["sharpness", "--budget", "0"],
    ["sharpness", "--band", "1,4,2,9"],
    ["frobnicate"],
    ["verify", "--format", "xml"],
])
def test_cli_usage_errors(argv, capsys):
    assert main(argv) == EXIT_USAGE


def test_cli_config_file(tmp_path, capsys):
    conf = tmp_path / "conf.json"
    conf.write_text(json.dumps({"theorems": "choi", "count": 4, "dims": [2], "seed": 9}))
    assert main(["verify", "--config", str(conf)]) == EXIT_OK
    first = _lines(capsys.readouterr().out)
    assert first[0]["config"]["count"] == 4 and first[0]["config"]["seed"] == 9
    # flags override the file
    main(["verify", "--config", str(conf), "--count", "6"])
    assert _lines(capsys.readouterr().out)[0]["config"]["count"] == 6


def test_cli_bad_config(tmp_path, capsys):
    conf = tmp_path / "conf.json"
    conf.write_text(json.dumps({"speed": 3}))
    assert main(["verify", "--config", str(conf)]) == EXIT_USAGE
    conf.write_text("{not json")
    assert main(["verify", "--config", str(conf)]) == EXIT_USAGE


def test_cli_out_file_and_show(tmp_path, capsys):
    out = tmp_path / "report.jsonl"
    corpus = tmp_path / "corpus.jsonl"
    assert main(["verify", "--theorems", "thm5", "--count", "3", "--out", str(out),
                 "--corpus", str(corpus)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    _validate(_lines(out.read_text()))
    assert main(["show", str(corpus)]) == EXIT_OK
    shown = capsys.readouterr().out
    assert shown.count("instance ") == 3 and "eig(A)" in shown
    assert main(["show", str(tmp_path / "missing.jsonl")]) == EXIT_USAGE


def test_cli_fuzz_rounds(capsys):
    assert main(["fuzz", "--theorems", "ando", "--count", "3", "--rounds", "2",
                 "--seed", "4"]) == EXIT_OK
    recs = _lines(capsys.readouterr().out)
    seeds = [r["config"]["seed"] for r in recs if r["record"] == "suite"]
    assert seeds == [4, 5]


def test_cli_sharpness_two_seeds(capsys):
    code = main(["sharpness", "--budget", "200", "--seeds", "1,2"])
    recs = _lines(capsys.readouterr().out)
    _validate(recs)
    assert [r["record"] for r in recs] == ["search", "search", "search_merge"]
    assert code == (EXIT_FAIL if recs[-1]["exceeds_bound"] else EXIT_OK)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "posmap_ineq", "repro", "--format", "csv"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("example,quantity")
