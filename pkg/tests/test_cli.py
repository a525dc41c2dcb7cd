import io
import json

import pytest

from transfact.cli import RunConfig, build_parser, config_from_args, main, run
from transfact.core import Partition


def call(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_count_transitive_example(capsys):
    code, out = call(capsys, "count-transitive", "--target", "[1,1,1]", "--factors", "[3]", "[3]")
    assert code == 0
    assert out.out.strip() == "2"


def test_hurwitz_example(capsys):
    code, out = call(capsys, "hurwitz", "--alpha", "[2,1]", "--genus", "0", "--brute")
    assert code == 0
    lines = out.out.splitlines()
    assert lines[0] == "4"
    assert "# brute: 4" in lines
    assert "# agreement: true" in lines


def test_b_scan_json(capsys):
    code, out = call(capsys, "b-scan", "--max-weight", "4", "--format", "json")
    data = json.loads(out.out)
    assert code == 0
    assert data["agreement"] is True
    assert data["total"] == len(data["records"]) == 1 + 8 + 27 + 125


def test_json_schema_and_exact_strings(capsys):
    code, out = call(capsys, "double-hurwitz", "--alpha", "[3]", "--beta", "[3]",
                     "--format", "json", "--brute")
    data = json.loads(out.out)
    assert set(data) == {"query", "value", "routes", "agreement"}
    assert data["value"] == "1/3"
    assert [r["value"] for r in data["routes"]] == ["1/3", "1/3"]


def test_csv_has_header(capsys):
    code, out = call(capsys, "joincut-table", "--max-weight", "3", "--format", "csv")
    rows = out.out.splitlines()
    assert rows[0] == "partition,genus,value"
    assert '"[2,1]",0,4' in rows


def test_malformed_partition_is_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        main(["character", "--lam", "[2,x]", "--theta", "[3]"])
    assert e.value.code == 2


def test_weight_mismatch_is_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        main(["count-fact", "--target", "[3]", "--factors", "[2]"])
    assert e.value.code == 2


def test_budget_exceeded_exit_2(capsys):
    code, out = call(capsys, "count-fact", "--target", "[6]", "--factors", "[2,2,2]", "[3,3]",
                     "--brute", "--budget", "10")
    assert code == 2
    assert "budget" in out.err


def test_validate_map_rejection_exit_1(capsys, torus):
    t = torus["garbled"]
    code, out = call(capsys, "validate-map", "--nu", t["nu"], "--eps", t["eps"], "--phi", t["phi"],
                     "--format", "json")
    assert code == 1
    assert json.loads(out.out)["reason"] == "parse"
    t = torus["repaired"]
    code, out = call(capsys, "validate-map", "--nu", t["nu"], "--eps", t["eps"], "--phi", t["phi"])
    assert code == 0 and out.out.strip() == "1"


def test_psi_coeff(capsys):
    code, out = call(capsys, "psi-coeff", "--lam", "[3]", "--mu", "[3]", "--tau", "[3]", "--format", "json")
    data = json.loads(out.out)
    assert data["b_polynomial"] == ["1", "1", "2"]
    assert data["at_alpha_1"] == "1"


def test_maps_routes(capsys):
    code, out = call(capsys, "maps", "--lam", "[2,2]", "--mu", "[3,1]", "--brute", "--series",
                     "--format", "json")
    data = json.loads(out.out)
    assert code == 0 and data["agreement"]
    assert len(data["routes"]) == 3


def test_lagrange_check(capsys):
    code, out = call(capsys, "lagrange-check", "--max-weight", "5")
    assert code == 0 and out.out.strip() == "true"


def test_disagreement_exits_1(monkeypatch):
    from transfact import hurwitz
    monkeypatch.setattr(hurwitz, "hurwitz_char", lambda a, g=0: 99)
    cfg = RunConfig("hurwitz", partitions={"alpha": Partition((3,))})
    assert run(cfg, io.StringIO()) == 1


def test_runconfig_invariants():
    with pytest.raises(ValueError):
        RunConfig("b-scan", max_weight=0)
    with pytest.raises(ValueError):
        RunConfig("b-scan", workers=0)


def test_warm_cache_is_deterministic(tmp_path):
    argv = ["b-scan", "--max-weight", "3", "--format", "json", "--cache-dir", str(tmp_path)]
    outs = []
    for _ in range(3):
        buf = io.StringIO()
        run(config_from_args(build_parser().parse_args(argv)), buf)
        outs.append(buf.getvalue())
    assert outs[0] == outs[1] == outs[2]
    assert (tmp_path / "transfact-cache.json").exists()


def test_env_var_cache_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("TRANSFACT_CACHE_DIR", str(tmp_path))
    call(capsys, "character", "--lam", "[2,1]", "--theta", "[3]")
    assert (tmp_path / "transfact-cache.json").exists()
