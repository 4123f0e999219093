from __future__ import annotations

import io
import json

import pytest

from enumeration.distribution import DistributionTable
from errors import ConfigError
from main import main, render
from run_log import FeatureLog
from settings import RunConfig, load_settings
from table_store import table_key


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    return code, json.loads(text) if text else None


@pytest.mark.usefixtures("isolated_settings")
class TestCommands:
    def test_classify(self):
        assert run_json("classify", "-p", "+-,-+") == (0, {"avoidable": True, "rank": 2})
        assert run_json("classify", "-p", "++,+-") == (0, {"avoidable": False, "rank": None})
        assert run_json("classify", "-p", "", "--d", "3") == (0, {"avoidable": False, "rank": None})

    def test_rank_reports_a_cover(self):
        code, payload = run_json("rank", "-p", "++-,+-+,-++,+++")
        assert code == 0
        assert payload["rank"] == 3
        assert payload["cover"] == ["++-", "+-+", "-++"]

    def test_avoider_and_witness(self):
        code, payload = run_json("avoider", "-p", "+-,-+", "--length", "6")
        assert code == 0 and payload["n"] == 6 and payload["d"] == 2
        code, payload = run_json("avoider", "-p", "+-,-+", "-p", "++,--", "--length", "5")
        assert code == 0 and payload["n"] >= 5
        code, payload = run_json("witness", "-p", "+-,-+", "--length", "4")
        assert code == 0 and payload["perm"] == "1 2 3 4"

    def test_inflate(self):
        code, payload = run_json("inflate", "--perm", "12; 12", "--by", "21; 21", "--index", "1")
        assert payload["perm"] == "2 1 3; 2 1 3"
        code, payload = run_json("inflate", "--perm", "12", "--by", "12", "--all")
        assert payload["perm"] == "1 2 3 4"

    def test_enumerate_and_cache(self, isolated_settings):
        argv = ("enumerate", "-p", "+-,-+", "--n", "3")
        assert run_json(*argv) == (0, {"d": 2, "n": 3, "counts": ["3", "2", "0", "1"]})
        cached = list((isolated_settings / "cache").rglob("*.json"))
        assert len(cached) == 1
        assert cached[0].stem == table_key("smp", "+-,-+", 2, 3)
        assert run_json(*argv) == (0, {"d": 2, "n": 3, "counts": ["3", "2", "0", "1"]})
        assert list((isolated_settings / "cache").rglob("*.json")) == cached
        run("enumerate", "-p", "++", "--n", "2", "--no-cache")
        assert len(list((isolated_settings / "cache").rglob("*.json"))) == 1

    def test_enumerate_mesh_and_marked(self):
        code, payload = run_json("enumerate", "--kind", "mesh", "-p", '{"T": "12"}', "--n", "3")
        assert payload["counts"] == ["1", "2", "2", "1"]
        code, payload = run_json("enumerate", "--kind", "marked", "-p", "+++:1", "--n", "3")
        assert payload["counts"][0] == "17"

    def test_distribution(self):
        code, payload = run_json("distribution", "-p", "++", "--n", "3")
        assert code == 0
        assert [table["counts"] for table in payload["tables"]] == [
            ["1"],
            ["0", "1"],
            ["0", "1", "1"],
            ["0", "2", "3", "1"],
        ]

    def test_output_formats(self):
        code, text = run("enumerate", "-p", "+-,-+", "--n", "3", "--format", "csv")
        assert text == "k,count\n0,3\n1,2\n2,0\n3,1\n"
        code, text = run("enumerate", "-p", "+-,-+", "--n", "3", "--format", "text")
        assert text.splitlines()[:2] == ["k count", "0 3"]
        code, text = run("distribution", "-p", "++", "--n", "1", "--format", "csv")
        assert text == "n,k,count\n0,0,1\n1,0,0\n1,1,1\n"

    def test_verify(self):
        code, payload = run_json("verify", "--case", "f3d", "--d", "3")
        assert code == 0
        assert payload["passed"] is True
        code, payload = run_json("verify", "--case", "plus-antipodal", "--d", "2", "--n", "4")
        assert code == 0 and payload["mismatches"] == []

    def test_reduce(self):
        assert run_json("reduce", "R", "--d", "3", "--n", "2") == (0, {"R": "3", "d": 3, "n": 2})
        code, payload = run_json("reduce", "projective", "-p", "++-,+++", "--dir", "3", "--n", "3")
        assert code == 0 and payload["passed"] is True
        code, payload = run_json("reduce", "hyperplane", "-p", "+**,-++", "--dir", "1", "--n", "3")
        assert code == 0 and payload["formula"] == payload["direct"]

    def test_bijection(self):
        code, payload = run_json("bijection", "--string", "210")
        assert payload["rows"] == [[2, 1, 3], [1, 3, 2]]
        assert run_json("bijection", "--perm", "231") == (0, {"string": "01"})
        assert run_json("bijection", "--list", "--d", "2") == (0, ["01", "10"])

    @pytest.mark.parametrize(
        "argv, code",
        [
            (("avoider", "-p", "++", "--length", "3"), 1),
            (("witness", "-p", "++,+-", "--length", "3"), 1),
            (("classify", "-p", "++,++"), 2),
            (("classify", "-p", "+x"), 2),
            (("classify", "-p", '{"d": 2'), 2),
            (("classify", "-p", '{"columns": ["+-"]}'), 2),
            (("classify", "-p", "+,-"), 2),
            (("enumerate", "--kind", "mesh", "-p", '{"shading": []}', "--n", "2"), 2),
            (("inflate", "--perm", '{"d": 2}', "--by", "12", "--index", "1"), 2),
            (("classify",), 2),
            (("verify", "--case", "9", "--d", "2"), 2),
            (("reduce", "R", "--n", "2"), 2),
            (("bijection", "--string", "0a1"), 2),
            (("bijection", "--string", "022"), 1),
            (("enumerate", "-p", "+-,-+", "--n", "6", "--budget", "100"), 3),
        ],
    )
    def test_exit_codes(self, argv, code, capsys):
        assert run(*argv)[0] == code
        if code in (1, 3):
            assert "error" in json.loads(capsys.readouterr().err)


def test_render_plain_payloads():
    assert render({"b": 1, "a": [1]}, "text") == 'a [1]\nb 1\n'
    assert render(["01", "10"], "csv") == "01\n10\n"
    assert json.loads(render({"passed": True}, "json")) == {"passed": True}


def test_settings_layers(tmp_path):
    path = tmp_path / "settings.json"
    path.write_text(json.dumps({"budget": 5000, "workers": 2, "output": "csv", "cache_dir": str(tmp_path / "c")}))
    config = load_settings(path, environ={})
    assert (config.budget, config.workers, config.output) == (5000, 2, "csv")
    assert config.cache_dir == tmp_path / "c"
    config = load_settings(path, environ={"MESHPERM_WORKERS": "3", "MESHPERM_BUDGET": "1e6"})
    assert (config.workers, config.budget) == (3, 10 ** 6)
    assert config.with_overrides(workers=None, budget=7).budget == 7


def test_settings_fallbacks_and_errors(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert load_settings(broken, environ={}) == RunConfig()
    assert load_settings(tmp_path / "missing.json", environ={}) == RunConfig()
    with pytest.raises(ConfigError):
        load_settings(broken, environ={"MESHPERM_WORKERS": "many"})
    with pytest.raises(ConfigError):
        RunConfig().with_overrides(workers=0)
    with pytest.raises(ConfigError):
        RunConfig().with_overrides(output="xml")


def test_feature_log_rotation(tmp_path):
    seen = []
    log = FeatureLog(tmp_path / "logs", enabled=True, max_bytes=40, sink=seen.append)
    for index in range(4):
        log.feature("Enumerate Run", f"message {index}")
    current = tmp_path / "logs" / "enumerate_run.log"
    assert current.exists()
    assert (tmp_path / "logs" / "enumerate_run.log.1").exists()
    assert len(seen) == 4 and "[Enumerate Run] message 3" in seen[-1]
    assert "message 3" in current.read_text()


def test_feature_log_disabled_keeps_lines_only(tmp_path):
    log = FeatureLog(tmp_path / "logs", enabled=False)
    log.for_feature("cache")("hit")
    assert log.lines[0].endswith("[cache] hit")
    assert not (tmp_path / "logs").exists()


def test_table_store_round_trip(store):
    table = DistributionTable("smp", "+-,-+", 2, 3, (3, 2, 0, 1))
    assert store.load("smp", "+-,-+", 2, 3) is None
    path = store.save(table)
    assert path.parent.name == path.stem[:2]
    assert store.load("smp", "+-,-+", 2, 3) == table
    calls = []
    assert store.get_or_compute("smp", "+-,-+", 2, 3, lambda: calls.append(1) or table) == table
    assert calls == []


def test_table_store_ignores_bad_entries(store):
    path = store.path_for("smp", "++", 2, 2)
    path.parent.mkdir(parents=True)
    path.write_text("{broken")
    assert store.load("smp", "++", 2, 2) is None
    other = DistributionTable("smp", "+-", 2, 2, (1, 1, 0))
    path.write_text(json.dumps(other.to_dict()))
    assert store.load("smp", "++", 2, 2) is None
    fresh = DistributionTable("smp", "++", 2, 2, (0, 1, 1))
    assert store.get_or_compute("smp", "++", 2, 2, lambda: fresh) == fresh
    assert store.load("smp", "++", 2, 2) == fresh
