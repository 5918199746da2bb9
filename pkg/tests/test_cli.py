import json

from knx.cli import main
from knx.problemfile import load_problem, parse_problem, render_problem

from conftest import GOLDEN_DIR, GOLDEN_FILES


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_strata_cherednik_n2(capsys):
    code, out, err = run(capsys, "strata", GOLDEN_DIR / "cherednik_n2.json")
    assert code == 0
    assert out.count("beta=") == 2
    assert "semistable locus nonempty: yes" in out


def test_strata_projective(capsys):
    code, out, _ = run(capsys, "strata", GOLDEN_DIR / "proj_n2.json")
    assert code == 0
    assert out.count("beta=") == 1
    assert "beta=(-1)" in out


def test_strata_json_report(capsys):
    code, out, _ = run(capsys, "strata", GOLDEN_DIR / "torus_example_up.json", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["command"] == "strata"
    assert len(data["strata"]) == 2
    assert data["semistable_nonempty"] is False


def test_check_exit_codes(capsys):
    code, out, _ = run(capsys, "check", GOLDEN_DIR / "cherednik_n2_t_3_4.json")
    assert code == 0 and "Certified" in out
    code, out, _ = run(capsys, "check", GOLDEN_DIR / "cherednik_n2_t_3_2.json")
    assert code == 1 and "Violated" in out
    assert out.count("VIOLATED") == 2


def test_forbidden_command(capsys):
    code, out, _ = run(capsys, "forbidden", GOLDEN_DIR / "cherednik_n2.json")
    assert code == 0
    assert "1/2 + (1/2)*Z>=0" in out


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", GOLDEN_DIR / "proj_n1.json")
    assert code == 0
    assert "all subsets agree" in out


def test_schema_rejects_empty_weights(tmp_path, capsys):
    bad = tmp_path / "empty.json"
    bad.write_text(json.dumps({
        "knx_version": 1,
        "group": {"type": "torus", "rank": 1},
        "weights": [],
        "chi": ["1"],
    }))
    code, _, err = run(capsys, "strata", bad)
    assert code == 2
    assert "schema error" in err


def test_schema_rejects_float_rational(tmp_path, capsys):
    bad = tmp_path / "float.json"
    bad.write_text(json.dumps({
        "knx_version": 1,
        "group": {"type": "torus", "rank": 1},
        "weights": [["1.5"]],
        "chi": ["1"],
    }))
    code, _, err = run(capsys, "check", bad)
    assert code == 2


def test_schema_rejects_bare_numbers(tmp_path, capsys):
    bad = tmp_path / "number.json"
    bad.write_text(json.dumps({
        "knx_version": 1,
        "group": {"type": "torus", "rank": 1},
        "weights": [[1]],
        "chi": ["1"],
    }))
    code, _, _ = run(capsys, "strata", bad)
    assert code == 2


def test_schema_rejects_unknown_keys(tmp_path, capsys):
    bad = tmp_path / "extra.json"
    bad.write_text(json.dumps({
        "knx_version": 1,
        "group": {"type": "torus", "rank": 1},
        "weights": [["1"]],
        "chi": ["1"],
        "surprise": True,
    }))
    code, _, _ = run(capsys, "strata", bad)
    assert code == 2


def test_schema_requires_version(tmp_path, capsys):
    bad = tmp_path / "nover.json"
    bad.write_text(json.dumps({
        "group": {"type": "torus", "rank": 1},
        "weights": [["1"]],
        "chi": ["1"],
    }))
    code, _, _ = run(capsys, "strata", bad)
    assert code == 2


def test_check_requires_fixed_c(capsys):
    code, _, err = run(capsys, "check", GOLDEN_DIR / "torus_example_up.json")
    assert code == 2


def test_cap_exceeded_exit(tmp_path, capsys):
    big = tmp_path / "big.json"
    big.write_text(json.dumps({
        "knx_version": 1,
        "group": {"type": "torus", "rank": 1},
        "weights": [[str(k)] for k in range(30)],
        "mode": "raw",
        "chi": ["1"],
    }))
    code, _, err = run(capsys, "strata", big)
    assert code == 3
    # raising the cap makes it work
    code, _, _ = run(capsys, "strata", big, "--max-weights", "80")
    assert code == 0


def test_orientation_flag_overrides(capsys):
    code, out, _ = run(
        capsys, "strata", GOLDEN_DIR / "proj_n1.json", "--orientation", "positive"
    )
    assert code == 0
    assert "beta=(1)" in out


def test_problem_files_roundtrip():
    for path in GOLDEN_FILES:
        problem = load_problem(str(path))
        again = parse_problem(render_problem(problem))
        assert render_problem(again) == render_problem(problem)
        assert again == problem


def test_missing_file(capsys):
    code, _, err = run(capsys, "strata", "/nonexistent/file.json")
    assert code == 2


def test_strictness_flag_parses_and_checks(tmp_path, capsys):
    data = json.loads((GOLDEN_DIR / "proj_n1.json").read_text())
    data["strictness"] = "full_V"
    f = tmp_path / "strict.json"
    f.write_text(json.dumps(data))
    code, out, _ = run(capsys, "check", f)
    assert code == 0  # torus: both strictness variants agree
    assert "strictness=full_V" in out


def test_custom_group_problem(tmp_path, capsys):
    custom = tmp_path / "custom.json"
    custom.write_text(json.dumps({
        "knx_version": 1,
        "group": {
            "type": "custom",
            "rank": 2,
            "roots": [["1", "-1"], ["-1", "1"]],
            "simple_roots": [["1", "-1"]],
            "form": [["1", "0"], ["0", "1"]],
            "label": "gl2-by-hand",
        },
        "weights": [["0", "0"], ["1", "-1"], ["-1", "1"], ["0", "0"], ["1", "0"], ["0", "1"]],
        "mode": "cotangent",
        "chi": ["1", "1"],
        "c": {"base": ["3/2", "3/2"]},
        "orientation": "positive",
    }))
    code, out, _ = run(capsys, "check", custom)
    assert code == 1  # same violated verdict as the gl(2) preset file
    assert out.count("VIOLATED") == 2


def test_invalid_custom_group_rejected(tmp_path, capsys):
    custom = tmp_path / "badgroup.json"
    custom.write_text(json.dumps({
        "knx_version": 1,
        "group": {
            "type": "custom",
            "rank": 2,
            "roots": [["1", "-1"]],
            "simple_roots": [["1", "-1"]],
        },
        "weights": [["1", "0"]],
        "chi": ["1", "1"],
    }))
    code, _, err = run(capsys, "strata", custom)
    assert code == 2  # roots not closed under negation
