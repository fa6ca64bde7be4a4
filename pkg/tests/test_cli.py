import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from moment_forge.cli import main, thread_cap, UsageError

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_no_arguments_is_usage_error(capsys):
    code, _, err = run(capsys)
    assert code == 2 and "usage" in err


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve-basis", "--bogus"])
    assert exc.value.code == 2


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_solve_basis_text(capsys):
    code, out, _ = run(capsys, "solve-basis")
    assert code == 0
    lines = out.splitlines()
    assert lines[2] == "Q2 = 1*z^-2 + (20+8*sqrt(5))*z^1 + (-9-4*sqrt(5))*z^2"
    assert len(lines) == 5


def test_solve_basis_matches_golden(capsys):
    code, out, _ = run(capsys, "solve-basis", "--json")
    assert code == 0
    assert json.loads(out) == json.loads((GOLDEN / "solve_basis.json").read_text())


def test_verify_moments(capsys):
    code, out, _ = run(capsys, "verify-moments", "--j", "4")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1
    assert data["bound"] == 89 and data["all_zero"] and "first_nonzero_index" not in data
    code, out, _ = run(capsys, "verify-moments", "--laurent", "z+z^2")
    data = json.loads(out)
    assert not data["all_zero"] and data["first_nonzero_index"] == 1


def test_verify_moments_bad_j(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify-moments", "--j", "7"])
    assert exc.value.code == 2


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "(z^2+1)/z + 3")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1
    assert data["r0"] == ["3"] and data["r1"] == ["1"]
    assert data["remainder"] == [] and data["is_solution"] is True
    code, out, _ = run(capsys, "decompose", "z^-1")
    data = json.loads(out)
    assert data["is_solution"] is False and data["remainder"] == ["0", "-1"]


def test_decompose_parse_error(capsys):
    code, _, err = run(capsys, "decompose", "1/(z+1)")
    assert code == 2 and "cannot parse" in err


def test_check_group(capsys):
    code, out, _ = run(capsys, "check-group")
    data = json.loads(out)
    assert data["order"] == 120 and data["primitive"] and data["block_systems"] == []
    assert data["generators"]["alpha"] == "(1,5)(2,8)(4,7)"
    assert data["subspaces"]["dimensions"] == [1, 4, 5]


def test_count_maps(capsys):
    code, out, _ = run(capsys, "count-maps")
    data = json.loads(out)
    assert data["count"] == 25401600 and data["count_over_n_factorial"] == "7"
    assert data["classes"] == [[6, 3, 1], [2, 2, 2, 1, 1, 1, 1], [5, 5]]
    code, out, _ = run(capsys, "count-maps", "--classes", "2,1; 1,1,1; 3")
    assert json.loads(out)["count"] == 0
    code, _, _ = run(capsys, "count-maps", "--classes", "2,x")
    assert code == 2


@pytest.mark.parametrize("label", ["F1", "F2", "L"])
def test_verify_belyi_labels(capsys, label):
    code, out, _ = run(capsys, "verify-belyi", "--function", label)
    data = json.loads(out)
    assert data["certified"] and data["profile"]["over_zero"] == [6, 3, 1]


def test_verify_belyi_coeffs(capsys):
    code, out, _ = run(capsys, "verify-belyi", "--coeffs", "50000/27", "4", "-1")
    assert json.loads(out)["certified"]
    code, out, _ = run(capsys, "verify-belyi", "--coeffs", "1", "0", "0")
    data = json.loads(out)
    assert code == 0 and not data["certified"] and "error" in data
    code, _, _ = run(capsys, "verify-belyi", "--coeffs", "1", "q", "0")
    assert code == 2


def test_render_dessin(capsys, tmp_path):
    svg = tmp_path / "d.svg"
    code, out, _ = run(capsys, "render-dessin", "--function", "F1", "--samples", "200", "--out", str(svg))
    data = json.loads(out)
    assert code == 0 and data["arcs"] == 10 and data["consistent"]
    assert svg.read_text().startswith("<svg")


def test_output_is_deterministic(capsys):
    outs = []
    for _ in range(2):
        run(capsys, "check-group")
        outs.append(run(capsys, "count-maps")[1])
    assert outs[0] == outs[1]


def test_reproduce_subset(capsys):
    code, out, _ = run(capsys, "reproduce-all", "--only", "3,4,5")
    assert code == 0 and "3/3 passed" in out
    code, out, _ = run(capsys, "reproduce-all", "--only", "1", "--json")
    data = json.loads(out)
    assert data["all_passed"] and data["criteria"][0]["number"] == 1
    code, _, err = run(capsys, "reproduce-all", "--only", "99")
    assert code == 2


def test_reproduce_failure_exit_code(capsys, monkeypatch):
    from moment_forge import reproduce

    def broken():
        raise reproduce._Failed("forced")

    monkeypatch.setattr(reproduce, "CHECKS", [(1, "forced", broken)])
    code, out, _ = run(capsys, "reproduce-all")
    assert code == 1 and "FAIL" in out


def test_thread_cap(monkeypatch):
    monkeypatch.setenv("MOMENT_FORGE_THREADS", "1")
    assert thread_cap() == 1
    monkeypatch.setenv("MOMENT_FORGE_THREADS", "lots")
    with pytest.raises(UsageError):
        thread_cap()
    monkeypatch.delenv("MOMENT_FORGE_THREADS")
    assert thread_cap() >= 1


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "moment_forge", "count-maps"], capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["count"] == 25401600
