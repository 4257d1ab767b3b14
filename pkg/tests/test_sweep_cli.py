import io
import json
import subprocess
import sys

import pytest

from symb import cli
from symb.errors import NoSignChange
from symb.sweep import (CSV_HEADER, consistency_violations, crossover, evaluate,
                        grid, sweep, to_csv, to_json)


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out)
    return code, out.getvalue()


def test_grid_includes_endpoint():
    assert grid(1, 2, 0.1)[-1] == 2.0
    assert len(grid(1, 100, 0.1)) == 991
    with pytest.raises(ValueError):
        grid(2, 1, 0.1)
    with pytest.raises(ValueError):
        grid(1, 2, 0)


def test_evaluate_row():
    row = evaluate("EB", 4.0, 1e-9)
    assert row.lb_best == 2.0 and row.eh_lb == 2.0
    assert abs(row.ub_best - 2.6916) < 5e-4
    assert row.lagr_ub == 3.0
    assert row.cert.startswith("EkelandHofer(k=2)|MultiFold(")


@pytest.mark.parametrize("problem", ["EB", "EC", "PB", "PC", "PC2n"])
def test_sweep_ordering(problem):
    rows = sweep(problem, 1, 30, 0.25)
    assert not consistency_violations(rows)
    assert [r.a for r in rows] == grid(1, 30, 0.25)


def test_threads_do_not_change_output():
    serial = to_csv(sweep("EB", 2, 12, 0.05, threads=1))
    threaded = to_csv(sweep("EB", 2, 12, 0.05, threads=8))
    assert serial == threaded
    assert serial.splitlines()[0] == CSV_HEADER


def test_json_rows():
    rows = json.loads(to_json(sweep("PC", 1, 3, 1)))
    assert [r["a"] for r in rows] == [1.0, 2.0, 3.0]
    assert rows[-1]["ub_best"] == 2.5  # s_PC(3) = l_PC(3) = 5/2


def test_crossover_value():
    assert abs(crossover("l_EB", "s_EB", 5, 5.5) - 5.1623) < 1e-3
    with pytest.raises(NoSignChange):
        crossover("l_EB", "s_EB", 5.5, 6.2)


def test_cli_bounds_csv_is_byte_stable():
    argv = ["bounds", "--problem", "EC", "--a-from", "1", "--a-to", "5", "--step", "0.5"]
    first, second = run(*argv), run(*argv)
    assert first == second and first[0] == 0
    lines = first[1].splitlines()
    assert lines[0] == CSV_HEADER and len(lines) == 10
    assert lines[1].startswith("1.000000000,")


def test_cli_bounds_json():
    code, text = run("bounds", "--problem", "PB", "--a-from", "10", "--a-to", "10",
                     "--step", "1", "--format", "json")
    assert code == 0 and json.loads(text)[0]["fold_ub"] == 6.0


def test_cli_capacities():
    assert run("capacities", "--ellipsoid", "1,2", "--count", "4") == (0, "1,2,2,3\n")
    assert run("capacities", "--polydisc", "2,5", "--count", "3") == (0, "2,4,6\n")


@pytest.mark.parametrize("source,target,verdict", [
    ("E:1,1.5", "B:1.4", "EXCLUDED (rigidity"),
    ("E:1,4", "B:1.9", "EXCLUDED (Ekeland-Hofer: needs 2)"),
    ("E:1,4", "B:5", "LINEARLY-EMBEDS"),
    ("E:1,4", "B:2.8", "NOT-EXCLUDED"),
    ("P:1,8", "B:3.9", "EXCLUDED (volume: needs 4)"),
])
def test_cli_rigidity(source, target, verdict):
    code, text = run("rigidity", "--source", source, "--target", target)
    assert code == 0 and text.startswith(verdict)


def test_cli_lagrangian():
    assert run("lagrangian", "ii-e", "--ks", "2,2", "--a", "8,8") == (0, "A = 7\n")
    assert run("lagrangian", "i-e", "--ks", "3", "--a", "12") == (0, "A = 4\n")
    code, text = run("lagrangian", "ii-p", "--ks", "2,3", "--a", "6,12")
    assert code == 0 and text == "A = 6,6,6 (max 6)\n"


def test_cli_crossover_and_packing():
    code, text = run("crossover", "--left", "l_EB", "--right", "s_EB",
                     "--lo", "5", "--hi", "5.5", "--tol", "1e-6")
    assert code == 0 and abs(float(text) - 5.1623) < 1e-3
    assert run("packing", "ruled", "--a", "2", "--b", "1") == (0, "0.250000000\n")
    assert run("packing", "jiang", "--a", "1") == (0, "0.500000000\n")


def test_cli_exit_codes():
    assert run("crossover", "--left", "l_EB", "--right", "s_EB", "--lo", "5.5", "--hi", "6.2")[0] == 3
    assert run("bounds", "--problem", "EB", "--a-from", "5", "--a-to", "1", "--step", "1")[0] == 2
    assert run("lagrangian", "i-e", "--ks", "2,4", "--a", "10")[0] == 2
    assert run("capacities", "--ellipsoid", "0,1", "--count", "2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        run("bounds", "--problem", "XX", "--a-from", "1", "--a-to", "2", "--step", "1")
    assert exc.value.code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "symb.cli", "capacities",
                           "--ellipsoid", "1,3", "--count", "3"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "1,2,3\n"
