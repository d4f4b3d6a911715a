# -*- coding: utf-8 -*-
"""Smoke tests for the command line interface"""

import argparse
import csv
import json
import warnings

import pytest

from ifcavity.apps import ifcavity_cli
from ifcavity.apps.common import EXIT_INFEASIBLE, EXIT_INVALID, EXIT_OK, add_common_arguments
from ifcavity.exceptions import IfcWarning
from ifcavity.runfiles import read_manifest, verify_manifest

from .conftest import data_path


def _run(*argv):
    """Run the command line interface with all warnings recorded"""
    with warnings.catch_warnings(record=True) as record:
        warnings.simplefilter("always")
        result = ifcavity_cli.main(list(argv))
    return result, [r for r in record if issubclass(r.category, IfcWarning)]


def _read_csv(path):
    with open(path, "rt", newline="") as input_file:
        return list(csv.DictReader(input_file))


def test_coeffs(tmp_path, capsys):
    result, record = _run("coeffs", "--config", data_path("fig2.txt"), "--out", str(tmp_path))

    assert EXIT_OK == result
    assert [] == record
    assert capsys.readouterr().out.startswith("state,R,T,A,eta\n")
    rows = _read_csv(tmp_path / "coeffs.csv")
    assert ["absent", "present"] == [row["state"] for row in rows]
    assert float(rows[1]["A"]) == pytest.approx(0.018911, rel=1e-4)
    bounds = {row["quantity"]: row["value"] for row in _read_csv(tmp_path / "coeffs.bounds.csv")}
    assert 21500000.0 == float(bounds["max_photon_flux_per_s"])
    assert "true" == bounds["flux_within_bound"]

    manifest = read_manifest(tmp_path / "coeffs.manifest.json")
    assert "coeffs" == manifest.command
    assert {"coeffs.csv", "coeffs.bounds.csv", "coeffs.config.txt"} == set(manifest.outputs)
    assert verify_manifest(manifest, tmp_path)


def test_coeffs_optomechanics(tmp_path):
    argv = ["coeffs", "-q", "-c", data_path("optomechanics.txt"), "-o", str(tmp_path)]
    result, _ = _run(*argv)

    assert EXIT_OK == result
    rows = _read_csv(tmp_path / "coeffs.steady_state.csv")
    assert 1 == len(rows)
    assert "1" == rows[0]["branch_count"]
    bounds = {row["quantity"]: row["value"] for row in _read_csv(tmp_path / "coeffs.bounds.csv")}
    assert "g0_max_rad_s" in bounds


def test_coeffs_json(tmp_path):
    result, _ = _run("coeffs", "-q", "--format", "json", "-o", str(tmp_path))

    assert EXIT_OK == result
    with open(tmp_path / "coeffs.json", "rt") as input_file:
        records = json.load(input_file)
    assert "present" == records[1]["state"]


def test_sweep_xi(tmp_path):
    argv = ["sweep-xi", "-c", data_path("fig2.txt"), "-o", str(tmp_path), "--plane-count", "5"]
    result, _ = _run(*argv)

    assert EXIT_OK == result
    rows = _read_csv(tmp_path / "sweep-xi.csv")
    assert 1000 == len(rows)
    assert ["xi", "n0", "eta_tot", "snr1", "snr2", "zeta1", "zeta2"] == list(rows[0])
    assert 2500 == len(_read_csv(tmp_path / "sweep-xi.plane.csv"))
    manifest = read_manifest(tmp_path / "sweep-xi.manifest.json")
    assert "sweep-xi.plane.csv" in manifest.outputs


def test_optimize(tmp_path):
    result, _ = _run("optimize", "-c", data_path("fig2.txt"), "-o", str(tmp_path))

    assert EXIT_OK == result
    with open(tmp_path / "optimize.json", "rt") as input_file:
        records = json.load(input_file)
    assert 4 == len(records)
    conditional = {r["port"]: r for r in records if r["search"] == "conditional"}
    assert conditional["transmission"]["xi_star"] == pytest.approx(0.03, abs=0.02)
    assert conditional["reflection"]["xi_star"] == pytest.approx(0.4, abs=0.05)
    assert all(r["feasible"] for r in records)
    # The photon flux of the configuration gives the measurement time
    for record in records:
        assert record["measurement_time_s"] == pytest.approx(record["n0_star"] / 1e6)


def test_optimize_infeasible(tmp_path):
    result, _ = _run("optimize", "-c", data_path("infeasible.txt"), "-o", str(tmp_path))

    assert EXIT_INFEASIBLE == result
    with open(tmp_path / "optimize.json", "rt") as input_file:
        records = json.load(input_file)
    assert [True, False, True, False] == [r["feasible"] for r in records]
    assert (tmp_path / "optimize.manifest.json").exists()


def test_param_map(tmp_path):
    result, _ = _run("param-map", "-c", data_path("fig2.txt"), "-o", str(tmp_path))

    assert EXIT_OK == result
    for port in ("reflection", "transmission"):
        for value in ("xi_star", "zeta_star"):
            rows = _read_csv(tmp_path / "param-map.{}.{}.csv".format(port, value))
            assert 9 == len(rows)
            assert ["kappa3", "deltap", "value"] == list(rows[0])


def test_param_map_infeasible(tmp_path):
    argv = ["param-map", "--conditional", "-c", data_path("infeasible.txt"), "-o", str(tmp_path)]
    result, _ = _run(*argv)
    assert EXIT_INFEASIBLE == result


@pytest.mark.parametrize(
    "command,flags,section,key,recorded",
    [
        ("param-map", ["--conditional"], "PARAMETER MAP", "conditional", "true"),
        ("sweep-xi", ["--plane-count", "5"], "SWEEP XI", "plane_count", "5"),
    ],
)
def test_rerun_from_recorded_config(tmp_path, command, flags, section, key, recorded):
    first = tmp_path / "first"
    result, _ = _run(command, *flags, "-c", data_path("fig2.txt"), "-o", str(first))
    manifest = read_manifest(first / "{}.manifest.json".format(command))
    assert [recorded] == manifest.config[section][key]

    # The recorded configuration alone reproduces the run
    recorded_config = str(first / "{}.config.txt".format(command))
    second = tmp_path / "second"
    assert result == _run(command, "-c", recorded_config, "-o", str(second))[0]
    assert manifest.outputs == read_manifest(second / "{}.manifest.json".format(command)).outputs


def test_security_curve(tmp_path):
    result, _ = _run("security-curve", "-c", data_path("fig2.txt"), "-o", str(tmp_path))

    assert EXIT_OK == result
    rows = _read_csv(tmp_path / "security-curve.csv")
    assert 200 == len(rows)
    assert ["port", "xi", "snr", "n0", "eta_tot"] == list(rows[0])
    for port in ("reflection", "transmission"):
        values = [float(row["eta_tot"]) for row in rows if row["port"] == port]
        assert 1.0 == values[0]
        assert all(later <= earlier for earlier, later in zip(values, values[1:]))


def test_montecarlo(tmp_path):
    result, _ = _run("montecarlo", "-c", data_path("fig2.txt"), "-o", str(tmp_path))

    assert EXIT_OK == result
    with open(tmp_path / "montecarlo.json", "rt") as input_file:
        records = json.load(input_file)
    assert 4 == len(records)
    for record in records:
        assert 100000 == record["trials"]
        assert record["snr_rel_deviation"] < 0.015
        assert abs(record["survival_z"]) <= 3.0
    manifest = read_manifest(tmp_path / "montecarlo.manifest.json")
    assert (20240101,) == manifest.seeds
    assert "PCG64" == manifest.random_generator


def test_montecarlo_reproducible(tmp_path):
    for name in ("first", "second"):
        argv = ["montecarlo", "-c", data_path("small_montecarlo.txt"), "-o", str(tmp_path / name)]
        assert EXIT_OK == _run(*argv)[0]

    for name in ("montecarlo.json", "montecarlo.config.txt"):
        first = (tmp_path / "first" / name).read_bytes()
        assert first == (tmp_path / "second" / name).read_bytes()


def test_montecarlo_seed_override(tmp_path):
    argv = ["montecarlo", "-c", data_path("small_montecarlo.txt"), "-o", str(tmp_path)]
    assert EXIT_OK == _run(*argv, "--seed", "8", "--threads", "3")[0]

    manifest = read_manifest(tmp_path / "montecarlo.manifest.json")
    assert (8,) == manifest.seeds
    assert ["3"] == manifest.config["RUN"]["threads"]


def test_output_dir_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("IFCAVITY_OUT_DIR", str(tmp_path / "env"))
    assert EXIT_OK == _run("coeffs", "-q")[0]
    assert (tmp_path / "env" / "coeffs.manifest.json").exists()

    # The command line wins over the environment
    assert EXIT_OK == _run("coeffs", "-q", "-o", str(tmp_path / "arg"))[0]
    assert (tmp_path / "arg" / "coeffs.manifest.json").exists()


def test_warnings(tmp_path):
    argv = ["coeffs", "-q", "-c", data_path("warnings.txt"), "-o", str(tmp_path)]
    with pytest.warns(IfcWarning) as record:
        assert EXIT_OK == ifcavity_cli.main(argv + ["--show-duplicate-warnings"])

    assert 5 == len([r for r in record if issubclass(r.category, IfcWarning)])


def test_no_warnings(tmp_path):
    argv = ["coeffs", "-q", "-c", data_path("warnings.txt"), "-o", str(tmp_path)]
    result, record = _run(*argv, "--no-warnings")

    assert EXIT_OK == result
    assert [] == record


@pytest.mark.parametrize("name", ["invalid_xi.txt", "unknown_key.txt", "malformed_number.txt"])
def test_invalid_config(name, tmp_path, capsys):
    result, _ = _run("coeffs", "-c", data_path(name), "-o", str(tmp_path))

    assert EXIT_INVALID == result
    assert capsys.readouterr().err.startswith("ifcavity coeffs: error: ")
    assert not (tmp_path / "coeffs.manifest.json").exists()


def test_invalid_xi_message(tmp_path, capsys):
    _run("coeffs", "-c", data_path("invalid_xi.txt"), "-o", str(tmp_path))
    msg = "ifcavity coeffs: error: Invalid value for xi: 1.5 (must be in (0, 1))\n"
    assert msg == capsys.readouterr().err


def test_invalid_argument():
    with pytest.raises(SystemExit) as excinfo:
        ifcavity_cli.main(["coeffs", "--threads", "many"])
    assert 2 == excinfo.value.code


def test_invalid_threads(tmp_path):
    assert EXIT_INVALID == _run("coeffs", "-q", "--threads", "0", "-o", str(tmp_path))[0]


def test_threads_help_states_no_speedup():
    parser = argparse.ArgumentParser()
    add_common_arguments(parser)
    action = next(a for a in parser._actions if "--threads" in a.option_strings)
    assert "do not run faster" in action.help
