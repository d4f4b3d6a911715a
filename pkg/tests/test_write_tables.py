# -*- coding: utf-8 -*-
"""Tests for writing result tables and run manifests"""

import io
import json

import pytest

from ifcavity.constants import table_headers as headers
from ifcavity.detection.cavity import max_photon_flux, port_coefficients
from ifcavity.detection.models import ObjectState, Port
from ifcavity.exceptions import WriteOutputException, WriteOutputWarning
from ifcavity.runfiles import (
    RunConfig,
    TableWriter,
    build_manifest,
    read_manifest,
    verify_manifest,
    write_manifest,
)
from ifcavity.runfiles.manifest import sha256_file
from ifcavity.runfiles.write_tables import bounds_rows, coeffs_rows


def _coeffs_rows(spec):
    coefficients = {state: port_coefficients(spec, state) for state in ObjectState}
    return coeffs_rows(coefficients, 1.0 - coefficients[ObjectState.PRESENT].A)


def test_write_csv(fig2_spec):
    output_file = io.StringIO()
    TableWriter(headers.COEFFS_COLUMNS, "csv").write_stream(output_file, _coeffs_rows(fig2_spec))
    lines = output_file.getvalue().split("\n")

    assert "state,R,T,A,eta" == lines[0]
    assert lines[1].startswith("absent,")
    # No per-photon security without the object
    assert lines[1].endswith(",")
    assert lines[2].startswith("present,0.959")
    assert "" == lines[3]
    assert "\r" not in output_file.getvalue()


def test_write_json(fig2_spec):
    output_file = io.StringIO()
    TableWriter(headers.COEFFS_COLUMNS, "json").write_stream(output_file, _coeffs_rows(fig2_spec))
    records = json.loads(output_file.getvalue())

    assert 2 == len(records)
    assert ["A", "R", "T", "eta", "state"] == list(records[0])
    assert records[0]["eta"] is None
    assert "present" == records[1]["state"]
    assert records[1]["R"] == pytest.approx(0.959268, rel=1e-6)


def test_write_bools_and_ports():
    output_file = io.StringIO()
    TableWriter(("port", "feasible"), "csv").write_stream(
        output_file, [(Port.REFLECTION, True), (Port.TRANSMISSION, False)]
    )
    assert "port,feasible\nreflection,true\ntransmission,false\n" == output_file.getvalue()


def test_write_row_mismatch():
    with pytest.raises(WriteOutputException) as excinfo:
        TableWriter(("a", "b"), "csv").write_stream(io.StringIO(), [(1, 2), (3,)])
    assert "Row (3,) does not match columns ('a', 'b')" == str(excinfo.value)


def test_write_non_finite_warns():
    output_file = io.StringIO()
    with pytest.warns(WriteOutputWarning) as record:
        TableWriter(("n0", "snr"), "csv").write_stream(output_file, [(5.0, float("inf"))])
    assert 1 == len(record)
    assert "Row (5.0, inf) contains non-finite values" == str(record[0].message)
    assert "n0,snr\n5.0,inf\n" == output_file.getvalue()


def test_unknown_output_format():
    with pytest.raises(WriteOutputException) as excinfo:
        TableWriter(("a",), "xml")
    assert "Unknown output format xml" == str(excinfo.value)


def test_write_to_missing_directory(tmp_path):
    with pytest.raises(WriteOutputException):
        TableWriter(("a",), "csv").write(tmp_path / "missing" / "table.csv", [(1,)])


def test_bounds_rows(fig2_spec):
    bound = max_photon_flux(fig2_spec)

    assert [(headers.MAX_PHOTON_FLUX, bound)] == bounds_rows(bound)
    rows = bounds_rows(bound, 1e9, 177.0)
    assert [
        headers.MAX_PHOTON_FLUX,
        headers.PHOTON_FLUX,
        headers.FLUX_WITHIN_BOUND,
        headers.G0_MAX,
    ] == [quantity for quantity, _ in rows]
    assert rows[2][1] is False


def test_manifest(fig2_spec, tmp_path):
    path = TableWriter(headers.COEFFS_COLUMNS, "csv").write(
        tmp_path / "coeffs.csv", _coeffs_rows(fig2_spec)
    )
    manifest = build_manifest("coeffs", RunConfig(), [path], 0.5, seeds=(42,))

    assert "coeffs" == manifest.command
    assert (42,) == manifest.seeds
    assert manifest.random_generator is None
    assert {"coeffs.csv": sha256_file(path)} == manifest.outputs
    assert 64 == len(manifest.outputs["coeffs.csv"])
    assert "15000000.0" == manifest.config["CAVITY"]["kappa_a_hz"][0]

    manifest_path = write_manifest(manifest, tmp_path / "coeffs.manifest.json")
    assert manifest == read_manifest(manifest_path)
    assert verify_manifest(manifest, tmp_path)

    with open(path, "at") as output_file:
        output_file.write("tampered\n")
    assert not verify_manifest(manifest, tmp_path)


def test_sha256_file(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_bytes(b"")
    expected = "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
    assert expected == sha256_file(path)
