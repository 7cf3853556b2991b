# Copyright 2026 The quantprof Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import quantprof

IBMQ_TIMES = {"u1": 0.0, "u2": 35.0, "u3": 70.0, "cx": 300.0}

TOFFOLI = """OPENQASM 2.0;
include "qelib1.inc";
qreg q[3];
ccx q[0],q[1],q[2];
"""

RECURSIVE = """{
  "root": "a",
  "routines": [
    {"name": "a", "body": ["b"]},
    {"name": "b", "body": ["a"]}
  ]
}
"""


def test_version_is_exposed():
    assert quantprof.__version__.count(".") == 2


def test_gprof_report_text():
    report = quantprof.profile(TOFFOLI, IBMQ_TIMES)
    assert report.startswith("Flat profile:")
    assert "Call graph" in report
    assert "96.26" in report
    assert " cx" in report


def test_flat_profile_dictionary():
    report = quantprof.flat_profile(TOFFOLI, IBMQ_TIMES)
    assert report["total_time"] == 1870.0
    assert report["qubit_count"] == 3
    assert report["gate_times"] == IBMQ_TIMES

    by_name = {entry["name"]: entry for entry in report["routines"]}
    assert by_name["cx"]["exec_count"] == 6
    assert by_name["cx"]["self_time"] == 1800.0
    assert by_name["u1"]["exec_count"] == 7
    assert report["routines"][0]["name"] == "cx"


def test_root_override_profiles_a_subroutine():
    report = quantprof.flat_profile(TOFFOLI, IBMQ_TIMES, root="ccx")
    assert report["total_time"] == 1870.0
    names = {entry["name"] for entry in report["routines"]}
    assert "main" not in names
    assert "ccx" in names


def test_interchange_format():
    source = '{"root": "x", "routines": []}'
    report = quantprof.flat_profile(source, {"x": 1.0}, format="interchange")
    assert report["total_time"] == 1.0
    assert [entry["name"] for entry in report["routines"]] == ["x"]


def test_dot_exporter():
    dot = quantprof.profile(
        TOFFOLI, IBMQ_TIMES, exporter="dot", node_threshold=0.0, edge_threshold=0.0
    )
    assert dot.startswith("digraph callgraph {")
    assert '"u1"' in dot


def test_parse_error_maps_to_python_exception():
    with pytest.raises(quantprof.ParseError):
        quantprof.profile("OPENQASM 2.0;\nqreg q[1];\nmystery q[0];\n", IBMQ_TIMES)


def test_recursion_maps_to_profile_error():
    with pytest.raises(quantprof.ProfileError, match="cycle"):
        quantprof.profile(RECURSIVE, IBMQ_TIMES, format="interchange")


def test_config_errors():
    with pytest.raises(quantprof.ConfigError):
        quantprof.profile(TOFFOLI, IBMQ_TIMES, exporter="csv")
    with pytest.raises(quantprof.ConfigError):
        quantprof.profile(TOFFOLI, {"cx": -1.0})


def test_errors_share_a_base_class():
    for exc in (quantprof.ConfigError, quantprof.ParseError, quantprof.ProfileError):
        assert issubclass(exc, quantprof.Error)
