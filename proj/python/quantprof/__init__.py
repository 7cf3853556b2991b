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

"""Gate-count and execution-time profiler for quantum circuits."""

import json as _json

from ._core import (
    ConfigError,
    Error,
    ParseError,
    ProfileError,
    __version__,
    profile,
)

__all__ = [
    "ConfigError",
    "Error",
    "ParseError",
    "ProfileError",
    "__version__",
    "flat_profile",
    "profile",
]


def flat_profile(source, gate_times, *, format="qasm", root=None):
    """Profile a circuit and return the report as a Python dictionary.

    Convenience wrapper over :func:`profile` with the JSON exporter.
    """
    text = profile(source, gate_times, format=format, root=root, exporter="json")
    return _json.loads(text)
