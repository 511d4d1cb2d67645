# Copyright 2026 The superact Authors
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

"""Python bindings for the superact LOCC simulator."""

import json as _json

from ._core import (
    ABS_TOL,
    CertificateError,
    ScriptError,
    bell_state,
    eig_hermitian,
    m_density,
    ms_descriptor,
    partial_trace,
    partial_transpose,
    pauli,
    ppt_min_eigenvalue,
    smolin_density,
    superactivation,
    teleport,
    unlock,
    verify_targets,
)
from . import _core


def verify(target, tol=1e-9, seed=0):
    """Runs a verification suite and returns the report as a dict."""
    return _json.loads(_core.verify_json(target, tol, seed))


def export(fixture, ensemble=False):
    """Serialized fixture ("smolin:ABCD", "m", "control", "ms") as a dict."""
    return _json.loads(_core.export_json(fixture, ensemble))


def run_script(script):
    """Runs an LOCC script given as a dict; returns the run report."""
    return _json.loads(_core.run_script_json(_json.dumps(script)))


__all__ = [
    "ABS_TOL",
    "CertificateError",
    "ScriptError",
    "bell_state",
    "eig_hermitian",
    "export",
    "m_density",
    "ms_descriptor",
    "partial_trace",
    "partial_transpose",
    "pauli",
    "ppt_min_eigenvalue",
    "run_script",
    "smolin_density",
    "superactivation",
    "teleport",
    "unlock",
    "verify",
    "verify_targets",
]
