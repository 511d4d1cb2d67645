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

"""Regenerates the golden cut reports with plain numpy, independent of the C++ code."""

import itertools
import json
import pathlib

import numpy as np

r = 1 / np.sqrt(2)
BELL = [np.array(v) for v in ([0, r, -r, 0], [0, r, r, 0], [r, 0, 0, r], [r, 0, 0, -r])]


def smolin_tensor(order):
    """Smolin density on 4 qubits as a rank-8 tensor; `order` names the pairs (p1,p2),(p3,p4)."""
    rho = sum(0.25 * np.outer(np.kron(b, b), np.kron(b, b).conj()) for b in BELL)
    return rho.reshape([2] * 8), order


def embed(parts, names):
    """Dense operator on `names` (MSB first) from tensor factors on disjoint qubit lists."""
    n = len(names)
    letters = "abcdefghijklmnopqrstuvwxyzABCDEF"
    spec_in, ops = [], []
    for t, qs in parts:
        k = len(qs)
        rows = [letters[names.index(q)] for q in qs]
        cols = [letters[n + names.index(q)] for q in qs]
        spec_in.append("".join(rows + cols))
        ops.append(t)
    out = "".join(letters[:n]) + "".join(letters[n : 2 * n])
    full = np.einsum(",".join(spec_in) + "->" + out, *ops)
    return full.reshape(2**n, 2**n)


def min_pt_eig(rho, names, side):
    n = len(names)
    t = rho.reshape([2] * (2 * n))
    axes = list(range(2 * n))
    for q in side:
        k = names.index(q)
        axes[k], axes[n + k] = axes[n + k], axes[k]
    pt = t.transpose(axes).reshape(2**n, 2**n)
    return float(np.linalg.eigvalsh(pt)[0])


def report(rho, names, sides, certified):
    out = []
    for side in sides:
        lo = min_pt_eig(rho, names, side)
        out.append(
            {
                "side_a": side,
                "min_ppt_eigenvalue": lo,
                "ppt_verdict": "NPT" if lo < -1e-9 else "PPT",
                "certified": side in certified,
            }
        )
    return out


here = pathlib.Path(__file__).parent

smolin_names = ["A0", "B0", "C0", "D0"]
t, _ = smolin_tensor(None)
rho_s = embed([(t, smolin_names)], smolin_names)
sides = [[q] for q in smolin_names] + [["A0", q] for q in ("B0", "C0", "D0")]
(here / "smolin_cuts.json").write_text(
    json.dumps(report(rho_s, smolin_names, sides, [s for s in sides if len(s) == 2]), indent=2) + "\n"
)

m_names = ["A0", "A1", "B0", "B1", "C0", "C1", "D0", "E0"]
rho_m = embed([(t, ["A0", "C0", "B0", "D0"]), (t, ["A1", "B1", "C1", "E0"])], m_names)
sides = []
for k in range(4):
    for helpers in itertools.combinations("ABC", k):
        sides.append([q for p in helpers for q in (p + "0", p + "1")] + ["D0"])
(here / "m_cuts.json").write_text(json.dumps(report(rho_m, m_names, sides, []), indent=2) + "\n")
