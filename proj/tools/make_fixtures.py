#!/usr/bin/env python3
# Copyright 2026 The cpanchor Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the JSON fixtures in fixtures/ (stdlib only)."""

import json
import math
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def matrix(rows):
    return {
        "rows": len(rows),
        "cols": len(rows[0]),
        "entries": [[float(x.real), float(x.imag)] if isinstance(x, complex) else [float(x), 0.0]
                    for row in rows for x in row],
    }


def zeros(r, c):
    return [[0.0] * c for _ in range(r)]


def unit(d, i, j, scale=1.0):
    m = zeros(d, d)
    m[i][j] = scale
    return m


def diag(values):
    m = zeros(len(values), len(values))
    for i, v in enumerate(values):
        m[i][i] = v
    return m


def arveson_superoperator(k):
    """Row-major superoperator of the map E_aa -> E_aa + E_{k-1,k-1}/(k-1) (a < k-1), all else -> 0."""
    n = k * k
    m = zeros(n, n)
    for a in range(k - 1):
        col = a * k + a
        m[col][col] = 1.0
        m[(k - 1) * k + (k - 1)][col] = 1.0 / (k - 1)
    return {"basis": {"kind": "matrix_units_row_major"}, "matrix": matrix(m)}


def arveson_kraus(k):
    ops = [unit(k, i, i) for i in range(k - 1)]
    ops += [unit(k, k - 1, j, 1.0 / math.sqrt(k - 1)) for j in range(k - 1)]
    return {"dim": k, "kraus": [matrix(a) for a in ops]}


def wavelet3():
    s = 1.0 / math.sqrt(2.0)
    rows = zeros(9, 9)
    rows[0][0] = 1.0
    for r in (1, 2):
        rows[r][1], rows[r][2] = s, 1.0 - s
    for r in (3, 4):
        rows[r][3], rows[r][5] = s, -s
    for r in (5, 6):
        rows[r][1], rows[r][2] = s, -s
    order = [[0, 0], [-1, -1], [-2, -2], [0, -1], [0, -2], [-1, -2], [-2, -1], [-1, 0], [-2, 0]]
    return {"basis": {"kind": "matrix_units_custom", "order": order, "labels": [0, -1, -2]},
            "matrix": matrix(rows)}


def transpose_d2():
    m = zeros(4, 4)
    for i in range(2):
        for j in range(2):
            m[j * 2 + i][i * 2 + j] = 1.0
    return {"basis": {"kind": "matrix_units_row_major"}, "matrix": matrix(m)}


def phase_damping():
    # lambda = (1/2, 1/2, 1): sqrt(3/4) I and sqrt(1/4) sigma_z.
    return {"dim": 2, "kraus": [matrix(diag([math.sqrt(0.75)] * 2)),
                                matrix(diag([0.5, -0.5]))]}


def depolarizing_half():
    # lambda = (1/2, 1/2, 1/2): mixture of I and the three Paulis.
    a = math.sqrt(5.0 / 8.0)
    b = math.sqrt(1.0 / 8.0)
    return {"dim": 2, "kraus": [matrix(diag([a, a])),
                                matrix([[0.0, b], [b, 0.0]]),
                                matrix([[0.0, -1j * b], [1j * b, 0.0]]),
                                matrix(diag([b, -b]))]}


def irreducible_pair():
    # sigma_x / sqrt(2), sigma_z / sqrt(2): only scalars commute with both.
    s = 1.0 / math.sqrt(2.0)
    return {"dim": 2, "kraus": [matrix([[0.0, s], [s, 0.0]]), matrix(diag([s, -s]))]}


def filters(*polys):
    return [[{"exponent": e, "coeff": [c, 0.0]} for e, c in sorted(p.items())] for p in polys]


def main():
    OUT.mkdir(exist_ok=True)
    s = 1.0 / math.sqrt(2.0)
    files = {
        "wavelet3_superoperator.json": wavelet3(),
        "transpose_d2.json": transpose_d2(),
        "identity_d2.json": {"dim": 2, "kraus": [matrix(diag([1.0, 1.0]))]},
        "phase_damping.json": phase_damping(),
        "irreducible_pair.json": irreducible_pair(),
        "depolarizing_half.json": depolarizing_half(),
        "arveson_k3_kraus.json": arveson_kraus(3),
        "arveson_E00.json": {"projection": matrix(unit(3, 0, 0))},
        "projection_diag10.json": {"projection": matrix(diag([1.0, 0.0]))},
        "haar_filterbank.json": {"scale": 2, "filters": filters({0: s, 1: s}, {0: s, 1: -s})},
        "nonorthogonal_filterbank.json": {"scale": 2, "filters": filters({0: 1.0}, {0: 0.0})},
    }
    for k in range(2, 7):
        files[f"arveson_k{k}.json"] = arveson_superoperator(k)
    for name, doc in sorted(files.items()):
        (OUT / name).write_text(json.dumps(doc, indent=1) + "\n")


if __name__ == "__main__":
    main()
