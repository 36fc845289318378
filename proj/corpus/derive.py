#!/usr/bin/env python3
# Copyright 2026 The qcut Authors
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

"""Regenerates the corpus and its manifest.

Source circuits are built here from a fixed seed. Gadgetized files are produced
by the qcut tool. Every expected value in manifest.json is computed by the
dense numpy reference below, which shares no code with the library.

    python3 corpus/derive.py --qcut build/tools/qcut
"""

import argparse
import json
import pathlib
import subprocess

import numpy as np

HERE = pathlib.Path(__file__).resolve().parent
S2 = np.sqrt(0.5)

NAMED = {
    "H": np.array([[S2, S2], [S2, -S2]], dtype=complex),
    "T": np.diag([1, np.exp(1j * np.pi / 4)]),
    "S": np.diag([1, 1j]),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.diag([1, -1]).astype(complex),
    "CNOT": np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex),
    "CZ": np.diag([1, 1, 1, -1]).astype(complex),
    "SWAP": np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex),
}
PAULI = {"I": np.eye(2), "X": NAMED["X"], "Y": NAMED["Y"], "Z": NAMED["Z"]}
LABELS = {"0": [1, 0], "1": [0, 1], "+": [S2, S2], "-": [S2, -S2], "i": [S2, 1j * S2], "-i": [S2, -1j * S2]}


# dense reference, wire 0 is the most significant bit

def gate_matrix(g):
    if "matrix" in g:
        return np.array([[complex(re, im) for re, im in row] for row in g["matrix"]])
    return NAMED[g["name"]]


def embed(u, wires, n):
    k = len(wires)
    out = np.zeros((2 ** n, 2 ** n), dtype=complex)
    for col in range(2 ** n):
        bits = [(col >> (n - 1 - w)) & 1 for w in range(n)]
        local_in = int("".join(str(bits[w]) for w in wires), 2)
        for local_out in range(2 ** k):
            row_bits = list(bits)
            for i, w in enumerate(wires):
                row_bits[w] = (local_out >> (k - 1 - i)) & 1
            row = int("".join(map(str, row_bits)), 2)
            out[row, col] += u[local_out, local_in]
    return out


def unitary(doc):
    n = doc["n"]
    u = np.eye(2 ** n, dtype=complex)
    for g in doc["gates"]:
        u = embed(gate_matrix(g), g["wires"], n) @ u
    return u


def product(labels):
    v = np.array([1.0 + 0j])
    for label in labels:
        v = np.kron(v, np.array(LABELS[label], dtype=complex))
    return v


def observable(terms, n):
    m = np.zeros((2 ** n, 2 ** n), dtype=complex)
    for weight, label in terms:
        p = np.array([[1.0 + 0j]])
        for c in label:
            p = np.kron(p, PAULI[c])
        m += weight * p
    return m


def observable_text(terms):
    text = ""
    for i, (w, label) in enumerate(terms):
        sign = "-" if w < 0 else "+"
        mag = f"{abs(w)!r}*{label}"
        text += (("-" if sign == "-" else "") + mag) if i == 0 else f" {sign} {mag}"
    return text


def expectation(doc, labels, terms):
    psi = unitary(doc) @ product(labels)
    return float(np.real(np.vdot(psi, observable(terms, doc["n"]) @ psi)))


def state_rank(doc, part):
    n = doc["n"]
    psi = unitary(doc)[:, 0]
    rest = [w for w in range(n) if w not in part]
    t = psi.reshape([2] * n).transpose(sorted(part) + rest).reshape(2 ** len(part), -1)
    s = np.linalg.svd(t, compute_uv=False)
    return int(np.sum(s > 1e-7 * s[0]))


def nogo_distance(doc, clean):
    n = doc["n"]
    mixed = n - clean
    da, db = 2 ** clean, 2 ** mixed
    rho_a = np.zeros((da, da), dtype=complex)
    rho_a[0, 0] = 1.0
    rho = np.kron(rho_a, np.eye(db) / db)
    u = unitary(doc)
    out = (u @ rho @ u.conj().T).reshape(da, db, da, db)
    rho_b = np.einsum("aiaj->ij", out)
    return float(0.5 * np.sum(np.abs(np.linalg.eigvalsh(rho_b - np.eye(db) / db))))


def cut_counts(doc):
    # SWAPs stay in place; every other two-qubit gate becomes one gap.
    k = sum(1 for g in doc["gates"] if len(g["wires"]) == 2 and g.get("name") != "SWAP")
    return 2 ** k, 4 ** k


# source circuits

def named(name, *wires):
    return {"name": name, "wires": list(wires)}


def bell(n):
    gates = [named("H", i) for i in range(n // 2)] + [named("CNOT", i, i + n // 2) for i in range(n // 2)]
    return {"n": n, "gates": gates}


def random_circuit(n, count, rng):
    gates = []
    for _ in range(count):
        r = rng.random()
        if r < 0.45:
            gates.append(named(str(rng.choice(["H", "T", "S", "X", "Y", "Z"])), int(rng.integers(n))))
        elif r < 0.55:
            q, _ = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
            gates.append({"matrix": [[[float(z.real), float(z.imag)] for z in row] for row in q],
                          "wires": [int(rng.integers(n))]})
        else:
            a, b = (int(x) for x in rng.choice(n, size=2, replace=False))
            gates.append(named(str(rng.choice(["CNOT", "CZ", "SWAP"])), a, b))
    return {"n": n, "gates": gates}


def write(name, doc):
    (HERE / name).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def gadgetize(qcut, source, target, variant):
    subprocess.run([qcut, "gadgetize", "--circuit", str(HERE / source), "--variant", variant,
                    "--out", str(HERE / target)], check=True)
    return json.loads((HERE / target).read_text())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--qcut", required=True)
    args = ap.parse_args()
    rng = np.random.default_rng(20240611)
    entries = []

    def add(path, description, doc, expect, provenance):
        entries.append({"path": path, "description": description, "expect": expect, "provenance": provenance})

    structural = "counted from the file"
    for n in (2, 4, 6, 8):
        doc = bell(n)
        path = f"bell_{n}.json"
        write(path, doc)
        first = list(range(n // 2))
        zz = [(1.0, "".join("Z" if w in (0, n // 2) else "I" for w in range(n)))]
        expect = {
            "width": n,
            "gate_count": n,
            "two_qubit_count": n // 2,
            "state_rank": {"partition": first, "value": state_rank(doc, first)},
            "expectation": {"input": ",".join("0" * n), "observable": observable_text(zz),
                            "value": expectation(doc, "0" * n, zz)},
        }
        prov = {
            "width": structural, "gate_count": structural, "two_qubit_count": structural,
            "state_rank": "numpy SVD of the reshaped dense state",
            "expectation": "numpy dense statevector",
        }
        if n <= 4:
            schmidt, _ = cut_counts(doc)
            expect["pipeline"] = {"input": ",".join("0" * n), "observable": observable_text(zz), "mode": "schmidt",
                                  "term_count": schmidt, "value": expectation(doc, "0" * n, zz)}
            prov["pipeline"] = "numpy dense statevector; term count 2 per cut gate"
        add(path, f"{n // 2} Bell pairs across the halves", doc, expect, prov)

    chain = {"n": 2, "gates": [named("H", 0), named("CZ", 0, 1), named("H", 1), named("CZ", 0, 1),
                               named("T", 0), named("CZ", 0, 1), named("H", 0)]}
    write("cz_chain_3.json", chain)
    zz = [(1.0, "ZZ"), (0.5, "XI")]
    schmidt, pauli = cut_counts(chain)
    add("cz_chain_3.json", "three CZ gates between single-qubit layers", chain, {
        "two_qubit_count": 3,
        "pipeline": {"input": "0,0", "observable": observable_text(zz), "mode": "pauli", "term_count": pauli,
                     "value": expectation(chain, "00", zz)},
        "expectation": {"input": "0,0", "observable": observable_text(zz), "value": expectation(chain, "00", zz)},
    }, {"two_qubit_count": structural, "pipeline": "numpy dense statevector; term count 4 per cut gate",
        "expectation": "numpy dense statevector"})

    swap = {"n": 2, "gates": [named("SWAP", 0, 1)]}
    write("swap_witness.json", swap)
    add("swap_witness.json", "SWAP carrying a clean qubit into the mixed block", swap, {
        "swap_count": 1,
        "unitary_identity": False,
        "nogo_distance": {"clean": 1, "value": nogo_distance(swap, 1)},
    }, {"swap_count": structural, "unitary_identity": "numpy dense unitary",
        "nogo_distance": "numpy partial trace and eigenvalues"})

    double = {"n": 2, "gates": [named("SWAP", 0, 1), named("SWAP", 1, 0)]}
    write("double_swap.json", double)
    add("double_swap.json", "two SWAPs cancel", double, {
        "unitary_identity": True,
        "nogo_distance": {"clean": 1, "value": nogo_distance(double, 1)},
    }, {"unitary_identity": "numpy dense unitary", "nogo_distance": "numpy partial trace and eigenvalues"})

    cnot = {"n": 2, "gates": [named("H", 0), named("CNOT", 0, 1)]}
    write("cnot_clean_control.json", cnot)
    add("cnot_clean_control.json", "CNOT from a clean |+> control onto a maximally mixed target", cnot, {
        "nogo_distance": {"clean": 1, "value": nogo_distance(cnot, 1)},
    }, {"nogo_distance": "numpy partial trace and eigenvalues; a controlled unitary keeps a mixed target mixed"})

    empty = {"n": 2, "gates": []}
    write("empty_2.json", empty)
    add("empty_2.json", "no gates", empty, {
        "gate_count": 0, "unitary_identity": True,
        "expectation": {"input": "1,+", "observable": observable_text([(1.0, "ZX")]),
                        "value": expectation(empty, ["1", "+"], [(1.0, "ZX")])},
    }, {"gate_count": structural, "unitary_identity": "numpy dense unitary",
        "expectation": "numpy dense statevector"})

    for tag, n, count in (("a", 4, 12), ("b", 5, 10)):
        doc = random_circuit(n, count, rng)
        path = f"random_{n}_{tag}.json"
        write(path, doc)
        labels = [str(x) for x in rng.choice(list(LABELS), size=n)]
        obs = [(float(np.round(rng.uniform(-1, 1), 3)), "".join(rng.choice(list("IXYZ"), size=n)))
               for _ in range(2)]
        schmidt, pauli = cut_counts(doc)
        value = expectation(doc, labels, obs)
        add(path, f"seeded random circuit, {n} wires", doc, {
            "width": n, "gate_count": count,
            "two_qubit_count": sum(1 for g in doc["gates"] if len(g["wires"]) == 2),
            "swap_count": sum(1 for g in doc["gates"] if g.get("name") == "SWAP"),
            "expectation": {"input": ",".join(labels), "observable": observable_text(obs), "value": value},
            "pipeline": {"input": ",".join(labels), "observable": observable_text(obs), "mode": "schmidt",
                         "term_count": schmidt, "value": value},
        }, {"width": structural, "gate_count": structural, "two_qubit_count": structural,
            "swap_count": structural, "expectation": "numpy dense statevector",
            "pipeline": "numpy dense statevector; term count 2 per cut CNOT or CZ"})

    src = {"n": 2, "gates": [named("CNOT", 0, 1)]}
    write("cnot_pair.json", src)
    add("cnot_pair.json", "single CNOT, source for the gadget files", src, {"gate_count": 1},
        {"gate_count": structural})

    for source, variant in (("cnot_pair.json", "v1"), ("cnot_pair.json", "v2"), ("random_4_a.json", "v1"),
                            ("random_4_a.json", "v2")):
        target = source.replace(".json", f"_gadget_{variant}.json")
        g = gadgetize(args.qcut, source, target, variant)
        base = json.loads((HERE / source).read_text())
        extra = g["n"] - base["n"]
        labels = ["+"] * base["n"]
        obs = [(1.0, "Z" * base["n"])]
        expect = {
            "gadget_of": {"source": source, "variant": variant},
            "width": base["n"] + extra,
            "expectation": {"input": ",".join(labels + ["0"] * extra),
                            "observable": observable_text([(1.0, "Z" * base["n"] + "I" * extra)]),
                            "value": expectation(base, labels, obs)},
        }
        prov = {
            "gadget_of": "regenerated by the tool from the source file",
            "width": "source width plus ancillas",
            "expectation": "numpy dense statevector of the source circuit",
        }
        if variant == "v1":
            expect["comb_valid"] = True
            prov["comb_valid"] = "gaps sit on the ancilla pair, partition is the first ancilla"
        add(target, f"{variant} gadget of {source}", g, expect, prov)

    bad = {"n": 3, "gates": [named("CZ", 0, 1), named("CZ", 0, 2)], "gaps": [{"position": 1, "wires": [0, 2]}],
           "partition": [0]}
    write("invalid_comb.json", bad)
    add("invalid_comb.json", "comb whose fixed CZ crosses the partition", bad, {"comb_valid": False},
        {"comb_valid": "the fixed CZ touches wire 0 inside the block and wire 1 outside"})

    (HERE / "manifest.json").write_text(json.dumps({"entries": entries}, indent=2) + "\n")


if __name__ == "__main__":
    main()
