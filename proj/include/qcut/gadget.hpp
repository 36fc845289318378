// Copyright 2026 The qcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Ancilla gadgets: every non-SWAP two-qubit gate of a circuit is moved onto a
// dedicated ancilla pair by SWAP conjugation, so that everything else in the
// circuit is SWAPs and single-qubit gates.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qcut/circuit.hpp"

namespace qcut {

struct GateOrigin {
    static constexpr int kInsertedSwap = -1;
    int source = kInsertedSwap;  // index of the originating gate in the input circuit

    bool inserted() const { return source == kInsertedSwap; }
};

enum class GadgetVariant { V1, V2 };

struct GadgetizedCircuit {
    Circuit circuit;
    int anc_a = 0;
    int anc_b = 0;
    std::optional<int> anc_c;  // v2 only
    std::vector<GateOrigin> origin_map;  // parallel to circuit.gates()

    std::vector<int> ancillas() const;
};

/// Two ancillas appended at wires n, n+1. Each non-SWAP two-qubit gate g(p,q) becomes
/// SWAP(p,a) SWAP(q,b) g(a,b) SWAP(p,a) SWAP(q,b).
GadgetizedCircuit gadgetize(const Circuit &c);

/// Three ancillas at n, n+1, n+2. As gadgetize, but every SWAP(q,b) is routed through
/// c as SWAP(q,c) SWAP(c,b) SWAP(q,c), which equals SWAP(q,b) exactly.
GadgetizedCircuit gadgetize_v2(const Circuit &c);

GadgetizedCircuit gadgetize(const Circuit &c, GadgetVariant variant);

/// Checks the gadget invariants; returns an error description or nullopt.
std::optional<std::string> check_gadget(const GadgetizedCircuit &g);

/// Net wire permutation of the inserted SWAPs alone: result[w] is where the content
/// that started on wire w ends up.
std::vector<int> inserted_swap_permutation(const GadgetizedCircuit &g);

struct ExtractedComb {
    QuantumComb comb;
    std::vector<Gate> gap_gates;
};

/// Partition {anc_a}; every relocated gate becomes a gap on (anc_a, anc_b) at its
/// own position, so fill(comb, gap_gates) reproduces g.circuit gate for gate.
/// Throws std::invalid_argument on a malformed gadget.
ExtractedComb extract_comb(const GadgetizedCircuit &g);

}  // namespace qcut
