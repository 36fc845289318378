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

// Seeded random instances shared by the verification suites and the tests.
// Every generator draws only from the engine it is handed, so an instance is
// a pure function of the seed.

#pragma once

#include <random>

#include "qcut/circuit.hpp"
#include "qcut/observable.hpp"

namespace qcut {

using Rng = std::mt19937_64;

enum class GateSet {
    General,      // named and Haar single-qubit gates, CNOT, CZ, SWAP, Haar two-qubit gates
    SwapNetwork,  // single-qubit gates and SWAPs only
    EntanglingOnly,  // CZ and CNOT only
};

Gate random_single_qubit_gate(int wire, Rng &rng);
Gate random_gate(int n, GateSet set, Rng &rng);
Circuit random_circuit(int n, int gate_count, GateSet set, Rng &rng);

/// Each wire in U|0> for an independent Haar-random U.
ProductState random_product_state(int n, Rng &rng);

/// `terms` random non-identity Pauli strings with weights in [-1, 1].
PauliObservable random_observable(int n, int terms, Rng &rng);

}  // namespace qcut
