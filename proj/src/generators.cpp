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

#include "qcut/generators.hpp"

#include <array>

namespace qcut {

namespace {

int pick(Rng &rng, int count) { return std::uniform_int_distribution<int>(0, count - 1)(rng); }

std::pair<int, int> distinct_pair(int n, Rng &rng) {
    int a = pick(rng, n);
    int b = pick(rng, n - 1);
    if (b >= a) {
        ++b;
    }
    return {a, b};
}

}  // namespace

Gate random_single_qubit_gate(int wire, Rng &rng) {
    static constexpr std::array<GateKind, 6> kNamed{GateKind::H, GateKind::T, GateKind::S,
                                                    GateKind::X, GateKind::Y, GateKind::Z};
    if (pick(rng, 2) == 0) {
        return Gate::named(kNamed[static_cast<std::size_t>(pick(rng, 6))], {wire});
    }
    return Gate::custom1(haar_random_unitary(2, rng()), wire);
}

Gate random_gate(int n, GateSet set, Rng &rng) {
    if (n < 2 && set != GateSet::SwapNetwork) {
        throw std::invalid_argument("random_gate: two-qubit gate sets need n >= 2");
    }
    switch (set) {
        case GateSet::EntanglingOnly: {
            auto [a, b] = distinct_pair(n, rng);
            return Gate::named(pick(rng, 2) == 0 ? GateKind::CZ : GateKind::CNOT, {a, b});
        }
        case GateSet::SwapNetwork:
            if (n >= 2 && pick(rng, 3) == 0) {
                auto [a, b] = distinct_pair(n, rng);
                return Gate::swap(a, b);
            }
            return random_single_qubit_gate(pick(rng, n), rng);
        case GateSet::General:
            break;
    }
    switch (pick(rng, 6)) {
        case 0:
        case 1:
            return random_single_qubit_gate(pick(rng, n), rng);
        case 2: {
            auto [a, b] = distinct_pair(n, rng);
            return Gate::cnot(a, b);
        }
        case 3: {
            auto [a, b] = distinct_pair(n, rng);
            return Gate::cz(a, b);
        }
        case 4: {
            auto [a, b] = distinct_pair(n, rng);
            return Gate::swap(a, b);
        }
        default: {
            auto [a, b] = distinct_pair(n, rng);
            return Gate::custom2(haar_random_unitary(4, rng()), a, b);
        }
    }
}

Circuit random_circuit(int n, int gate_count, GateSet set, Rng &rng) {
    Circuit c(n);
    for (int i = 0; i < gate_count; ++i) {
        c.append(random_gate(n, set, rng));
    }
    return c;
}

ProductState random_product_state(int n, Rng &rng) {
    std::vector<Vec2> factors;
    for (int q = 0; q < n; ++q) {
        factors.push_back(haar_random_unitary(2, rng()).col(0));
    }
    return ProductState(std::move(factors));
}

PauliObservable random_observable(int n, int terms, Rng &rng) {
    std::uniform_real_distribution<double> weight(-1.0, 1.0);
    std::vector<PauliString> out;
    for (int t = 0; t < terms; ++t) {
        PauliString s;
        s.weight = weight(rng);
        bool all_identity = true;
        while (all_identity) {
            s.paulis.clear();
            for (int q = 0; q < n; ++q) {
                s.paulis.push_back(static_cast<Pauli>(pick(rng, 4)));
                all_identity = all_identity && s.paulis.back() == Pauli::I;
            }
        }
        out.push_back(std::move(s));
    }
    return PauliObservable(n, std::move(out));
}

}  // namespace qcut
