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

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcut/numerics.hpp"

namespace qcut {

/// Per-wire normalized qubit states.
class ProductState {
public:
    /// Throws std::invalid_argument unless every factor has norm 1 within 1e-12.
    explicit ProductState(std::vector<Vec2> factors);

    static ProductState zeros(int n);

    int n() const { return static_cast<int>(factors_.size()); }
    const Vec2 &factor(int wire) const { return factors_[wire]; }
    const std::vector<Vec2> &factors() const { return factors_; }

    ComplexVector dense() const;
    /// Same state with `extra` wires in |0> appended.
    ProductState extended(int extra) const;

private:
    std::vector<Vec2> factors_;
};

/// "0110" (one bit per wire) or comma-separated labels from {0, 1, +, -, i, -i}.
ProductState parse_product_state(std::string_view text);

struct PauliString {
    double weight = 1.0;
    std::vector<Pauli> paulis;  // one per wire

    std::string label() const;
};

/// A real-weighted sum of Pauli strings over a fixed number of wires.
class PauliObservable {
public:
    PauliObservable(int n, std::vector<PauliString> terms);

    static PauliObservable single(std::string_view label, double weight = 1.0);

    int n() const { return n_; }
    const std::vector<PauliString> &terms() const { return terms_; }

    PauliObservable extended(int extra) const;
    ComplexMatrix dense() const;
    std::string str() const;

private:
    int n_;
    std::vector<PauliString> terms_;
};

/// "0.5*ZIZ + 1.0*XII", "ZZ - 0.25*XI", "-YY". Leftmost label is wire 0.
PauliObservable parse_observable(std::string_view text);

void apply_pauli_string(std::span<cd> psi, int n, const std::vector<Pauli> &paulis);

/// <psi|M|psi> by direct application of each string; psi need not be normalized.
cd expectation(const ComplexVector &psi, const PauliObservable &m);

}  // namespace qcut
