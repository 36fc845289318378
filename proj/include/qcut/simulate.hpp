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

// Evaluation backends. The dense statevector/unitary paths are reference
// oracles with hard width caps; the SWAP-network path handles circuits of
// SWAPs and single-qubit gates in time linear in gates and wires.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/decompose.hpp"
#include "qcut/kernels.hpp"
#include "qcut/observable.hpp"

namespace qcut {

inline constexpr int kStatevectorMaxWires = 14;
inline constexpr int kUnitaryMaxWires = 12;

struct WidthLimitError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

ComplexVector statevector(const Circuit &c, const ProductState &in, Exec exec = Exec::Parallel);
/// Dense evolution of an arbitrary (possibly unnormalized) input vector.
ComplexVector statevector(const Circuit &c, ComplexVector in, Exec exec = Exec::Parallel);

ComplexMatrix unitary_of(const Circuit &c, Exec exec = Exec::Parallel);

/// <in| C^dagger M C |in> on the dense path; throws if the imaginary residue exceeds 1e-9.
double dense_expectation(const Circuit &c, const ProductState &in, const PauliObservable &m);

/// A SWAP/single-qubit circuit as P(perm) * (locals[0] (x) ... (x) locals[n-1]).
/// locals[q] is everything applied to the qubit that starts on wire q, which ends on perm[q].
struct LocalForm {
    std::vector<int> perm;
    std::vector<Mat2> locals;

    bool identity_perm() const;
    ComplexMatrix dense() const;
};

/// Wire permutation operator: the qubit on wire q moves to wire perm[q].
ComplexMatrix permutation_operator(const std::vector<int> &perm);

bool is_swap_network(const Circuit &c);

/// Throws std::invalid_argument if c has a non-SWAP two-qubit gate.
LocalForm swap_network_local_form(const Circuit &c);

/// Product output of a SWAP/single-qubit circuit with unitary gates.
ProductState swap_network_run(const Circuit &c, const ProductState &in);

/// As swap_network_run without the unitarity or normalization requirements.
std::vector<Vec2> propagate_product(const Circuit &c, std::vector<Vec2> factors);

struct CutEvaluation {
    double expectation = 0.0;
    double imag_residue = 0.0;
    bool swap_network_path = false;
};

/// <psi_sum| M |psi_sum> with psi_sum = sum_i coef_i * term_i |in>, cross terms included.
/// Terms whose circuits are SWAP networks are evaluated factor-wise in O(L^2 n);
/// otherwise the dense path is used (width cap kStatevectorMaxWires).
CutEvaluation evaluate_cut(const CutDecomposition &dec, const ProductState &in, const PauliObservable &m,
                           Exec exec = Exec::Parallel);

/// Expectation of the uncut comb with its gap gates in place (dense path).
double uncut_expectation(const QuantumComb &comb, const std::vector<Gate> &gap_gates, const ProductState &in,
                         const PauliObservable &m);

struct OneTermPartition {
    bool gamma_zero = false;
    cd alpha{0.0, 0.0};
    std::vector<ProductFilling> fillings;  // unitary factors, one pair per gap
    double gamma = 0.0;                    // uncut expectation
    double gamma_filled = 0.0;             // expectation with the product fillings
    double scaled = 0.0;                   // |alpha|^2 * gamma_filled
    int samples = 0;
};

struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Single product-filled term whose scaled expectation equals the uncut one.
/// Tries the exact factors first when every gap gate is itself a product of
/// unitaries, then seeded Haar-random pairs until gamma/gamma' is positive.
OneTermPartition one_term_partition(const QuantumComb &comb, const std::vector<Gate> &gap_gates,
                                    const ProductState &in, const PauliObservable &m, std::uint64_t seed,
                                    int max_tries);

struct PipelineResult {
    double expectation = 0.0;
    std::uint64_t term_count = 0;
    CutMode mode = CutMode::Schmidt;
    double wall_ms = 0.0;
};

/// gadgetize -> extract_comb -> cut_comb -> evaluate_cut on the SWAP-network path.
/// Throws TermBudgetExceeded when the term count is over `budget`.
PipelineResult pipeline_simulate(const Circuit &c, const ProductState &in, const PauliObservable &m, CutMode mode,
                                 std::uint64_t budget, Exec exec = Exec::Parallel);

}  // namespace qcut
