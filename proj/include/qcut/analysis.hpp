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

// Schmidt data of states and operators across a wire bipartition, and the
// rank arguments built on them: a sum of L product operators has operator
// Schmidt rank at most L, and so does its output on a product input, while n/2
// straddling Bell pairs need rank 2^(n/2).

#pragma once

#include <cstdint>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/decompose.hpp"
#include "qcut/observable.hpp"

namespace qcut {

inline constexpr int kOperatorSchmidtMaxWires = 10;

struct SchmidtData {
    Eigen::VectorXd singular_values;  // descending
    int rank = 0;
    std::vector<int> partition;
};

/// SVD of the amplitudes reshaped to (partition wires) x (other wires).
SchmidtData state_schmidt(const ComplexVector &psi, const std::vector<int> &partition, int n);

/// SVD of the realigned operator R[(rowA,colA),(rowB,colB)] = op[(rowA,rowB),(colA,colB)],
/// where A is the partition and B the remaining wires.
SchmidtData operator_schmidt_rank(const ComplexMatrix &op, const std::vector<int> &partition, int n);

/// H(i), CNOT(i, i + n/2) for i < n/2: every pair straddles {0..n/2-1}.
Circuit bell_pairs_circuit(int n);

std::vector<int> first_half(int n);

struct RankBoundReport {
    std::size_t term_count = 0;
    bool all_terms_local = false;  // every term has identity net permutation
    int operator_rank = 0;         // of sum_i coef_i * term_i across the partition
    int state_rank = 0;            // of the summed output state
    ComplexVector output_state;    // sum_i coef_i * term_i |in>, unnormalized
    bool ok = false;               // operator_rank <= L and state_rank <= L
};

/// Every term circuit must be a SWAP network with identity net permutation;
/// throws std::invalid_argument otherwise. Width cap kOperatorSchmidtMaxWires.
RankBoundReport rank_bound_check(const CutDecomposition &dec, const ProductState &in,
                                 const std::vector<int> &partition);

/// The first `count` terms of a decomposition.
CutDecomposition truncate_terms(const CutDecomposition &dec, std::size_t count);

/// Sum of the L largest squared Schmidt coefficients of psi / |psi|: the squared
/// fidelity of the best rank-L approximation.
double best_rank_fidelity(const ComplexVector &psi, const std::vector<int> &partition, int n, int L);

/// |<a|b>|^2 / (|a|^2 |b|^2)
double state_fidelity(const ComplexVector &a, const ComplexVector &b);

struct ScalingRow {
    int k = 0;
    std::uint64_t terms = 0;     // enumerated term count
    std::uint64_t expected = 0;  // c^k
    double wall_ms = 0.0;
};

struct ScalingReport {
    CutMode mode = CutMode::Schmidt;
    std::uint64_t per_gate = 0;  // c
    std::vector<ScalingRow> rows;
    bool ok = false;
};

/// k copies of `gate` on a two-wire circuit, gadgetized and cut, for k = 1..k_max.
ScalingReport scaling_report(const Gate &gate, int k_max, CutMode mode,
                             std::uint64_t budget = kDefaultMaxTerms);

}  // namespace qcut
