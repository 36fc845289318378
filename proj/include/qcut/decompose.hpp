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

// Cut-local decompositions: a two-qubit gate, or a whole comb, written as a
// weighted sum of tensor-product terms.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/kernels.hpp"

namespace qcut {

enum class CutMode {
    PauliUnitary,  // factors are Pauli matrices, up to 16 terms per gate
    Schmidt,       // operator Schmidt decomposition, minimal term count, non-unitary factors
};

std::string_view cut_mode_name(CutMode mode);
/// Accepts "pauli", "pauli-unitary" and "schmidt".
std::optional<CutMode> cut_mode_from_name(std::string_view name);

struct TermBudgetExceeded : std::runtime_error {
    TermBudgetExceeded(std::uint64_t required, std::uint64_t budget);
    std::uint64_t required;
    std::uint64_t budget;
};

struct PauliPairTerm {
    cd coef;
    Pauli a;
    Pauli b;
    std::string label() const;
};

/// Coefficients Tr((P (x) Q)^dagger u) / 4 over the 16 Pauli pairs, in II, IX, ..., ZZ order,
/// omitting those with magnitude <= kCoefDropTol.
std::vector<PauliPairTerm> pauli_decompose(const ComplexMatrix &u);

struct GateCutTerm {
    cd coef;
    Mat2 factor_a;  // cut-block side
    Mat2 factor_b;
};

/// u = sum_k s_k A_k (x) B_k from the SVD of the realigned matrix
/// R[(ra,ca),(rb,cb)] = u[(ra,rb),(ca,cb)]. Coefficients are the singular values
/// (real, descending); the factors have unit Frobenius norm.
std::vector<GateCutTerm> operator_schmidt(const ComplexMatrix &u);

/// Cut terms for a two-qubit gate in its own wire order (factor_a on wire(0)).
std::vector<GateCutTerm> gate_cut(const Gate &g, CutMode mode);
/// Same, with the gate's matrix first re-expressed on the ordered pair (p, q).
std::vector<GateCutTerm> gate_cut_on(const Gate &g, int p, int q, CutMode mode);

Mat4 reconstruct(const std::vector<GateCutTerm> &terms);

struct CutTerm {
    cd coef;
    std::vector<ProductFilling> fillings;  // one per gap
};

struct CutDecomposition {
    QuantumComb comb;
    CutMode mode = CutMode::Schmidt;
    std::vector<CutTerm> terms;

    std::size_t term_count() const { return terms.size(); }
};

inline constexpr std::uint64_t kDefaultMaxTerms = std::uint64_t{1} << 22;

/// Product of the per-gap term counts, with overflow checked.
std::uint64_t cut_term_count(const QuantumComb &comb, const std::vector<Gate> &gap_gates, CutMode mode);

/// Cartesian product of per-gap cuts, lexicographic in the per-gap term index
/// with the first gap most significant. Throws std::invalid_argument when the
/// comb is invalid or the gap gates do not match, TermBudgetExceeded past max_terms.
CutDecomposition cut_comb(const QuantumComb &comb, const std::vector<Gate> &gap_gates, CutMode mode,
                          std::uint64_t max_terms = kDefaultMaxTerms, Exec exec = Exec::Parallel);

struct FirstQubitTerm {
    Pauli pauli;
    ComplexMatrix rest;  // operator on wires 1..n-1, coefficient absorbed
};

/// u = sum_p P_p (x) A_p with A_p = Tr_0((P_p^dagger (x) I) u) / 2. At most four terms.
std::vector<FirstQubitTerm> first_qubit_pauli_cut(const ComplexMatrix &u);

/// A^ceil(log2 n): evaluations needed when each halving round yields A terms.
std::uint64_t recursive_cut_cost(std::uint64_t n, std::uint64_t a);

}  // namespace qcut
