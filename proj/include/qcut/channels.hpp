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

// Channel sums and the unital-channel obstruction: a unital channel fixes the
// maximally mixed state, so any sum of tensor products of unital channels
// leaves a maximally mixed block maximally mixed, whatever the coefficients.

#pragma once

#include <cstdint>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/observable.hpp"

namespace qcut {

/// Completely positive trace-preserving map in Kraus form.
class Channel {
public:
    /// Throws std::invalid_argument unless sum K^dagger K = I within kDefaultTol.
    Channel(int dim, std::vector<ComplexMatrix> kraus);

    static Channel unitary(const ComplexMatrix &u);
    static Channel identity(int dim);
    static Channel amplitude_damping(double gamma);
    static Channel dephasing(double p);
    /// Random mixture of seeded Haar unitaries (always unital).
    static Channel random_unital(int dim, int kraus_count, std::uint64_t seed);

    int dim() const { return dim_; }
    const std::vector<ComplexMatrix> &kraus() const { return kraus_; }

private:
    int dim_;
    std::vector<ComplexMatrix> kraus_;
};

/// ||sum K K^dagger - I||_max <= tol.
bool is_unital(const Channel &ch, double tol = kDefaultTol);

/// Throws std::invalid_argument unless rho is Hermitian with unit trace (within 1e-9) and
/// matches `dim`.
void check_density(const ComplexMatrix &rho, Eigen::Index dim);

ComplexMatrix apply(const Channel &ch, const ComplexMatrix &rho);

struct ChannelCutTerm {
    cd coef;
    Channel block_a;
    Channel block_b;
};

class ChannelCut {
public:
    explicit ChannelCut(std::vector<ChannelCutTerm> terms);

    const std::vector<ChannelCutTerm> &terms() const { return terms_; }
    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    bool all_unital(double tol = kDefaultTol) const;

private:
    std::vector<ChannelCutTerm> terms_;
    int dim_a_ = 0;
    int dim_b_ = 0;
};

/// sum_i coef_i (C^a_i (x) C^b_i)(rho); not necessarily a state. Block a is the
/// more significant tensor factor.
ComplexMatrix apply_cut(const ChannelCut &cut, const ComplexMatrix &rho);

ComplexMatrix partial_trace_a(const ComplexMatrix &rho, int dim_a, int dim_b);
ComplexMatrix partial_trace_b(const ComplexMatrix &rho, int dim_a, int dim_b);

/// rho_clean (x) I / 2^m for a clean product state on the first wires and m mixed wires.
ComplexMatrix clean_plus_mixed(const ProductState &clean, int mixed);

struct NogoWitness {
    double distance = 0.0;          // trace distance of the true block-b output from I/2^m
    ComplexMatrix block_b_output;   // true block-b output
};

/// Clean wires are 0..clean.n()-1, mixed wires the rest of the circuit. Computes
/// U (rho_a (x) I/2^m) U^dagger exactly and compares its block-b reduction with I/2^m.
NogoWitness unital_nogo_witness(const Circuit &u, const ProductState &clean);

struct CutBlockCheck {
    double factor_deviation = 0.0;  // max |X - Tr_b(X) (x) I/2^m|
    double block_b_deviation = 0.0; // max |Tr_a(X)/Tr(X) - I/2^m|, 0 when Tr(X) vanishes
    double mismatch = 0.0;          // trace distance of the true block-b output from the cut's
};

/// Applies an all-unital cut to rho_a (x) I/2^m and measures how far its block-b output
/// is from maximally mixed, and how far it is from the true output of `u`.
CutBlockCheck check_unital_cut(const ChannelCut &cut, const Circuit &u, const ProductState &clean);

}  // namespace qcut
