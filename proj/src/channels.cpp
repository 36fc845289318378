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

#include "qcut/channels.hpp"

#include <cmath>
#include <random>

#include "qcut/simulate.hpp"

namespace qcut {

Channel::Channel(int dim, std::vector<ComplexMatrix> kraus) : dim_(dim), kraus_(std::move(kraus)) {
    if (dim < 1) {
        throw std::invalid_argument("channel dimension must be positive");
    }
    if (kraus_.empty()) {
        throw std::invalid_argument("channel needs at least one Kraus operator");
    }
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (const ComplexMatrix &k : kraus_) {
        if (k.rows() != dim || k.cols() != dim) {
            throw std::invalid_argument("Kraus operator shape does not match channel dimension");
        }
        if (!all_finite(k)) {
            throw std::invalid_argument("Kraus operator has non-finite entries");
        }
        sum += k.adjoint() * k;
    }
    if (max_abs_diff(sum, ComplexMatrix::Identity(dim, dim)) > kDefaultTol) {
        throw std::invalid_argument("Kraus operators are not trace preserving");
    }
}

Channel Channel::unitary(const ComplexMatrix &u) { return Channel(static_cast<int>(u.rows()), {u}); }

Channel Channel::identity(int dim) { return Channel(dim, {ComplexMatrix::Identity(dim, dim)}); }

Channel Channel::amplitude_damping(double gamma) {
    ComplexMatrix k0(2, 2), k1(2, 2);
    k0 << 1, 0, 0, std::sqrt(1 - gamma);
    k1 << 0, std::sqrt(gamma), 0, 0;
    return Channel(2, {k0, k1});
}

Channel Channel::dephasing(double p) {
    return Channel(2, {std::sqrt(1 - p) * ComplexMatrix(pauli_matrix(Pauli::I)),
                       std::sqrt(p) * ComplexMatrix(pauli_matrix(Pauli::Z))});
}

Channel Channel::random_unital(int dim, int kraus_count, std::uint64_t seed) {
    if (kraus_count < 1) {
        throw std::invalid_argument("random_unital: need at least one Kraus operator");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.05, 1.0);
    std::vector<double> weights(kraus_count);
    double total = 0;
    for (double &w : weights) {
        w = uni(rng);
        total += w;
    }
    std::vector<ComplexMatrix> kraus;
    for (double w : weights) {
        kraus.push_back(std::sqrt(w / total) * haar_random_unitary(dim, rng()));
    }
    return Channel(dim, std::move(kraus));
}

bool is_unital(const Channel &ch, double tol) {
    ComplexMatrix sum = ComplexMatrix::Zero(ch.dim(), ch.dim());
    for (const ComplexMatrix &k : ch.kraus()) {
        sum += k * k.adjoint();
    }
    return max_abs_diff(sum, ComplexMatrix::Identity(ch.dim(), ch.dim())) <= tol;
}

void check_density(const ComplexMatrix &rho, Eigen::Index dim) {
    if (rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument("density matrix is " + std::to_string(rho.rows()) + "x" +
                                    std::to_string(rho.cols()) + ", expected dimension " + std::to_string(dim));
    }
    if (!all_finite(rho) || max_abs_diff(rho, rho.adjoint()) > 1e-9) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - cd(1, 0)) > 1e-9) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
}

ComplexMatrix apply(const Channel &ch, const ComplexMatrix &rho) {
    check_density(rho, ch.dim());
    ComplexMatrix out = ComplexMatrix::Zero(ch.dim(), ch.dim());
    for (const ComplexMatrix &k : ch.kraus()) {
        out += k * rho * k.adjoint();
    }
    return out;
}

ChannelCut::ChannelCut(std::vector<ChannelCutTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) {
        return;
    }
    dim_a_ = terms_.front().block_a.dim();
    dim_b_ = terms_.front().block_b.dim();
    for (const ChannelCutTerm &t : terms_) {
        if (t.block_a.dim() != dim_a_ || t.block_b.dim() != dim_b_) {
            throw std::invalid_argument("channel cut terms have inconsistent block dimensions");
        }
    }
}

bool ChannelCut::all_unital(double tol) const {
    for (const ChannelCutTerm &t : terms_) {
        if (!is_unital(t.block_a, tol) || !is_unital(t.block_b, tol)) {
            return false;
        }
    }
    return true;
}

ComplexMatrix apply_cut(const ChannelCut &cut, const ComplexMatrix &rho) {
    if (cut.terms().empty()) {
        return ComplexMatrix::Zero(rho.rows(), rho.cols());
    }
    const Eigen::Index dim = Eigen::Index{cut.dim_a()} * cut.dim_b();
    if (rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument("apply_cut: input dimension does not match the cut");
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (const ChannelCutTerm &t : cut.terms()) {
        ComplexMatrix term = ComplexMatrix::Zero(dim, dim);
        for (const ComplexMatrix &ka : t.block_a.kraus()) {
            for (const ComplexMatrix &kb : t.block_b.kraus()) {
                ComplexMatrix k = kron(ka, kb);
                term += k * rho * k.adjoint();
            }
        }
        out += t.coef * term;
    }
    return out;
}

ComplexMatrix partial_trace_a(const ComplexMatrix &rho, int dim_a, int dim_b) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
    for (int a = 0; a < dim_a; ++a) {
        out += rho.block(a * dim_b, a * dim_b, dim_b, dim_b);
    }
    return out;
}

ComplexMatrix partial_trace_b(const ComplexMatrix &rho, int dim_a, int dim_b) {
    ComplexMatrix out(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i) {
        for (int j = 0; j < dim_a; ++j) {
            out(i, j) = rho.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
        }
    }
    return out;
}

ComplexMatrix clean_plus_mixed(const ProductState &clean, int mixed) {
    ComplexVector psi = clean.dense();
    ComplexMatrix rho_a = psi * psi.adjoint();
    const int dim_b = 1 << mixed;
    return kron(rho_a, ComplexMatrix::Identity(dim_b, dim_b) / static_cast<double>(dim_b));
}

namespace {

struct NogoSetup {
    int mixed;
    int dim_a;
    int dim_b;
};

NogoSetup setup(const Circuit &u, const ProductState &clean) {
    if (u.n() > kUnitaryMaxWires) {
        throw WidthLimitError("unital_nogo_witness: " + std::to_string(u.n()) + " wires exceeds the cap of " +
                              std::to_string(kUnitaryMaxWires));
    }
    const int mixed = u.n() - clean.n();
    if (mixed < 1) {
        throw std::invalid_argument("unital_nogo_witness: need at least one mixed wire");
    }
    return {mixed, 1 << clean.n(), 1 << mixed};
}

}  // namespace

NogoWitness unital_nogo_witness(const Circuit &u, const ProductState &clean) {
    NogoSetup s = setup(u, clean);
    ComplexMatrix rho = clean_plus_mixed(clean, s.mixed);
    check_density(rho, Eigen::Index{s.dim_a} * s.dim_b);
    ComplexMatrix um = unitary_of(u);
    ComplexMatrix out = um * rho * um.adjoint();
    NogoWitness w;
    w.block_b_output = partial_trace_a(out, s.dim_a, s.dim_b);
    w.distance = trace_distance(w.block_b_output, ComplexMatrix::Identity(s.dim_b, s.dim_b) / double(s.dim_b));
    return w;
}

CutBlockCheck check_unital_cut(const ChannelCut &cut, const Circuit &u, const ProductState &clean) {
    NogoSetup s = setup(u, clean);
    if (cut.dim_a() != s.dim_a || cut.dim_b() != s.dim_b) {
        throw std::invalid_argument("check_unital_cut: cut blocks do not match the clean/mixed split");
    }
    if (!cut.all_unital()) {
        throw std::invalid_argument("check_unital_cut: cut has a non-unital term");
    }
    const ComplexMatrix mixed_b = ComplexMatrix::Identity(s.dim_b, s.dim_b) / double(s.dim_b);
    ComplexMatrix x = apply_cut(cut, clean_plus_mixed(clean, s.mixed));

    CutBlockCheck check;
    check.factor_deviation = max_abs_diff(x, kron(partial_trace_b(x, s.dim_a, s.dim_b), mixed_b));
    cd tr = x.trace();
    NogoWitness truth = unital_nogo_witness(u, clean);
    if (std::abs(tr) > kCoefDropTol) {
        ComplexMatrix cut_b = partial_trace_a(x, s.dim_a, s.dim_b) / tr;
        check.block_b_deviation = max_abs_diff(cut_b, mixed_b);
        check.mismatch = trace_distance(truth.block_b_output, cut_b);
    } else {
        check.mismatch = truth.distance;
    }
    return check;
}

}  // namespace qcut
