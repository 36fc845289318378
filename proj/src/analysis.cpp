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

#include "qcut/analysis.hpp"

#include <algorithm>
#include <chrono>

#include "qcut/gadget.hpp"
#include "qcut/simulate.hpp"

namespace qcut {

namespace {

struct Split {
    std::vector<int> a;  // partition wires, ascending
    std::vector<int> b;  // the rest, ascending
};

Split split_wires(const std::vector<int> &partition, int n) {
    if (n < 2) {
        throw std::invalid_argument("bipartition needs at least two wires");
    }
    std::vector<char> in(n, 0);
    for (int w : partition) {
        if (w < 0 || w >= n) {
            throw std::invalid_argument("partition wire " + std::to_string(w) + " out of range");
        }
        if (in[w]) {
            throw std::invalid_argument("partition lists wire " + std::to_string(w) + " twice");
        }
        in[w] = 1;
    }
    Split s;
    for (int w = 0; w < n; ++w) {
        (in[w] ? s.a : s.b).push_back(w);
    }
    if (s.a.empty() || s.b.empty()) {
        throw std::invalid_argument("partition must be a nonempty proper subset");
    }
    return s;
}

// For every full index x: its bits on the given wires packed in order.
std::vector<Eigen::Index> packed_bits(const std::vector<int> &wires, int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    std::vector<Eigen::Index> out(static_cast<std::size_t>(dim));
    for (Eigen::Index x = 0; x < dim; ++x) {
        Eigen::Index v = 0;
        for (int w : wires) {
            v = (v << 1) | ((x >> (n - 1 - w)) & 1);
        }
        out[static_cast<std::size_t>(x)] = v;
    }
    return out;
}

SchmidtData from_matrix(const ComplexMatrix &m, const std::vector<int> &partition) {
    Eigen::BDCSVD<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw NumericsError("Schmidt SVD failed to converge");
    }
    SchmidtData out;
    out.singular_values = solver.singularValues();
    out.rank = numerical_rank(out.singular_values);
    out.partition = partition;
    return out;
}

}  // namespace

SchmidtData state_schmidt(const ComplexVector &psi, const std::vector<int> &partition, int n) {
    if (psi.size() != (Eigen::Index{1} << n)) {
        throw std::invalid_argument("state_schmidt: state dimension is not 2^n");
    }
    Split s = split_wires(partition, n);
    auto ia = packed_bits(s.a, n);
    auto ib = packed_bits(s.b, n);
    ComplexMatrix m(Eigen::Index{1} << s.a.size(), Eigen::Index{1} << s.b.size());
    for (Eigen::Index x = 0; x < psi.size(); ++x) {
        m(ia[x], ib[x]) = psi[x];
    }
    return from_matrix(m, partition);
}

SchmidtData operator_schmidt_rank(const ComplexMatrix &op, const std::vector<int> &partition, int n) {
    if (n > kOperatorSchmidtMaxWires) {
        throw std::invalid_argument("operator_schmidt_rank: " + std::to_string(n) + " wires exceeds the cap of " +
                                    std::to_string(kOperatorSchmidtMaxWires));
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    if (op.rows() != dim || op.cols() != dim) {
        throw std::invalid_argument("operator_schmidt_rank: operator is not 2^n x 2^n");
    }
    Split s = split_wires(partition, n);
    auto ia = packed_bits(s.a, n);
    auto ib = packed_bits(s.b, n);
    const Eigen::Index da = Eigen::Index{1} << s.a.size();
    const Eigen::Index db = Eigen::Index{1} << s.b.size();
    // R[(rowA, colA), (rowB, colB)] = op[row, col]
    ComplexMatrix r(da * da, db * db);
    for (Eigen::Index col = 0; col < dim; ++col) {
        for (Eigen::Index row = 0; row < dim; ++row) {
            r(ia[row] * da + ia[col], ib[row] * db + ib[col]) = op(row, col);
        }
    }
    return from_matrix(r, partition);
}

Circuit bell_pairs_circuit(int n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("bell_pairs_circuit: n must be even and >= 2, got " + std::to_string(n));
    }
    Circuit c(n);
    for (int i = 0; i < n / 2; ++i) {
        c.append(Gate::h(i));
        c.append(Gate::cnot(i, i + n / 2));
    }
    return c;
}

std::vector<int> first_half(int n) {
    std::vector<int> out;
    for (int i = 0; i < n / 2; ++i) {
        out.push_back(i);
    }
    return out;
}

RankBoundReport rank_bound_check(const CutDecomposition &dec, const ProductState &in,
                                 const std::vector<int> &partition) {
    const int n = dec.comb.n;
    if (n > kOperatorSchmidtMaxWires) {
        throw std::invalid_argument("rank_bound_check: " + std::to_string(n) + " wires exceeds the cap of " +
                                    std::to_string(kOperatorSchmidtMaxWires));
    }
    if (in.n() != n) {
        throw std::invalid_argument("rank_bound_check: input width does not match the comb");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    RankBoundReport report;
    report.term_count = dec.terms.size();
    report.all_terms_local = true;
    ComplexMatrix op_sum = ComplexMatrix::Zero(dim, dim);
    report.output_state = ComplexVector::Zero(dim);

    for (std::size_t i = 0; i < dec.terms.size(); ++i) {
        std::vector<Filling> f(dec.terms[i].fillings.begin(), dec.terms[i].fillings.end());
        Circuit tc = fill(dec.comb, f);
        if (!is_swap_network(tc)) {
            throw std::invalid_argument("rank_bound_check: term " + std::to_string(i) +
                                        " is not a SWAP/single-qubit circuit");
        }
        LocalForm lf = swap_network_local_form(tc);
        if (!lf.identity_perm()) {
            throw std::invalid_argument("rank_bound_check: term " + std::to_string(i) +
                                        " has a non-identity net permutation");
        }
        ComplexMatrix op = lf.locals[0];
        ComplexMatrix state = lf.locals[0] * in.factor(0);
        for (int q = 1; q < n; ++q) {
            op = kron(op, lf.locals[q]);
            state = kron(state, lf.locals[q] * in.factor(q));
        }
        op_sum += dec.terms[i].coef * op;
        report.output_state += dec.terms[i].coef * state;
    }
    report.operator_rank = operator_schmidt_rank(op_sum, partition, n).rank;
    report.state_rank = state_schmidt(report.output_state, partition, n).rank;
    const auto l = static_cast<int>(report.term_count);
    report.ok = report.all_terms_local && report.operator_rank <= l && report.state_rank <= l;
    return report;
}

CutDecomposition truncate_terms(const CutDecomposition &dec, std::size_t count) {
    CutDecomposition out{dec.comb, dec.mode, {}};
    count = std::min(count, dec.terms.size());
    out.terms.assign(dec.terms.begin(), dec.terms.begin() + static_cast<std::ptrdiff_t>(count));
    return out;
}

double best_rank_fidelity(const ComplexVector &psi, const std::vector<int> &partition, int n, int L) {
    if (L < 1) {
        throw std::invalid_argument("best_rank_fidelity: L must be >= 1");
    }
    SchmidtData sd = state_schmidt(psi, partition, n);
    const double total = sd.singular_values.squaredNorm();
    if (total == 0.0) {
        throw std::invalid_argument("best_rank_fidelity: zero state");
    }
    const auto keep = std::min<Eigen::Index>(L, sd.singular_values.size());
    return sd.singular_values.head(keep).squaredNorm() / total;
}

double state_fidelity(const ComplexVector &a, const ComplexVector &b) {
    return std::norm(a.dot(b)) / (a.squaredNorm() * b.squaredNorm());
}

ScalingReport scaling_report(const Gate &gate, int k_max, CutMode mode, std::uint64_t budget) {
    if (!gate.is_two_qubit()) {
        throw std::invalid_argument("scaling_report: " + gate.name() + " is not a two-qubit gate");
    }
    if (k_max < 1) {
        throw std::invalid_argument("scaling_report: k_max must be >= 1");
    }
    ScalingReport report;
    report.mode = mode;
    report.per_gate = gate_cut(gate, mode).size();
    report.ok = true;
    const Gate placed = gate.with_wires({0, 1});
    std::uint64_t expected = 1;
    for (int k = 1; k <= k_max; ++k) {
        auto t0 = std::chrono::steady_clock::now();
        expected *= report.per_gate;
        Circuit c(2);
        for (int i = 0; i < k; ++i) {
            c.append(placed);
        }
        ExtractedComb ext = extract_comb(gadgetize(c));
        CutDecomposition dec = cut_comb(ext.comb, ext.gap_gates, mode, budget);
        ScalingRow row;
        row.k = k;
        row.terms = dec.term_count();
        row.expected = expected;
        row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        report.ok = report.ok && row.terms == row.expected;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace qcut
