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

#include "qcut/decompose.hpp"

#include <limits>

namespace qcut {

namespace {

void require_4x4(const ComplexMatrix &u, const char *who) {
    if (u.rows() != 4 || u.cols() != 4) {
        throw std::invalid_argument(std::string(who) + ": expected a 4x4 matrix, got " + std::to_string(u.rows()) +
                                    "x" + std::to_string(u.cols()));
    }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        throw std::overflow_error("term count overflows 64 bits");
    }
    return a * b;
}

}  // namespace

std::string_view cut_mode_name(CutMode mode) {
    return mode == CutMode::Schmidt ? "schmidt" : "pauli-unitary";
}

std::optional<CutMode> cut_mode_from_name(std::string_view name) {
    if (name == "schmidt") {
        return CutMode::Schmidt;
    }
    if (name == "pauli" || name == "pauli-unitary") {
        return CutMode::PauliUnitary;
    }
    return std::nullopt;
}

TermBudgetExceeded::TermBudgetExceeded(std::uint64_t required_, std::uint64_t budget_)
    : std::runtime_error("decomposition needs " + std::to_string(required_) + " terms, budget is " +
                         std::to_string(budget_)),
      required(required_),
      budget(budget_) {}

std::string PauliPairTerm::label() const { return {pauli_char(a), pauli_char(b)}; }

std::vector<PauliPairTerm> pauli_decompose(const ComplexMatrix &u) {
    require_4x4(u, "pauli_decompose");
    std::vector<PauliPairTerm> out;
    for (int pa = 0; pa < 4; ++pa) {
        for (int pb = 0; pb < 4; ++pb) {
            auto a = static_cast<Pauli>(pa);
            auto b = static_cast<Pauli>(pb);
            ComplexMatrix pq = kron(pauli_matrix(a), pauli_matrix(b));
            cd c = (pq.adjoint() * u).trace() / 4.0;
            if (std::abs(c) > kCoefDropTol) {
                out.push_back({c, a, b});
            }
        }
    }
    return out;
}

std::vector<GateCutTerm> operator_schmidt(const ComplexMatrix &u) {
    require_4x4(u, "operator_schmidt");
    // R[(ra,ca),(rb,cb)] = u[(ra,rb),(ca,cb)], every index a single bit.
    ComplexMatrix r(4, 4);
    for (int ra = 0; ra < 2; ++ra)
        for (int rb = 0; rb < 2; ++rb)
            for (int ca = 0; ca < 2; ++ca)
                for (int cb = 0; cb < 2; ++cb)
                    r(2 * ra + ca, 2 * rb + cb) = u(2 * ra + rb, 2 * ca + cb);

    Svd d = svd(r);
    int rank = numerical_rank(d.s);
    std::vector<GateCutTerm> out;
    for (int k = 0; k < rank; ++k) {
        if (d.s(k) <= kCoefDropTol) {
            break;
        }
        GateCutTerm t;
        t.coef = d.s(k);
        for (int row = 0; row < 2; ++row) {
            for (int col = 0; col < 2; ++col) {
                t.factor_a(row, col) = d.u(2 * row + col, k);
                t.factor_b(row, col) = d.vh(k, 2 * row + col);
            }
        }
        out.push_back(t);
    }
    return out;
}

std::vector<GateCutTerm> gate_cut(const Gate &g, CutMode mode) {
    if (!g.is_two_qubit()) {
        throw std::invalid_argument("gate_cut: " + g.name() + " is not a two-qubit gate");
    }
    return gate_cut_on(g, g.wire(0), g.wire(1), mode);
}

std::vector<GateCutTerm> gate_cut_on(const Gate &g, int p, int q, CutMode mode) {
    if (!g.is_two_qubit()) {
        throw std::invalid_argument("gate_cut: " + g.name() + " is not a two-qubit gate");
    }
    ComplexMatrix m = g.matrix2_on(p, q);
    if (mode == CutMode::Schmidt) {
        return operator_schmidt(m);
    }
    std::vector<GateCutTerm> out;
    for (const PauliPairTerm &t : pauli_decompose(m)) {
        out.push_back({t.coef, pauli_matrix(t.a), pauli_matrix(t.b)});
    }
    return out;
}

Mat4 reconstruct(const std::vector<GateCutTerm> &terms) {
    Mat4 out = Mat4::Zero();
    for (const GateCutTerm &t : terms) {
        out += t.coef * kron(t.factor_a, t.factor_b);
    }
    return out;
}

namespace {

struct PreparedCut {
    std::vector<std::vector<GateCutTerm>> per_gap;
    std::uint64_t count = 1;
};

PreparedCut prepare(const QuantumComb &comb, const std::vector<Gate> &gap_gates, CutMode mode) {
    ValidationReport report = validate(comb);
    if (!report.ok) {
        throw std::invalid_argument("cut_comb: invalid comb: " + report.message);
    }
    if (gap_gates.size() != comb.gaps.size()) {
        throw std::invalid_argument("cut_comb: " + std::to_string(gap_gates.size()) + " gap gates for " +
                                    std::to_string(comb.gaps.size()) + " gaps");
    }
    PreparedCut prep;
    prep.per_gap.reserve(gap_gates.size());
    for (std::size_t j = 0; j < gap_gates.size(); ++j) {
        prep.per_gap.push_back(gate_cut_on(gap_gates[j], comb.gaps[j].p, comb.gaps[j].q, mode));
        prep.count = checked_mul(prep.count, prep.per_gap.back().size());
    }
    return prep;
}

}  // namespace

std::uint64_t cut_term_count(const QuantumComb &comb, const std::vector<Gate> &gap_gates, CutMode mode) {
    return prepare(comb, gap_gates, mode).count;
}

CutDecomposition cut_comb(const QuantumComb &comb, const std::vector<Gate> &gap_gates, CutMode mode,
                          std::uint64_t max_terms, Exec exec) {
    PreparedCut prep = prepare(comb, gap_gates, mode);
    if (prep.count > max_terms) {
        throw TermBudgetExceeded(prep.count, max_terms);
    }
    const auto total = static_cast<std::int64_t>(prep.count);
    const std::size_t gaps = prep.per_gap.size();

    CutDecomposition dec{comb, mode, std::vector<CutTerm>(static_cast<std::size_t>(total))};
    // Term index -> per-gap digits, last gap fastest.
    auto build = [&](std::int64_t index) {
        CutTerm &term = dec.terms[static_cast<std::size_t>(index)];
        term.fillings.resize(gaps);
        term.coef = 1.0;
        std::int64_t rem = index;
        for (std::size_t j = gaps; j-- > 0;) {
            const auto &choices = prep.per_gap[j];
            const auto base = static_cast<std::int64_t>(choices.size());
            const GateCutTerm &t = choices[static_cast<std::size_t>(rem % base)];
            rem /= base;
            term.fillings[j] = ProductFilling{t.factor_a, t.factor_b};
            term.coef *= t.coef;
        }
    };
    if (exec == Exec::Serial) {
        for (std::int64_t i = 0; i < total; ++i) {
            build(i);
        }
    } else {
#pragma omp parallel for schedule(static) if (total >= 256)
        for (std::int64_t i = 0; i < total; ++i) {
            build(i);
        }
    }
    return dec;
}

std::vector<FirstQubitTerm> first_qubit_pauli_cut(const ComplexMatrix &u) {
    if (u.rows() != u.cols()) {
        throw std::invalid_argument("first_qubit_pauli_cut: matrix is not square");
    }
    int n = qubits_for_dim(u.rows());
    if (n < 2 || n > 12) {
        throw std::invalid_argument("first_qubit_pauli_cut: need 2 <= n <= 12, got " + std::to_string(n));
    }
    const Eigen::Index half = u.rows() / 2;
    std::vector<FirstQubitTerm> out;
    for (int p = 0; p < 4; ++p) {
        auto pauli = static_cast<Pauli>(p);
        const Mat2 &pm = pauli_matrix(pauli);
        // Tr_0((P^dagger (x) I) u) = sum_{r,s} conj(P[s,r]) u_{s,r}
        ComplexMatrix a = ComplexMatrix::Zero(half, half);
        for (int r = 0; r < 2; ++r) {
            for (int s = 0; s < 2; ++s) {
                cd w = std::conj(pm(s, r));
                if (w != cd(0, 0)) {
                    a += w * u.block(s * half, r * half, half, half);
                }
            }
        }
        a /= 2.0;
        if (a.cwiseAbs().maxCoeff() > kCoefDropTol) {
            out.push_back({pauli, std::move(a)});
        }
    }
    return out;
}

std::uint64_t recursive_cut_cost(std::uint64_t n, std::uint64_t a) {
    if (n < 1 || a < 1) {
        throw std::invalid_argument("recursive_cut_cost: n and A must be >= 1");
    }
    int rounds = 0;
    while (rounds < 64 && (std::uint64_t{1} << rounds) < n) {
        ++rounds;
    }
    std::uint64_t cost = 1;
    for (int i = 0; i < rounds; ++i) {
        cost = checked_mul(cost, a);
    }
    return cost;
}

}  // namespace qcut
