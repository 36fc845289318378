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

#include "qcut/simulate.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "qcut/gadget.hpp"

namespace qcut {

namespace {

void check_width(int n, int cap, const char *who) {
    if (n > cap) {
        throw WidthLimitError(std::string(who) + ": " + std::to_string(n) + " wires exceeds the cap of " +
                              std::to_string(cap));
    }
}

void apply_gate(std::span<cd> psi, int n, const Gate &g, Exec exec) {
    if (g.is_two_qubit()) {
        kernels::apply_2q(psi, n, g.wire(0), g.wire(1), g.matrix2(), exec);
    } else {
        kernels::apply_1q(psi, n, g.wire(0), g.matrix1(), exec);
    }
}

}  // namespace

ComplexVector statevector(const Circuit &c, ComplexVector in, Exec exec) {
    check_width(c.n(), kStatevectorMaxWires, "statevector");
    if (in.size() != (Eigen::Index{1} << c.n())) {
        throw std::invalid_argument("statevector: input dimension does not match circuit width");
    }
    std::span<cd> psi(in.data(), static_cast<std::size_t>(in.size()));
    for (const Gate &g : c.gates()) {
        apply_gate(psi, c.n(), g, exec);
    }
    return in;
}

ComplexVector statevector(const Circuit &c, const ProductState &in, Exec exec) {
    check_width(c.n(), kStatevectorMaxWires, "statevector");
    if (in.n() != c.n()) {
        throw std::invalid_argument("statevector: input has " + std::to_string(in.n()) + " wires, circuit has " +
                                    std::to_string(c.n()));
    }
    return statevector(c, in.dense(), exec);
}

ComplexMatrix unitary_of(const Circuit &c, Exec exec) {
    check_width(c.n(), kUnitaryMaxWires, "unitary_of");
    const Eigen::Index dim = Eigen::Index{1} << c.n();
    ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
    // Columns are independent; each one runs the serial kernels.
    auto column = [&](Eigen::Index j) {
        std::span<cd> psi(u.col(j).data(), static_cast<std::size_t>(dim));
        for (const Gate &g : c.gates()) {
            apply_gate(psi, c.n(), g, Exec::Serial);
        }
    };
    if (exec == Exec::Serial) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            column(j);
        }
    } else {
#pragma omp parallel for schedule(static) if (dim >= 64)
        for (Eigen::Index j = 0; j < dim; ++j) {
            column(j);
        }
    }
    return u;
}

double dense_expectation(const Circuit &c, const ProductState &in, const PauliObservable &m) {
    if (m.n() != c.n()) {
        throw std::invalid_argument("observable width does not match circuit width");
    }
    cd e = expectation(statevector(c, in), m);
    if (std::abs(e.imag()) > 1e-9) {
        throw NumericsError("expectation has imaginary residue " + std::to_string(e.imag()));
    }
    return e.real();
}

bool LocalForm::identity_perm() const {
    for (std::size_t q = 0; q < perm.size(); ++q) {
        if (perm[q] != static_cast<int>(q)) {
            return false;
        }
    }
    return true;
}

ComplexMatrix LocalForm::dense() const {
    ComplexMatrix prod = locals[0];
    for (std::size_t q = 1; q < locals.size(); ++q) {
        prod = kron(prod, locals[q]);
    }
    return permutation_operator(perm) * prod;
}

ComplexMatrix permutation_operator(const std::vector<int> &perm) {
    const int n = static_cast<int>(perm.size());
    const Eigen::Index dim = Eigen::Index{1} << n;
    ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        Eigen::Index y = 0;
        for (int q = 0; q < n; ++q) {
            if ((x >> (n - 1 - q)) & 1) {
                y |= Eigen::Index{1} << (n - 1 - perm[q]);
            }
        }
        p(y, x) = 1.0;
    }
    return p;
}

bool is_swap_network(const Circuit &c) {
    for (const Gate &g : c.gates()) {
        if (g.is_two_qubit() && !g.is_swap()) {
            return false;
        }
    }
    return true;
}

namespace {

void require_swap_network(const Circuit &c, const char *who) {
    for (const Gate &g : c.gates()) {
        if (g.is_two_qubit() && !g.is_swap()) {
            throw std::invalid_argument(std::string(who) + ": " + g.name() +
                                        " is a two-qubit gate other than SWAP");
        }
    }
}

}  // namespace

LocalForm swap_network_local_form(const Circuit &c) {
    require_swap_network(c, "swap_network_local_form");
    const int n = c.n();
    LocalForm lf{std::vector<int>(n), std::vector<Mat2>(n, Mat2::Identity())};
    // at[w]: starting wire of the qubit currently on wire w.
    std::vector<int> at(n);
    std::iota(at.begin(), at.end(), 0);
    for (const Gate &g : c.gates()) {
        if (g.is_swap()) {
            std::swap(at[g.wire(0)], at[g.wire(1)]);
        } else {
            Mat2 &local = lf.locals[at[g.wire(0)]];
            local = g.matrix1() * local;
        }
    }
    for (int w = 0; w < n; ++w) {
        lf.perm[at[w]] = w;
    }
    return lf;
}

std::vector<Vec2> propagate_product(const Circuit &c, std::vector<Vec2> factors) {
    if (static_cast<int>(factors.size()) != c.n()) {
        throw std::invalid_argument("propagate_product: factor count does not match circuit width");
    }
    for (const Gate &g : c.gates()) {
        if (g.is_swap()) {
            std::swap(factors[g.wire(0)], factors[g.wire(1)]);
        } else if (g.is_two_qubit()) {
            throw std::invalid_argument("propagate_product: " + g.name() + " is a two-qubit gate other than SWAP");
        } else {
            factors[g.wire(0)] = g.matrix1() * factors[g.wire(0)];
        }
    }
    return factors;
}

ProductState swap_network_run(const Circuit &c, const ProductState &in) {
    require_swap_network(c, "swap_network_run");
    for (const Gate &g : c.gates()) {
        if (!g.is_unitary()) {
            throw std::invalid_argument("swap_network_run: " + g.name() + " is not unitary");
        }
    }
    std::vector<Vec2> out = propagate_product(c, in.factors());
    // Renormalize away roundoff accumulated over long gate sequences.
    for (Vec2 &f : out) {
        f.normalize();
    }
    return ProductState(std::move(out));
}

namespace {

void check_decomposition(const CutDecomposition &dec, const ProductState &in, const PauliObservable &m) {
    ValidationReport report = validate(dec.comb);
    if (!report.ok) {
        throw std::invalid_argument("evaluate_cut: invalid comb: " + report.message);
    }
    for (std::size_t i = 0; i < dec.terms.size(); ++i) {
        if (dec.terms[i].fillings.size() != dec.comb.gaps.size()) {
            throw std::invalid_argument("evaluate_cut: term " + std::to_string(i) + " has " +
                                        std::to_string(dec.terms[i].fillings.size()) + " fillings for " +
                                        std::to_string(dec.comb.gaps.size()) + " gaps");
        }
    }
    if (in.n() != dec.comb.n || m.n() != dec.comb.n) {
        throw std::invalid_argument("evaluate_cut: input/observable width does not match the comb");
    }
}

std::vector<Filling> as_fillings(const std::vector<ProductFilling> &pf) {
    return {pf.begin(), pf.end()};
}

}  // namespace

CutEvaluation evaluate_cut(const CutDecomposition &dec, const ProductState &in, const PauliObservable &m,
                           Exec exec) {
    check_decomposition(dec, in, m);
    CutEvaluation result;
    const auto terms = static_cast<std::int64_t>(dec.terms.size());
    if (terms == 0) {
        return result;
    }
    const int n = dec.comb.n;
    std::vector<cd> coefs(static_cast<std::size_t>(terms));
    for (std::int64_t i = 0; i < terms; ++i) {
        coefs[i] = dec.terms[i].coef;
    }

    bool swap_path = true;
    for (const Gate &g : dec.comb.fixed_gates) {
        if (g.is_two_qubit() && !g.is_swap()) {
            swap_path = false;
            break;
        }
    }

    KahanSum total;
    if (swap_path) {
        result.swap_network_path = true;
        std::vector<Vec2> factors(static_cast<std::size_t>(terms * n));
        auto run_term = [&](std::int64_t i) {
            Circuit tc = fill(dec.comb, as_fillings(dec.terms[i].fillings));
            std::vector<Vec2> out = propagate_product(tc, in.factors());
            std::copy(out.begin(), out.end(), factors.begin() + i * n);
        };
        if (exec == Exec::Serial) {
            for (std::int64_t i = 0; i < terms; ++i) run_term(i);
        } else {
#pragma omp parallel for schedule(static) if (terms >= 64)
            for (std::int64_t i = 0; i < terms; ++i) run_term(i);
        }
        for (const PauliString &s : m.terms()) {
            cd cross = kernels::product_cross_sum(coefs, factors, n, s.paulis, exec);
            total.add(s.weight * cross);
        }
    } else {
        check_width(n, kStatevectorMaxWires, "evaluate_cut");
        const Eigen::Index dim = Eigen::Index{1} << n;
        ComplexVector sum = ComplexVector::Zero(dim);
        ComplexVector carry = ComplexVector::Zero(dim);
        const ComplexVector start = in.dense();
        for (std::int64_t i = 0; i < terms; ++i) {
            Circuit tc = fill(dec.comb, as_fillings(dec.terms[i].fillings));
            ComplexVector psi = statevector(tc, start, exec);
            for (Eigen::Index k = 0; k < dim; ++k) {
                cd y = coefs[i] * psi[k] - carry[k];
                cd t = sum[k] + y;
                carry[k] = (t - sum[k]) - y;
                sum[k] = t;
            }
        }
        total.add(expectation(sum, m));
    }
    result.expectation = total.sum.real();
    result.imag_residue = std::abs(total.sum.imag());
    return result;
}

double uncut_expectation(const QuantumComb &comb, const std::vector<Gate> &gap_gates, const ProductState &in,
                         const PauliObservable &m) {
    std::vector<Filling> f(gap_gates.begin(), gap_gates.end());
    return dense_expectation(fill(comb, f), in, m);
}

namespace {

// Unitary factors of a gate that is a tensor product of two unitaries, if it is one.
std::optional<ProductFilling> exact_product_factors(const Gate &g, int p, int q) {
    std::vector<GateCutTerm> terms = gate_cut_on(g, p, q, CutMode::Schmidt);
    if (terms.size() != 1) {
        return std::nullopt;
    }
    // u = s A (x) B with |A|_F = |B|_F = 1; unitary factors have Frobenius norm sqrt(2).
    const double s = terms[0].coef.real();
    Mat2 a = std::sqrt(2.0) * terms[0].factor_a;
    Mat2 b = (s / std::sqrt(2.0)) * terms[0].factor_b;
    if (!is_unitary(a) || !is_unitary(b)) {
        return std::nullopt;
    }
    return ProductFilling{a, b};
}

double filled_expectation(const QuantumComb &comb, const std::vector<ProductFilling> &pf, const ProductState &in,
                          const PauliObservable &m) {
    return dense_expectation(fill(comb, as_fillings(pf)), in, m);
}

}  // namespace

OneTermPartition one_term_partition(const QuantumComb &comb, const std::vector<Gate> &gap_gates,
                                    const ProductState &in, const PauliObservable &m, std::uint64_t seed,
                                    int max_tries) {
    ValidationReport report = validate(comb);
    if (!report.ok) {
        throw std::invalid_argument("one_term_partition: invalid comb: " + report.message);
    }
    if (gap_gates.size() != comb.gaps.size()) {
        throw std::invalid_argument("one_term_partition: gap gate count does not match the comb");
    }
    OneTermPartition out;
    out.gamma = uncut_expectation(comb, gap_gates, in, m);
    if (std::abs(out.gamma) <= kCoefDropTol) {
        out.gamma_zero = true;
        out.alpha = 0.0;
        out.fillings.assign(comb.gaps.size(), ProductFilling{});
        out.gamma_filled = filled_expectation(comb, out.fillings, in, m);
        out.scaled = 0.0;
        return out;
    }

    auto accept = [&](std::vector<ProductFilling> pf) {
        double filled = filled_expectation(comb, pf, in, m);
        ++out.samples;
        if (std::abs(filled) <= 1e-10) {
            return false;
        }
        double ratio = out.gamma / filled;
        if (ratio <= 0.0) {
            return false;
        }
        out.alpha = std::sqrt(ratio);
        out.fillings = std::move(pf);
        out.gamma_filled = filled;
        out.scaled = std::norm(out.alpha) * filled;
        return true;
    };

    std::vector<ProductFilling> exact;
    for (std::size_t j = 0; j < gap_gates.size(); ++j) {
        auto f = exact_product_factors(gap_gates[j], comb.gaps[j].p, comb.gaps[j].q);
        if (!f) {
            exact.clear();
            break;
        }
        exact.push_back(*f);
    }
    if (exact.size() == gap_gates.size() && out.samples < max_tries && accept(exact)) {
        return out;
    }

    std::mt19937_64 rng(seed);
    while (out.samples < max_tries) {
        std::vector<ProductFilling> pf(comb.gaps.size());
        for (ProductFilling &f : pf) {
            f.a = haar_random_unitary(2, rng());
            f.b = haar_random_unitary(2, rng());
        }
        if (accept(std::move(pf))) {
            return out;
        }
    }
    throw SearchExhausted("one_term_partition: no admissible filling in " + std::to_string(max_tries) +
                          " samples");
}

PipelineResult pipeline_simulate(const Circuit &c, const ProductState &in, const PauliObservable &m, CutMode mode,
                                 std::uint64_t budget, Exec exec) {
    auto t0 = std::chrono::steady_clock::now();
    if (in.n() != c.n() || m.n() != c.n()) {
        throw std::invalid_argument("pipeline: input/observable width does not match the circuit");
    }
    GadgetizedCircuit g = gadgetize(c);
    ExtractedComb ext = extract_comb(g);
    std::uint64_t count = cut_term_count(ext.comb, ext.gap_gates, mode);
    if (count > budget) {
        throw TermBudgetExceeded(count, budget);
    }
    CutDecomposition dec = cut_comb(ext.comb, ext.gap_gates, mode, budget, exec);
    const int extra = g.circuit.n() - c.n();
    CutEvaluation ev = evaluate_cut(dec, in.extended(extra), m.extended(extra), exec);
    if (ev.imag_residue > 1e-9) {
        throw NumericsError("pipeline: expectation has imaginary residue " + std::to_string(ev.imag_residue));
    }
    PipelineResult out;
    out.expectation = ev.expectation;
    out.term_count = count;
    out.mode = mode;
    out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace qcut
