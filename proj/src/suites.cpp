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

#include "qcut/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>

#include "qcut/analysis.hpp"
#include "qcut/channels.hpp"
#include "qcut/gadget.hpp"
#include "qcut/generators.hpp"
#include "qcut/simulate.hpp"

namespace qcut {

bool SuiteResult::overall() const {
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck &c) { return c.pass; });
}

std::vector<const SuiteCheck *> SuiteResult::failures() const {
    std::vector<const SuiteCheck *> out;
    for (const SuiteCheck &c : checks) {
        if (!c.pass) {
            out.push_back(&c);
        }
    }
    return out;
}

void SuiteResult::near(std::string name, double measured, double expected, double tolerance) {
    checks.push_back({std::move(name), std::abs(measured - expected) <= tolerance, measured, expected, tolerance});
}

void SuiteResult::at_most(std::string name, double measured, double bound) {
    checks.push_back({std::move(name), measured <= bound, measured, bound, 0.0});
}

void SuiteResult::at_least(std::string name, double measured, double bound) {
    checks.push_back({std::move(name), measured >= bound, measured, bound, 0.0});
}

void SuiteResult::holds(std::string name, bool ok) {
    checks.push_back({std::move(name), ok, ok ? 1.0 : 0.0, 1.0, 0.0});
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<CutMode> modes_of(const SuiteParams &p) {
    if (p.mode) {
        return {*p.mode};
    }
    return {CutMode::Schmidt, CutMode::PauliUnitary};
}

std::string mode_str(CutMode m) { return std::string(cut_mode_name(m)); }

Gate named_two_qubit_gate(const std::string &name) {
    auto kind = gate_kind_from_name(name);
    if (!kind || gate_kind_arity(*kind) != 2 || *kind == GateKind::Custom2) {
        throw std::invalid_argument("unknown two-qubit gate \"" + name + "\"");
    }
    return Gate::named(*kind, {0, 1});
}

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= base;
    }
    return out;
}

// psi (x) |0...0> on `extra` trailing wires.
ComplexVector with_zero_ancillas(const ComplexVector &psi, int extra) {
    ComplexVector out = ComplexVector::Zero(psi.size() << extra);
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        out[i << extra] = psi[i];
    }
    return out;
}

double vec_diff(const ComplexVector &a, const ComplexVector &b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

SuiteResult gate_cut_suite(const SuiteParams &params) {
    SuiteResult r{"gate-cut", {}, {}};
    const std::vector<std::pair<std::string, std::pair<int, int>>> named{
        {"CZ", {2, 4}}, {"CNOT", {2, 4}}, {"SWAP", {4, 4}}};
    for (CutMode mode : {CutMode::Schmidt, CutMode::PauliUnitary}) {
        double worst = 0.0;
        for (const auto &[name, counts] : named) {
            auto t0 = Clock::now();
            Gate g = named_two_qubit_gate(name);
            auto terms = gate_cut(g, mode);
            worst = std::max(worst, (reconstruct(terms) - g.matrix2()).norm());
            const int expected = mode == CutMode::Schmidt ? counts.first : counts.second;
            r.near("L(" + name + ") " + mode_str(mode), static_cast<double>(terms.size()), expected, 0.0);
            r.rows.push_back({name, mode_str(mode), terms.size(), std::nullopt, std::nullopt, ms_since(t0)});
        }
        r.at_most("named gates: max Frobenius reconstruction error, " + mode_str(mode), worst, 1e-9);
    }
    const int count = params.instances.value_or(50);
    for (CutMode mode : {CutMode::Schmidt, CutMode::PauliUnitary}) {
        Rng rng(params.seed);
        double worst = 0.0;
        for (int i = 0; i < count; ++i) {
            Gate g = Gate::custom2(haar_random_unitary(4, rng()), 0, 1);
            worst = std::max(worst, (reconstruct(gate_cut(g, mode)) - g.matrix2()).norm());
        }
        r.at_most(std::to_string(count) + " Haar gates: max Frobenius reconstruction error, " + mode_str(mode), worst,
                  1e-9);
    }
    return r;
}

SuiteResult scaling_suite(const SuiteParams &params) {
    SuiteResult r{"scaling", {}, {}};
    Gate gate = named_two_qubit_gate(params.gate);
    for (CutMode mode : modes_of(params)) {
        ScalingReport rep = scaling_report(gate, params.k_max, mode, params.budget);
        for (const ScalingRow &row : rep.rows) {
            r.near("L(k=" + std::to_string(row.k) + ") " + mode_str(mode), static_cast<double>(row.terms),
                   static_cast<double>(row.expected), 0.0);
            r.rows.push_back({std::to_string(row.k), mode_str(mode), row.terms, std::nullopt, std::nullopt,
                              row.wall_ms});
        }
    }
    return r;
}

SuiteResult pipeline_suite(const SuiteParams &params) {
    SuiteResult r{"thm2-pipeline", {}, {}};
    const int n = params.n.value_or(3);
    if (n < 2 || n + 2 > 10) {
        throw std::invalid_argument("thm2-pipeline: n must lie in [2, 8] so the gadget width stays <= 10");
    }
    Gate gate = named_two_qubit_gate(params.gate);
    {
        Circuit c(2);
        c.append(Gate::h(0));
        c.append(Gate::cz(0, 1));
        PipelineResult res =
            pipeline_simulate(c, ProductState::zeros(2), parse_observable("ZI"), CutMode::Schmidt, params.budget);
        r.near("H,CZ on |00>, <Z0>", res.expectation, 0.0, 1e-8);
        r.near("H,CZ on |00>, term count", static_cast<double>(res.term_count), 2, 0.0);
    }
    for (CutMode mode : modes_of(params)) {
        const std::uint64_t c = gate_cut(gate, mode).size();
        for (int k = 1; k <= params.k_max; ++k) {
            Rng rng(params.seed + static_cast<std::uint64_t>(k));
            Circuit circ(n);
            for (int i = 0; i < k; ++i) {
                circ.append(random_single_qubit_gate(std::uniform_int_distribution<int>(0, n - 1)(rng), rng));
                Gate placed = random_gate(n, GateSet::EntanglingOnly, rng);
                circ.append(gate.with_wires(placed.wires()));
            }
            for (int q = 0; q < n; ++q) {
                circ.append(random_single_qubit_gate(q, rng));
            }
            ProductState in = random_product_state(n, rng);
            PauliObservable m = random_observable(n, 3, rng);
            PipelineResult res = pipeline_simulate(circ, in, m, mode, params.budget);
            const double dense = dense_expectation(circ, in, m);
            const std::string tag = "k=" + std::to_string(k) + " " + mode_str(mode);
            r.near("expectation vs dense, " + tag, res.expectation, dense, 1e-8);
            r.near("term count, " + tag, static_cast<double>(res.term_count), static_cast<double>(ipow(c, k)), 0.0);
            r.rows.push_back(
                {std::to_string(k), mode_str(mode), res.term_count, std::nullopt, std::nullopt, res.wall_ms});
        }
    }
    return r;
}

SuiteResult gadget_suite(const SuiteParams &params) {
    SuiteResult r{"gadget", {}, {}};
    const int count = params.instances.value_or(100);
    for (GadgetVariant variant : {GadgetVariant::V1, GadgetVariant::V2}) {
        const std::string tag = variant == GadgetVariant::V1 ? "v1" : "v2";
        Rng rng(params.seed);
        double worst = 0.0;
        int malformed = 0;
        int off_pair = 0;
        int bad_perm = 0;
        auto t0 = Clock::now();
        for (int i = 0; i < count; ++i) {
            const int n = std::uniform_int_distribution<int>(2, 5)(rng);
            const int gates = std::uniform_int_distribution<int>(1, 12)(rng);
            Circuit c = random_circuit(n, gates, GateSet::General, rng);
            ProductState in = random_product_state(n, rng);
            GadgetizedCircuit g = gadgetize(c, variant);
            const int extra = g.circuit.n() - n;
            ComplexVector expect = with_zero_ancillas(statevector(c, in), extra);
            worst = std::max(worst, vec_diff(statevector(g.circuit, in.extended(extra)), expect));
            malformed += check_gadget(g).has_value() ? 1 : 0;
            for (const Gate &gate : g.circuit.gates()) {
                if (gate.is_two_qubit() && !gate.is_swap()) {
                    const bool on_pair = (gate.wire(0) == g.anc_a && gate.wire(1) == g.anc_b) ||
                                         (gate.wire(0) == g.anc_b && gate.wire(1) == g.anc_a);
                    off_pair += on_pair ? 0 : 1;
                }
            }
            std::vector<int> perm = inserted_swap_permutation(g);
            for (int w = 0; w < g.circuit.n(); ++w) {
                if (perm[w] != w) {
                    ++bad_perm;
                    break;
                }
            }
        }
        r.at_most("max state deviation on original wires, " + tag, worst, 1e-9);
        r.near("check_gadget failures, " + tag, malformed, 0, 0);
        r.near("non-SWAP two-qubit gates off the ancilla pair, " + tag, off_pair, 0, 0);
        r.near("circuits with non-identity inserted-SWAP permutation, " + tag, bad_perm, 0, 0);
        r.rows.push_back({std::to_string(count), tag, std::nullopt, std::nullopt, std::nullopt, ms_since(t0)});
    }
    Circuit one(2);
    one.append(Gate::cnot(0, 1));
    auto swaps = [](const GadgetizedCircuit &g) {
        return std::count_if(g.circuit.gates().begin(), g.circuit.gates().end(),
                             [](const Gate &x) { return x.is_swap(); });
    };
    r.near("inserted SWAPs for one CNOT, v1", static_cast<double>(swaps(gadgetize(one))), 4, 0);
    r.near("inserted SWAPs for one CNOT, v2", static_cast<double>(swaps(gadgetize_v2(one))), 8, 0);
    return r;
}

SuiteResult swap_network_suite(const SuiteParams &params) {
    SuiteResult r{"swap-network", {}, {}};
    const int count = params.instances.value_or(100);
    {
        Rng rng(params.seed);
        double worst = 0.0;
        auto t0 = Clock::now();
        for (int i = 0; i < count; ++i) {
            Circuit c = random_circuit(8, 40, GateSet::SwapNetwork, rng);
            ProductState in = random_product_state(8, rng);
            worst = std::max(worst, vec_diff(swap_network_run(c, in).dense(), statevector(c, in)));
        }
        r.at_most("n=8: max deviation from dense statevector", worst, 1e-9);
        r.rows.push_back({"8", "swap-network", std::nullopt, std::nullopt, std::nullopt, ms_since(t0)});
    }
    {
        Rng rng(params.seed + 1);
        double worst = 0.0;
        for (int n = 1; n <= 8; ++n) {
            for (int i = 0; i < 5; ++i) {
                Circuit c = random_circuit(n, 30, GateSet::SwapNetwork, rng);
                worst = std::max(worst, max_abs_diff(swap_network_local_form(c).dense(), unitary_of(c)));
            }
        }
        r.at_most("n<=8: max |P*(x)locals - U|", worst, 1e-9);
    }
    {
        Rng rng(params.seed + 2);
        Circuit c = random_circuit(200, 10000, GateSet::SwapNetwork, rng);
        ProductState in = random_product_state(200, rng);
        auto t0 = Clock::now();
        ProductState out = swap_network_run(c, in);
        const double ms = ms_since(t0);
        double worst = 0.0;
        for (const Vec2 &f : out.factors()) {
            worst = std::max(worst, std::abs(f.norm() - 1.0));
        }
        r.at_most("n=200, 10^4 gates: max factor norm deviation", worst, 1e-12);
        r.rows.push_back({"200", "swap-network", std::nullopt, std::nullopt, std::nullopt, ms});
    }
    return r;
}

SuiteResult lemma1_suite(const SuiteParams &params) {
    SuiteResult r{"lemma1", {}, {}};
    const int count = params.instances.value_or(50);
    double worst = 0.0;
    int max_samples = 0;
    int exhausted = 0;
    bool unitary_factors = true;
    for (int i = 0; i < count; ++i) {
        Rng rng(params.seed + static_cast<std::uint64_t>(i));
        auto t0 = Clock::now();
        QuantumComb comb;
        comb.n = 3;
        comb.partition = {0};
        for (int q = 0; q < 3; ++q) {
            comb.fixed_gates.push_back(random_single_qubit_gate(q, rng));
        }
        comb.fixed_gates.push_back(std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? Gate::cnot(1, 2)
                                                                                       : Gate::cz(1, 2));
        comb.gaps.push_back({4, 0, 1});
        for (int q = 0; q < 3; ++q) {
            comb.fixed_gates.push_back(random_single_qubit_gate(q, rng));
        }
        std::vector<Gate> gap_gates{Gate::custom2(haar_random_unitary(4, rng()), 0, 1)};
        ProductState in = random_product_state(3, rng);
        PauliObservable drawn = random_observable(3, 1, rng);
        PauliObservable m(3, {PauliString{1.0, drawn.terms()[0].paulis}});
        try {
            OneTermPartition res = one_term_partition(comb, gap_gates, in, m, rng(), 100);
            worst = std::max(worst, std::abs(res.scaled - res.gamma));
            max_samples = std::max(max_samples, res.samples);
            for (const ProductFilling &f : res.fillings) {
                unitary_factors = unitary_factors && is_unitary(f.a) && is_unitary(f.b);
            }
            r.rows.push_back({std::to_string(i), "one-term", 1, std::nullopt, std::nullopt, ms_since(t0)});
        } catch (const SearchExhausted &) {
            ++exhausted;
        }
    }
    r.at_most("max |scaled - gamma| over " + std::to_string(count) + " instances", worst, 1e-9);
    r.at_most("max samples", max_samples, 100);
    r.near("instances with search exhausted", exhausted, 0, 0);
    r.holds("returned fillings are single-qubit unitaries", unitary_factors);

    {
        // Z on a wire left in |+>: the uncut expectation vanishes.
        QuantumComb comb;
        comb.n = 3;
        comb.partition = {0};
        comb.gaps.push_back({0, 0, 1});
        OneTermPartition res = one_term_partition(comb, {Gate::cz(0, 1)}, parse_product_state("0,0,+"),
                                                  parse_observable("IIZ"), params.seed, 100);
        r.holds("gamma = 0 branch taken", res.gamma_zero);
        r.near("gamma = 0 branch: |alpha0|", std::abs(res.alpha), 0.0, 0.0);
    }
    {
        // A gap gate that is already a tensor product is its own one-term partition.
        Rng rng(params.seed);
        QuantumComb comb;
        comb.n = 3;
        comb.partition = {0};
        comb.fixed_gates = {Gate::h(0), Gate::h(1), Gate::cnot(1, 2)};
        comb.gaps.push_back({3, 0, 1});
        Mat4 product = kron(haar_random_unitary(2, rng()), haar_random_unitary(2, rng()));
        ProductState in = random_product_state(3, rng);
        OneTermPartition res =
            one_term_partition(comb, {Gate::custom2(product, 0, 1)}, in, parse_observable("ZZZ + 0.5*XIY"), rng(), 100);
        r.near("tensor-product gap: alpha0", std::abs(res.alpha), 1.0, 1e-9);
        r.near("tensor-product gap: samples", res.samples, 1, 0);
    }
    return r;
}

SuiteResult thm3_suite(const SuiteParams &params) {
    SuiteResult r{"thm3", {}, {}};
    std::vector<int> sizes = params.n ? std::vector<int>{*params.n} : std::vector<int>{2, 4, 6, 8};
    for (int n : sizes) {
        if (n < 2 || n > 8 || n % 2 != 0) {
            throw std::invalid_argument("thm3: n must be even and in [2, 8], got " + std::to_string(n));
        }
    }
    for (int n : sizes) {
        auto t0 = Clock::now();
        const std::string tag = "n=" + std::to_string(n);
        const auto full_rank = static_cast<int>(ipow(2, n / 2));
        const std::vector<int> part = first_half(n);

        ComplexVector psi = statevector(bell_pairs_circuit(n), ProductState::zeros(n));
        const int bell_rank = state_schmidt(psi, part, n).rank;
        r.near("Bell-pairs state rank, " + tag, bell_rank, full_rank, 0);

        GadgetizedCircuit g = gadgetize(bell_pairs_circuit(n));
        ExtractedComb ext = extract_comb(g);
        CutDecomposition dec = cut_comb(ext.comb, ext.gap_gates, CutMode::Schmidt);
        const int width = g.circuit.n();
        const ProductState in = ProductState::zeros(width);
        const ComplexVector target = with_zero_ancillas(psi, width - n);

        RankBoundReport full = rank_bound_check(dec, in, part);
        const auto L = static_cast<double>(dec.term_count());
        r.at_least("term count L >= 2^(n/2), " + tag, L, full_rank);
        r.at_most("exact cut: state reconstruction error, " + tag, vec_diff(full.output_state, target), 1e-8);
        r.at_most("exact cut: operator rank <= L, " + tag, full.operator_rank, L);
        r.near("exact cut: output state rank, " + tag, full.state_rank, full_rank, 0);
        r.rows.push_back({std::to_string(n), "schmidt", dec.term_count(), full.state_rank,
                          state_fidelity(full.output_state, target), ms_since(t0)});

        for (int lp = 1; lp < full_rank; ++lp) {
            auto t1 = Clock::now();
            const std::string ltag = tag + " L'=" + std::to_string(lp);
            RankBoundReport trunc = rank_bound_check(truncate_terms(dec, static_cast<std::size_t>(lp)), in, part);
            const double law = std::min(1.0, lp * std::pow(2.0, -n / 2.0));
            const double best = best_rank_fidelity(psi, part, n, lp);
            const double got =
                trunc.output_state.squaredNorm() > 0.0 ? state_fidelity(trunc.output_state, target) : 0.0;
            r.at_most("truncated state rank <= L', " + ltag, trunc.state_rank, lp);
            r.near("best rank-L' fidelity = min(1, L' 2^(-n/2)), " + ltag, best, law, 1e-10);
            r.near("truncated-sum fidelity = min(1, L' 2^(-n/2)), " + ltag, got, law, 1e-10);
            r.rows.push_back({std::to_string(n), "schmidt", static_cast<std::uint64_t>(lp), trunc.state_rank, got,
                              ms_since(t1)});
        }
    }
    return r;
}

SuiteResult fidelity_suite(const SuiteParams &params) {
    SuiteResult r{"fidelity", {}, {}};
    std::vector<int> sizes = params.n ? std::vector<int>{*params.n} : std::vector<int>{2, 4, 6, 8};
    for (int n : sizes) {
        if (n < 2 || n > kStatevectorMaxWires || n % 2 != 0) {
            throw std::invalid_argument("fidelity: n must be even and in [2, 14], got " + std::to_string(n));
        }
    }
    for (int n : sizes) {
        ComplexVector psi = statevector(bell_pairs_circuit(n), ProductState::zeros(n));
        const std::vector<int> part = first_half(n);
        const auto full_rank = static_cast<int>(ipow(2, n / 2));
        for (int l = 1; l <= full_rank + 1; ++l) {
            auto t0 = Clock::now();
            const double law = std::min(1.0, l * std::pow(2.0, -n / 2.0));
            const double f = best_rank_fidelity(psi, part, n, l);
            r.near("n=" + std::to_string(n) + " L=" + std::to_string(l), f, law, 1e-10);
            r.rows.push_back({std::to_string(n), "best-rank", static_cast<std::uint64_t>(l),
                              std::min(l, full_rank), f, ms_since(t0)});
        }
    }
    ProductState product = ProductState(std::vector<Vec2>{Vec2(1, 0), Vec2(std::sqrt(0.5), std::sqrt(0.5))});
    r.near("product state, L=1", best_rank_fidelity(product.dense(), {0}, 2, 1), 1.0, 1e-12);
    return r;
}

SuiteResult unital_nogo_suite(const SuiteParams &params) {
    SuiteResult r{"unital-nogo", {}, {}};
    Circuit swap(2);
    swap.append(Gate::swap(0, 1));
    const ProductState clean = ProductState::zeros(1);
    {
        auto t0 = Clock::now();
        NogoWitness w = unital_nogo_witness(swap, clean);
        r.near("SWAP witness distance", w.distance, 0.5, 1e-12);
        r.rows.push_back({"1", "SWAP", std::nullopt, std::nullopt, std::nullopt, ms_since(t0)});
    }
    r.near("identity distance", unital_nogo_witness(Circuit(2), clean).distance, 0.0, 1e-12);
    {
        // CNOT never changes the reduced state of a maximally mixed target, so there is no witness here.
        Circuit cnot(2);
        cnot.append(Gate::cnot(0, 1));
        r.near("CNOT (clean control |+>) distance", unital_nogo_witness(cnot, parse_product_state("+")).distance,
               0.0, 1e-12);
    }

    const int cuts = params.instances.value_or(20);
    Rng rng(params.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    double worst_factor = 0.0;
    double worst_block = 0.0;
    double least_mismatch = 1.0;
    for (int i = 0; i < cuts; ++i) {
        auto t0 = Clock::now();
        const int terms = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<cd> coefs;
        cd total;
        do {
            coefs.clear();
            total = 0.0;
            for (int t = 0; t < terms; ++t) {
                coefs.emplace_back(uni(rng), uni(rng));
                total += coefs.back();
            }
        } while (std::abs(total) < 0.1);
        std::vector<ChannelCutTerm> cut_terms;
        for (int t = 0; t < terms; ++t) {
            const int ka = std::uniform_int_distribution<int>(1, 3)(rng);
            Channel a = Channel::random_unital(2, ka, rng());
            const int kb = std::uniform_int_distribution<int>(1, 3)(rng);
            Channel b = Channel::random_unital(2, kb, rng());
            cut_terms.push_back({coefs[static_cast<std::size_t>(t)] / total, std::move(a), std::move(b)});
        }
        CutBlockCheck c = check_unital_cut(ChannelCut(std::move(cut_terms)), swap, clean);
        worst_factor = std::max(worst_factor, c.factor_deviation);
        worst_block = std::max(worst_block, c.block_b_deviation);
        least_mismatch = std::min(least_mismatch, c.mismatch);
        r.rows.push_back({std::to_string(i), "unital-cut", static_cast<std::uint64_t>(terms), std::nullopt,
                          std::nullopt, ms_since(t0)});
    }
    r.at_most("all-unital cuts: max |X - Tr_b(X) (x) I/2|", worst_factor, 1e-9);
    r.at_most("all-unital cuts: max block-b deviation from I/2", worst_block, 1e-9);
    r.at_least("all-unital cuts: min mismatch vs SWAP", least_mismatch, 0.5 - 1e-9);

    double worst_fixed = 0.0;
    bool all_unital = true;
    for (int i = 0; i < 50; ++i) {
        const int dim = i % 2 == 0 ? 2 : 4;
        Channel ch = Channel::random_unital(dim, std::uniform_int_distribution<int>(1, 4)(rng), rng());
        all_unital = all_unital && is_unital(ch);
        const ComplexMatrix mixed = ComplexMatrix::Identity(dim, dim) / double(dim);
        worst_fixed = std::max(worst_fixed, max_abs_diff(qcut::apply(ch, mixed), mixed));
    }
    r.holds("50 random unital channels report unital", all_unital);
    r.at_most("50 random unital channels: max |C(I/d) - I/d|", worst_fixed, 1e-9);
    r.holds("amplitude damping 0.5 is not unital", !is_unital(Channel::amplitude_damping(0.5)));
    return r;
}

SuiteResult cost_suite(const SuiteParams &) {
    SuiteResult r{"cost", {}, {}};
    auto exact = [&](std::uint64_t n, std::uint64_t a, std::uint64_t expected) {
        const std::uint64_t got = recursive_cut_cost(n, a);
        r.checks.push_back({"cost(" + std::to_string(n) + "," + std::to_string(a) + ")", got == expected,
                            static_cast<double>(got), static_cast<double>(expected), 0.0});
        r.rows.push_back({std::to_string(n), "A=" + std::to_string(a), got, std::nullopt, std::nullopt, 0.0});
    };
    exact(8, 4, 64);
    for (std::uint64_t a : {1, 2, 4, 16}) {
        exact(1, a, 1);
    }
    exact(9, 2, 16);
    exact(2, 16, 16);
    return r;
}

std::vector<std::string> suite_names() {
    return {"gate-cut", "scaling",     "thm2-pipeline", "gadget", "swap-network", "lemma1",
            "thm3",     "fidelity",    "unital-nogo",   "cost",   "corpus"};
}

SuiteResult run_suite(const std::string &name, const SuiteParams &params) {
    static const std::map<std::string, std::function<SuiteResult(const SuiteParams &)>> table{
        {"gate-cut", gate_cut_suite},
        {"scaling", scaling_suite},
        {"thm2-pipeline", pipeline_suite},
        {"gadget", gadget_suite},
        {"swap-network", swap_network_suite},
        {"lemma1", lemma1_suite},
        {"thm3", thm3_suite},
        {"fidelity", fidelity_suite},
        {"unital-nogo", unital_nogo_suite},
        {"cost", cost_suite},
        {"corpus", [](const SuiteParams &p) { return corpus_check(p.corpus_dir); }},
    };
    auto it = table.find(name);
    if (it == table.end()) {
        throw std::invalid_argument("unknown suite \"" + name + "\"");
    }
    return it->second(params);
}

namespace {

// Expectations a corpus entry may list. Each needs a provenance note.
void check_entry(SuiteResult &r, const std::string &dir, const json &entry) {
    const std::string path = entry.at("path").get<std::string>();
    const std::string full = (std::filesystem::path(dir) / path).string();
    if (!std::filesystem::exists(full)) {
        throw ParseError("corpus: missing file " + full);
    }
    const json original = parse_json_text(read_text_file(full));
    CircuitDocument doc = document_from_json(original);
    const Circuit &c = doc.circuit;

    r.holds(path + ": canonical serialization", document_to_json(doc) == original);
    r.holds(path + ": round trip",
            document_to_json(parse_circuit_document(document_to_json(doc).dump())) == document_to_json(doc));

    const json &expect = entry.at("expect");
    const json provenance = entry.value("provenance", json::object());
    for (const auto &[key, value] : expect.items()) {
        const std::string name = path + ": " + key;
        r.holds(name + " has provenance", provenance.contains(key));
        if (key == "width") {
            r.near(name, c.n(), value.get<int>(), 0);
        } else if (key == "gate_count") {
            r.near(name, static_cast<double>(c.size()), value.get<double>(), 0);
        } else if (key == "two_qubit_count") {
            r.near(name, static_cast<double>(c.two_qubit_count()), value.get<double>(), 0);
        } else if (key == "swap_count") {
            auto swaps = std::count_if(c.gates().begin(), c.gates().end(), [](const Gate &g) { return g.is_swap(); });
            r.near(name, static_cast<double>(swaps), value.get<double>(), 0);
        } else if (key == "state_rank") {
            ComplexVector psi = statevector(c, ProductState::zeros(c.n()));
            auto part = value.at("partition").get<std::vector<int>>();
            r.near(name, state_schmidt(psi, part, c.n()).rank, value.at("value").get<int>(), 0);
        } else if (key == "unitary_identity") {
            const auto dim = Eigen::Index{1} << c.n();
            const bool is_id = max_abs_diff(unitary_of(c), ComplexMatrix::Identity(dim, dim)) <= 1e-12;
            r.holds(name, is_id == value.get<bool>());
        } else if (key == "nogo_distance") {
            ProductState clean = ProductState::zeros(value.at("clean").get<int>());
            r.near(name, unital_nogo_witness(c, clean).distance, value.at("value").get<double>(), 1e-12);
        } else if (key == "expectation") {
            ProductState in = parse_product_state(value.at("input").get<std::string>());
            PauliObservable m = parse_observable(value.at("observable").get<std::string>());
            r.near(name, dense_expectation(c, in, m), value.at("value").get<double>(), 1e-9);
        } else if (key == "pipeline") {
            ProductState in = parse_product_state(value.at("input").get<std::string>());
            PauliObservable m = parse_observable(value.at("observable").get<std::string>());
            CutMode mode = cut_mode_from_name(value.at("mode").get<std::string>()).value();
            PipelineResult res = pipeline_simulate(c, in, m, mode, kDefaultMaxTerms);
            r.near(name + " term count", static_cast<double>(res.term_count), value.at("term_count").get<double>(),
                   0);
            r.near(name + " expectation", res.expectation, value.at("value").get<double>(), 1e-8);
        } else if (key == "gadget_of") {
            const std::string src = (std::filesystem::path(dir) / value.at("source").get<std::string>()).string();
            if (!std::filesystem::exists(src)) {
                throw ParseError("corpus: missing file " + src);
            }
            CircuitDocument source = parse_circuit_document(read_text_file(src));
            const auto variant = value.at("variant").get<std::string>() == "v2" ? GadgetVariant::V2 : GadgetVariant::V1;
            GadgetizedCircuit g = gadgetize(source.circuit, variant);
            CircuitDocument regenerated;
            regenerated.circuit = g.circuit;
            regenerated.ancillas = g.ancillas();
            if (variant == GadgetVariant::V1) {
                ExtractedComb ext = extract_comb(g);
                regenerated = document_from_comb(ext.comb, ext.gap_gates, g.ancillas());
            }
            r.holds(name, document_to_json(regenerated) == original);
            r.holds(name + " passes check_gadget", !check_gadget(g).has_value());
        } else if (key == "comb_valid") {
            bool ok = true;
            try {
                comb_from_document(doc);
            } catch (const ParseError &) {
                ok = false;
            }
            r.holds(name, ok == value.get<bool>());
        } else {
            r.holds(name + " (unknown expectation)", false);
        }
    }
}

}  // namespace

SuiteResult corpus_check(const std::string &dir) {
    SuiteResult r{"corpus", {}, {}};
    const std::string manifest = (std::filesystem::path(dir) / "manifest.json").string();
    if (!std::filesystem::exists(manifest)) {
        throw ParseError("corpus: missing " + manifest);
    }
    const json m = parse_json_text(read_text_file(manifest));
    try {
        for (const json &entry : m.at("entries")) {
            auto t0 = Clock::now();
            const std::size_t before = r.checks.size();
            check_entry(r, dir, entry);
            const bool ok = std::all_of(r.checks.begin() + static_cast<std::ptrdiff_t>(before), r.checks.end(),
                                        [](const SuiteCheck &c) { return c.pass; });
            r.rows.push_back({entry.at("path").get<std::string>(), ok ? "ok" : "mismatch", std::nullopt,
                              std::nullopt, std::nullopt, ms_since(t0)});
        }
    } catch (const json::exception &e) {
        throw ParseError(std::string("corpus manifest: ") + e.what());
    }
    return r;
}

namespace {

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

}  // namespace

std::string suite_csv(const SuiteResult &r, bool timing) {
    std::ostringstream out;
    out << "n_or_k,mode,L,rank,fidelity,wall_ms\n";
    for (const SuiteRow &row : r.rows) {
        out << csv_field(row.n_or_k) << ',' << csv_field(row.mode) << ',';
        if (row.terms) {
            out << *row.terms;
        }
        out << ',';
        if (row.rank) {
            out << *row.rank;
        }
        out << ',';
        if (row.fidelity) {
            out << fmt("%.15g", *row.fidelity);
        }
        out << ',' << (timing ? fmt("%.3f", row.wall_ms) : std::string("0")) << '\n';
    }
    return out.str();
}

json suite_json(const SuiteResult &r, bool timing) {
    json checks = json::array();
    for (const SuiteCheck &c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"measured", c.measured},
                          {"expected", c.expected},
                          {"tolerance", c.tolerance}});
    }
    json rows = json::array();
    for (const SuiteRow &row : r.rows) {
        json j{{"n_or_k", row.n_or_k}, {"mode", row.mode}};
        j["L"] = row.terms ? json(*row.terms) : json(nullptr);
        j["rank"] = row.rank ? json(*row.rank) : json(nullptr);
        j["fidelity"] = row.fidelity ? json(*row.fidelity) : json(nullptr);
        j["wall_ms"] = timing ? row.wall_ms : 0.0;
        rows.push_back(std::move(j));
    }
    return {{"suite", r.suite}, {"overall", r.overall()}, {"checks", std::move(checks)}, {"rows", std::move(rows)}};
}

}  // namespace qcut
