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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcut/gadget.hpp"
#include "qcut/generators.hpp"
#include "qcut/simulate.hpp"

using namespace qcut;

namespace {

double oracle_expectation(const Circuit &c, const ProductState &in, const PauliObservable &m) {
    ComplexVector psi = oracle::state(c, in.dense());
    ComplexMatrix dense = ComplexMatrix::Zero(psi.size(), psi.size());
    for (const PauliString &s : m.terms()) dense += s.weight * oracle::pauli_string(s.label());
    return psi.dot(dense * psi).real();
}

}  // namespace

TEST(Statevector, MatchesOracleSerialAndParallel) {
    Rng rng(21);
    for (int n = 2; n <= 7; ++n) {
        Circuit c = random_circuit(n, 20, GateSet::General, rng);
        ProductState in = random_product_state(n, rng);
        const ComplexVector expect = oracle::state(c, in.dense());
        EXPECT_LT(oracle::max_diff(statevector(c, in, Exec::Serial), expect), 1e-12);
        EXPECT_LT(oracle::max_diff(statevector(c, in, Exec::Parallel), expect), 1e-12);
    }
}

TEST(Statevector, WidthLimitsAndMismatches) {
    EXPECT_THROW(statevector(Circuit(kStatevectorMaxWires + 1), ProductState::zeros(kStatevectorMaxWires + 1)),
                 WidthLimitError);
    EXPECT_THROW(unitary_of(Circuit(kUnitaryMaxWires + 1)), WidthLimitError);
    EXPECT_THROW(statevector(Circuit(3), ProductState::zeros(2)), std::invalid_argument);
    EXPECT_THROW(statevector(Circuit(3), ComplexVector(ComplexVector::Zero(4))), std::invalid_argument);
}

TEST(Statevector, UnitaryOfMatchesOracle) {
    Rng rng(22);
    for (int n = 2; n <= 5; ++n) {
        Circuit c = random_circuit(n, 15, GateSet::General, rng);
        EXPECT_LT(oracle::max_diff(unitary_of(c), oracle::unitary(c)), 1e-12);
    }
}

TEST(Statevector, DenseExpectationMatchesOracle) {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + trial % 4;
        Circuit c = random_circuit(n, 12, GateSet::General, rng);
        ProductState in = random_product_state(n, rng);
        PauliObservable m = random_observable(n, 3, rng);
        EXPECT_NEAR(dense_expectation(c, in, m), oracle_expectation(c, in, m), 1e-12);
    }
}

TEST(SwapNetwork, Detection) {
    Circuit c(3);
    c.append(Gate::h(0)).append(Gate::swap(0, 2));
    EXPECT_TRUE(is_swap_network(c));
    c.append(Gate::cz(1, 2));
    EXPECT_FALSE(is_swap_network(c));
    EXPECT_THROW(swap_network_local_form(c), std::invalid_argument);
}

TEST(SwapNetwork, LocalFormEqualsDenseUnitary) {
    Rng rng(24);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            Circuit c = random_circuit(n, 25, GateSet::SwapNetwork, rng);
            LocalForm f = swap_network_local_form(c);
            EXPECT_LT(oracle::max_diff(f.dense(), oracle::unitary(c)), 1e-12);
        }
    }
}

TEST(SwapNetwork, PermutationOperatorOnBasisStates) {
    // the qubit starting on wire 0 travels to wire 2
    Circuit c(3);
    c.append(Gate::swap(0, 1)).append(Gate::swap(1, 2));
    LocalForm f = swap_network_local_form(c);
    ComplexVector in = oracle::basis(3, 0b100);  // qubit on wire 0 is |1>
    ComplexVector out = oracle::state(c, in);
    EXPECT_LT(oracle::max_diff(permutation_operator(f.perm) * in, out), 1e-15);
    EXPECT_EQ(std::abs(out[0b001]), 1.0);
}

TEST(SwapNetwork, ProductRunMatchesStatevector) {
    Rng rng(25);
    for (int trial = 0; trial < 20; ++trial) {
        Circuit c = random_circuit(8, 40, GateSet::SwapNetwork, rng);
        ProductState in = random_product_state(8, rng);
        EXPECT_LT(oracle::max_diff(swap_network_run(c, in).dense(), statevector(c, in)), 1e-12);
    }
}

TEST(SwapNetwork, LargeWidthKeepsFactorsNormalized) {
    Rng rng(26);
    Circuit c = random_circuit(200, 10000, GateSet::SwapNetwork, rng);
    ProductState out = swap_network_run(c, random_product_state(200, rng));
    ASSERT_EQ(out.n(), 200);
    for (const Vec2 &f : out.factors()) EXPECT_NEAR(f.norm(), 1.0, 1e-12);
}

TEST(EvaluateCut, MatchesUncutOnGadgetizedCircuits) {
    Rng rng(27);
    for (CutMode mode : {CutMode::Schmidt, CutMode::PauliUnitary}) {
        for (int trial = 0; trial < 6; ++trial) {
            const int n = 2 + trial % 3;
            Circuit c = random_circuit(n, 6, GateSet::General, rng);
            GadgetizedCircuit g = gadgetize(c);
            ExtractedComb e = extract_comb(g);
            CutDecomposition dec = cut_comb(e.comb, e.gap_gates, mode);
            ProductState in = random_product_state(n, rng);
            PauliObservable m = random_observable(n, 2, rng);
            const int extra = g.circuit.n() - n;
            CutEvaluation ev = evaluate_cut(dec, in.extended(extra), m.extended(extra));
            EXPECT_TRUE(ev.swap_network_path);
            EXPECT_LT(ev.imag_residue, 1e-10);
            EXPECT_NEAR(ev.expectation, oracle_expectation(c, in, m), 1e-9);
        }
    }
}

TEST(EvaluateCut, RejectsWidthMismatch) {
    Circuit c(2);
    c.append(Gate::cz(0, 1));
    ExtractedComb e = extract_comb(gadgetize(c));
    CutDecomposition dec = cut_comb(e.comb, e.gap_gates, CutMode::Schmidt);
    EXPECT_THROW(evaluate_cut(dec, ProductState::zeros(2), parse_observable("ZZ")), std::invalid_argument);
}

TEST(Pipeline, HadamardThenCzExample) {
    Circuit c(2);
    c.append(Gate::h(0)).append(Gate::cz(0, 1));
    PipelineResult r = pipeline_simulate(c, ProductState::zeros(2), parse_observable("ZZ"), CutMode::Schmidt,
                                         kDefaultMaxTerms);
    EXPECT_EQ(r.term_count, 2u);
    EXPECT_NEAR(r.expectation, 0.0, 1e-12);
    EXPECT_NEAR(r.expectation, oracle_expectation(c, ProductState::zeros(2), parse_observable("ZZ")), 1e-12);

    PipelineResult p = pipeline_simulate(c, ProductState::zeros(2), parse_observable("XX"), CutMode::PauliUnitary,
                                         kDefaultMaxTerms);
    EXPECT_EQ(p.term_count, 4u);
    EXPECT_NEAR(p.expectation, oracle_expectation(c, ProductState::zeros(2), parse_observable("XX")), 1e-12);
}

TEST(Pipeline, TermCountIsPowerOfGateCount) {
    Rng rng(28);
    for (int k = 1; k <= 4; ++k) {
        Circuit c(3);
        for (int i = 0; i < k; ++i) c.append(random_single_qubit_gate(i % 3, rng)).append(Gate::cz(i % 3, (i + 1) % 3));
        ProductState in = random_product_state(3, rng);
        PauliObservable m = random_observable(3, 2, rng);
        PipelineResult r = pipeline_simulate(c, in, m, CutMode::Schmidt, kDefaultMaxTerms);
        EXPECT_EQ(r.term_count, std::uint64_t{1} << k);
        EXPECT_NEAR(r.expectation, oracle_expectation(c, in, m), 1e-9);
    }
}

TEST(Pipeline, BudgetIsEnforcedBeforeBuilding) {
    Circuit c(2);
    for (int i = 0; i < 3; ++i) c.append(Gate::cz(0, 1));
    try {
        pipeline_simulate(c, ProductState::zeros(2), parse_observable("ZZ"), CutMode::PauliUnitary, 10);
        FAIL() << "expected TermBudgetExceeded";
    } catch (const TermBudgetExceeded &e) {
        EXPECT_EQ(e.required, 64u);
        EXPECT_EQ(e.budget, 10u);
    }
    EXPECT_THROW(pipeline_simulate(c, ProductState::zeros(3), parse_observable("ZZ"), CutMode::Schmidt, 10),
                 std::invalid_argument);
}

TEST(OneTermPartition, ReproducesUncutValue) {
    Rng rng(29);
    int done = 0;
    for (int trial = 0; trial < 12; ++trial) {
        QuantumComb comb;
        comb.n = 3;
        comb.partition = {0};
        for (int w = 0; w < 3; ++w) comb.fixed_gates.push_back(random_single_qubit_gate(w, rng));
        comb.fixed_gates.push_back(Gate::cnot(1, 2));
        comb.gaps.push_back({4, 0, 1});
        for (int w = 0; w < 3; ++w) comb.fixed_gates.push_back(random_single_qubit_gate(w, rng));
        std::vector<Gate> gap = {Gate::custom2(haar_random_unitary(4, 100 + trial), 0, 1)};
        ProductState in = random_product_state(3, rng);
        PauliObservable m = random_observable(3, 1, rng);
        m = PauliObservable(3, {PauliString{1.0, m.terms()[0].paulis}});
        OneTermPartition r = one_term_partition(comb, gap, in, m, 7 + trial, 100);
        EXPECT_NEAR(r.scaled, r.gamma, 1e-9);
        EXPECT_LE(r.samples, 100);
        for (const ProductFilling &f : r.fillings) {
            EXPECT_TRUE(is_unitary(f.a));
            EXPECT_TRUE(is_unitary(f.b));
        }
        ++done;
    }
    EXPECT_EQ(done, 12);
}

TEST(OneTermPartition, ZeroValueGivesZeroAlpha) {
    QuantumComb comb;
    comb.n = 3;
    comb.partition = {0};
    comb.fixed_gates.push_back(Gate::h(2));
    comb.gaps.push_back({1, 0, 1});
    // <Z> on |+> is 0, whatever sits in the gap
    OneTermPartition r = one_term_partition(comb, {Gate::cz(0, 1)}, parse_product_state("000"),
                                            parse_observable("IIZ"), 1, 100);
    EXPECT_TRUE(r.gamma_zero);
    EXPECT_EQ(r.alpha, cd(0.0, 0.0));
}
