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
#include "qcut/decompose.hpp"
#include "qcut/generators.hpp"

using namespace qcut;

namespace {

QuantumComb three_wire_comb(int gaps) {
    QuantumComb c;
    c.n = 3;
    c.partition = {0};
    int slot = 0;
    for (int j = 0; j < gaps; ++j) {
        c.fixed_gates.push_back(Gate::h(j % 3));
        ++slot;
        c.gaps.push_back({slot++, 0, 1 + j % 2});
    }
    c.fixed_gates.push_back(Gate::cnot(1, 2));
    return c;
}

}  // namespace

TEST(Decompose, PauliCoefficientsOfCz) {
    auto terms = pauli_decompose(Gate::cz(0, 1).matrix2());
    ASSERT_EQ(terms.size(), 4u);
    const std::vector<std::pair<std::string, double>> expect{{"II", 0.5}, {"IZ", 0.5}, {"ZI", 0.5}, {"ZZ", -0.5}};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(terms[i].label(), expect[i].first);
        EXPECT_NEAR(std::abs(terms[i].coef - cd(expect[i].second, 0)), 0.0, 1e-15);
    }
}

TEST(Decompose, SchmidtCoefficientsMatchRealignmentSpectrum) {
    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        ComplexMatrix u = haar_random_unitary(4, rng());
        auto terms = operator_schmidt(u);
        auto ref = oracle::singular_values(oracle::realign(u));
        ASSERT_EQ(terms.size(), static_cast<std::size_t>(oracle::rank(ref, 1e-10)));
        for (std::size_t k = 0; k < terms.size(); ++k) {
            EXPECT_NEAR(terms[k].coef.real(), ref[k], 1e-10);
            EXPECT_EQ(terms[k].coef.imag(), 0.0);
            EXPECT_NEAR(terms[k].factor_a.norm(), 1.0, 1e-12);
            EXPECT_NEAR(terms[k].factor_b.norm(), 1.0, 1e-12);
            for (std::size_t l = 0; l < k; ++l) {
                EXPECT_LT(std::abs((terms[l].factor_a.adjoint() * terms[k].factor_a).trace()), 1e-10);
            }
        }
        EXPECT_LT((reconstruct(terms) - u).norm(), 1e-12);
    }
}

TEST(Decompose, NamedGateTermCounts) {
    EXPECT_EQ(gate_cut(Gate::cz(0, 1), CutMode::Schmidt).size(), 2u);
    EXPECT_EQ(gate_cut(Gate::cz(0, 1), CutMode::PauliUnitary).size(), 4u);
    EXPECT_EQ(gate_cut(Gate::cnot(0, 1), CutMode::Schmidt).size(), 2u);
    EXPECT_EQ(gate_cut(Gate::cnot(0, 1), CutMode::PauliUnitary).size(), 4u);
    EXPECT_EQ(gate_cut(Gate::swap(0, 1), CutMode::Schmidt).size(), 4u);
    EXPECT_EQ(gate_cut(Gate::swap(0, 1), CutMode::PauliUnitary).size(), 4u);
    // Each CZ Schmidt coefficient is sqrt(2): ||CZ||_F^2 = 4 = 2 * 2.
    for (const auto &t : gate_cut(Gate::cz(0, 1), CutMode::Schmidt)) EXPECT_NEAR(t.coef.real(), std::sqrt(2.0), 1e-12);
}

TEST(Decompose, TensorProductGateHasOneTerm) {
    Rng rng(12);
    Mat4 u = kron(haar_random_unitary(2, rng()), haar_random_unitary(2, rng()));
    auto terms = gate_cut(Gate::custom2(u, 0, 1), CutMode::Schmidt);
    ASSERT_EQ(terms.size(), 1u);
    EXPECT_LT((reconstruct(terms) - u).norm(), 1e-12);
}

TEST(Decompose, GateCutOnReversedPairUsesThatOrder) {
    Rng rng(13);
    Gate g = Gate::custom2(haar_random_unitary(4, rng()), 2, 5);
    for (CutMode mode : {CutMode::Schmidt, CutMode::PauliUnitary}) {
        auto terms = gate_cut_on(g, 5, 2, mode);
        EXPECT_LT((reconstruct(terms) - g.matrix2_on(5, 2)).norm(), 1e-12);
    }
}

TEST(Decompose, ModeNames) {
    EXPECT_EQ(cut_mode_from_name("pauli"), CutMode::PauliUnitary);
    EXPECT_EQ(cut_mode_from_name("pauli-unitary"), CutMode::PauliUnitary);
    EXPECT_EQ(cut_mode_from_name("schmidt"), CutMode::Schmidt);
    EXPECT_FALSE(cut_mode_from_name("svd").has_value());
    EXPECT_EQ(cut_mode_name(CutMode::Schmidt), "schmidt");
}

TEST(CutComb, TermCountIsProductOfPerGapCounts) {
    QuantumComb c = three_wire_comb(3);
    std::vector<Gate> gates{Gate::cz(0, 1), Gate::swap(0, 2), Gate::cnot(1, 0)};
    EXPECT_EQ(cut_term_count(c, gates, CutMode::Schmidt), 2u * 4u * 2u);
    EXPECT_EQ(cut_term_count(c, gates, CutMode::PauliUnitary), 4u * 4u * 4u);
    EXPECT_EQ(cut_comb(c, gates, CutMode::Schmidt).term_count(), 16u);
}

TEST(CutComb, NoGapsGivesOneUnitTerm) {
    QuantumComb c = three_wire_comb(0);
    CutDecomposition d = cut_comb(c, {}, CutMode::Schmidt);
    ASSERT_EQ(d.term_count(), 1u);
    EXPECT_EQ(d.terms[0].coef, cd(1, 0));
}

TEST(CutComb, OrderIsLexicographicWithLastGapFastest) {
    QuantumComb c = three_wire_comb(2);
    std::vector<Gate> gates{Gate::cz(0, 1), Gate::swap(0, 2)};
    auto first = gate_cut_on(gates[0], 0, 1, CutMode::Schmidt);
    auto second = gate_cut_on(gates[1], 0, 2, CutMode::Schmidt);
    CutDecomposition d = cut_comb(c, gates, CutMode::Schmidt);
    ASSERT_EQ(d.term_count(), first.size() * second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        for (std::size_t j = 0; j < second.size(); ++j) {
            const CutTerm &t = d.terms[i * second.size() + j];
            EXPECT_LT(std::abs(t.coef - first[i].coef * second[j].coef), 1e-15);
            EXPECT_EQ((t.fillings[0].a - first[i].factor_a).norm(), 0.0);
            EXPECT_EQ((t.fillings[1].b - second[j].factor_b).norm(), 0.0);
        }
    }
}

TEST(CutComb, WeightedSumReproducesTheFilledCircuitOperator) {
    Rng rng(14);
    QuantumComb c = three_wire_comb(2);
    std::vector<Gate> gates{Gate::custom2(haar_random_unitary(4, rng()), 0, 1),
                            Gate::custom2(haar_random_unitary(4, rng()), 2, 0)};
    const ComplexMatrix target = oracle::unitary(fill(c, {gates[0], gates[1]}));
    for (CutMode mode : {CutMode::Schmidt, CutMode::PauliUnitary}) {
        CutDecomposition d = cut_comb(c, gates, mode);
        ComplexMatrix sum = ComplexMatrix::Zero(8, 8);
        for (const CutTerm &t : d.terms) {
            sum += t.coef * oracle::unitary(fill(c, {t.fillings[0], t.fillings[1]}));
        }
        EXPECT_LT(oracle::max_diff(sum, target), 1e-12) << cut_mode_name(mode);
    }
}

TEST(CutComb, ParallelBuildEqualsSerial) {
    QuantumComb c;
    c.n = 2;
    c.partition = {0};
    std::vector<Gate> gates;
    for (int j = 0; j < 6; ++j) {
        c.gaps.push_back({j, 0, 1});
        gates.push_back(Gate::cz(0, 1));
    }
    CutDecomposition s = cut_comb(c, gates, CutMode::PauliUnitary, kDefaultMaxTerms, Exec::Serial);
    CutDecomposition p = cut_comb(c, gates, CutMode::PauliUnitary, kDefaultMaxTerms, Exec::Parallel);
    ASSERT_EQ(s.term_count(), 4096u);
    ASSERT_EQ(p.term_count(), 4096u);
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
        ASSERT_EQ(s.terms[i].coef, p.terms[i].coef);
        for (std::size_t j = 0; j < 6; ++j) {
            ASSERT_EQ((s.terms[i].fillings[j].a - p.terms[i].fillings[j].a).norm(), 0.0);
        }
    }
}

TEST(CutComb, BudgetAndValidationErrors) {
    QuantumComb c = three_wire_comb(3);
    std::vector<Gate> gates{Gate::cz(0, 1), Gate::cz(0, 2), Gate::cz(0, 1)};
    try {
        cut_comb(c, gates, CutMode::PauliUnitary, 10);
        FAIL() << "expected TermBudgetExceeded";
    } catch (const TermBudgetExceeded &e) {
        EXPECT_EQ(e.required, 64u);
        EXPECT_EQ(e.budget, 10u);
        EXPECT_NE(std::string(e.what()).find("64"), std::string::npos);
    }
    EXPECT_THROW(cut_comb(c, {Gate::cz(0, 1)}, CutMode::Schmidt), std::invalid_argument);
    gates[1] = Gate::cz(0, 1);  // gap 1 sits on (0, 2)
    EXPECT_THROW(cut_comb(c, gates, CutMode::Schmidt), std::invalid_argument);
    QuantumComb bad = c;
    bad.fixed_gates.push_back(Gate::cz(0, 2));
    EXPECT_THROW(cut_comb(bad, {Gate::cz(0, 1), Gate::cz(0, 2), Gate::cz(0, 1)}, CutMode::Schmidt),
                 std::invalid_argument);
}

TEST(FirstQubitCut, ReconstructsAndHasAtMostFourTerms) {
    Rng rng(15);
    for (int n = 2; n <= 5; ++n) {
        ComplexMatrix u = haar_random_unitary(1 << n, rng());
        auto terms = first_qubit_pauli_cut(u);
        EXPECT_LE(terms.size(), 4u);
        ComplexMatrix sum = ComplexMatrix::Zero(u.rows(), u.cols());
        for (const auto &t : terms) sum += oracle::kron(pauli_matrix(t.pauli), t.rest);
        EXPECT_LT(oracle::max_diff(sum, u), 1e-12);
    }
    ComplexMatrix local = oracle::kron(ComplexMatrix::Identity(2, 2), haar_random_unitary(4, 3));
    EXPECT_EQ(first_qubit_pauli_cut(local).size(), 1u);
    EXPECT_THROW(first_qubit_pauli_cut(ComplexMatrix::Identity(2, 2)), std::invalid_argument);
    EXPECT_THROW(first_qubit_pauli_cut(ComplexMatrix::Identity(6, 6)), std::invalid_argument);
}

TEST(RecursiveCost, ExactIntegers) {
    EXPECT_EQ(recursive_cut_cost(8, 4), 64u);
    EXPECT_EQ(recursive_cut_cost(1, 7), 1u);
    EXPECT_EQ(recursive_cut_cost(9, 2), 16u);
    EXPECT_EQ(recursive_cut_cost(2, 16), 16u);
    EXPECT_EQ(recursive_cut_cost(1024, 2), 1024u);
    EXPECT_THROW(recursive_cut_cost(0, 2), std::invalid_argument);
    EXPECT_THROW(recursive_cut_cost(4, 0), std::invalid_argument);
    EXPECT_ANY_THROW(recursive_cut_cost(std::uint64_t{1} << 40, 1u << 20));
}
