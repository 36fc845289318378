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
#include "qcut/generators.hpp"
#include "qcut/kernels.hpp"
#include "qcut/observable.hpp"

using namespace qcut;

TEST(ProductState, ParsesBitstringsAndLabels) {
    ProductState s = parse_product_state("0110");
    ASSERT_EQ(s.n(), 4);
    EXPECT_LT(oracle::max_diff(s.dense(), oracle::basis(4, 0b0110)), 1e-15);

    ProductState l = parse_product_state("+, -i, 1, i, -");
    ASSERT_EQ(l.n(), 5);
    const double h = std::sqrt(0.5);
    EXPECT_LT(oracle::max_diff(l.factor(0), Vec2(h, h)), 1e-15);
    EXPECT_LT(oracle::max_diff(l.factor(1), Vec2(h, cd(0, -h))), 1e-15);
    EXPECT_LT(oracle::max_diff(l.factor(3), Vec2(h, cd(0, h))), 1e-15);
    EXPECT_LT(oracle::max_diff(l.factor(4), Vec2(h, -h)), 1e-15);
    // U+2212 minus sign
    EXPECT_EQ(parse_product_state("\xe2\x88\x92i,0").n(), 2);

    EXPECT_THROW(parse_product_state(""), std::invalid_argument);
    EXPECT_THROW(parse_product_state("012"), std::invalid_argument);
    EXPECT_THROW(parse_product_state("0,,1"), std::invalid_argument);
    EXPECT_THROW(ProductState({Vec2(1, 1)}), std::invalid_argument);
}

TEST(ProductState, ExtendedAppendsZeros) {
    ProductState s = parse_product_state("+1").extended(2);
    ASSERT_EQ(s.n(), 4);
    EXPECT_EQ(s.factor(3), Vec2(1, 0));
}

TEST(Observable, ParsesWeightedSums) {
    PauliObservable m = parse_observable("0.5*ZIZ + 1.0*XII");
    ASSERT_EQ(m.n(), 3);
    ASSERT_EQ(m.terms().size(), 2u);
    EXPECT_EQ(m.terms()[0].label(), "ZIZ");
    EXPECT_EQ(m.terms()[0].weight, 0.5);
    EXPECT_EQ(m.terms()[1].label(), "XII");

    PauliObservable neg = parse_observable("-YY");
    EXPECT_EQ(neg.terms()[0].weight, -1.0);
    PauliObservable mixed = parse_observable("ZZ - 0.25*XI + 1e-3*YY");
    ASSERT_EQ(mixed.terms().size(), 3u);
    EXPECT_EQ(mixed.terms()[1].weight, -0.25);
    EXPECT_EQ(mixed.terms()[2].weight, 1e-3);
    PauliObservable exp_neg = parse_observable("2.5e-1*XX");
    EXPECT_EQ(exp_neg.terms()[0].weight, 0.25);

    EXPECT_THROW(parse_observable(""), std::invalid_argument);
    EXPECT_THROW(parse_observable("ZZ + X"), std::invalid_argument);
    EXPECT_THROW(parse_observable("0.5*ZQ"), std::invalid_argument);
    EXPECT_THROW(parse_observable("abc*ZZ"), std::invalid_argument);
}

TEST(Observable, ExpectationMatchesDenseOracle) {
    Rng rng(17);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            ComplexVector psi = ComplexVector::Zero(1 << n);
            std::normal_distribution<double> g;
            for (auto &x : psi) x = cd(g(rng), g(rng));
            PauliObservable m = random_observable(n, 4, rng);
            ComplexMatrix dense = ComplexMatrix::Zero(1 << n, 1 << n);
            for (const PauliString &s : m.terms()) dense += s.weight * oracle::pauli_string(s.label());
            const cd expect = psi.dot(dense * psi);
            EXPECT_LT(std::abs(expectation(psi, m) - expect), 1e-11 * std::max(1.0, std::abs(expect)));
            EXPECT_LT(oracle::max_diff(m.dense(), dense), 1e-15);
        }
    }
}

TEST(Observable, ApplyPauliStringMatchesKron) {
    Rng rng(18);
    ComplexVector psi = random_product_state(4, rng).dense();
    for (const char *label : {"XYZI", "YYYY", "IZXY"}) {
        ComplexVector got = psi;
        std::vector<Pauli> ps;
        for (const char *c = label; *c; ++c) ps.push_back(pauli_from_char(*c));
        apply_pauli_string(amplitudes(got), 4, ps);
        EXPECT_LT(oracle::max_diff(got, oracle::pauli_string(label) * psi), 1e-15);
    }
}

TEST(Observable, ExtendedPadsIdentities) {
    PauliObservable m = parse_observable("ZX").extended(2);
    EXPECT_EQ(m.n(), 4);
    EXPECT_EQ(m.terms()[0].label(), "ZXII");
}
