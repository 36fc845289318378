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
#include "qcut/channels.hpp"
#include "qcut/numerics.hpp"

using namespace qcut;

TEST(Channel, RejectsNonTracePreservingKraus) {
    ComplexMatrix k = ComplexMatrix::Identity(2, 2) * 0.5;
    EXPECT_THROW(Channel(2, {k}), std::invalid_argument);
    EXPECT_THROW(Channel(2, {}), std::invalid_argument);
    EXPECT_THROW(Channel(2, {ComplexMatrix::Identity(3, 3)}), std::invalid_argument);
}

TEST(Channel, UnitalityOfStandardChannels) {
    EXPECT_TRUE(is_unital(Channel::identity(4)));
    EXPECT_TRUE(is_unital(Channel::dephasing(0.3)));
    EXPECT_TRUE(is_unital(Channel::unitary(haar_random_unitary(4, 3))));
    EXPECT_FALSE(is_unital(Channel::amplitude_damping(0.4)));
    EXPECT_TRUE(is_unital(Channel::amplitude_damping(0.0)));
    for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_TRUE(is_unital(Channel::random_unital(4, 3, seed)));
}

TEST(Channel, ApplyMatchesKrausSum) {
    Channel ch = Channel::amplitude_damping(0.25);
    ComplexMatrix rho(2, 2);
    rho << 0.3, cd(0.1, 0.2), cd(0.1, -0.2), 0.7;
    ComplexMatrix expect = ComplexMatrix::Zero(2, 2);
    for (const ComplexMatrix &k : ch.kraus()) expect += k * rho * k.adjoint();
    EXPECT_LT(oracle::max_diff(qcut::apply(ch, rho), expect), 1e-15);
    // |1><1| decays by gamma
    ComplexMatrix one = ComplexMatrix::Zero(2, 2);
    one(1, 1) = 1.0;
    EXPECT_NEAR(qcut::apply(ch, one)(0, 0).real(), 0.25, 1e-15);
}

TEST(Channel, CheckDensityRejectsBadStates) {
    ComplexMatrix ok = ComplexMatrix::Identity(2, 2) * 0.5;
    EXPECT_NO_THROW(check_density(ok, 2));
    EXPECT_THROW(check_density(ok, 4), std::invalid_argument);
    ComplexMatrix not_herm = ok;
    not_herm(0, 1) = 0.3;
    EXPECT_THROW(check_density(not_herm, 2), std::invalid_argument);
    ComplexMatrix bad_trace = ok * 2.0;
    EXPECT_THROW(check_density(bad_trace, 2), std::invalid_argument);
}

TEST(PartialTrace, AgreesWithOracle) {
    ComplexMatrix u = haar_random_unitary(8, 9);
    ComplexMatrix rho = u.col(0) * u.col(0).adjoint();
    EXPECT_LT(oracle::max_diff(partial_trace_a(rho, 2, 4), oracle::trace_out_a(rho, 2, 4)), 1e-14);
    // Tr_b of a product is the first factor
    ComplexMatrix a = ComplexMatrix::Identity(2, 2) * 0.5;
    a(0, 1) = 0.1;
    a(1, 0) = 0.1;
    ComplexMatrix b = ComplexMatrix::Identity(4, 4) / 4.0;
    EXPECT_LT(oracle::max_diff(partial_trace_b(oracle::kron(a, b), 2, 4), a), 1e-15);
}

TEST(Nogo, SwapWitnessHasDistanceOneHalf) {
    Circuit swap(2);
    swap.append(Gate::swap(0, 1));
    NogoWitness w = unital_nogo_witness(swap, parse_product_state("0"));
    EXPECT_NEAR(w.distance, 0.5, 1e-12);
    ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
    zero(0, 0) = 1.0;
    EXPECT_LT(oracle::max_diff(w.block_b_output, zero), 1e-12);
}

TEST(Nogo, IdentityAndCnotLeaveMixedBlockMixed) {
    Circuit id(2);
    EXPECT_NEAR(unital_nogo_witness(id, parse_product_state("0")).distance, 0.0, 1e-12);
    // The reduced state of a maximally mixed target stays I/2 under any controlled unitary.
    Circuit cnot(2);
    cnot.append(Gate::cnot(0, 1));
    EXPECT_NEAR(unital_nogo_witness(cnot, parse_product_state("+")).distance, 0.0, 1e-12);
    EXPECT_NEAR(unital_nogo_witness(cnot, parse_product_state("1")).distance, 0.0, 1e-12);
    EXPECT_THROW(unital_nogo_witness(id, parse_product_state("00")), std::invalid_argument);
}

TEST(Nogo, UnitalCutsCannotTransmitTheCleanQubit) {
    Circuit swap(2);
    swap.append(Gate::swap(0, 1));
    ProductState clean = parse_product_state("0");
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        std::vector<ChannelCutTerm> terms;
        terms.push_back({cd(0.7, 0.1), Channel::random_unital(2, 2, seed), Channel::random_unital(2, 3, seed + 50)});
        terms.push_back({cd(0.3, -0.1), Channel::random_unital(2, 1, seed + 100), Channel::identity(2)});
        ChannelCut cut(std::move(terms));
        ASSERT_TRUE(cut.all_unital());
        CutBlockCheck check = check_unital_cut(cut, swap, clean);
        EXPECT_LT(check.factor_deviation, 1e-12);
        EXPECT_LT(check.block_b_deviation, 1e-12);
        EXPECT_GE(check.mismatch, 0.5 - 1e-12);
    }
}

TEST(Nogo, CutShapeErrors) {
    Circuit swap(2);
    swap.append(Gate::swap(0, 1));
    ChannelCut non_unital({{cd(1.0), Channel::amplitude_damping(0.5), Channel::identity(2)}});
    EXPECT_FALSE(non_unital.all_unital());
    EXPECT_THROW(check_unital_cut(non_unital, swap, parse_product_state("0")), std::invalid_argument);
    ChannelCut wrong({{cd(1.0), Channel::identity(4), Channel::identity(2)}});
    EXPECT_THROW(check_unital_cut(wrong, swap, parse_product_state("0")), std::invalid_argument);
}
