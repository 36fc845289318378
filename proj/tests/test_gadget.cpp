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

using namespace qcut;

namespace {

// psi (x) |0..0> on trailing ancillas, via the oracle kron.
ComplexVector pad(const ComplexVector &psi, int extra) {
    ComplexMatrix out = psi;
    for (int i = 0; i < extra; ++i) out = oracle::kron(out, oracle::basis(1, 0));
    return out;
}

}  // namespace

TEST(Gadget, SingleCnotLayoutV1) {
    Circuit c(2);
    c.append(Gate::cnot(0, 1));
    GadgetizedCircuit g = gadgetize(c);
    EXPECT_EQ(g.circuit.n(), 4);
    EXPECT_EQ(g.anc_a, 2);
    EXPECT_EQ(g.anc_b, 3);
    EXPECT_FALSE(g.anc_c.has_value());
    const auto &gs = g.circuit.gates();
    ASSERT_EQ(gs.size(), 5u);
    EXPECT_EQ(gs[0].name(), "SWAP(0,2)");
    EXPECT_EQ(gs[1].name(), "SWAP(1,3)");
    EXPECT_EQ(gs[2].name(), "CNOT(2,3)");
    EXPECT_EQ(gs[3].name(), "SWAP(0,2)");
    EXPECT_EQ(gs[4].name(), "SWAP(1,3)");
    EXPECT_TRUE(g.origin_map[0].inserted());
    EXPECT_EQ(g.origin_map[2].source, 0);
    EXPECT_FALSE(check_gadget(g).has_value());
}

TEST(Gadget, V2UsesEightSwapsPerGate) {
    Circuit c(2);
    c.append(Gate::cnot(0, 1));
    GadgetizedCircuit g = gadgetize_v2(c);
    EXPECT_EQ(g.circuit.n(), 5);
    ASSERT_TRUE(g.anc_c.has_value());
    auto swaps = std::count_if(g.circuit.gates().begin(), g.circuit.gates().end(), [](const Gate &x) { return x.is_swap(); });
    EXPECT_EQ(swaps, 8);
    EXPECT_FALSE(check_gadget(g).has_value());
}

TEST(Gadget, SwapsAndSingleQubitGatesStayInPlace) {
    Circuit c(3);
    c.append(Gate::h(0)).append(Gate::swap(1, 2)).append(Gate::x(2));
    GadgetizedCircuit g = gadgetize(c);
    ASSERT_EQ(g.circuit.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(g.circuit.gates()[i].name(), c.gates()[i].name());
        EXPECT_EQ(g.origin_map[i].source, static_cast<int>(i));
    }
}

TEST(Gadget, PreservesStateOnOriginalWiresAgainstOracle) {
    Rng rng(16);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 4;
        Circuit c = random_circuit(n, 1 + trial % 12, GateSet::General, rng);
        ComplexVector in = random_product_state(n, rng).dense();
        const ComplexVector expect = oracle::state(c, in);
        for (GadgetVariant v : {GadgetVariant::V1, GadgetVariant::V2}) {
            GadgetizedCircuit g = gadgetize(c, v);
            const int extra = g.circuit.n() - n;
            EXPECT_LT(oracle::max_diff(oracle::state(g.circuit, pad(in, extra)), pad(expect, extra)), 1e-12);
            EXPECT_FALSE(check_gadget(g).has_value()) << *check_gadget(g);
            auto perm = inserted_swap_permutation(g);
            for (int w = 0; w < g.circuit.n(); ++w) EXPECT_EQ(perm[w], w);
        }
    }
}

TEST(Gadget, CheckGadgetFlagsTampering) {
    Circuit c(2);
    c.append(Gate::cz(0, 1));
    GadgetizedCircuit g = gadgetize(c);

    GadgetizedCircuit dropped = g;
    Circuit shorter(g.circuit.n());
    for (std::size_t i = 0; i + 1 < g.circuit.size(); ++i) shorter.append(g.circuit.gates()[i]);
    dropped.circuit = shorter;
    dropped.origin_map.pop_back();
    ASSERT_TRUE(check_gadget(dropped).has_value());
    EXPECT_NE(check_gadget(dropped)->find("cancel"), std::string::npos);

    GadgetizedCircuit moved = g;
    Circuit relocated(g.circuit.n());
    for (const Gate &x : g.circuit.gates()) relocated.append(x.is_swap() ? x : Gate::cz(0, 1));
    moved.circuit = relocated;
    EXPECT_TRUE(check_gadget(moved).has_value());

    GadgetizedCircuit short_map = g;
    short_map.origin_map.pop_back();
    EXPECT_TRUE(check_gadget(short_map).has_value());
}

TEST(Gadget, ExtractedCombHasOneGapPerRelocatedGate) {
    Circuit c(3);
    c.append(Gate::h(0)).append(Gate::cz(0, 1)).append(Gate::swap(1, 2)).append(Gate::cnot(2, 0));
    GadgetizedCircuit g = gadgetize(c);
    ExtractedComb e = extract_comb(g);
    EXPECT_TRUE(validate(e.comb).ok);
    EXPECT_EQ(e.comb.partition, std::vector<int>{g.anc_a});
    ASSERT_EQ(e.comb.gaps.size(), 2u);
    ASSERT_EQ(e.gap_gates.size(), 2u);
    EXPECT_EQ(e.gap_gates[0].kind(), GateKind::CZ);
    EXPECT_EQ(e.gap_gates[1].kind(), GateKind::CNOT);
    for (std::size_t j = 0; j < 2; ++j) {
        EXPECT_EQ(e.comb.gaps[j].p, g.anc_a);
        EXPECT_EQ(e.comb.gaps[j].q, g.anc_b);
        EXPECT_EQ(g.circuit.gates()[static_cast<std::size_t>(e.comb.gaps[j].position)].kind(), e.gap_gates[j].kind());
    }
    // Refilling the gaps with their own gates gives back the gadgetized circuit.
    Circuit refilled = fill(e.comb, {e.gap_gates[0], e.gap_gates[1]});
    EXPECT_LT(oracle::max_diff(oracle::unitary(refilled), oracle::unitary(g.circuit)), 1e-12);
}
