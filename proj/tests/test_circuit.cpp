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
#include "qcut/circuit.hpp"
#include "qcut/generators.hpp"

using namespace qcut;

namespace {

ComplexMatrix cnot_matrix() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
    return m;
}

ComplexMatrix swap_matrix() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
    return m;
}

QuantumComb two_wire_comb() {
    QuantumComb c;
    c.n = 2;
    c.partition = {0};
    c.fixed_gates = {Gate::h(0), Gate::x(1)};
    c.gaps = {{1, 0, 1}};
    return c;
}

}  // namespace

TEST(Gate, NamedMatricesAreExact) {
    EXPECT_EQ(oracle::max_diff(Gate::cnot(0, 1).matrix2(), cnot_matrix()), 0.0);
    EXPECT_EQ(oracle::max_diff(Gate::swap(0, 1).matrix2(), swap_matrix()), 0.0);
    Mat4 cz = Gate::cz(0, 1).matrix2();
    EXPECT_EQ(cz(3, 3), cd(-1, 0));
    EXPECT_EQ(oracle::max_diff(cz * cz, ComplexMatrix::Identity(4, 4)), 0.0);
    const Mat2 t = Gate::named(GateKind::T, {0}).matrix1();
    EXPECT_NEAR(std::arg(t(1, 1)), M_PI / 4, 1e-15);
    const Mat2 s = Gate::named(GateKind::S, {0}).matrix1();
    EXPECT_LT(oracle::max_diff(t * t, s), 1e-15);
    EXPECT_LT(oracle::max_diff(Gate::h(0).matrix1() * Gate::h(0).matrix1(), ComplexMatrix::Identity(2, 2)), 1e-15);
}

TEST(Gate, NamesParseCaseInsensitivelyWithAlias) {
    EXPECT_EQ(gate_kind_from_name("cz"), GateKind::CZ);
    EXPECT_EQ(gate_kind_from_name("CNOT"), GateKind::CNOT);
    EXPECT_EQ(gate_kind_from_name("cx"), GateKind::CNOT);
    EXPECT_EQ(gate_kind_from_name("Swap"), GateKind::SWAP);
    EXPECT_FALSE(gate_kind_from_name("toffoli").has_value());
    EXPECT_EQ(Gate::cz(2, 0).name(), "CZ(2,0)");
}

TEST(Gate, RejectsBadWiresAndNonUnitaryMatrices) {
    EXPECT_THROW(Gate::named(GateKind::CZ, {0}), std::invalid_argument);
    EXPECT_THROW(Gate::named(GateKind::H, {0, 1}), std::invalid_argument);
    EXPECT_THROW(Gate::cnot(1, 1), std::invalid_argument);
    EXPECT_THROW(Gate::h(-1), std::invalid_argument);
    Mat2 m;
    m << 1, 1, 0, 1;
    EXPECT_THROW(Gate::custom1(m, 0), std::invalid_argument);
    Gate allowed = Gate::custom1(m, 0, Unitarity::Allow);
    EXPECT_FALSE(allowed.is_unitary());
    EXPECT_TRUE(Gate::h(0).is_unitary());
}

TEST(Gate, Matrix2OnReversedWiresConjugatesBySwap) {
    Rng rng(9);
    for (int i = 0; i < 10; ++i) {
        Gate g = Gate::custom2(haar_random_unitary(4, rng()), 3, 1);
        ComplexMatrix expect = swap_matrix() * g.matrix2() * swap_matrix();
        EXPECT_LT(oracle::max_diff(g.matrix2_on(1, 3), expect), 1e-15);
        EXPECT_LT(oracle::max_diff(g.matrix2_on(3, 1), g.matrix2()), 1e-15);
        EXPECT_THROW(g.matrix2_on(1, 2), std::invalid_argument);
    }
}

TEST(Circuit, DaggerInvertsUnitary) {
    Rng rng(10);
    for (int i = 0; i < 10; ++i) {
        Circuit c = random_circuit(3, 8, GateSet::General, rng);
        ComplexMatrix u = oracle::unitary(c);
        EXPECT_LT(oracle::max_diff(oracle::unitary(c.dagger()), u.adjoint()), 1e-12);
    }
}

TEST(Circuit, AppendChecksWidth) {
    Circuit c(2);
    EXPECT_THROW(c.append(Gate::cz(0, 2)), std::invalid_argument);
    EXPECT_THROW(Circuit(0), std::invalid_argument);
    c.append(Gate::cz(0, 1)).append(Gate::h(1)).append(Gate::swap(0, 1));
    EXPECT_EQ(c.size(), 3u);
    EXPECT_EQ(c.two_qubit_count(), 2u);
}

TEST(Comb, ValidatesPartitionAndGaps) {
    EXPECT_TRUE(validate(two_wire_comb()).ok);

    QuantumComb c = two_wire_comb();
    c.partition = {};
    EXPECT_FALSE(validate(c).ok);
    c.partition = {0, 1};
    EXPECT_FALSE(validate(c).ok);
    c.partition = {0, 0};
    EXPECT_FALSE(validate(c).ok);
    c.partition = {5};
    EXPECT_FALSE(validate(c).ok);

    c = two_wire_comb();
    c.gaps = {{1, 1, 0}};
    EXPECT_FALSE(validate(c).ok) << "gap p must lie inside the partition";
    c.gaps = {{3, 0, 1}};
    EXPECT_FALSE(validate(c).ok) << "position beyond the slots";
    c.gaps = {{1, 0, 1}, {1, 0, 1}};
    EXPECT_FALSE(validate(c).ok) << "positions must increase";
}

TEST(Comb, FixedGateCrossingThePartitionIsReported) {
    QuantumComb c = two_wire_comb();
    c.fixed_gates.push_back(Gate::cz(0, 1));
    ValidationReport r = validate(c);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.gate_index, 2);
}

TEST(Comb, SwapsRelabelButMustReturnQubitsHome) {
    QuantumComb c;
    c.n = 3;
    c.partition = {2};
    c.fixed_gates = {Gate::swap(0, 2), Gate::swap(0, 2)};
    EXPECT_TRUE(validate(c).ok);
    c.fixed_gates = {Gate::swap(0, 2)};
    EXPECT_FALSE(validate(c).ok);
    // While qubit 0 sits on wire 2, a CZ between wires 1 and 2 stays on one side.
    c.fixed_gates = {Gate::swap(0, 2), Gate::cz(1, 2), Gate::swap(0, 2)};
    EXPECT_TRUE(validate(c).ok);
    c.fixed_gates = {Gate::swap(0, 2), Gate::cz(0, 1), Gate::swap(0, 2)};
    EXPECT_FALSE(validate(c).ok);
}

TEST(Comb, FillInsertsGatesAtTheirSlots) {
    QuantumComb c = two_wire_comb();
    Circuit with_gate = fill(c, {Gate::cz(1, 0)});
    ASSERT_EQ(with_gate.size(), 3u);
    EXPECT_EQ(with_gate.gates()[1].kind(), GateKind::CZ);
    EXPECT_EQ(with_gate.gates()[2].kind(), GateKind::X);

    Mat2 a = Mat2::Identity() * 2.0;
    Circuit with_product = fill(c, {ProductFilling{a, Mat2::Identity()}});
    ASSERT_EQ(with_product.size(), 4u);
    EXPECT_EQ(with_product.gates()[1].wire(0), 0);
    EXPECT_EQ(with_product.gates()[2].wire(0), 1);
    EXPECT_FALSE(with_product.gates()[1].is_unitary());

    EXPECT_THROW(fill(c, {}), std::invalid_argument);
    QuantumComb wide = c;
    wide.n = 3;
    EXPECT_THROW(fill(wide, {Gate::cz(0, 2)}), std::invalid_argument);
}
