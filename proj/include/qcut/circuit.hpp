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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qcut/numerics.hpp"

namespace qcut {

enum class GateKind { H, T, S, X, Y, Z, CNOT, CZ, SWAP, Custom1, Custom2 };

std::string_view gate_kind_name(GateKind kind);
/// Case-insensitive; accepts "cx" as an alias for CNOT. Custom kinds have no name.
std::optional<GateKind> gate_kind_from_name(std::string_view name);
int gate_kind_arity(GateKind kind);

/// Whether a custom matrix must be unitary (within kDefaultTol) to be accepted.
enum class Unitarity { Require, Allow };

/// A one- or two-qubit gate bound to wires. Two-qubit matrices act in the
/// |wires[0] wires[1]> basis with wires[0] as the more significant bit.
class Gate {
public:
    static Gate named(GateKind kind, std::vector<int> wires);
    static Gate custom1(const Mat2 &m, int wire, Unitarity check = Unitarity::Require);
    static Gate custom2(const Mat4 &m, int w0, int w1, Unitarity check = Unitarity::Require);

    static Gate h(int w) { return named(GateKind::H, {w}); }
    static Gate x(int w) { return named(GateKind::X, {w}); }
    static Gate z(int w) { return named(GateKind::Z, {w}); }
    static Gate cnot(int control, int target) { return named(GateKind::CNOT, {control, target}); }
    static Gate cz(int a, int b) { return named(GateKind::CZ, {a, b}); }
    static Gate swap(int a, int b) { return named(GateKind::SWAP, {a, b}); }

    GateKind kind() const { return kind_; }
    int arity() const { return arity_; }
    int wire(int i) const { return wires_[i]; }
    std::vector<int> wires() const;
    bool is_swap() const { return kind_ == GateKind::SWAP; }
    bool is_two_qubit() const { return arity_ == 2; }
    /// False only for custom matrices accepted under Unitarity::Allow that are not unitary.
    bool is_unitary() const { return unitary_; }
    std::string name() const;

    Mat2 matrix1() const;
    Mat4 matrix2() const;
    /// The two-qubit matrix expressed in the |p q> basis; {p, q} must equal the gate's wires.
    Mat4 matrix2_on(int p, int q) const;

    Gate with_wires(std::vector<int> wires) const;
    Gate dagger() const;

private:
    Gate() = default;

    GateKind kind_ = GateKind::H;
    int arity_ = 1;
    std::array<int, 2> wires_{0, -1};
    Mat2 m1_ = Mat2::Identity();
    Mat4 m2_ = Mat4::Identity();
    bool unitary_ = true;
};

class Circuit {
public:
    explicit Circuit(int n);

    int n() const { return n_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    /// Throws std::invalid_argument if any wire is out of range.
    Circuit &append(Gate g);
    Circuit &append(const Circuit &other);
    Circuit dagger() const;
    std::size_t two_qubit_count() const;

private:
    int n_;
    std::vector<Gate> gates_;
};

struct GapSlot {
    int position = 0;  // slot index in the interleaved sequence of fixed gates and gaps
    int p = 0;         // wire inside the cut block
    int q = 0;         // wire outside it
};

/// A circuit template with two-qubit gaps. Slots are numbered over the merged
/// order: slot s is a gap when some gap has position s, otherwise the next
/// fixed gate.
struct QuantumComb {
    int n = 1;
    std::vector<int> partition{0};
    std::vector<Gate> fixed_gates;
    std::vector<GapSlot> gaps;

    bool in_partition(int wire) const;
    std::size_t slot_count() const { return fixed_gates.size() + gaps.size(); }
};

struct ValidationReport {
    bool ok = true;
    std::string message;
    int gate_index = -1;  // fixed-gate index of the first offender, if any
};

/// Checks the comb invariants. Fixed SWAPs are treated as relabelings: a fixed
/// two-qubit gate is a violation when the qubits it touches started on
/// opposite sides of the partition, and the fixed SWAPs must return every
/// qubit to its own side by the end.
ValidationReport validate(const QuantumComb &comb);

struct ProductFilling {
    Mat2 a = Mat2::Identity();  // acts on the gap's p wire
    Mat2 b = Mat2::Identity();  // acts on the gap's q wire
};

using Filling = std::variant<Gate, ProductFilling>;

/// Concrete circuit with gaps replaced in order. Product fillings become two
/// single-qubit gates (a on p, then b on q).
Circuit fill(const QuantumComb &comb, const std::vector<Filling> &fillings);

}  // namespace qcut
