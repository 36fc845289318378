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

#include "qcut/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qcut {

namespace {

// Named gate constants, exact to double precision.
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

const Mat2 kH = (Mat2() << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2).finished();
const Mat2 kT = (Mat2() << 1, 0, 0, cd(kInvSqrt2, kInvSqrt2)).finished();
const Mat2 kS = (Mat2() << 1, 0, 0, cd(0, 1)).finished();

const Mat4 kCnot = (Mat4() << 1, 0, 0, 0,
                              0, 1, 0, 0,
                              0, 0, 0, 1,
                              0, 0, 1, 0).finished();
const Mat4 kCz = (Mat4() << 1, 0, 0, 0,
                            0, 1, 0, 0,
                            0, 0, 1, 0,
                            0, 0, 0, -1).finished();
const Mat4 kSwap = (Mat4() << 1, 0, 0, 0,
                              0, 0, 1, 0,
                              0, 1, 0, 0,
                              0, 0, 0, 1).finished();

std::string lower(std::string_view s) {
    std::string out(s);
    for (char &c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

void check_wires(const std::vector<int> &wires, int arity) {
    if (static_cast<int>(wires.size()) != arity) {
        throw std::invalid_argument("gate expects " + std::to_string(arity) + " wire(s), got " +
                                    std::to_string(wires.size()));
    }
    for (int w : wires) {
        if (w < 0) {
            throw std::invalid_argument("negative wire index " + std::to_string(w));
        }
    }
    if (arity == 2 && wires[0] == wires[1]) {
        throw std::invalid_argument("two-qubit gate on repeated wire " + std::to_string(wires[0]));
    }
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::T:
            return "T";
        case GateKind::S:
            return "S";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::CZ:
            return "CZ";
        case GateKind::SWAP:
            return "SWAP";
        case GateKind::Custom1:
            return "U1";
        case GateKind::Custom2:
            return "U2";
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    std::string n = lower(name);
    if (n == "h") return GateKind::H;
    if (n == "t") return GateKind::T;
    if (n == "s") return GateKind::S;
    if (n == "x") return GateKind::X;
    if (n == "y") return GateKind::Y;
    if (n == "z") return GateKind::Z;
    if (n == "cnot" || n == "cx") return GateKind::CNOT;
    if (n == "cz") return GateKind::CZ;
    if (n == "swap") return GateKind::SWAP;
    return std::nullopt;
}

int gate_kind_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::SWAP:
        case GateKind::Custom2:
            return 2;
        default:
            return 1;
    }
}

Gate Gate::named(GateKind kind, std::vector<int> wires) {
    if (kind == GateKind::Custom1 || kind == GateKind::Custom2) {
        throw std::invalid_argument("custom gates need a matrix");
    }
    Gate g;
    g.kind_ = kind;
    g.arity_ = gate_kind_arity(kind);
    check_wires(wires, g.arity_);
    g.wires_ = {wires[0], g.arity_ == 2 ? wires[1] : -1};
    return g;
}

Gate Gate::custom1(const Mat2 &m, int wire, Unitarity check) {
    if (!all_finite(m)) {
        throw std::invalid_argument("custom gate matrix has non-finite entries");
    }
    bool unitary = qcut::is_unitary(m);
    if (!unitary && check == Unitarity::Require) {
        throw std::invalid_argument("custom single-qubit matrix is not unitary");
    }
    Gate g;
    g.kind_ = GateKind::Custom1;
    g.arity_ = 1;
    check_wires({wire}, 1);
    g.wires_ = {wire, -1};
    g.m1_ = m;
    g.unitary_ = unitary;
    return g;
}

Gate Gate::custom2(const Mat4 &m, int w0, int w1, Unitarity check) {
    if (!all_finite(m)) {
        throw std::invalid_argument("custom gate matrix has non-finite entries");
    }
    bool unitary = qcut::is_unitary(m);
    if (!unitary && check == Unitarity::Require) {
        throw std::invalid_argument("custom two-qubit matrix is not unitary");
    }
    Gate g;
    g.kind_ = GateKind::Custom2;
    g.arity_ = 2;
    check_wires({w0, w1}, 2);
    g.wires_ = {w0, w1};
    g.m2_ = m;
    g.unitary_ = unitary;
    return g;
}

std::vector<int> Gate::wires() const {
    if (arity_ == 1) {
        return {wires_[0]};
    }
    return {wires_[0], wires_[1]};
}

std::string Gate::name() const {
    std::ostringstream out;
    out << gate_kind_name(kind_) << "(" << wires_[0];
    if (arity_ == 2) {
        out << "," << wires_[1];
    }
    out << ")";
    return out.str();
}

Mat2 Gate::matrix1() const {
    switch (kind_) {
        case GateKind::H:
            return kH;
        case GateKind::T:
            return kT;
        case GateKind::S:
            return kS;
        case GateKind::X:
            return pauli_matrix(Pauli::X);
        case GateKind::Y:
            return pauli_matrix(Pauli::Y);
        case GateKind::Z:
            return pauli_matrix(Pauli::Z);
        case GateKind::Custom1:
            return m1_;
        default:
            throw std::logic_error("matrix1 called on a two-qubit gate");
    }
}

Mat4 Gate::matrix2() const {
    switch (kind_) {
        case GateKind::CNOT:
            return kCnot;
        case GateKind::CZ:
            return kCz;
        case GateKind::SWAP:
            return kSwap;
        case GateKind::Custom2:
            return m2_;
        default:
            throw std::logic_error("matrix2 called on a single-qubit gate");
    }
}

Mat4 Gate::matrix2_on(int p, int q) const {
    if (arity_ != 2) {
        throw std::invalid_argument("matrix2_on: single-qubit gate");
    }
    if (wires_[0] == p && wires_[1] == q) {
        return matrix2();
    }
    if (wires_[0] == q && wires_[1] == p) {
        return kSwap * matrix2() * kSwap;
    }
    throw std::invalid_argument("matrix2_on: gate " + name() + " is not on wires (" + std::to_string(p) +
                                "," + std::to_string(q) + ")");
}

Gate Gate::with_wires(std::vector<int> wires) const {
    check_wires(wires, arity_);
    Gate g = *this;
    g.wires_ = {wires[0], arity_ == 2 ? wires[1] : -1};
    return g;
}

Gate Gate::dagger() const {
    switch (kind_) {
        case GateKind::T:
        case GateKind::S:
            return custom1(matrix1().adjoint(), wires_[0]);
        case GateKind::Custom1: {
            Gate g = *this;
            g.m1_ = m1_.adjoint();
            return g;
        }
        case GateKind::Custom2: {
            Gate g = *this;
            g.m2_ = m2_.adjoint();
            return g;
        }
        default:
            return *this;
    }
}

Circuit::Circuit(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("circuit needs at least one wire");
    }
}

Circuit &Circuit::append(Gate g) {
    for (int w : g.wires()) {
        if (w >= n_) {
            throw std::invalid_argument("gate " + g.name() + " exceeds circuit width " + std::to_string(n_));
        }
    }
    gates_.push_back(std::move(g));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    for (const Gate &g : other.gates()) {
        append(g);
    }
    return *this;
}

Circuit Circuit::dagger() const {
    Circuit out(n_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.append(it->dagger());
    }
    return out;
}

std::size_t Circuit::two_qubit_count() const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) { return g.is_two_qubit(); }));
}

bool QuantumComb::in_partition(int wire) const {
    return std::find(partition.begin(), partition.end(), wire) != partition.end();
}

ValidationReport validate(const QuantumComb &comb) {
    auto fail = [](std::string msg, int index = -1) { return ValidationReport{false, std::move(msg), index}; };

    if (comb.n < 1) {
        return fail("comb needs at least one wire");
    }
    if (comb.partition.empty() || static_cast<int>(comb.partition.size()) >= comb.n) {
        return fail("partition must be a nonempty proper subset of the wires");
    }
    std::vector<int> sorted = comb.partition;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return fail("partition lists a wire twice");
    }
    if (sorted.front() < 0 || sorted.back() >= comb.n) {
        return fail("partition wire out of range");
    }

    const int slots = static_cast<int>(comb.slot_count());
    for (std::size_t g = 0; g < comb.gaps.size(); ++g) {
        const GapSlot &gap = comb.gaps[g];
        if (g > 0 && gap.position <= comb.gaps[g - 1].position) {
            return fail("gap positions must be strictly increasing (gap " + std::to_string(g) + " at " +
                        std::to_string(gap.position) + " after " + std::to_string(comb.gaps[g - 1].position) +
                        ")");
        }
        if (gap.position < 0 || gap.position >= slots) {
            return fail("gap " + std::to_string(g) + " position " + std::to_string(gap.position) +
                        " outside the slot range");
        }
        if (gap.p < 0 || gap.p >= comb.n || gap.q < 0 || gap.q >= comb.n) {
            return fail("gap " + std::to_string(g) + " wire out of range");
        }
        if (!comb.in_partition(gap.p) || comb.in_partition(gap.q)) {
            return fail("gap " + std::to_string(g) + " does not straddle the partition");
        }
    }

    // side[w]: whether the qubit currently on wire w started inside the partition.
    std::vector<char> side(comb.n);
    for (int w = 0; w < comb.n; ++w) {
        side[w] = comb.in_partition(w);
    }
    for (std::size_t i = 0; i < comb.fixed_gates.size(); ++i) {
        const Gate &g = comb.fixed_gates[i];
        for (int w : g.wires()) {
            if (w >= comb.n) {
                return fail("fixed gate " + std::to_string(i) + " " + g.name() + " exceeds width",
                            static_cast<int>(i));
            }
        }
        if (!g.is_two_qubit()) {
            continue;
        }
        if (g.is_swap()) {
            std::swap(side[g.wire(0)], side[g.wire(1)]);
        } else if (side[g.wire(0)] != side[g.wire(1)]) {
            return fail("fixed gate " + std::to_string(i) + " " + g.name() + " crosses the partition",
                        static_cast<int>(i));
        }
    }
    for (int w = 0; w < comb.n; ++w) {
        if (static_cast<bool>(side[w]) != comb.in_partition(w)) {
            return fail("fixed SWAPs leave wire " + std::to_string(w) + " holding a qubit from the other side");
        }
    }
    return {};
}

Circuit fill(const QuantumComb &comb, const std::vector<Filling> &fillings) {
    if (fillings.size() != comb.gaps.size()) {
        throw std::invalid_argument("fill: " + std::to_string(fillings.size()) + " fillings for " +
                                    std::to_string(comb.gaps.size()) + " gaps");
    }
    Circuit out(comb.n);
    std::size_t next_fixed = 0;
    std::size_t next_gap = 0;
    const std::size_t slots = comb.slot_count();
    for (std::size_t s = 0; s < slots; ++s) {
        if (next_gap < comb.gaps.size() && comb.gaps[next_gap].position == static_cast<int>(s)) {
            const GapSlot &gap = comb.gaps[next_gap];
            const Filling &f = fillings[next_gap];
            if (const Gate *g = std::get_if<Gate>(&f)) {
                bool same = g->is_two_qubit() && ((g->wire(0) == gap.p && g->wire(1) == gap.q) ||
                                                  (g->wire(0) == gap.q && g->wire(1) == gap.p));
                if (!same) {
                    throw std::invalid_argument("fill: filling " + g->name() + " does not match gap wires (" +
                                                std::to_string(gap.p) + "," + std::to_string(gap.q) + ")");
                }
                out.append(*g);
            } else {
                const auto &pf = std::get<ProductFilling>(f);
                out.append(Gate::custom1(pf.a, gap.p, Unitarity::Allow));
                out.append(Gate::custom1(pf.b, gap.q, Unitarity::Allow));
            }
            ++next_gap;
        } else {
            if (next_fixed >= comb.fixed_gates.size()) {
                throw std::invalid_argument("fill: gap positions inconsistent with gate count");
            }
            out.append(comb.fixed_gates[next_fixed++]);
        }
    }
    if (next_gap != comb.gaps.size()) {
        throw std::invalid_argument("fill: gap positions inconsistent with gate count");
    }
    return out;
}

}  // namespace qcut
