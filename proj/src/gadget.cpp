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

#include "qcut/gadget.hpp"

#include <numeric>

namespace qcut {

std::vector<int> GadgetizedCircuit::ancillas() const {
    std::vector<int> out{anc_a, anc_b};
    if (anc_c) {
        out.push_back(*anc_c);
    }
    return out;
}

namespace {

bool relocatable(const Gate &g) { return g.is_two_qubit() && !g.is_swap(); }

class GadgetBuilder {
public:
    GadgetBuilder(const Circuit &c, GadgetVariant variant)
        : variant_(variant), out_{Circuit(c.n() + (variant == GadgetVariant::V1 ? 2 : 3)), c.n(), c.n() + 1, {}, {}} {
        if (variant == GadgetVariant::V2) {
            out_.anc_c = c.n() + 2;
        }
        for (std::size_t i = 0; i < c.gates().size(); ++i) {
            const Gate &g = c.gates()[i];
            if (!relocatable(g)) {
                emit(g, static_cast<int>(i));
                continue;
            }
            const int p = g.wire(0);
            const int q = g.wire(1);
            swap_to_a(p);
            swap_to_b(q);
            emit(g.with_wires({out_.anc_a, out_.anc_b}), static_cast<int>(i));
            swap_to_a(p);
            swap_to_b(q);
        }
    }

    GadgetizedCircuit take() { return std::move(out_); }

private:
    void emit(Gate g, int source) {
        out_.circuit.append(std::move(g));
        out_.origin_map.push_back(GateOrigin{source});
    }

    void inserted_swap(int x, int y) { emit(Gate::swap(x, y), GateOrigin::kInsertedSwap); }

    void swap_to_a(int p) { inserted_swap(p, out_.anc_a); }

    void swap_to_b(int q) {
        if (variant_ == GadgetVariant::V1) {
            inserted_swap(q, out_.anc_b);
            return;
        }
        const int c = *out_.anc_c;
        inserted_swap(q, c);
        inserted_swap(c, out_.anc_b);
        inserted_swap(q, c);
    }

    GadgetVariant variant_;
    GadgetizedCircuit out_;
};

}  // namespace

GadgetizedCircuit gadgetize(const Circuit &c) { return gadgetize(c, GadgetVariant::V1); }

GadgetizedCircuit gadgetize_v2(const Circuit &c) { return gadgetize(c, GadgetVariant::V2); }

GadgetizedCircuit gadgetize(const Circuit &c, GadgetVariant variant) {
    return GadgetBuilder(c, variant).take();
}

std::vector<int> inserted_swap_permutation(const GadgetizedCircuit &g) {
    // at[w]: which starting wire's content currently sits on wire w.
    std::vector<int> at(g.circuit.n());
    std::iota(at.begin(), at.end(), 0);
    for (std::size_t i = 0; i < g.circuit.gates().size(); ++i) {
        if (i < g.origin_map.size() && g.origin_map[i].inserted()) {
            const Gate &s = g.circuit.gates()[i];
            std::swap(at[s.wire(0)], at[s.wire(1)]);
        }
    }
    std::vector<int> perm(at.size());
    for (std::size_t w = 0; w < at.size(); ++w) {
        perm[at[w]] = static_cast<int>(w);
    }
    return perm;
}

std::optional<std::string> check_gadget(const GadgetizedCircuit &g) {
    const auto &gates = g.circuit.gates();
    if (g.origin_map.size() != gates.size()) {
        return "origin map has " + std::to_string(g.origin_map.size()) + " entries for " +
               std::to_string(gates.size()) + " gates";
    }
    const int n = g.circuit.n();
    for (int anc : g.ancillas()) {
        if (anc < 0 || anc >= n) {
            return "ancilla wire " + std::to_string(anc) + " out of range";
        }
    }
    if (g.anc_a == g.anc_b) {
        return std::string("ancillas a and b coincide");
    }
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate &gate = gates[i];
        if (g.origin_map[i].inserted() && !gate.is_swap()) {
            return "gate " + std::to_string(i) + " " + gate.name() + " is marked inserted but is not a SWAP";
        }
        if (relocatable(gate)) {
            bool on_pair = (gate.wire(0) == g.anc_a && gate.wire(1) == g.anc_b) ||
                           (gate.wire(0) == g.anc_b && gate.wire(1) == g.anc_a);
            if (!on_pair) {
                return "gate " + std::to_string(i) + " " + gate.name() + " is not on the ancilla pair";
            }
        }
    }
    std::vector<int> perm = inserted_swap_permutation(g);
    for (int w = 0; w < n; ++w) {
        if (perm[w] != w) {
            return "inserted SWAPs do not cancel (wire " + std::to_string(w) + " ends on " +
                   std::to_string(perm[w]) + ")";
        }
    }
    return std::nullopt;
}

ExtractedComb extract_comb(const GadgetizedCircuit &g) {
    if (auto err = check_gadget(g)) {
        throw std::invalid_argument("extract_comb: malformed gadget: " + *err);
    }
    ExtractedComb out;
    out.comb.n = g.circuit.n();
    out.comb.partition = {g.anc_a};
    const auto &gates = g.circuit.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (relocatable(gates[i])) {
            out.comb.gaps.push_back(GapSlot{static_cast<int>(i), g.anc_a, g.anc_b});
            out.gap_gates.push_back(gates[i]);
        } else {
            out.comb.fixed_gates.push_back(gates[i]);
        }
    }
    ValidationReport report = validate(out.comb);
    if (!report.ok) {
        throw std::invalid_argument("extract_comb: comb invalid: " + report.message);
    }
    return out;
}

}  // namespace qcut
