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

#include "qcut/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace qcut {

namespace {

const json &field(const json &j, const char *key, const char *where) {
    if (!j.is_object()) {
        throw ParseError(std::string(where) + ": expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string(where) + ": missing field \"" + key + "\"");
    }
    return *it;
}

int as_int(const json &j, const char *where) {
    if (!j.is_number_integer()) {
        throw ParseError(std::string(where) + ": expected an integer");
    }
    return j.get<int>();
}

std::vector<int> int_list(const json &j, const char *where) {
    if (!j.is_array()) {
        throw ParseError(std::string(where) + ": expected an array of integers");
    }
    std::vector<int> out;
    for (const json &e : j) {
        out.push_back(as_int(e, where));
    }
    return out;
}

json complex_to_json(cd z) { return json::array({z.real(), z.imag()}); }

cd complex_from_json(const json &j, const char *where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError(std::string(where) + ": expected a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json &j, Eigen::Index rows, Eigen::Index cols) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("matrix: expected a nonempty array of rows");
    }
    const auto r = static_cast<Eigen::Index>(j.size());
    if (!j[0].is_array()) {
        throw ParseError("matrix: rows must be arrays");
    }
    const auto c = static_cast<Eigen::Index>(j[0].size());
    if (rows < 0 && r != c) {
        throw ParseError("matrix: expected a square matrix");
    }
    if ((rows >= 0 && r != rows) || (cols >= 0 && c != cols)) {
        throw ParseError("matrix: shape " + std::to_string(r) + "x" + std::to_string(c) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    }
    ComplexMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
        const json &row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c) {
            throw ParseError("matrix: ragged rows");
        }
        for (Eigen::Index k = 0; k < c; ++k) {
            m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)], "matrix entry");
        }
    }
    if (!all_finite(m)) {
        throw ParseError("matrix: non-finite entry");
    }
    return m;
}

json gate_to_json(const Gate &g) {
    json out;
    if (g.kind() == GateKind::Custom1) {
        out["matrix"] = matrix_to_json(g.matrix1());
    } else if (g.kind() == GateKind::Custom2) {
        out["matrix"] = matrix_to_json(g.matrix2());
    } else {
        out["name"] = std::string(gate_kind_name(g.kind()));
    }
    out["wires"] = g.wires();
    if (!g.is_unitary()) {
        out["unitary"] = false;
    }
    return out;
}

Gate gate_from_json(const json &j) {
    if (!j.is_object()) {
        throw ParseError("gate: expected an object");
    }
    std::vector<int> wires = int_list(field(j, "wires", "gate"), "gate wires");
    const bool has_name = j.contains("name");
    const bool has_matrix = j.contains("matrix");
    if (has_name == has_matrix) {
        throw ParseError("gate: exactly one of \"name\" and \"matrix\" is required");
    }
    Unitarity check = Unitarity::Require;
    if (j.contains("unitary")) {
        if (!j["unitary"].is_boolean()) {
            throw ParseError("gate: \"unitary\" must be a boolean");
        }
        check = j["unitary"].get<bool>() ? Unitarity::Require : Unitarity::Allow;
    }
    try {
        if (has_name) {
            if (!j["name"].is_string()) {
                throw ParseError("gate: \"name\" must be a string");
            }
            const auto name = j["name"].get<std::string>();
            auto kind = gate_kind_from_name(name);
            if (!kind || *kind == GateKind::Custom1 || *kind == GateKind::Custom2) {
                throw ParseError("gate: unknown gate name \"" + name + "\"");
            }
            return Gate::named(*kind, wires);
        }
        ComplexMatrix m = matrix_from_json(j["matrix"]);
        if (m.rows() == 2 && wires.size() == 1) {
            return Gate::custom1(m, wires[0], check);
        }
        if (m.rows() == 4 && wires.size() == 2) {
            return Gate::custom2(m, wires[0], wires[1], check);
        }
        throw ParseError("gate: matrix size does not match the number of wires");
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string("gate: ") + e.what());
    }
}

json document_to_json(const CircuitDocument &doc) {
    json out;
    out["n"] = doc.circuit.n();
    json gates = json::array();
    for (const Gate &g : doc.circuit.gates()) {
        gates.push_back(gate_to_json(g));
    }
    out["gates"] = std::move(gates);
    if (!doc.gaps.empty()) {
        json gaps = json::array();
        for (const GapSlot &s : doc.gaps) {
            gaps.push_back({{"position", s.position}, {"wires", {s.p, s.q}}});
        }
        out["gaps"] = std::move(gaps);
    }
    if (doc.partition) {
        out["partition"] = *doc.partition;
    }
    if (!doc.ancillas.empty()) {
        out["ancillas"] = doc.ancillas;
    }
    return out;
}

CircuitDocument document_from_json(const json &j) {
    const int n = as_int(field(j, "n", "circuit"), "circuit n");
    if (n < 1) {
        throw ParseError("circuit: n must be positive");
    }
    const json &gates = field(j, "gates", "circuit");
    if (!gates.is_array()) {
        throw ParseError("circuit: \"gates\" must be an array");
    }
    CircuitDocument doc;
    doc.circuit = Circuit(n);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        try {
            doc.circuit.append(gate_from_json(gates[i]));
        } catch (const ParseError &e) {
            throw ParseError("gate " + std::to_string(i) + ": " + e.what());
        } catch (const std::invalid_argument &e) {
            throw ParseError("gate " + std::to_string(i) + ": " + e.what());
        }
    }
    if (j.contains("gaps")) {
        if (!j["gaps"].is_array()) {
            throw ParseError("circuit: \"gaps\" must be an array");
        }
        for (const json &g : j["gaps"]) {
            GapSlot s;
            s.position = as_int(field(g, "position", "gap"), "gap position");
            std::vector<int> w = int_list(field(g, "wires", "gap"), "gap wires");
            if (w.size() != 2) {
                throw ParseError("gap: \"wires\" must have two entries");
            }
            s.p = w[0];
            s.q = w[1];
            doc.gaps.push_back(s);
        }
    }
    if (j.contains("partition")) {
        doc.partition = int_list(j["partition"], "partition");
    }
    if (j.contains("ancillas")) {
        doc.ancillas = int_list(j["ancillas"], "ancillas");
    }
    return doc;
}

json parse_json_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

CircuitDocument parse_circuit_document(std::string_view text) {
    json j = parse_json_text(text);
    try {
        return document_from_json(j);
    } catch (const json::exception &e) {
        throw ParseError(std::string("circuit: ") + e.what());
    }
}

CombWithGates comb_from_document(const CircuitDocument &doc) {
    if (!doc.partition) {
        throw ParseError("comb: document has no \"partition\"");
    }
    const auto &gates = doc.circuit.gates();
    std::set<int> gap_positions;
    for (const GapSlot &s : doc.gaps) {
        if (s.position < 0 || static_cast<std::size_t>(s.position) >= gates.size()) {
            throw ParseError("comb: gap position " + std::to_string(s.position) + " is not a gate index");
        }
        const Gate &g = gates[static_cast<std::size_t>(s.position)];
        const bool same = g.is_two_qubit() && ((g.wire(0) == s.p && g.wire(1) == s.q) ||
                                               (g.wire(0) == s.q && g.wire(1) == s.p));
        if (!same) {
            throw ParseError("comb: gate at gap position " + std::to_string(s.position) +
                             " is not a two-qubit gate on the gap's wires");
        }
        gap_positions.insert(s.position);
    }
    CombWithGates out;
    out.comb.n = doc.circuit.n();
    out.comb.partition = *doc.partition;
    out.comb.gaps = doc.gaps;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (gap_positions.count(static_cast<int>(i)) == 0) {
            out.comb.fixed_gates.push_back(gates[i]);
        }
    }
    for (const GapSlot &s : doc.gaps) {
        out.gap_gates.push_back(gates[static_cast<std::size_t>(s.position)]);
    }
    ValidationReport r = validate(out.comb);
    if (!r.ok) {
        throw ParseError("comb: " + r.message);
    }
    return out;
}

CircuitDocument document_from_comb(const QuantumComb &comb, const std::vector<Gate> &gap_gates,
                                   std::vector<int> ancillas) {
    if (gap_gates.size() != comb.gaps.size()) {
        throw std::invalid_argument("document_from_comb: one gap gate per gap required");
    }
    CircuitDocument doc;
    doc.circuit = Circuit(comb.n);
    std::size_t fixed = 0;
    std::size_t gap = 0;
    for (std::size_t slot = 0; slot < comb.slot_count(); ++slot) {
        if (gap < comb.gaps.size() && static_cast<std::size_t>(comb.gaps[gap].position) == slot) {
            doc.circuit.append(gap_gates[gap++]);
        } else {
            doc.circuit.append(comb.fixed_gates.at(fixed++));
        }
    }
    doc.gaps = comb.gaps;
    doc.partition = comb.partition;
    doc.ancillas = std::move(ancillas);
    return doc;
}

json decomposition_to_json(const CutDecomposition &dec) {
    json terms = json::array();
    for (const CutTerm &t : dec.terms) {
        json fillings = json::array();
        for (const ProductFilling &f : t.fillings) {
            fillings.push_back(json::array({matrix_to_json(f.a), matrix_to_json(f.b)}));
        }
        terms.push_back({{"coef", complex_to_json(t.coef)}, {"fillings", std::move(fillings)}});
    }
    return {{"mode", std::string(cut_mode_name(dec.mode))}, {"terms", std::move(terms)}};
}

CutDecomposition decomposition_from_json(const json &j, const QuantumComb &comb) {
    CutDecomposition dec;
    dec.comb = comb;
    const json &mode = field(j, "mode", "decomposition");
    if (!mode.is_string()) {
        throw ParseError("decomposition: \"mode\" must be a string");
    }
    auto m = cut_mode_from_name(mode.get<std::string>());
    if (!m) {
        throw ParseError("decomposition: unknown mode \"" + mode.get<std::string>() + "\"");
    }
    dec.mode = *m;
    const json &terms = field(j, "terms", "decomposition");
    if (!terms.is_array()) {
        throw ParseError("decomposition: \"terms\" must be an array");
    }
    for (const json &t : terms) {
        CutTerm term;
        term.coef = complex_from_json(field(t, "coef", "term"), "term coef");
        const json &fillings = field(t, "fillings", "term");
        if (!fillings.is_array() || fillings.size() != comb.gaps.size()) {
            throw ParseError("term: need one filling per gap");
        }
        for (const json &f : fillings) {
            if (!f.is_array() || f.size() != 2) {
                throw ParseError("filling: expected [A, B]");
            }
            term.fillings.push_back({matrix_from_json(f[0], 2, 2), matrix_from_json(f[1], 2, 2)});
        }
        dec.terms.push_back(std::move(term));
    }
    return dec;
}

json channel_to_json(const Channel &ch) {
    json kraus = json::array();
    for (const ComplexMatrix &k : ch.kraus()) {
        kraus.push_back(matrix_to_json(k));
    }
    return {{"dim", ch.dim()}, {"kraus", std::move(kraus)}};
}

Channel channel_from_json(const json &j) {
    const int dim = as_int(field(j, "dim", "channel"), "channel dim");
    const json &kraus = field(j, "kraus", "channel");
    if (!kraus.is_array()) {
        throw ParseError("channel: \"kraus\" must be an array");
    }
    std::vector<ComplexMatrix> ks;
    for (const json &k : kraus) {
        ks.push_back(matrix_from_json(k, dim, dim));
    }
    try {
        return Channel(dim, std::move(ks));
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string("channel: ") + e.what());
    }
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace qcut
