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

#include "qcut/commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qcut/gadget.hpp"
#include "qcut/json_io.hpp"
#include "qcut/simulate.hpp"
#include "qcut/suites.hpp"

namespace qcut {

namespace {

CutMode parse_mode(const std::string &name) {
    auto m = cut_mode_from_name(name);
    if (!m) {
        throw ParseError("unknown mode \"" + name + "\" (expected schmidt or pauli)");
    }
    return *m;
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + path);
    }
    f << text;
}

// Document to --out when given, else to stdout.
void emit(const GlobalOptions &g, const json &doc, std::ostream &out) {
    if (g.out.empty()) {
        out << doc.dump(2) << '\n';
    } else {
        write_file(g.out, doc.dump(2) + "\n");
    }
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string complex_str(cd z) {
    return "(" + num(z.real()) + (z.imag() < 0 ? " - " : " + ") + num(std::abs(z.imag())) + "i)";
}

std::string matrix_str(const ComplexMatrix &m) {
    std::string s = "[";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        s += r == 0 ? "[" : ", [";
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            s += (c == 0 ? "" : ", ") + complex_str(m(r, c));
        }
        s += "]";
    }
    return s + "]";
}

CircuitDocument load_circuit(const std::string &path) {
    if (path.empty()) {
        throw ParseError("--circuit is required");
    }
    return parse_circuit_document(read_text_file(path));
}

ProductState load_input(const std::string &text, int n) {
    ProductState in = text.empty() ? ProductState::zeros(n) : parse_product_state(text);
    if (in.n() != n) {
        throw ParseError("input has " + std::to_string(in.n()) + " wires, circuit has " + std::to_string(n));
    }
    return in;
}

PauliObservable load_observable(const std::string &text, int n) {
    if (text.empty()) {
        throw ParseError("--observable is required");
    }
    PauliObservable m = parse_observable(text);
    if (m.n() != n) {
        throw ParseError("observable has " + std::to_string(m.n()) + " wires, circuit has " + std::to_string(n));
    }
    return m;
}

}  // namespace

int cmd_decompose(const GlobalOptions &g, const DecomposeOptions &o, std::ostream &out) {
    const CutMode mode = parse_mode(o.mode);
    if (o.gate.empty() == o.matrix_file.empty()) {
        throw ParseError("decompose needs exactly one of --gate and --matrix");
    }
    Gate gate = Gate::h(0);
    std::string label;
    if (!o.gate.empty()) {
        auto kind = gate_kind_from_name(o.gate);
        if (!kind || gate_kind_arity(*kind) != 2 || *kind == GateKind::Custom2) {
            throw ParseError("unknown two-qubit gate \"" + o.gate + "\"");
        }
        gate = Gate::named(*kind, {0, 1});
        label = std::string(gate_kind_name(*kind));
    } else {
        json j = parse_json_text(read_text_file(o.matrix_file));
        const json &mj = j.is_object() && j.contains("matrix") ? j["matrix"] : j;
        try {
            gate = Gate::custom2(matrix_from_json(mj, 4, 4), 0, 1);
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what());
        }
        label = "custom";
    }
    auto terms = gate_cut(gate, mode);
    json doc{{"gate", label}, {"mode", std::string(cut_mode_name(mode))}, {"L", terms.size()}};
    json jt = json::array();
    for (const GateCutTerm &t : terms) {
        jt.push_back({{"coef", {t.coef.real(), t.coef.imag()}},
                      {"a", matrix_to_json(t.factor_a)},
                      {"b", matrix_to_json(t.factor_b)}});
    }
    doc["terms"] = std::move(jt);
    if (g.json) {
        out << doc.dump(2) << '\n';
    } else {
        out << "gate " << label << ", mode " << cut_mode_name(mode) << "\n";
        out << "L = " << terms.size() << "\n";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            out << "term " << i << ": coef " << complex_str(terms[i].coef) << "\n";
            out << "  a = " << matrix_str(terms[i].factor_a) << "\n";
            out << "  b = " << matrix_str(terms[i].factor_b) << "\n";
        }
    }
    if (!g.out.empty()) {
        write_file(g.out, doc.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_gadgetize(const GlobalOptions &g, const GadgetizeOptions &o, std::ostream &out) {
    GadgetVariant variant;
    if (o.variant == "v1") {
        variant = GadgetVariant::V1;
    } else if (o.variant == "v2") {
        variant = GadgetVariant::V2;
    } else {
        throw ParseError("unknown variant \"" + o.variant + "\" (expected v1 or v2)");
    }
    CircuitDocument src = load_circuit(o.circuit);
    GadgetizedCircuit gc = gadgetize(src.circuit, variant);
    CircuitDocument doc;
    if (variant == GadgetVariant::V1) {
        // The v1 output is also a valid comb: gaps mark the relocated gates.
        ExtractedComb ext = extract_comb(gc);
        doc = document_from_comb(ext.comb, ext.gap_gates, gc.ancillas());
    } else {
        doc.circuit = gc.circuit;
        doc.ancillas = gc.ancillas();
    }
    emit(g, document_to_json(doc), out);
    return kExitOk;
}

int cmd_cut(const GlobalOptions &g, const CutOptions &o, std::ostream &out) {
    const CutMode mode = parse_mode(o.mode);
    CombWithGates cw = comb_from_document(load_circuit(o.circuit));
    const std::uint64_t count = cut_term_count(cw.comb, cw.gap_gates, mode);
    if (count > o.budget) {
        throw TermBudgetExceeded(count, o.budget);
    }
    CutDecomposition dec = cut_comb(cw.comb, cw.gap_gates, mode, o.budget);
    json doc = decomposition_to_json(dec);
    if (g.out.empty()) {
        out << doc.dump(2) << '\n';
    } else {
        write_file(g.out, doc.dump(2) + "\n");
        out << "L = " << dec.term_count() << "\n";
    }
    return kExitOk;
}

int cmd_simulate(const GlobalOptions &g, const SimulateOptions &o, std::ostream &out) {
    auto t0 = std::chrono::steady_clock::now();
    CircuitDocument doc = load_circuit(o.circuit);
    const Circuit &c = doc.circuit;
    ProductState in = load_input(o.input, c.n());
    PauliObservable m = load_observable(o.observable, c.n());
    bool swap_path = is_swap_network(c);
    for (const Gate &gate : c.gates()) {
        swap_path = swap_path && gate.is_unitary();
    }
    double value = 0.0;
    if (swap_path) {
        ProductState psi = swap_network_run(c, in);
        // <psi|M|psi> on a product state factorizes per string.
        for (const PauliString &s : m.terms()) {
            cd prod = 1.0;
            for (int q = 0; q < c.n(); ++q) {
                prod *= psi.factor(q).dot(pauli_matrix(s.paulis[static_cast<std::size_t>(q)]) * psi.factor(q));
            }
            value += s.weight * prod.real();
        }
    } else {
        value = dense_expectation(c, in, m);
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    json report{{"expectation", value},
                {"backend", swap_path ? "swap-network" : "dense"},
                {"wall_ms", g.timing ? ms : 0.0}};
    if (g.json || !g.out.empty()) {
        emit(g, report, out);
    }
    if (!g.json) {
        out << "expectation = " << num(value) << " (" << (swap_path ? "swap-network" : "dense") << ")\n";
    }
    return kExitOk;
}

int cmd_pipeline(const GlobalOptions &g, const PipelineOptions &o, std::ostream &out, std::ostream &err) {
    const CutMode mode = parse_mode(o.mode);
    if (o.budget == 0) {
        throw ParseError("--budget must be positive");
    }
    CircuitDocument doc = load_circuit(o.circuit);
    const Circuit &c = doc.circuit;
    ProductState in = load_input(o.input, c.n());
    PauliObservable m = load_observable(o.observable, c.n());
    PipelineResult res = pipeline_simulate(c, in, m, mode, o.budget);
    const double tol = g.tol.value_or(1e-8);
    json report{{"expectation", res.expectation},
                {"term_count", res.term_count},
                {"mode", std::string(cut_mode_name(res.mode))},
                {"wall_ms", g.timing ? res.wall_ms : 0.0}};
    bool agrees = true;
    if (c.n() <= kStatevectorMaxWires) {
        const double dense = dense_expectation(c, in, m);
        agrees = std::abs(dense - res.expectation) <= tol;
        report["dense_expectation"] = dense;
        report["agrees"] = agrees;
    } else {
        report["dense_expectation"] = nullptr;
        report["agrees"] = nullptr;
    }
    if (g.json || !g.out.empty()) {
        emit(g, report, out);
    }
    if (!g.json) {
        out << "expectation = " << num(res.expectation) << "\n";
        out << "term_count = " << res.term_count << " (" << cut_mode_name(res.mode) << ")\n";
        if (report["agrees"].is_null()) {
            out << "dense oracle skipped: width " << c.n() << " exceeds " << kStatevectorMaxWires << "\n";
        } else {
            out << "dense oracle = " << num(report["dense_expectation"].get<double>()) << ", "
                << (agrees ? "agrees" : "MISMATCH") << " within " << num(tol) << "\n";
        }
    }
    if (!agrees) {
        err << "pipeline expectation disagrees with the dense oracle\n";
        return kExitFailed;
    }
    return kExitOk;
}

int cmd_verify(const GlobalOptions &g, const VerifyOptions &o, std::ostream &out) {
    SuiteParams p;
    p.n = o.n;
    p.k_max = o.k_max;
    p.gate = o.gate;
    if (!o.mode.empty()) {
        p.mode = parse_mode(o.mode);
    }
    p.seed = g.seed;
    p.instances = o.instances;
    p.corpus_dir = o.corpus;
    if (o.suite.empty()) {
        throw ParseError("--suite is required");
    }
    SuiteResult r;
    try {
        r = run_suite(o.suite, p);
    } catch (const TermBudgetExceeded &) {
        throw;
    } catch (const WidthLimitError &e) {
        throw ParseError(e.what());
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
    if (!g.out.empty()) {
        std::filesystem::create_directories(g.out);
        write_file((std::filesystem::path(g.out) / (r.suite + ".csv")).string(), suite_csv(r, g.timing));
        write_file((std::filesystem::path(g.out) / (r.suite + ".json")).string(), suite_json(r, g.timing).dump(2) + "\n");
    }
    if (g.json) {
        out << suite_json(r, g.timing).dump(2) << '\n';
    } else {
        out << "suite " << r.suite << ": " << (r.overall() ? "PASS" : "FAIL") << " (" << r.checks.size()
            << " checks)\n";
        for (const SuiteCheck &c : r.checks) {
            out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": measured " << num(c.measured)
                << ", expected " << num(c.expected) << ", tol " << num(c.tolerance) << "\n";
        }
        out << suite_csv(r, g.timing);
    }
    return r.overall() ? kExitOk : kExitFailed;
}

int run_guarded(const std::function<int()> &command, std::ostream &err) {
    try {
        return command();
    } catch (const TermBudgetExceeded &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailed;
    } catch (const ParseError &e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument &e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const json::exception &e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailed;
    }
}

}  // namespace qcut
