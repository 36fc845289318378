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

#include <iostream>

#include <CLI11.hpp>

#include "qcut/commands.hpp"

int main(int argc, char **argv) {
    using namespace qcut;
    CLI::App app{"qcut: cut-local circuit decompositions, gadgets and verification suites"};
    app.require_subcommand(1);

    GlobalOptions global;
    auto add_globals = [&](CLI::App *sub) {
        sub->add_option("--seed", global.seed, "seed for randomized suites");
        sub->add_option("--tol", global.tol, "agreement tolerance for pipeline (default 1e-8)");
        sub->add_option("--out", global.out, "output file (verify: output directory)");
        sub->add_flag("--json", global.json, "print JSON instead of text");
        sub->add_flag("--timing", global.timing, "record wall_ms in written reports");
    };

    DecomposeOptions dec;
    auto *c_dec = app.add_subcommand("decompose", "cut a two-qubit gate into tensor-product terms");
    c_dec->add_option("--gate", dec.gate, "named gate: cz, cnot, swap");
    c_dec->add_option("--matrix", dec.matrix_file, "JSON file with a 4x4 matrix of [re, im] entries");
    c_dec->add_option("--mode", dec.mode, "schmidt or pauli");
    add_globals(c_dec);

    GadgetizeOptions gad;
    auto *c_gad = app.add_subcommand("gadgetize", "route every non-SWAP two-qubit gate through ancillas");
    c_gad->add_option("--circuit", gad.circuit, "circuit JSON")->required();
    c_gad->add_option("--variant", gad.variant, "v1 or v2");
    add_globals(c_gad);

    CutOptions cut;
    auto *c_cut = app.add_subcommand("cut", "decompose a comb (circuit with gaps and partition)");
    c_cut->add_option("--circuit", cut.circuit, "comb JSON")->required();
    c_cut->add_option("--mode", cut.mode, "schmidt or pauli");
    c_cut->add_option("--budget", cut.budget, "maximum number of terms");
    add_globals(c_cut);

    SimulateOptions sim;
    auto *c_sim = app.add_subcommand("simulate", "expectation of a Pauli observable");
    c_sim->add_option("--circuit", sim.circuit, "circuit JSON")->required();
    c_sim->add_option("--input", sim.input, "bitstring or comma-separated labels (default all zeros)");
    c_sim->add_option("--observable", sim.observable, "weighted Pauli strings")->required();
    add_globals(c_sim);

    PipelineOptions pipe;
    auto *c_pipe = app.add_subcommand("pipeline", "gadgetize, cut and evaluate on the SWAP-network path");
    c_pipe->add_option("--circuit", pipe.circuit, "circuit JSON")->required();
    c_pipe->add_option("--input", pipe.input, "bitstring or comma-separated labels (default all zeros)");
    c_pipe->add_option("--observable", pipe.observable, "weighted Pauli strings")->required();
    c_pipe->add_option("--mode", pipe.mode, "schmidt or pauli");
    c_pipe->add_option("--budget", pipe.budget, "maximum number of terms");
    add_globals(c_pipe);

    VerifyOptions ver;
    auto *c_ver = app.add_subcommand("verify", "run a named verification suite");
    c_ver->add_option("--suite", ver.suite, "gate-cut, scaling, thm2-pipeline, gadget, swap-network, lemma1, "
                                            "thm3, fidelity, unital-nogo, cost, corpus")
        ->required();
    c_ver->add_option("--n", ver.n, "problem size");
    c_ver->add_option("--kmax", ver.k_max, "largest gap count");
    c_ver->add_option("--gate", ver.gate, "gate for scaling and thm2-pipeline");
    c_ver->add_option("--mode", ver.mode, "schmidt or pauli (default: both)");
    c_ver->add_option("--instances", ver.instances, "number of random instances");
    c_ver->add_option("--corpus", ver.corpus, "corpus directory");
    add_globals(c_ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInvalid;
    }

    return run_guarded(
        [&]() -> int {
            if (*c_dec) return cmd_decompose(global, dec, std::cout);
            if (*c_gad) return cmd_gadgetize(global, gad, std::cout);
            if (*c_cut) return cmd_cut(global, cut, std::cout);
            if (*c_sim) return cmd_simulate(global, sim, std::cout);
            if (*c_pipe) return cmd_pipeline(global, pipe, std::cout, std::cerr);
            return cmd_verify(global, ver, std::cout);
        },
        std::cerr);
}
