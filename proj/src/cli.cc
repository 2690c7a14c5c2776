// Copyright 2026 The tlcalc Authors
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

#include "tlc/cli.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tlc/clifford.h"
#include "tlc/diagram_text.h"
#include "tlc/evaluate.h"
#include "tlc/protocols.h"
#include "tlc/render.h"
#include "tlc/rewrite.h"
#include "tlc/statevec.h"

namespace tlc {

namespace {

// Raised for anything that should end in exit status 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Config {
    double tolerance = kTolerance;
    uint64_t seed = 0;
    bool machine = false;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<Diagram> load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        auto diagrams = parse_document(buf.str());
        for (const auto &d : diagrams) {
            require_valid(d);
        }
        return diagrams;
    } catch (const ParseError &e) {
        throw UsageError(path + ": " + e.what());
    } catch (const std::invalid_argument &e) {
        throw UsageError(path + ": " + e.what());
    }
}

int cmd_verify(const Config &cfg, const std::string &path, std::ostream &out) {
    auto diagrams = load(path);
    if (diagrams.size() > 2) {
        throw UsageError(path + ": verify takes one diagram (self check) or two (lhs, rhs)");
    }
    VerifyReport r = verify_document(diagrams, cfg.tolerance);
    out << (cfg.machine ? r.to_json() : r.to_text());
    return r.success ? kExitPass : kExitFail;
}

int cmd_normalize(const Config &cfg, const std::string &path, const std::string &out_path, std::ostream &out) {
    auto diagrams = load(path);
    std::vector<Diagram> forms;
    nlohmann::ordered_json traces = nlohmann::ordered_json::array();
    std::string text_trace;
    bool exhausted = false;
    for (const auto &d : diagrams) {
        NormalForm nf = normalize(d);
        exhausted = exhausted || nf.budget_exhausted;
        nlohmann::ordered_json steps = nlohmann::ordered_json::array();
        text_trace += "# trace " + d.name + "\n";
        for (size_t k = 0; k < nf.trace.size(); k++) {
            steps.push_back(nf.trace[k].str(k + 1));
            text_trace += "# " + nf.trace[k].str(k + 1) + "\n";
        }
        for (const auto &s : nf.stuck) {
            text_trace += "# stuck: " + s + "\n";
        }
        nlohmann::ordered_json entry;
        entry["diagram"] = d.name;
        entry["scalar"] = nf.diagram.scalar.str();
        entry["budget_exhausted"] = nf.budget_exhausted;
        entry["stuck"] = nf.stuck;
        entry["trace"] = steps;
        traces.push_back(entry);
        forms.push_back(std::move(nf.diagram));
    }
    std::string doc = serialize_document(forms);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            throw UsageError("cannot write '" + out_path + "'");
        }
        f << doc;
    }
    if (cfg.machine) {
        nlohmann::ordered_json j;
        j["normal_forms"] = traces;
        if (out_path.empty()) {
            j["document"] = doc;
        }
        out << j.dump(2) << "\n";
    } else {
        if (out_path.empty()) {
            out << doc;
        }
        out << text_trace;
    }
    return exhausted ? kExitFail : kExitPass;
}

int cmd_render(const std::string &path, std::ostream &out) {
    auto diagrams = load(path);
    for (size_t k = 0; k < diagrams.size(); k++) {
        out << (k ? "\n" : "") << render_ascii(diagrams[k]);
    }
    return kExitPass;
}

int cmd_simulate(const Config &cfg, const std::string &what, const std::string &state_text,
                 const std::string &outcome_text, size_t shots, std::ostream &out, std::ostream &err) {
    if (what != "teleport") {
        throw UsageError("unknown simulation '" + what + "' (expected teleport)");
    }
    if (outcome_text.empty() == (shots == 0)) {
        throw UsageError("simulate teleport needs exactly one of --outcome ij or --shots N");
    }
    std::optional<ParsedState> parsed;
    try {
        parsed = parse_state_literal(state_text);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    if (!parsed->warning.empty()) {
        err << "warning: " << parsed->warning << "\n";
    }
    if (parsed->state.num_qubits() != 1) {
        throw UsageError("teleport takes a one-qubit state (2 amplitudes)");
    }
    ProtocolSpec spec = ProtocolSpec::teleport();
    ComplexVector alpha = parsed->state.amplitudes();
    auto branch = [&](Outcome o, nlohmann::ordered_json &row) {
        CircuitRun run = simulate_circuit(spec, {o}, {alpha});
        Correction c = protocol_correction(spec, {o});
        double f = fidelity(alpha, c.matrix * run.state);
        row["outcome"] = o.str();
        row["probability"] = run.probability;
        row["correction"] = c.text;
        row["fidelity"] = f;
        return f;
    };
    bool ok = true;
    nlohmann::ordered_json j;
    j["protocol"] = "teleport";
    if (!outcome_text.empty()) {
        auto policy = OutcomePolicy::parse(outcome_text);
        if (policy.mode != OutcomePolicy::Mode::kFixed || policy.fixed.size() != 1) {
            throw UsageError("--outcome must be two bits such as 10");
        }
        nlohmann::ordered_json row;
        ok = branch(policy.fixed[0], row) >= 1 - cfg.tolerance;
        j["branch"] = row;
        if (!cfg.machine) {
            out << "outcome " << row["outcome"].get<std::string>() << " probability "
                << fmt(row["probability"].get<double>()) << " correction " << row["correction"].get<std::string>()
                << " fidelity " << fmt(row["fidelity"].get<double>()) << "\n";
        }
    } else {
        SplitMix64 rng(cfg.seed);
        std::map<std::string, size_t> counts;
        double worst = 1;
        for (size_t s = 0; s < shots; s++) {
            Outcome o = sample_outcomes(spec, {alpha}, rng)[0];
            nlohmann::ordered_json row;
            worst = std::min(worst, branch(o, row));
            counts[o.str()]++;
        }
        ok = worst >= 1 - cfg.tolerance;
        nlohmann::ordered_json c;
        for (unsigned k = 0; k < 4; k++) {
            std::string key = Outcome::from_index(k).str();
            c[key] = counts[key];
        }
        j["shots"] = shots;
        j["seed"] = cfg.seed;
        j["counts"] = c;
        j["min_fidelity"] = worst;
        if (!cfg.machine) {
            out << "shots " << shots << " seed " << cfg.seed << "\n";
            for (unsigned k = 0; k < 4; k++) {
                std::string key = Outcome::from_index(k).str();
                out << "outcome " << key << " count " << counts[key] << " frequency "
                    << fmt(static_cast<double>(counts[key]) / static_cast<double>(shots)) << "\n";
            }
            out << "min fidelity " << fmt(worst) << "\n";
        }
    }
    j["pass"] = ok;
    if (cfg.machine) {
        out << j.dump(2) << "\n";
    }
    return ok ? kExitPass : kExitFail;
}

int cmd_protocol(const Config &cfg, const std::string &name, const std::string &gate, size_t length,
                 const std::string &outcomes, size_t shots, size_t trials, std::ostream &out) {
    ProtocolSpec spec;
    OutcomePolicy policy;
    try {
        spec = ProtocolSpec::parse(name, gate, length);
        policy = OutcomePolicy::parse(outcomes, shots);
        if (policy.mode == OutcomePolicy::Mode::kFixed && policy.fixed.size() != spec.measurements()) {
            throw std::invalid_argument(spec.name() + " needs " + std::to_string(2 * spec.measurements()) +
                                        " outcome bits");
        }
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    SplitMix64 rng(cfg.seed);
    ProtocolReport r = run_protocol(spec, policy, rng, trials, cfg.tolerance);
    out << (cfg.machine ? r.to_json() : r.to_text());
    return r.pass ? kExitPass : kExitFail;
}

std::string phase_str(Complex z) {
    if (z == Complex{1, 0}) {
        return "+1";
    }
    if (z == Complex{-1, 0}) {
        return "-1";
    }
    if (z == Complex{0, 1}) {
        return "+i";
    }
    if (z == Complex{0, -1}) {
        return "-i";
    }
    return format_complex(z);
}

int cmd_correction_table(const Config &cfg, const std::string &gate, std::ostream &out) {
    ControlledGate g;
    try {
        g = parse_controlled_gate(gate);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &e : correction_table(g)) {
        std::string key = "(" + std::to_string(e.first.i) + "," + std::to_string(e.first.j) + "," +
                          std::to_string(e.second.i) + "," + std::to_string(e.second.j) + ")";
        if (cfg.machine) {
            nlohmann::ordered_json row;
            row["outcome"] = key;
            row["Q"] = e.q.ascii_str();
            row["P"] = e.p.ascii_str();
            row["phase"] = phase_str(e.phase);
            rows.push_back(row);
        } else {
            out << key << " Q=" << e.q.str() << " P=" << e.p.str() << " phase=" << phase_str(e.phase) << "\n";
        }
    }
    if (cfg.machine) {
        nlohmann::ordered_json j;
        j["gate"] = std::string(controlled_gate_name(g));
        j["rows"] = rows;
        out << j.dump(2) << "\n";
    }
    return kExitPass;
}

int cmd_classify(const Config &cfg, const std::string &gate, std::ostream &out) {
    ComplexMatrix m;
    size_t n = 1;
    try {
        bool two_qubit = gate.starts_with("cnot") || gate.starts_with("CNOT") || gate == "cz" || gate == "CZ" ||
                         gate.starts_with("cu(");
        if (two_qubit) {
            m = TwoQubitGate::parse(gate).matrix();
            n = 2;
        } else {
            m = GateExpr::parse(gate).matrix();
        }
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    std::string level(hierarchy_name(classify_hierarchy(m, n, cfg.tolerance)));
    if (cfg.machine) {
        nlohmann::ordered_json j;
        j["gate"] = gate;
        j["qubits"] = n;
        j["level"] = level;
        out << j.dump(2) << "\n";
    } else {
        out << level << "\n";
    }
    return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Diagram calculus for teleportation-based quantum computation"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--tolerance", cfg.tolerance, "numeric tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_flag("--machine", cfg.machine, "machine-readable JSON output");

    std::string path, out_path, what, state, outcome, name, gate, outcomes = "all";
    size_t shots = 0, length = 1, trials = 1;

    auto *verify = app.add_subcommand("verify", "normalize a diagram file and check it with the oracle");
    verify->add_option("file", path)->required();
    auto *normalize_cmd = app.add_subcommand("normalize", "print the normal form and rewrite trace");
    normalize_cmd->add_option("file", path)->required();
    normalize_cmd->add_option("-o,--output", out_path, "write the normal form here");
    auto *render = app.add_subcommand("render", "draw a diagram file");
    render->add_option("file", path)->required();
    auto *simulate = app.add_subcommand("simulate", "state-vector simulation");
    simulate->add_option("protocol", what)->required();
    simulate->add_option("--state", state, "amplitudes re+imj,...")->required();
    simulate->add_option("--outcome", outcome, "postselected outcome ij");
    simulate->add_option("--shots", shots, "number of sampled runs");
    auto *protocol = app.add_subcommand("protocol", "run a protocol end to end");
    protocol->add_option("name", name)->required();
    protocol->add_option("--gate", gate, "gate for single or cu");
    protocol->add_option("--length", length, "hops for chained (1-6)");
    protocol->add_option("--outcomes", outcomes, "all | sample | bits such as 10 or 0110");
    protocol->add_option("--shots", shots, "shots for --outcomes sample");
    protocol->add_option("--trials", trials, "random inputs per outcome")->check(CLI::PositiveNumber);
    auto *table = app.add_subcommand("correction-table", "Pauli corrections for CNOT or CZ teleportation");
    table->add_option("--gate", gate, "cnot | cz")->required();
    auto *classify = app.add_subcommand("classify", "Clifford hierarchy level of a gate");
    classify->add_option("--gate", gate, "gate expression, cnot, cz or cu(<expr>)")->required();

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*verify) {
            return cmd_verify(cfg, path, out);
        }
        if (*normalize_cmd) {
            return cmd_normalize(cfg, path, out_path, out);
        }
        if (*render) {
            return cmd_render(path, out);
        }
        if (*simulate) {
            return cmd_simulate(cfg, what, state, outcome, shots, out, err);
        }
        if (*protocol) {
            if (outcomes == "sample" && shots == 0) {
                shots = 1;
            }
            return cmd_protocol(cfg, name, gate, length, outcomes, shots, trials, out);
        }
        if (*table) {
            return cmd_correction_table(cfg, gate, out);
        }
        if (*classify) {
            return cmd_classify(cfg, gate, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace tlc
