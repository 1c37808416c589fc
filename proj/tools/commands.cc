// Copyright 2026 The iqpsim Authors
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

#include "commands.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "iqpsim/bench.h"
#include "iqpsim/circuit.h"
#include "iqpsim/engine.h"
#include "iqpsim/graph.h"
#include "iqpsim/sampler.h"
#include "json.hpp"

namespace iqp::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, const char *spec = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string complex_text(std::complex<double> v) {
    return fmt(v.real()) + (v.imag() < 0 ? " - " : " + ") + fmt(std::abs(v.imag())) + "i";
}

json cyc_json(const CycInt &v) {
    return json::array({to_string(v.c[0]), to_string(v.c[1]), to_string(v.c[2]), to_string(v.c[3])});
}

struct GraphStats {
    int vertices = 0;
    std::size_t edges = 0;
    double density = 0;
};

GraphStats stats(const InteractionGraph &g) {
    return {g.num_vertices(), g.num_edges(), g.density()};
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
    int n = 0;
    bool dense = false;
    double gamma = 0;
    std::uint64_t seed = 1;
    std::string out;
    bool as_json = false;
};

int cmd_gen(const GenArgs &a, std::ostream &out) {
    IqpCircuit c = a.dense ? gen_dense(a.n, a.seed) : gen_sparse(a.n, a.gamma, a.seed);
    std::size_t edges = build_interaction(c).num_edges();
    std::size_t odd = build_non_clifford(c).num_edges();
    if (a.out.empty()) {
        out << serialize(c);
        return kOk;
    }
    write_circuit_file(c, a.out);
    if (a.as_json) {
        out << json{{"path", a.out}, {"n", a.n}, {"edges", edges}, {"non_clifford_edges", odd}}.dump() << "\n";
    } else {
        out << "wrote " << a.out << "\n"
            << "n: " << a.n << "\n"
            << "edges: " << edges << "\n"
            << "non_clifford_edges: " << odd << "\n";
    }
    return kOk;
}

// ---- amp -------------------------------------------------------------------

struct AmpArgs {
    std::string path;
    std::string outcome;
    std::string method = "cut";
    std::string mode = "exact";
    int workers = 1;
    std::uint64_t budget = kDefaultMisBudget;
    bool as_json = false;
};

int cmd_amp(const AmpArgs &a, std::ostream &out) {
    IqpCircuit c = read_circuit_file(a.path);
    const int n = c.num_qubits();
    Bits b = a.outcome.empty() ? Bits(n, 0) : parse_bits(a.outcome, n);
    RestrictedInstance inst = full_instance(c, b);

    auto start = Clock::now();
    AmplitudeResult r;
    int k = 0;
    if (a.method == "brute") {
        if (a.mode != "exact") {
            throw std::invalid_argument("brute method only supports exact mode");
        }
        r = amplitude_bruteforce(inst);
    } else {
        AmplitudeOptions opts;
        opts.workers = a.workers;
        opts.mode = a.mode == "float" ? Accumulation::floating : Accumulation::exact;
        opts.mis_budget = a.budget;
        PlannedAmplitude p = amplitude_pipeline(inst, opts);
        r = p.result;
        k = p.set.size();
    }
    double secs = seconds_since(start);

    if (a.as_json) {
        json j{{"n", n},
               {"outcome", format_bits(b)},
               {"method", a.method},
               {"mode", a.mode},
               {"workers", a.workers},
               {"sqrt2_scale", r.sqrt2_scale},
               {"re", r.value.real()},
               {"im", r.value.imag()},
               {"probability", r.probability()},
               {"k", k},
               {"cut_size", r.cut_size},
               {"terms", r.term_count},
               {"seconds", secs}};
        if (r.exact) {
            j["numerator"] = cyc_json(r.numerator);
            RootTwoInt sq = abs_sq(r.numerator);
            j["abs2_numerator"] = json::array({to_string(sq.p), to_string(sq.q)});
        }
        out << j.dump() << "\n";
        return kOk;
    }
    if (r.exact) {
        out << "numerator: " << to_string(r.numerator) << "\n"
            << "sqrt2_scale: " << r.sqrt2_scale << "\n";
    }
    out << "amplitude: " << complex_text(r.value) << "\n";
    if (r.exact) {
        out << "abs2: (" << to_string(abs_sq(r.numerator)) << ") / 2^" << r.sqrt2_scale << " = "
            << fmt(r.probability()) << "\n";
    } else {
        out << "abs2: " << fmt(r.probability()) << "\n";
    }
    out << "k: " << k << "\n"
        << "cut_size: " << r.cut_size << "\n"
        << "terms: " << r.term_count << "\n"
        << "seconds: " << fmt(secs, "%.6f") << "\n";
    return kOk;
}

// ---- sample ----------------------------------------------------------------

struct SampleArgs {
    std::string path;
    std::uint64_t shots = 1;
    std::uint64_t seed = 1;
    int workers = 1;
};

int cmd_sample(const SampleArgs &a, std::ostream &out) {
    IqpCircuit c = read_circuit_file(a.path);
    SampleOptions opts;
    opts.workers = a.workers;
    auto start = Clock::now();
    SampleRun run = sample(c, a.shots, a.seed, opts);
    double secs = seconds_since(start);
    std::string buf;
    for (const Bits &s : run.samples) {
        buf += format_bits(s);
        buf += '\n';
    }
    out << buf;
    out << "# shots=" << run.shots << " engine_calls=" << run.amplitude_calls << " seconds=" << fmt(secs, "%.6f")
        << "\n";
    return kOk;
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
    std::string path;
    std::uint64_t budget = 100'000;
    bool as_json = false;
};

int cmd_analyze(const AnalyzeArgs &a, std::ostream &out) {
    IqpCircuit c = read_circuit_file(a.path);
    const int n = c.num_qubits();
    InteractionGraph g = build_interaction(c);
    InteractionGraph g_odd = build_non_clifford(c);
    IndependentSet mis = mis_exact(g, a.budget);
    IndependentSet greedy = mis_greedy(g);
    std::uint64_t triangles = count_triangles(g);
    double ln4 = std::pow(std::log(double(n)), 4);
    CostReport cost = estimate_cost(full_instance(c), a.budget);

    GraphStats gs = stats(g), os = stats(g_odd);
    json j;
    j["n"] = n;
    j["interaction"] = {{"vertices", gs.vertices}, {"edges", gs.edges}, {"density", gs.density}};
    j["non_clifford"] = {{"vertices", os.vertices}, {"edges", os.edges}, {"density", os.density}};
    j["alpha"] = mis.size();
    j["alpha_exact"] = mis.exact();
    j["alpha_greedy"] = greedy.size();
    j["triangles"] = triangles;
    j["ln4_n"] = ln4;
    j["triangles_below_ln4"] = double(triangles) < ln4;
    if (n >= 2) {
        j["matula_bound_dense"] = matula_bound(n, 0.75);
        j["matula_bound_non_clifford"] = matula_bound(n, 0.5);
        if (gs.density > 0 && gs.density < 1) {
            j["matula_bound_observed"] = matula_bound(n, gs.density);
        }
    }
    if (n >= 3 && gs.density > 0) {
        // Invert p = 3 gamma ln(n) / (4n).
        double gamma = gs.density * 4 * n / (3 * std::log(double(n)));
        SparseBound sb = sparse_bound(n, gamma);
        j["gamma_estimate"] = gamma;
        j["sparse_bound"] = {{"applicable", sb.applicable},
                             {"pre_asymptotic", sb.pre_asymptotic},
                             {"reduced_vertices", sb.reduced_vertices},
                             {"reduced_degree", sb.reduced_degree},
                             {"asymptotic_shape", sb.asymptotic_shape}};
    }
    j["plain"] = {{"k", cost.plain_k}, {"terms", cost.plain_terms}, {"cost", cost.plain_cost}};
    j["improved"] = {{"k", cost.improved_k},
                     {"k_exact", cost.improved_exact},
                     {"expected_t_count", cost.expected_t_count},
                     {"actual_t_count", cost.actual_t_count},
                     {"beta", kStabiliserBeta},
                     {"cost", cost.improved_cost}};
    if (a.as_json) {
        out << j.dump() << "\n";
        return kOk;
    }
    out << "n: " << n << "\n"
        << "interaction graph: " << gs.edges << " edges, density " << fmt(gs.density, "%.4f") << "\n"
        << "non-Clifford graph: " << os.edges << " edges, density " << fmt(os.density, "%.4f") << "\n"
        << "alpha: " << mis.size() << (mis.exact() ? " (exact)" : " (best found, search budget exhausted)")
        << "\n"
        << "alpha greedy: " << greedy.size() << "\n"
        << "triangles: " << triangles << " (ln^4 n = " << fmt(ln4, "%.1f") << ", "
        << (double(triangles) < ln4 ? "below" : "not below") << ")\n";
    if (j.contains("matula_bound_dense")) {
        out << "matula bound p=3/4: " << fmt(j["matula_bound_dense"].get<double>(), "%.4f") << "\n"
            << "matula bound p=1/2: " << fmt(j["matula_bound_non_clifford"].get<double>(), "%.4f") << "\n";
    }
    if (j.contains("sparse_bound")) {
        const auto &sb = j["sparse_bound"];
        out << "gamma estimate: " << fmt(j["gamma_estimate"].get<double>(), "%.4f") << "\n";
        if (sb["applicable"].get<bool>()) {
            out << "sparse bound: " << fmt(sb["pre_asymptotic"].get<double>(), "%.4f") << "\n";
        } else {
            out << "sparse bound: not applicable (n <= ln^4 n)\n";
        }
    }
    out << "plain cut: k = " << cost.plain_k << ", terms = " << fmt(cost.plain_terms, "%.6g")
        << ", cost k*2^(n-k) = " << fmt(cost.plain_cost, "%.6g") << "\n"
        << "improved estimate: k' = " << cost.improved_k << ", T-count k'/2 = " << fmt(cost.expected_t_count, "%g")
        << " (actual odd " << cost.actual_t_count << "), cost = " << fmt(cost.improved_cost, "%.6g") << "\n";
    return kOk;
}

// ---- bench / fit -----------------------------------------------------------

struct BenchArgs {
    int n_min = 10;
    int n_max = 26;
    std::vector<std::string> densities{"dense"};
    int reps = 20;
    int workers = 1;
    std::uint64_t seed = 1;
    std::string out;
    bool as_json = false;
};

void print_fits(const std::vector<ExponentFit> &fits, bool as_json, std::ostream &out) {
    if (as_json) {
        json j = json::array();
        for (const ExponentFit &f : fits) {
            j.push_back({{"density", f.density}, {"alpha", f.alpha}, {"log2_c", f.log2_c}, {"points", f.points}});
        }
        out << j.dump() << "\n";
        return;
    }
    for (const ExponentFit &f : fits) {
        out << "fit " << f.density << ": alpha = " << fmt(f.alpha, "%.6f") << " log2_c = " << fmt(f.log2_c, "%.6f")
            << " points = " << f.points << "\n";
    }
}

int cmd_bench(const BenchArgs &a, std::ostream &out) {
    BenchConfig cfg;
    cfg.n_min = a.n_min;
    cfg.n_max = a.n_max;
    cfg.reps = a.reps;
    cfg.workers = a.workers;
    cfg.seed = a.seed;
    cfg.densities.clear();
    for (const std::string &d : a.densities) {
        cfg.densities.push_back(Density::parse(d));
    }
    if (cfg.n_min < 2 || cfg.n_max < cfg.n_min || cfg.reps < 1) {
        throw std::invalid_argument("bench: need 2 <= n-min <= n-max and reps >= 1");
    }
    std::ofstream csv(a.out);
    if (!csv) {
        throw std::runtime_error("cannot write '" + a.out + "'");
    }
    std::vector<BenchRecord> records = run_bench(cfg);
    write_bench_csv(csv, records);
    csv.close();
    if (!csv) {
        throw std::runtime_error("write failed for '" + a.out + "'");
    }
    print_fits(fit_exponents(records), a.as_json, out);
    return kOk;
}

struct FitArgs {
    std::string csv;
    int from = 10;
    bool as_json = false;
};

int cmd_fit(const FitArgs &a, std::ostream &out) {
    std::ifstream in(a.csv);
    if (!in) {
        throw ParseError("cannot open '" + a.csv + "'");
    }
    print_fits(fit_exponents(read_bench_csv(in), a.from), a.as_json, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact amplitudes and samples of IQP circuits by independent-set vertex cuts", "iqpsim"};
    app.require_subcommand(1);

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "Generate a random circuit file");
    gen_cmd->add_option("--n", gen.n, "Number of qubits")->required()->check(CLI::PositiveNumber);
    auto *dense_flag = gen_cmd->add_flag("--dense", gen.dense, "Dense distribution");
    auto *sparse_opt = gen_cmd->add_option("--sparse", gen.gamma, "Gamma of the sparse distribution")
                           ->check(CLI::PositiveNumber);
    dense_flag->excludes(sparse_opt);
    gen_cmd->add_option("--seed", gen.seed, "Generator seed");
    gen_cmd->add_option("--out", gen.out, "Output path (default: circuit JSON on stdout)");
    gen_cmd->add_flag("--json", gen.as_json, "Machine-readable summary");

    AmpArgs amp;
    auto *amp_cmd = app.add_subcommand("amp", "Compute <b|C|0^n>");
    amp_cmd->add_option("circuit", amp.path, "Circuit file")->required();
    amp_cmd->add_option("--outcome", amp.outcome, "Outcome bitstring b, qubit 0 first (default 0^n)");
    amp_cmd->add_option("--method", amp.method, "cut or brute")->check(CLI::IsMember({"cut", "brute"}));
    amp_cmd->add_option("--workers", amp.workers, "OpenMP threads")->check(CLI::PositiveNumber);
    amp_cmd->add_option("--mode", amp.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    amp_cmd->add_option("--budget", amp.budget, "Independent-set search node budget");
    amp_cmd->add_flag("--json", amp.as_json, "JSON output");

    SampleArgs smp;
    auto *sample_cmd = app.add_subcommand("sample", "Draw output bitstrings");
    sample_cmd->add_option("circuit", smp.path, "Circuit file")->required();
    sample_cmd->add_option("--shots", smp.shots, "Number of samples")->required();
    sample_cmd->add_option("--seed", smp.seed, "Sampler seed");
    sample_cmd->add_option("--workers", smp.workers, "OpenMP threads")->check(CLI::PositiveNumber);

    AnalyzeArgs ana;
    auto *analyze_cmd = app.add_subcommand("analyze", "Interaction-graph statistics and cost estimates");
    analyze_cmd->add_option("circuit", ana.path, "Circuit file")->required();
    analyze_cmd->add_option("--budget", ana.budget, "Independent-set search node budget");
    analyze_cmd->add_flag("--json", ana.as_json, "JSON output");

    BenchArgs bench;
    auto *bench_cmd = app.add_subcommand("bench", "Time single amplitudes over a size sweep");
    bench_cmd->add_option("--n-min", bench.n_min, "Smallest n");
    bench_cmd->add_option("--n-max", bench.n_max, "Largest n");
    bench_cmd->add_option("--density", bench.densities, "dense and/or gamma values, comma separated")
        ->delimiter(',');
    bench_cmd->add_option("--reps", bench.reps, "Instances per (n, density)");
    bench_cmd->add_option("--workers", bench.workers, "OpenMP threads")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench.seed, "Base seed");
    bench_cmd->add_option("--out", bench.out, "CSV output path")->required();
    bench_cmd->add_flag("--json", bench.as_json, "JSON fit summary");

    FitArgs fit;
    auto *fit_cmd = app.add_subcommand("fit", "Refit exponents from a bench CSV");
    fit_cmd->add_option("csv", fit.csv, "Bench CSV")->required();
    fit_cmd->add_option("--from", fit.from, "Smallest n included in the fit");
    fit_cmd->add_flag("--json", fit.as_json, "JSON output");

    std::vector<const char *> argv{"iqpsim"};
    for (const std::string &s : args) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(int(argv.size()), argv.data());
        if (gen_cmd->parsed() && !gen.dense && sparse_opt->count() == 0) {
            throw CLI::ValidationError("gen: one of --dense or --sparse is required");
        }
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (gen_cmd->parsed()) {
            return cmd_gen(gen, out);
        }
        if (amp_cmd->parsed()) {
            return cmd_amp(amp, out);
        }
        if (sample_cmd->parsed()) {
            return cmd_sample(smp, out);
        }
        if (analyze_cmd->parsed()) {
            return cmd_analyze(ana, out);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(bench, out);
        }
        if (fit_cmd->parsed()) {
            return cmd_fit(fit, out);
        }
    } catch (const LimitError &e) {
        err << "error: " << e.what() << "\n";
        return kResource;
    } catch (const OverflowError &e) {
        err << "error: " << e.what() << "\n";
        return kResource;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kInputData;
    }
    return kUsage;
}

}  // namespace iqp::cli
