// Copyright 2026 The Abstraqt Authors
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

#include "cli.hpp"

#include <sys/resource.h>

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <mutex>
#include <thread>

#include "abstraqt/bench_gen.hpp"
#include "abstraqt/errors.hpp"
#include "abstraqt/oracle.hpp"

namespace abstraqt::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxOracleCompareQubits = 8;
constexpr double kContainmentSlack = 1e-9;
constexpr double kAgreementTolerance = 1e-8;
constexpr double kNegligibleWeight = 1e-12;

std::string fmt6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string fmt_interval(const Interval &i) {
    if (i.is_bottom()) {
        return "[empty]";
    }
    return "[" + fmt6(i.lo) + ", " + fmt6(i.hi) + "]";
}

bool exact_zero(const Interval &i) {
    return i.lo == 0.0 && i.hi == 0.0;
}

json interval_json(const Interval &i) {
    if (i.is_bottom()) {
        return json{{"empty", true}};
    }
    return json{{"lo", i.lo}, {"hi", i.hi}, {"exact_zero", exact_zero(i)}};
}

long peak_rss_kib() {
    rusage usage{};
    if (getrusage(RUSAGE_SELF, &usage) != 0) {
        return 0;
    }
    return usage.ru_maxrss;
}

Verdict verdict_of(const Interval &clamped) {
    return (!clamped.is_bottom() && clamped.hi <= 0.0) ? Verdict::Proved : Verdict::Unknown;
}

const char *verdict_name(Verdict v) {
    return v == Verdict::Proved ? "Proved" : "Unknown";
}

std::string read_file(const std::string &path, bool &ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ok = false;
        return {};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    ok = static_cast<bool>(in) || in.eof();
    return buf.str();
}

// Runs `body` for every index in [0, count) on up to `jobs` threads.
template <class Body>
void parallel_for(std::size_t count, std::size_t jobs, Body body) {
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : workers) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

struct CommandError {
    int code;
    std::string message;
};

Circuit load_circuit(const std::string &path) {
    bool ok = true;
    std::string text = read_file(path, ok);
    if (!ok) {
        throw CommandError{kExitNoInput, "cannot read " + path};
    }
    return parse_circuit(text);
}

int report_exception(std::ostream &err, const std::string &context) {
    try {
        throw;
    } catch (const CommandError &e) {
        err << "abstraqt: " << e.message << "\n";
        return e.code;
    } catch (const ParseError &e) {
        err << context << ":" << e.what() << " [" << e.code() << "]\n";
        return e.kind() == ParseErrorKind::UnknownGate ? kExitUnsupportedGate : kExitParse;
    } catch (const CapacityError &e) {
        err << "abstraqt: size limit: " << e.what() << "\n";
        return kExitSize;
    } catch (const UsageError &e) {
        err << "abstraqt: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotCliffordError &e) {
        err << "abstraqt: unsupported gate: " << e.what() << "\n";
        return kExitUnsupportedGate;
    } catch (const InvariantError &e) {
        err << "abstraqt: internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception &e) {
        err << "abstraqt: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

// simulate

struct SimulateArgs {
    std::string file;
    SimulateOptions options;
    bool json = false;
    bool stats = false;
};

int cmd_simulate(const SimulateArgs &args, std::ostream &out) {
    Circuit circuit = load_circuit(args.file);
    for (std::size_t q : args.options.check_zero) {
        if (q >= circuit.num_qubits) {
            throw UsageError("--check-zero qubit " + std::to_string(q) + " out of range");
        }
    }
    for (std::size_t q : args.options.prob_one) {
        if (q >= circuit.num_qubits) {
            throw UsageError("--prob-one qubit " + std::to_string(q) + " out of range");
        }
    }
    RunReport report = simulate(circuit, args.options);
    report.file = args.file;
    out << (args.json ? format_report_json(report, args.stats) : format_report_text(report, args.stats));
    return kExitOk;
}

// bench

struct BenchArgs {
    std::string family;
    BenchSpec spec;
    std::string output;
};

std::uint64_t parse_seed_env(const char *text) {
    std::string s(text);
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(s, &used, 0);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw UsageError("ABSTRAQT_SEED is not an unsigned integer: '" + s + "'");
    }
    return value;
}

int cmd_bench(BenchArgs args, std::ostream &out) {
    auto family = parse_family(args.family);
    if (!family) {
        throw UsageError("unknown family '" + args.family + "'");
    }
    args.spec.family = *family;
    if (const char *env = std::getenv("ABSTRAQT_SEED"); env != nullptr && *env != '\0') {
        args.spec.seed = parse_seed_env(env);
    }
    validate_spec(args.spec);
    Circuit circuit = generate(args.spec);

    json meta{
        {"schema", "abstraqt.bench/1"},
        {"family", std::string(family_name(args.spec.family))},
        {"label", std::string(family_label(args.spec.family))},
        {"qubits", args.spec.num_qubits},
        {"gates_per_block", args.spec.gates_per_block},
        {"seed", args.spec.seed},
        {"gates", circuit.gates.size()},
        {"lower_qubits", json::array()},
    };
    if (args.spec.family == BenchFamily::MeasureGhz) {
        meta["rounds"] = args.spec.rounds;
    }
    for (std::size_t q = args.spec.num_qubits / 2; q < args.spec.num_qubits; ++q) {
        meta["lower_qubits"].push_back(q);
    }

    std::string header = "// abstraqt bench " + meta.dump() + "\n";
    std::string text = header + emit_circuit(circuit);
    if (args.output.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(args.output, std::ios::binary);
    if (!file || !(file << text)) {
        throw CommandError{kExitNoInput, "cannot write " + args.output};
    }
    std::ofstream meta_file(args.output + ".json", std::ios::binary);
    if (!meta_file || !(meta_file << meta.dump(2) << "\n")) {
        throw CommandError{kExitNoInput, "cannot write " + args.output + ".json"};
    }
    out << "wrote " << args.output << " (" << circuit.gates.size() << " gates) and " << args.output << ".json\n";
    return kExitOk;
}

// oracle-compare

struct CompareLine {
    std::string what;
    Interval abstract;
    std::vector<double> dense;
    std::vector<double> sum;
    bool contained = true;
};

bool contains_with_slack(const Interval &i, double x) {
    return !i.is_bottom() && i.lo - kContainmentSlack <= x && x <= i.hi + kContainmentSlack;
}

int cmd_oracle_compare(const std::string &path, bool as_json, std::ostream &out) {
    Circuit circuit = load_circuit(path);
    if (circuit.num_qubits > kMaxOracleCompareQubits) {
        throw CapacityError("oracle-compare supports at most " + std::to_string(kMaxOracleCompareQubits) +
                            " qubits, circuit has " + std::to_string(circuit.num_qubits));
    }
    AbstractSimulator sim(circuit.num_qubits);
    sim.run(circuit);
    std::vector<DenseState> dense = dense_branches(circuit);
    std::vector<ConcreteSumState> sums = sum_branches(circuit);
    if (dense.size() != sums.size()) {
        throw InvariantError("oracle branch counts differ");
    }

    double max_abs = 0;
    for (std::size_t b = 0; b < dense.size(); ++b) {
        max_abs = std::max(max_abs, (sums[b].to_dense() - dense[b].rho()).cwiseAbs().maxCoeff());
    }

    std::vector<CompareLine> lines;
    auto check = [&](std::string what, const Interval &abstract, auto dense_value, auto sum_value) {
        CompareLine line{std::move(what), abstract, {}, {}, true};
        for (std::size_t b = 0; b < dense.size(); ++b) {
            double d = dense_value(dense[b]);
            double s = sum_value(sums[b]);
            line.dense.push_back(d);
            line.sum.push_back(s);
            // A branch of negligible weight may have been dropped as provably zero.
            if (dense[b].trace() <= kNegligibleWeight) {
                continue;
            }
            line.contained = line.contained && contains_with_slack(abstract, d) && contains_with_slack(abstract, s);
        }
        lines.push_back(std::move(line));
    };
    check(
        "trace", sim.trace(), [](const DenseState &s) { return s.trace(); },
        [](const ConcreteSumState &s) { return s.trace(); });
    for (std::size_t q = 0; q < circuit.num_qubits; ++q) {
        check(
            "prob-one q[" + std::to_string(q) + "]", sim.probability_one(q),
            [q](const DenseState &s) { return s.probability_one(q); },
            [q](const ConcreteSumState &s) { return s.probability_one(q); });
    }

    bool all_contained = std::all_of(lines.begin(), lines.end(), [](const CompareLine &l) { return l.contained; });
    bool agree = max_abs <= kAgreementTolerance;

    if (as_json) {
        json j{{"schema", "abstraqt.oracle-compare/1"},
               {"file", path},
               {"qubits", circuit.num_qubits},
               {"branches", dense.size()},
               {"oracle_max_abs_error", max_abs},
               {"oracle_agreement", agree},
               {"contained", all_contained},
               {"checks", json::array()}};
        for (const auto &l : lines) {
            j["checks"].push_back(json{{"what", l.what},
                                       {"abstract", interval_json(l.abstract)},
                                       {"dense", l.dense},
                                       {"sum", l.sum},
                                       {"contained", l.contained}});
        }
        out << j.dump(2) << "\n";
    } else {
        out << "circuit: " << path << " (" << circuit.num_qubits << " qubits, " << circuit.gates.size()
            << " gates, " << dense.size() << " oracle branch" << (dense.size() == 1 ? "" : "es") << ")\n";
        for (const auto &l : lines) {
            out << l.what << ": abstract " << fmt_interval(l.abstract) << " oracle";
            for (double d : l.dense) {
                out << " " << fmt6(d);
            }
            out << (l.contained ? " contained" : " NOT CONTAINED") << "\n";
        }
        out << "oracle agreement: max abs error " << fmt6(max_abs) << (agree ? " ok" : " FAIL") << "\n";
        out << "result: " << ((all_contained && agree) ? "ok" : "mismatch") << "\n";
    }
    return (all_contained && agree) ? kExitOk : kExitMismatch;
}

}  // namespace

Interval clamp_probability(const Interval &raw) {
    if (raw.is_bottom()) {
        return raw;
    }
    double lo = std::clamp(raw.lo, 0.0, 1.0);
    double hi = std::clamp(raw.hi, 0.0, 1.0);
    return Interval::of(lo, hi);
}

RunReport simulate(const Circuit &circuit, const SimulateOptions &options) {
    auto start = std::chrono::steady_clock::now();
    SimulatorOptions sim_options;
    sim_options.max_summands = std::max<std::size_t>(1, options.max_summands);
    AbstractSimulator sim(circuit.num_qubits, sim_options);
    sim.run(circuit);

    RunReport report;
    report.num_qubits = circuit.num_qubits;
    report.num_gates = circuit.gates.size();
    report.trace = sim.trace();

    for (std::size_t q : options.prob_one) {
        report.queries.push_back(QueryResult{QueryResult::Kind::ProbOne, q, {}, {}, Verdict::Unknown});
    }
    for (std::size_t q : options.check_zero) {
        report.queries.push_back(QueryResult{QueryResult::Kind::CheckZero, q, {}, {}, Verdict::Unknown});
    }
    parallel_for(report.queries.size(), options.jobs, [&](std::size_t i) {
        QueryResult &query = report.queries[i];
        query.raw = sim.probability_one(query.qubit);
        query.clamped = clamp_probability(query.raw);
        query.verdict = verdict_of(query.clamped);
    });

    report.summand_count = sim.count().str();
    report.summands = sim.summands().size();
    report.stats = sim.stats();
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.peak_rss_kib = peak_rss_kib();
    return report;
}

std::string format_report_text(const RunReport &report, bool with_stats) {
    std::ostringstream out;
    out << "circuit: " << report.file << " (" << report.num_qubits << " qubits, " << report.num_gates << " gates)\n";
    Interval clamped = clamp_probability(report.trace);
    out << "weight: " << fmt_interval(clamped) << " raw " << fmt_interval(report.trace)
        << (exact_zero(clamped) ? " exact-zero" : "") << " " << verdict_name(verdict_of(clamped)) << "\n";
    for (const auto &q : report.queries) {
        out << (q.kind == QueryResult::Kind::ProbOne ? "prob-one" : "check-zero") << " q[" << q.qubit
            << "]: " << fmt_interval(q.clamped) << " raw " << fmt_interval(q.raw)
            << (exact_zero(q.clamped) ? " exact-zero" : "");
        if (q.kind == QueryResult::Kind::CheckZero) {
            out << " " << verdict_name(q.verdict);
        }
        out << "\n";
    }
    out << "summands: r=" << report.summand_count << " (" << report.summands << " abstract)\n";
    if (with_stats) {
        out << "stats: clifford=" << report.stats.clifford_gates << " decomposed=" << report.stats.decomposed_gates
            << " measurements=" << report.stats.measurements << " projections=" << report.stats.projections
            << " peak-summands=" << report.stats.peak_summands << "\n";
        out << "time: " << fmt6(report.wall_seconds) << " s\n";
        out << "peak-rss: " << report.peak_rss_kib << " KiB\n";
    }
    return out.str();
}

std::string format_report_json(const RunReport &report, bool with_stats) {
    Interval clamped = clamp_probability(report.trace);
    json j{{"schema", kReportSchema},
           {"file", report.file},
           {"qubits", report.num_qubits},
           {"gates", report.num_gates},
           {"weight",
            {{"raw", interval_json(report.trace)},
             {"clamped", interval_json(clamped)},
             {"verdict", verdict_name(verdict_of(clamped))}}},
           {"queries", json::array()},
           {"r", report.summand_count},
           {"abstract_summands", report.summands},
           {"wall_seconds", report.wall_seconds},
           {"peak_rss_kib", report.peak_rss_kib}};
    for (const auto &q : report.queries) {
        json item{{"kind", q.kind == QueryResult::Kind::ProbOne ? "prob-one" : "check-zero"},
                  {"qubit", q.qubit},
                  {"raw", interval_json(q.raw)},
                  {"clamped", interval_json(q.clamped)}};
        if (q.kind == QueryResult::Kind::CheckZero) {
            item["verdict"] = verdict_name(q.verdict);
        }
        j["queries"].push_back(std::move(item));
    }
    if (with_stats) {
        j["stats"] = json{{"clifford_gates", report.stats.clifford_gates},
                          {"decomposed_gates", report.stats.decomposed_gates},
                          {"measurements", report.stats.measurements},
                          {"projections", report.stats.projections},
                          {"peak_summands", report.stats.peak_summands}};
    }
    return j.dump(2) + "\n";
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Abstract stabilizer simulation of quantum circuits", "abstraqt"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "abstraqt 0.1.0");

    SimulateArgs sim_args;
    auto *sim_cmd = app.add_subcommand("simulate", "Run a circuit and report probability intervals");
    sim_cmd->add_option("file", sim_args.file, "Circuit file")->required();
    sim_cmd->add_option("--check-zero", sim_args.options.check_zero, "Try to prove qubit q ends in |0>")
        ->take_all();
    sim_cmd->add_option("--prob-one", sim_args.options.prob_one, "Report the |1> probability of qubit q")
        ->take_all();
    sim_cmd->add_option("--max-summands", sim_args.options.max_summands, "Abstract summands kept")
        ->check(CLI::PositiveNumber);
    sim_cmd->add_option("--jobs", sim_args.options.jobs, "Threads for query evaluation")->check(CLI::PositiveNumber);
    sim_cmd->add_flag("--json", sim_args.json, "Machine-readable report");
    sim_cmd->add_flag("--stats", sim_args.stats, "Gate counts, time, memory");

    BenchArgs bench_args;
    auto *bench_cmd = app.add_subcommand("bench", "Generate a benchmark circuit");
    bench_cmd->add_option("family", bench_args.family, "Family name, e.g. clifft-cxt")->required();
    bench_cmd->add_option("--qubits", bench_args.spec.num_qubits, "Qubit count (even)");
    bench_cmd->add_option("--gates", bench_args.spec.gates_per_block, "Gates per random block");
    bench_cmd->add_option("--seed", bench_args.spec.seed, "Random seed (ABSTRAQT_SEED overrides)");
    bench_cmd->add_option("--rounds", bench_args.spec.rounds, "measure-ghz rounds");
    bench_cmd->add_option("-o,--output", bench_args.output, "Output file; metadata goes to <file>.json");

    std::string compare_file;
    bool compare_json = false;
    auto *compare_cmd = app.add_subcommand("oracle-compare", "Check abstract results against concrete oracles");
    compare_cmd->add_option("file", compare_file, "Circuit file (at most 8 qubits)")->required();
    compare_cmd->add_flag("--json", compare_json, "Machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << "abstraqt 0.1.0\n";
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "abstraqt: " << e.what() << "\n" << "run 'abstraqt --help' for usage\n";
        return kExitUsage;
    }

    std::string context;
    try {
        if (sim_cmd->parsed()) {
            context = sim_args.file;
            return cmd_simulate(sim_args, out);
        }
        if (bench_cmd->parsed()) {
            context = "bench";
            return cmd_bench(bench_args, out);
        }
        context = compare_file;
        return cmd_oracle_compare(compare_file, compare_json, out);
    } catch (...) {
        return report_exception(err, context);
    }
}

}  // namespace abstraqt::cli
