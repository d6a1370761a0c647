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

#ifndef ABSTRAQT_TOOLS_CLI_HPP
#define ABSTRAQT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "abstraqt/abstract_domains.hpp"
#include "abstraqt/circuit.hpp"
#include "abstraqt/simulator.hpp"

namespace abstraqt::cli {

enum ExitCode : int {
    kExitOk = 0,
    /// oracle-compare found a containment or agreement failure.
    kExitMismatch = 1,
    kExitParse = 2,
    kExitUnsupportedGate = 3,
    /// Circuit too large for the requested mode.
    kExitSize = 4,
    kExitUsage = 64,
    kExitNoInput = 66,
    kExitInternal = 70,
};

inline constexpr const char *kReportSchema = "abstraqt.report/1";

enum class Verdict { Proved, Unknown };

struct QueryResult {
    enum class Kind { ProbOne, CheckZero } kind = Kind::ProbOne;
    std::size_t qubit = 0;
    Interval raw;
    Interval clamped;
    Verdict verdict = Verdict::Unknown;
};

struct RunReport {
    std::string file;
    std::size_t num_qubits = 0;
    std::size_t num_gates = 0;
    Interval trace;
    std::vector<QueryResult> queries;
    std::string summand_count;
    std::size_t summands = 0;
    SimulatorStats stats;
    double wall_seconds = 0;
    /// Peak resident set size of the process, in KiB.
    long peak_rss_kib = 0;
};

struct SimulateOptions {
    std::vector<std::size_t> check_zero;
    std::vector<std::size_t> prob_one;
    std::size_t max_summands = 1;
    std::size_t jobs = 1;
};

/// Clamps into [0, 1].
Interval clamp_probability(const Interval &raw);

/// Runs the circuit and answers the queries. Query evaluation after the run
/// is spread over `jobs` threads.
RunReport simulate(const Circuit &circuit, const SimulateOptions &options);

std::string format_report_text(const RunReport &report, bool with_stats);
std::string format_report_json(const RunReport &report, bool with_stats);

/// Full command-line entry point. Never throws; returns an ExitCode.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace abstraqt::cli

#endif
