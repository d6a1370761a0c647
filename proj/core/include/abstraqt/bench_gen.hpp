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

#ifndef ABSTRAQT_BENCH_GEN_HPP
#define ABSTRAQT_BENCH_GEN_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>

#include "abstraqt/circuit.hpp"

namespace abstraqt {

/// Circuit families. Qubits [0, n/2) are "upper", [n/2, n) are "lower"; every
/// family returns all lower qubits to |0>.
enum class BenchFamily {
    CliffCliff,
    CliffTCliff,
    CliffTCxT,
    CliffTHCzRx,
    CcxHCliff,
    CcxHCxT,
    Rz2HCx,
    MeasureGhz,
};

std::span<const BenchFamily> all_families();
/// Command-line name, e.g. "clifft-cxt".
std::string_view family_name(BenchFamily family);
/// Display label, e.g. "Cliff+T;CX+T".
std::string_view family_label(BenchFamily family);
/// Accepts either the name or the label.
std::optional<BenchFamily> parse_family(std::string_view text);

struct BenchSpec {
    BenchFamily family = BenchFamily::CliffCliff;
    std::size_t num_qubits = 16;
    std::size_t gates_per_block = 500;
    std::uint64_t seed = 1;
    /// MeasureGhz only.
    std::size_t rounds = 20;
};

/// Throws UsageError for odd or too small qubit counts and empty blocks.
void validate_spec(const BenchSpec &spec);

/// Deterministic for a given spec. Random draws use std::mt19937_64 with
/// rejection sampling for bounded integers, so output does not depend on the
/// standard library's distribution classes.
Circuit generate(const BenchSpec &spec);

/// Semantics-preserving rewrites (inverse-pair cancellation, commuting swaps,
/// H-conjugation identities), at most three passes. Throws UsageError on
/// measurements.
Circuit obfuscate(const Circuit &circuit, std::uint64_t seed);

/// Uniform integer in [0, bound) from a 64-bit engine.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound);

}  // namespace abstraqt

#endif
