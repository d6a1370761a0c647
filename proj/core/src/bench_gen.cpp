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

#include "abstraqt/bench_gen.hpp"

#include <algorithm>
#include <array>
#include <numbers>

#include "abstraqt/errors.hpp"

namespace abstraqt {

namespace {

struct FamilyInfo {
    BenchFamily family;
    std::string_view name;
    std::string_view label;
};

constexpr std::array<FamilyInfo, 8> kFamilies = {{
    {BenchFamily::CliffCliff, "cliff-cliff", "Cliff;Cliff"},
    {BenchFamily::CliffTCliff, "clifft-cliff", "Cliff+T;Cliff"},
    {BenchFamily::CliffTCxT, "clifft-cxt", "Cliff+T;CX+T"},
    {BenchFamily::CliffTHCzRx, "clifft-h-czrx", "Cliff+T;H;CZ+RX"},
    {BenchFamily::CcxHCliff, "ccxh-cliff", "CCX+H;Cliff"},
    {BenchFamily::CcxHCxT, "ccxh-cxt", "CCX+H;CX+T"},
    {BenchFamily::Rz2HCx, "rz2h-cx", "RZ2+H;CX"},
    {BenchFamily::MeasureGhz, "measure-ghz", "MeasureGHZ"},
}};

constexpr std::array<BenchFamily, 8> kFamilyList = {
    BenchFamily::CliffCliff, BenchFamily::CliffTCliff, BenchFamily::CliffTCxT, BenchFamily::CliffTHCzRx,
    BenchFamily::CcxHCliff,  BenchFamily::CcxHCxT,     BenchFamily::Rz2HCx,    BenchFamily::MeasureGhz,
};

const FamilyInfo &info(BenchFamily f) {
    for (const auto &i : kFamilies) {
        if (i.family == f) {
            return i;
        }
    }
    throw InvariantError("unknown benchmark family");
}

using Range = std::pair<std::size_t, std::size_t>;  // [first, last)

std::size_t pick(std::mt19937_64 &rng, Range r) {
    return r.first + (std::size_t)uniform_below(rng, r.second - r.first);
}

// Distinct qubits, the i-th drawn from ranges[i].
std::vector<std::size_t> pick_distinct(std::mt19937_64 &rng, std::initializer_list<Range> ranges) {
    std::vector<std::size_t> out;
    for (Range r : ranges) {
        std::size_t q;
        do {
            q = pick(rng, r);
        } while (std::find(out.begin(), out.end(), q) != out.end());
        out.push_back(q);
    }
    return out;
}

// One gate kind of a block: a name plus how its qubits are drawn.
struct Draw {
    std::string_view gate;
    std::vector<Range> ranges;
    std::vector<double> params;
};

void append_block(Circuit &c, std::mt19937_64 &rng, const std::vector<Draw> &draws, std::size_t count) {
    for (std::size_t i = 0; i < count; i++) {
        const Draw &d = draws[(std::size_t)uniform_below(rng, draws.size())];
        std::vector<std::size_t> targets;
        switch (d.ranges.size()) {
            case 1:
                targets = pick_distinct(rng, {d.ranges[0]});
                break;
            case 2:
                targets = pick_distinct(rng, {d.ranges[0], d.ranges[1]});
                break;
            default:
                targets = pick_distinct(rng, {d.ranges[0], d.ranges[1], d.ranges[2]});
                break;
        }
        c.gates.push_back(Gate::unitary(std::string(d.gate), std::move(targets), d.params));
    }
}

void append(Circuit &c, const Circuit &tail) {
    c.gates.insert(c.gates.end(), tail.gates.begin(), tail.gates.end());
}

bool is_diagonal(const Gate &g) {
    static constexpr std::string_view diag[] = {"id", "z", "s", "sdg", "t", "tdg", "rz", "cz"};
    return g.kind == GateKind::Unitary && std::find(std::begin(diag), std::end(diag), g.name) != std::end(diag);
}

bool disjoint(const Gate &a, const Gate &b) {
    for (std::size_t x : a.targets) {
        if (std::find(b.targets.begin(), b.targets.end(), x) != b.targets.end()) {
            return false;
        }
    }
    return true;
}

bool same_targets(const Gate &a, const Gate &b) {
    if (a.targets == b.targets) {
        return true;
    }
    // CZ and SWAP are symmetric in their qubits.
    if ((a.name == "cz" || a.name == "swap") && a.targets.size() == 2 && b.targets.size() == 2) {
        return a.targets[0] == b.targets[1] && a.targets[1] == b.targets[0];
    }
    return false;
}

bool cancels(const Gate &a, const Gate &b) {
    if (!same_targets(a, b)) {
        return false;
    }
    static constexpr std::string_view self_inverse[] = {"id", "x", "y", "z", "h", "cx", "cz", "swap", "ccx"};
    if (a.name == b.name && std::find(std::begin(self_inverse), std::end(self_inverse), a.name) != std::end(self_inverse)) {
        return true;
    }
    auto pair = [&](std::string_view x, std::string_view y) {
        return (a.name == x && b.name == y) || (a.name == y && b.name == x);
    };
    if (pair("s", "sdg") || pair("t", "tdg")) {
        return true;
    }
    if (a.name == b.name && (a.name == "rx" || a.name == "ry" || a.name == "rz")) {
        return a.params[0] == -b.params[0];
    }
    return false;
}

std::vector<Gate> cancel_pass(const std::vector<Gate> &gates) {
    std::vector<Gate> out;
    for (const auto &g : gates) {
        if (!out.empty() && cancels(out.back(), g)) {
            out.pop_back();
        } else {
            out.push_back(g);
        }
    }
    return out;
}

void swap_pass(std::vector<Gate> &gates, std::mt19937_64 &rng) {
    for (std::size_t i = 0; i + 1 < gates.size(); i++) {
        const Gate &a = gates[i];
        const Gate &b = gates[i + 1];
        bool commute = disjoint(a, b) || (is_diagonal(a) && is_diagonal(b));
        if (commute && uniform_below(rng, 2)) {
            std::swap(gates[i], gates[i + 1]);
            i++;
        }
    }
}

std::vector<Gate> rewrite_pass(const std::vector<Gate> &gates, std::mt19937_64 &rng) {
    std::vector<Gate> out;
    for (const auto &g : gates) {
        bool rewrite = (g.name == "x" || g.name == "z" || g.name == "cx") && uniform_below(rng, 2);
        if (!rewrite) {
            out.push_back(g);
            continue;
        }
        if (g.name == "cx") {
            std::size_t t = g.targets[1];
            out.push_back(Gate::unitary("h", {t}));
            out.push_back(Gate::unitary("cz", g.targets));
            out.push_back(Gate::unitary("h", {t}));
        } else {
            std::size_t q = g.targets[0];
            out.push_back(Gate::unitary("h", {q}));
            out.push_back(Gate::unitary(g.name == "x" ? "z" : "x", {q}));
            out.push_back(Gate::unitary("h", {q}));
        }
    }
    return out;
}

}  // namespace

std::span<const BenchFamily> all_families() {
    return kFamilyList;
}

std::string_view family_name(BenchFamily family) {
    return info(family).name;
}

std::string_view family_label(BenchFamily family) {
    return info(family).label;
}

std::optional<BenchFamily> parse_family(std::string_view text) {
    for (const auto &i : kFamilies) {
        if (i.name == text || i.label == text) {
            return i.family;
        }
    }
    return std::nullopt;
}

std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
    if (bound == 0) {
        throw UsageError("uniform_below: empty range");
    }
    // Largest multiple of bound that fits; draws above it are rejected.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

void validate_spec(const BenchSpec &spec) {
    if (spec.num_qubits % 2 != 0 || spec.num_qubits < 4) {
        throw UsageError("benchmark qubit count must be even and at least 4");
    }
    bool ccx = spec.family == BenchFamily::CcxHCliff || spec.family == BenchFamily::CcxHCxT;
    if (ccx && spec.num_qubits < 6) {
        throw UsageError("CCX families need at least 3 upper qubits (6 in total)");
    }
    if (spec.family == BenchFamily::MeasureGhz) {
        if (spec.rounds == 0) {
            throw UsageError("MeasureGHZ needs at least one round");
        }
    } else if (spec.gates_per_block == 0) {
        throw UsageError("gates per block must be at least 1");
    }
}

Circuit generate(const BenchSpec &spec) {
    validate_spec(spec);
    const std::size_t n = spec.num_qubits;
    const Range upper{0, n / 2};
    const Range lower{n / 2, n};
    const Range all{0, n};
    const std::size_t g = spec.gates_per_block;
    std::mt19937_64 rng(spec.seed);
    Circuit c;
    c.num_qubits = n;

    if (spec.family == BenchFamily::MeasureGhz) {
        for (std::size_t r = 0; r < spec.rounds; r++) {
            c.gates.push_back(Gate::unitary("h", {0}));
            for (std::size_t k = 1; k < n; k++) {
                c.gates.push_back(Gate::unitary("cx", {0, k}));
            }
            c.gates.push_back(Gate::measure(0));
            for (std::size_t k = 1; k < n; k++) {
                c.gates.push_back(Gate::unitary("cx", {0, k}));
            }
        }
        return c;
    }

    const std::vector<Draw> cliff_upper = {{"h", {upper}, {}}, {"s", {upper}, {}}, {"cx", {upper, upper}, {}}};
    const std::vector<Draw> cliff_t_upper = {
        {"h", {upper}, {}}, {"s", {upper}, {}}, {"t", {upper}, {}}, {"cx", {upper, upper}, {}}};
    const std::vector<Draw> ccx_h_upper = {{"ccx", {upper, upper, upper}, {}}, {"h", {upper}, {}}};
    const std::vector<Draw> rz2_h_upper = {{"rz", {upper}, {2.0}}, {"h", {upper}, {}}};
    const std::vector<Draw> cliff_lower = {{"h", {lower}, {}}, {"s", {lower}, {}}, {"cx", {lower, lower}, {}}};
    const std::vector<Draw> cx_t = {{"cx", {upper, lower}, {}}, {"t", {lower}, {}}};
    const std::vector<Draw> cz_rx = {{"cz", {upper, lower}, {}}, {"rx", {lower}, {std::numbers::pi / 4}}};
    const std::vector<Draw> cliff_lower_to_all = {{"h", {lower}, {}}, {"s", {lower}, {}}, {"cx", {lower, all}, {}}};
    const std::vector<Draw> cx_only = {{"cx", {upper, lower}, {}}};

    const std::vector<Draw> *first = nullptr;
    const std::vector<Draw> *second = nullptr;
    switch (spec.family) {
        case BenchFamily::CliffCliff:
            first = &cliff_upper;
            second = &cliff_lower;
            break;
        case BenchFamily::CliffTCliff:
            first = &cliff_t_upper;
            second = &cliff_lower;
            break;
        case BenchFamily::CliffTCxT:
            first = &cliff_t_upper;
            second = &cx_t;
            break;
        case BenchFamily::CliffTHCzRx:
            first = &cliff_t_upper;
            second = &cz_rx;
            break;
        case BenchFamily::CcxHCliff:
            first = &ccx_h_upper;
            second = &cliff_lower_to_all;
            break;
        case BenchFamily::CcxHCxT:
            first = &ccx_h_upper;
            second = &cx_t;
            break;
        case BenchFamily::Rz2HCx:
            first = &rz2_h_upper;
            second = &cx_only;
            break;
        case BenchFamily::MeasureGhz:
            break;
    }

    Circuit c1{n, {}};
    append_block(c1, rng, *first, g);
    Circuit c2{n, {}};
    append_block(c2, rng, *second, g);
    Circuit c3 = obfuscate(inverse(c2), rng());

    Circuit ch{n, {}};
    if (spec.family == BenchFamily::CliffTHCzRx) {
        for (std::size_t q = lower.first; q < lower.second; q++) {
            ch.gates.push_back(Gate::unitary("h", {q}));
        }
    }
    append(c, c1);
    append(c, ch);
    append(c, c2);
    append(c, c3);
    append(c, ch);
    return c;
}

Circuit obfuscate(const Circuit &circuit, std::uint64_t seed) {
    if (circuit.has_measurements()) {
        throw UsageError("obfuscate: circuit contains measurements");
    }
    std::mt19937_64 rng(seed);
    std::vector<Gate> gates = circuit.gates;
    for (int pass = 0; pass < 3; pass++) {
        gates = cancel_pass(gates);
        swap_pass(gates, rng);
        gates = rewrite_pass(gates, rng);
    }
    return Circuit{circuit.num_qubits, cancel_pass(gates)};
}

}  // namespace abstraqt
