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

#include "abstraqt/simulator.hpp"

#include <algorithm>

#include "abstraqt/errors.hpp"

namespace abstraqt {

namespace {

bool all_zero(const std::vector<AbstractDensityMatrix> &list) {
    return std::all_of(list.begin(), list.end(), [](const auto &s) { return s.zero; });
}

}  // namespace

AbstractSimulator::AbstractSimulator(std::size_t num_qubits, SimulatorOptions options)
    : num_qubits_(num_qubits), options_(options), summands_{init_state(num_qubits)} {
    if (options_.max_summands == 0) {
        throw UsageError("max_summands must be at least 1");
    }
}

void AbstractSimulator::apply(const Gate &gate) {
    validate_gate(gate, num_qubits_);
    switch (gate.kind) {
        case GateKind::Unitary:
            apply_action(builtin_action(gate), gate.targets);
            break;
        case GateKind::MeasureBoth:
            measure_both(measurement_pauli(gate, num_qubits_));
            break;
        case GateKind::Project:
            project(measurement_pauli(gate, num_qubits_));
            break;
    }
}

void AbstractSimulator::apply_action(const GateAction &action, std::span<const std::size_t> targets) {
    if (const auto *table = std::get_if<CliffordTable>(&action)) {
        for (auto &s : summands_) {
            s = apply_clifford(s, *table, targets);
        }
        stats_.clifford_gates++;
        return;
    }
    const auto &decomposition = std::get<PauliSumDecomposition>(action);
    stats_.decomposed_gates++;
    if (options_.max_summands == 1) {
        AbstractDensityMatrix single = merged();
        summands_.assign(1, apply_decomposed(single, decomposition, targets));
        return;
    }
    std::vector<AbstractDensityMatrix> next;
    for (const auto &s : summands_) {
        if (s.zero) {
            continue;
        }
        auto expanded = expand_decomposed(s, decomposition, targets);
        next.insert(next.end(), std::make_move_iterator(expanded.begin()), std::make_move_iterator(expanded.end()));
    }
    if (next.empty()) {
        next.push_back(AbstractDensityMatrix::zero_matrix(num_qubits_));
    }
    summands_ = std::move(next);
    stats_.peak_summands = std::max(stats_.peak_summands, summands_.size());
    shrink();
}

void AbstractSimulator::shrink() {
    std::size_t k = options_.max_summands;
    if (summands_.size() <= k) {
        return;
    }
    // k contiguous groups of nearly equal size.
    std::vector<AbstractDensityMatrix> out;
    std::size_t total = summands_.size();
    std::size_t begin = 0;
    for (std::size_t g = 0; g < k; g++) {
        std::size_t end = begin + total / k + (g < total % k ? 1 : 0);
        out.push_back(compress(std::span<const AbstractDensityMatrix>(summands_.data() + begin, end - begin)));
        begin = end;
    }
    summands_ = std::move(out);
}

void AbstractSimulator::project(const ConcretePauli &r) {
    stats_.projections++;
    for (auto &s : summands_) {
        s = measure_project(s, r);
    }
}

void AbstractSimulator::measure_both(const ConcretePauli &r) {
    stats_.measurements++;
    std::vector<AbstractDensityMatrix> plus, minus;
    for (const auto &s : summands_) {
        plus.push_back(measure_project(s, r));
        minus.push_back(measure_project(s, r.times_i_pow(2)));
    }
    if (all_zero(minus)) {
        summands_ = std::move(plus);
        return;
    }
    if (all_zero(plus)) {
        summands_ = std::move(minus);
        return;
    }
    for (std::size_t i = 0; i < summands_.size(); i++) {
        summands_[i] = join_states(plus[i], minus[i]);
    }
}

void AbstractSimulator::run(const Circuit &circuit) {
    if (circuit.num_qubits != num_qubits_) {
        throw UsageError("circuit qubit count does not match simulator");
    }
    for (const auto &g : circuit.gates) {
        apply(g);
    }
}

AbstractDensityMatrix AbstractSimulator::merged() const {
    return compress(summands_);
}

BigCount AbstractSimulator::count() const {
    BigCount total = 0;
    for (const auto &s : summands_) {
        if (!s.zero) {
            total += s.count;
        }
    }
    return total;
}

Interval AbstractSimulator::trace() const {
    Interval total = Interval::point(0);
    for (const auto &s : summands_) {
        total = interval_add(total, abstraqt::trace(s));
    }
    return total;
}

Interval AbstractSimulator::projected_trace(const ConcretePauli &r) const {
    Interval total = Interval::point(0);
    for (const auto &s : summands_) {
        total = interval_add(total, abstraqt::trace(measure_project(s, r)));
    }
    return total;
}

Interval AbstractSimulator::probability_one(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw UsageError("qubit " + std::to_string(qubit) + " out of range");
    }
    return projected_trace(ConcretePauli::single(num_qubits_, qubit, PauliLetter::Z, 2));
}

}  // namespace abstraqt
