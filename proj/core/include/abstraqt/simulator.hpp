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

#ifndef ABSTRAQT_SIMULATOR_HPP
#define ABSTRAQT_SIMULATOR_HPP

#include <cstddef>
#include <vector>

#include "abstraqt/abstract_state.hpp"
#include "abstraqt/circuit.hpp"

namespace abstraqt {

struct SimulatorOptions {
    /// Summands kept after a decomposed gate. 1 merges everything.
    std::size_t max_summands = 1;
};

struct SimulatorStats {
    std::size_t clifford_gates = 0;
    std::size_t decomposed_gates = 0;
    std::size_t measurements = 0;
    std::size_t projections = 0;
    std::size_t peak_summands = 1;
};

/// Runs circuits on a list of abstract summands sharing one stabilizer frame.
/// The list denotes the sum of its members.
class AbstractSimulator {
   public:
    explicit AbstractSimulator(std::size_t num_qubits, SimulatorOptions options = {});

    std::size_t num_qubits() const {
        return num_qubits_;
    }

    void apply(const Gate &gate);
    void apply_action(const GateAction &action, std::span<const std::size_t> targets);
    void project(const ConcretePauli &r);
    void measure_both(const ConcretePauli &r);
    void run(const Circuit &circuit);

    const std::vector<AbstractDensityMatrix> &summands() const {
        return summands_;
    }
    /// All summands compressed into one.
    AbstractDensityMatrix merged() const;
    /// Total count r over all summands.
    BigCount count() const;

    Interval trace() const;
    /// Trace after projecting onto R, without changing this simulator.
    Interval projected_trace(const ConcretePauli &r) const;
    /// Weight of outcome |1> on `qubit`.
    Interval probability_one(std::size_t qubit) const;

    const SimulatorStats &stats() const {
        return stats_;
    }

   private:
    void shrink();

    std::size_t num_qubits_;
    SimulatorOptions options_;
    std::vector<AbstractDensityMatrix> summands_;
    SimulatorStats stats_;
};

}  // namespace abstraqt

#endif
