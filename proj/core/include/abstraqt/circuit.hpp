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

#ifndef ABSTRAQT_CIRCUIT_HPP
#define ABSTRAQT_CIRCUIT_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "abstraqt/clifford.hpp"
#include "abstraqt/pauli.hpp"

namespace abstraqt {

enum class GateKind {
    Unitary,
    /// Both outcomes of a Z measurement, joined.
    MeasureBoth,
    /// Projection onto one eigenstate.
    Project,
};

/// Eigenstate selected by a projection: |0>, |1>, |+>, |->.
enum class ProjectOutcome { Zero, One, Plus, Minus };

struct Gate {
    /// Lowercase builtin name, or "measure" / "project".
    std::string name;
    std::vector<double> params;
    std::vector<std::size_t> targets;
    GateKind kind = GateKind::Unitary;
    ProjectOutcome outcome = ProjectOutcome::Zero;

    static Gate unitary(std::string name, std::vector<std::size_t> targets, std::vector<double> params = {});
    static Gate measure(std::size_t qubit);
    static Gate project(std::size_t qubit, ProjectOutcome outcome);

    bool operator==(const Gate &) const = default;
};

struct Circuit {
    std::size_t num_qubits = 0;
    std::vector<Gate> gates;

    bool has_measurements() const;
    bool operator==(const Circuit &) const = default;
};

/// Builtin gate names: id x y z h s sdg t tdg cx cz swap ccx rx ry rz.
bool is_builtin_gate(std::string_view name);
std::size_t gate_arity(std::string_view name);
std::size_t gate_param_count(std::string_view name);

/// Dense unitary with the first target as the most significant qubit.
/// Throws UsageError for unknown names or wrong parameter counts.
Eigen::MatrixXcd gate_matrix(std::string_view name, const std::vector<double> &params);

/// Classification of a builtin unitary, cached per (name, parameter bits).
/// Rotation angles within 1e-12 of a multiple of pi/2 are snapped first so
/// they land on the Clifford path.
const GateAction &builtin_action(const Gate &gate);

/// Reversed circuit of adjoint gates. Throws UsageError on measurements.
Circuit inverse(const Circuit &circuit);

/// The Hermitian Pauli whose +1 eigenspace a MeasureBoth or Project gate
/// selects (for MeasureBoth, the + branch).
ConcretePauli measurement_pauli(const Gate &gate, std::size_t num_qubits);

/// Parses the OpenQASM 2 subset. Throws ParseError.
Circuit parse_circuit(std::string_view text);

/// Canonical text form; parse_circuit(emit_circuit(c)) == c.
std::string emit_circuit(const Circuit &circuit);

/// Validates arity, parameter count, target range and distinctness.
void validate_gate(const Gate &gate, std::size_t num_qubits);

}  // namespace abstraqt

#endif
