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

#include <gtest/gtest.h>

#include <numbers>

#include "abstraqt/circuit.hpp"
#include "abstraqt/errors.hpp"
#include "abstraqt/oracle.hpp"
#include "support.hpp"

using namespace abstraqt;
using namespace abstraqt::testing_support;

namespace {

ParseError parse_failure(std::string_view text) {
    try {
        parse_circuit(text);
    } catch (const ParseError &e) {
        return e;
    }
    ADD_FAILURE() << "no parse error for: " << text;
    return ParseError(ParseErrorKind::Syntax, 0, 0, "none");
}

Circuit random_unitary_circuit(Rng &rng, std::size_t n, std::size_t gates) {
    Circuit c{n, {}};
    for (std::size_t i = 0; i < gates; ++i) {
        c.gates.push_back(coin(rng) ? random_clifford_gate(rng, n) : random_non_clifford_gate(rng, n));
    }
    return c;
}

// U X U^dagger == X for every matrix unit X = |k><j| iff U is a phase times I.
bool acts_as_identity(const Circuit &c) {
    std::size_t dim = std::size_t{1} << c.num_qubits;
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t j : {std::size_t{0}, dim - 1}) {
            Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(dim, dim);
            unit(k, j) = 1;
            DenseState s(c.num_qubits, unit);
            for (const auto &g : c.gates) {
                s.apply(g);
            }
            if (max_abs(s.rho() - unit) > 1e-9) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST(Parser, GoldenCircuit) {
    Circuit c = parse_circuit("qreg q[2]; h q[0]; h q[1]; t q[1]; cx q[0],q[1]; cx q[0],q[1];");
    ASSERT_EQ(c.num_qubits, 2u);
    ASSERT_EQ(c.gates.size(), 5u);
    EXPECT_EQ(c.gates[0], Gate::unitary("h", {0}));
    EXPECT_EQ(c.gates[2], Gate::unitary("t", {1}));
    EXPECT_EQ(c.gates[4], Gate::unitary("cx", {0, 1}));
    EXPECT_FALSE(c.has_measurements());
}

TEST(Parser, HeaderMeasurementsAndProjections) {
    Circuit c = parse_circuit(R"(OPENQASM 2.0;
include "qelib1.inc";
// comment
qreg q[3];
creg c[3];
barrier q[0],q[1];
rz(-pi/4) q[2];
rx(2*pi/3 + 0.5e-1) q[0];
measure q[1] -> c[1];
measure q[2];
project q[0] -> 1;
project q[1] -> -;
)");
    ASSERT_EQ(c.gates.size(), 6u);
    EXPECT_NEAR(c.gates[0].params[0], -std::numbers::pi / 4, 1e-15);
    EXPECT_NEAR(c.gates[1].params[0], 2 * std::numbers::pi / 3 + 0.05, 1e-15);
    EXPECT_EQ(c.gates[2], Gate::measure(1));
    EXPECT_EQ(c.gates[3], Gate::measure(2));
    EXPECT_EQ(c.gates[4], Gate::project(0, ProjectOutcome::One));
    EXPECT_EQ(c.gates[5], Gate::project(1, ProjectOutcome::Minus));
    EXPECT_TRUE(c.has_measurements());
    EXPECT_EQ(measurement_pauli(c.gates[2], 3), ConcretePauli::from_string("IZI"));
    EXPECT_EQ(measurement_pauli(c.gates[4], 3), ConcretePauli::from_string("-ZII"));
    EXPECT_EQ(measurement_pauli(c.gates[5], 3), ConcretePauli::from_string("-IXI"));
}

TEST(Parser, EmptyBody) {
    Circuit c = parse_circuit("qreg q[4];");
    EXPECT_EQ(c.num_qubits, 4u);
    EXPECT_TRUE(c.gates.empty());
}

TEST(Parser, DistinctErrors) {
    ParseError range = parse_failure("qreg q[2];\nt q[5];");
    EXPECT_EQ(range.kind(), ParseErrorKind::IndexOutOfRange);
    EXPECT_EQ(range.line(), 2u);
    EXPECT_STREQ(range.code(), "index-out-of-range");

    ParseError unknown = parse_failure("qreg q[2]; foo q[0];");
    EXPECT_EQ(unknown.kind(), ParseErrorKind::UnknownGate);
    EXPECT_EQ(unknown.column(), 12u);

    EXPECT_EQ(parse_failure("qreg q[2]; cx q[0];").kind(), ParseErrorKind::Arity);
    EXPECT_EQ(parse_failure("qreg q[2]; rz q[0];").kind(), ParseErrorKind::Arity);
    EXPECT_EQ(parse_failure("qreg q[2]; cx q[1],q[1];").kind(), ParseErrorKind::DuplicateTarget);
    EXPECT_EQ(parse_failure("qreg q[2]; h q[0]").kind(), ParseErrorKind::Syntax);
    EXPECT_EQ(parse_failure("h q[0];").kind(), ParseErrorKind::Syntax);
    EXPECT_EQ(parse_failure("qreg q[2]; h q[0]; $").kind(), ParseErrorKind::Syntax);
}

TEST(Parser, EmitRoundTripProperty) {
    Rng rng(701);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = 1 + below(rng, 5);
        Circuit c = random_unitary_circuit(rng, n, below(rng, 30));
        if (coin(rng)) {
            c.gates.push_back(Gate::unitary("ry", {below(rng, n)}, {uniform(rng, -10, 10)}));
            c.gates.push_back(Gate::measure(below(rng, n)));
            c.gates.push_back(Gate::project(below(rng, n), static_cast<ProjectOutcome>(below(rng, 4))));
        }
        ASSERT_EQ(parse_circuit(emit_circuit(c)), c);
    }
}

TEST(Inverse, AdjointRules) {
    Circuit c{2, {Gate::unitary("h", {0}), Gate::unitary("s", {1}), Gate::unitary("cx", {0, 1}),
                  Gate::unitary("rz", {1}, {0.3})}};
    Circuit inv = inverse(c);
    ASSERT_EQ(inv.gates.size(), 4u);
    EXPECT_EQ(inv.gates[0], Gate::unitary("rz", {1}, {-0.3}));
    EXPECT_EQ(inv.gates[1], Gate::unitary("cx", {0, 1}));
    EXPECT_EQ(inv.gates[2], Gate::unitary("sdg", {1}));
    EXPECT_EQ(inv.gates[3], Gate::unitary("h", {0}));
    EXPECT_EQ(inverse(inv), c);
    Circuit m{1, {Gate::measure(0)}};
    EXPECT_THROW(inverse(m), UsageError);
}

TEST(Inverse, ComposesToIdentityProperty) {
    Rng rng(702);
    for (int iter = 0; iter < 60; ++iter) {
        Circuit c = random_unitary_circuit(rng, 3, 1 + below(rng, 15));
        Circuit both = c;
        for (const auto &g : inverse(c).gates) {
            both.gates.push_back(g);
        }
        EXPECT_TRUE(acts_as_identity(both));
    }
    EXPECT_FALSE(acts_as_identity(Circuit{3, {Gate::unitary("t", {1})}}));
}

TEST(Gates, BuiltinTable) {
    EXPECT_TRUE(is_builtin_gate("ccx"));
    EXPECT_FALSE(is_builtin_gate("u3"));
    EXPECT_EQ(gate_arity("swap"), 2u);
    EXPECT_EQ(gate_param_count("ry"), 1u);
    EXPECT_THROW(gate_matrix("rx", {}), UsageError);
    EXPECT_THROW(validate_gate(Gate::unitary("h", {3}), 2), UsageError);
}

TEST(Gates, RotationsSnapToClifford) {
    EXPECT_TRUE(is_clifford(builtin_action(Gate::unitary("rx", {0}, {std::numbers::pi}))));
    EXPECT_TRUE(is_clifford(builtin_action(Gate::unitary("ry", {0}, {-std::numbers::pi / 2}))));
    EXPECT_FALSE(is_clifford(builtin_action(Gate::unitary("rx", {0}, {std::numbers::pi / 4}))));
    EXPECT_FALSE(is_clifford(builtin_action(Gate::unitary("rz", {0}, {2.0}))));
}

TEST(Gates, RzConvention) {
    Eigen::MatrixXcd rz = gate_matrix("rz", {0.7});
    EXPECT_LT(std::abs(rz(0, 0) - std::polar(1.0, -0.35)), 1e-15);
    EXPECT_LT(std::abs(rz(1, 1) - std::polar(1.0, 0.35)), 1e-15);
}
