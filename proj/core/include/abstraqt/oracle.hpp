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

#ifndef ABSTRAQT_ORACLE_HPP
#define ABSTRAQT_ORACLE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "abstraqt/circuit.hpp"
#include "abstraqt/clifford.hpp"
#include "abstraqt/pauli.hpp"

namespace abstraqt {

inline constexpr std::size_t kMaxDenseOracleQubits = 10;
inline constexpr std::size_t kSumTermCap = 4096;

/// R * m and m * R for an n-qubit Pauli R, without forming dense(R).
Eigen::MatrixXcd pauli_times(const ConcretePauli &r, const Eigen::MatrixXcd &m);
Eigen::MatrixXcd times_pauli(const Eigen::MatrixXcd &m, const ConcretePauli &r);

/// Density matrix on at most kMaxDenseOracleQubits qubits.
class DenseState {
   public:
    /// |0...0><0...0|
    explicit DenseState(std::size_t num_qubits);
    DenseState(std::size_t num_qubits, Eigen::MatrixXcd rho);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    const Eigen::MatrixXcd &rho() const {
        return rho_;
    }

    /// U rho U^dagger with U acting on `targets` (first target most significant).
    void apply(const Eigen::MatrixXcd &unitary, std::span<const std::size_t> targets);
    /// Unitary gates only.
    void apply(const Gate &gate);
    /// (I + R)/2 rho (I + R)/2
    void project(const ConcretePauli &r);

    double trace() const;
    double probability_one(std::size_t qubit) const;

   private:
    std::size_t num_qubits_;
    Eigen::MatrixXcd rho_;
};

/// c * P * prod_j (I + (-1)^{b_j} Q_j) / 2 with P bare.
struct SumTerm {
    std::complex<double> coeff;
    ConcretePauli pauli;
    std::vector<std::uint8_t> signs;
};

/// Exact exponential-sum representation: sum of terms over shared stabilizers.
class ConcreteSumState {
   public:
    explicit ConcreteSumState(std::size_t num_qubits);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<SumTerm> &terms() const {
        return terms_;
    }
    const std::vector<ConcretePauli> &stabilizers() const {
        return stabilizers_;
    }

    /// Throws CapacityError when merging leaves more than kSumTermCap terms.
    void apply(const GateAction &action, std::span<const std::size_t> targets);
    /// Unitary gates only.
    void apply(const Gate &gate);
    void project(const ConcretePauli &r);

    double trace() const;
    double probability_one(std::size_t qubit) const;

    /// Dense reconstruction; n <= kMaxDenseOracleQubits.
    Eigen::MatrixXcd to_dense() const;

   private:
    void merge();

    std::size_t num_qubits_;
    std::vector<SumTerm> terms_;
    std::vector<ConcretePauli> stabilizers_;
};

/// Every measurement splits into its two outcome branches; projections keep
/// one branch. Branches are listed in outcome order (+ before -).
std::vector<DenseState> dense_branches(const Circuit &circuit);
std::vector<ConcreteSumState> sum_branches(const Circuit &circuit);

}  // namespace abstraqt

#endif
