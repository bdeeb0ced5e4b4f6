// Copyright 2026 The adiarot Authors
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

#ifndef ADIAROT_LINALG_HPP
#define ADIAROT_LINALG_HPP

#include <complex>
#include <cstddef>
#include <variant>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace adiarot {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using SparseMatrix = Eigen::SparseMatrix<cplx>;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Operators up to this dimension are stored dense; above it, compressed sparse.
inline constexpr std::size_t kDenseStorageLimit = 64;

/// A Hermitian operator on a finite Hilbert space, stored dense or sparse
/// depending on its dimension.
class OperatorMatrix {
   public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(Matrix dense);
    explicit OperatorMatrix(SparseMatrix sparse);

    /// Builds an operator with storage chosen by kDenseStorageLimit.
    static OperatorMatrix zero(std::size_t dimension);
    static OperatorMatrix from_sparse(SparseMatrix sparse);

    std::size_t dimension() const;
    bool is_sparse() const { return std::holds_alternative<SparseMatrix>(storage_); }

    const Matrix &dense() const { return std::get<Matrix>(storage_); }
    const SparseMatrix &sparse() const { return std::get<SparseMatrix>(storage_); }
    Matrix to_dense() const;

    StateVector apply(const StateVector &v) const;

    /// this += scale * other. Both operands must share a storage kind.
    void add_scaled(const OperatorMatrix &other, double scale);
    OperatorMatrix scaled(double scale) const;

    /// max |A - A^dagger| over all entries.
    double hermiticity_defect() const;
    /// max |imag(A_ij)|; zero for every Hamiltonian the models build.
    double max_imag() const;
    double max_abs_entry() const;

   private:
    std::variant<Matrix, SparseMatrix> storage_;
};

OperatorMatrix operator+(const OperatorMatrix &a, const OperatorMatrix &b);
OperatorMatrix operator-(const OperatorMatrix &a, const OperatorMatrix &b);

}  // namespace adiarot

#endif
