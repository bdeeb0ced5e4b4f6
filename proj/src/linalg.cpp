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

#include "adiarot/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "adiarot/errors.hpp"

namespace adiarot {

OperatorMatrix::OperatorMatrix(Matrix dense) : storage_(std::move(dense)) {
}

OperatorMatrix::OperatorMatrix(SparseMatrix sparse) : storage_(std::move(sparse)) {
    std::get<SparseMatrix>(storage_).makeCompressed();
}

OperatorMatrix OperatorMatrix::zero(std::size_t dimension) {
    auto n = static_cast<Eigen::Index>(dimension);
    if (dimension <= kDenseStorageLimit) {
        return OperatorMatrix(Matrix::Zero(n, n));
    }
    return OperatorMatrix(SparseMatrix(n, n));
}

OperatorMatrix OperatorMatrix::from_sparse(SparseMatrix sparse) {
    if (static_cast<std::size_t>(sparse.rows()) <= kDenseStorageLimit) {
        return OperatorMatrix(Matrix(sparse));
    }
    return OperatorMatrix(std::move(sparse));
}

std::size_t OperatorMatrix::dimension() const {
    return std::visit([](const auto &m) { return static_cast<std::size_t>(m.rows()); }, storage_);
}

Matrix OperatorMatrix::to_dense() const {
    if (is_sparse()) {
        return Matrix(sparse());
    }
    return dense();
}

StateVector OperatorMatrix::apply(const StateVector &v) const {
    if (static_cast<std::size_t>(v.size()) != dimension()) {
        throw ValidationError("apply: state dimension " + std::to_string(v.size()) + " does not match operator dimension " +
                              std::to_string(dimension()));
    }
    return std::visit([&](const auto &m) -> StateVector { return m * v; }, storage_);
}

void OperatorMatrix::add_scaled(const OperatorMatrix &other, double scale) {
    if (other.dimension() != dimension()) {
        throw ValidationError("operator dimensions differ");
    }
    if (is_sparse() != other.is_sparse()) {
        throw ValidationError("operator storage kinds differ");
    }
    if (is_sparse()) {
        auto &m = std::get<SparseMatrix>(storage_);
        m = m + cplx(scale) * other.sparse();
        m.makeCompressed();
    } else {
        std::get<Matrix>(storage_) += cplx(scale) * other.dense();
    }
}

OperatorMatrix OperatorMatrix::scaled(double scale) const {
    OperatorMatrix out = *this;
    std::visit([&](auto &m) { m *= cplx(scale); }, out.storage_);
    return out;
}

double OperatorMatrix::hermiticity_defect() const {
    if (is_sparse()) {
        SparseMatrix diff = sparse() - SparseMatrix(sparse().adjoint());
        double worst = 0.0;
        for (Eigen::Index k = 0; k < diff.outerSize(); ++k) {
            for (SparseMatrix::InnerIterator it(diff, k); it; ++it) {
                worst = std::max(worst, std::abs(it.value()));
            }
        }
        return worst;
    }
    const auto &m = dense();
    if (m.size() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double OperatorMatrix::max_imag() const {
    if (is_sparse()) {
        double worst = 0.0;
        const auto &m = sparse();
        for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
            for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
                worst = std::max(worst, std::abs(it.value().imag()));
            }
        }
        return worst;
    }
    if (dense().size() == 0) {
        return 0.0;
    }
    return dense().imag().cwiseAbs().maxCoeff();
}

double OperatorMatrix::max_abs_entry() const {
    if (is_sparse()) {
        double worst = 0.0;
        const auto &m = sparse();
        for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
            for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
                worst = std::max(worst, std::abs(it.value()));
            }
        }
        return worst;
    }
    if (dense().size() == 0) {
        return 0.0;
    }
    return dense().cwiseAbs().maxCoeff();
}

OperatorMatrix operator+(const OperatorMatrix &a, const OperatorMatrix &b) {
    OperatorMatrix out = a;
    out.add_scaled(b, 1.0);
    return out;
}

OperatorMatrix operator-(const OperatorMatrix &a, const OperatorMatrix &b) {
    OperatorMatrix out = a;
    out.add_scaled(b, -1.0);
    return out;
}

}  // namespace adiarot
