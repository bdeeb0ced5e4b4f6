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

#include "adiarot/krylov.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "adiarot/errors.hpp"

namespace adiarot {

namespace {

Matrix multiply(const OperatorMatrix &h, const Matrix &block) {
    if (h.is_sparse()) {
        return h.sparse() * block;
    }
    return h.dense() * block;
}

// Orthogonalizes `block` against the columns of `basis` (twice) and then
// within itself. Columns that vanish are dropped.
Matrix orthogonalize(const Matrix &basis, Matrix block) {
    for (int pass = 0; pass < 2; ++pass) {
        if (basis.cols() > 0) {
            block -= basis * (basis.adjoint() * block);
        }
    }
    std::vector<StateVector> kept;
    for (Eigen::Index c = 0; c < block.cols(); ++c) {
        StateVector v = block.col(c);
        double before = v.norm();
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &u : kept) {
                v -= u * u.dot(v);
            }
            if (basis.cols() > 0) {
                v -= basis * (basis.adjoint() * v);
            }
        }
        double after = v.norm();
        if (after > 1e-10 * std::max(1.0, before)) {
            kept.push_back(v / after);
        }
    }
    Matrix out(block.rows(), static_cast<Eigen::Index>(kept.size()));
    for (std::size_t c = 0; c < kept.size(); ++c) {
        out.col(static_cast<Eigen::Index>(c)) = kept[c];
    }
    return out;
}

Matrix random_block(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    Matrix m(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        for (Eigen::Index r = 0; r < rows; ++r) {
            m(r, c) = cplx(gauss(rng), 0.0);
        }
    }
    return m;
}

}  // namespace

Eigenpairs dense_eigenpairs(const Matrix &h) {
    Eigenpairs out;
    if (h.size() == 0) {
        return out;
    }
    if (h.imag().cwiseAbs().maxCoeff() == 0.0) {
        Eigen::SelfAdjointEigenSolver<RealMatrix> solver(h.real());
        if (solver.info() != Eigen::Success) {
            throw NumericalError("dense eigensolver failed");
        }
        out.values = solver.eigenvalues();
        out.vectors = solver.eigenvectors().cast<cplx>();
        return out;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("dense eigensolver failed");
    }
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
    return out;
}

Eigenpairs krylov_lowest(const OperatorMatrix &h, std::size_t k, double residual_tol, std::uint64_t seed) {
    const auto n = static_cast<Eigen::Index>(h.dimension());
    const auto want = static_cast<Eigen::Index>(k);
    if (want < 1 || want > n) {
        throw ValidationError("requested eigenpair count out of range");
    }
    const Eigen::Index block = std::min<Eigen::Index>(n, 4);
    const Eigen::Index max_basis = std::min<Eigen::Index>(n, std::max<Eigen::Index>(3 * want, want + 48));
    const Eigen::Index keep = std::min<Eigen::Index>(max_basis - block, want + block);

    if (max_basis >= n) {
        Eigenpairs full = dense_eigenpairs(h.to_dense());
        return {full.values.head(want), full.vectors.leftCols(want)};
    }

    std::mt19937_64 rng(seed);
    Matrix basis(n, 0);
    Matrix h_basis(n, 0);
    Matrix next = orthogonalize(basis, random_block(n, block, rng));

    for (int iteration = 0; iteration < 5000; ++iteration) {
        if (next.cols() == 0) {
            next = orthogonalize(basis, random_block(n, block, rng));
        }
        if (basis.cols() + next.cols() > max_basis) {
            // Thick restart on the lowest Ritz vectors.
            Matrix projected = basis.adjoint() * h_basis;
            projected = (projected + projected.adjoint()).eval() * 0.5;
            Eigenpairs ritz = dense_eigenpairs(projected);
            Matrix y = ritz.vectors.leftCols(keep);
            basis = (basis * y).eval();
            h_basis = (h_basis * y).eval();
            next = orthogonalize(basis, next);
            if (next.cols() == 0) {
                continue;
            }
        }
        Matrix h_next = multiply(h, next);
        Eigen::Index old = basis.cols();
        basis.conservativeResize(n, old + next.cols());
        basis.rightCols(next.cols()) = next;
        h_basis.conservativeResize(n, old + next.cols());
        h_basis.rightCols(next.cols()) = h_next;

        if (basis.cols() < want) {
            next = orthogonalize(basis, h_next);
            continue;
        }

        Matrix projected = basis.adjoint() * h_basis;
        projected = (projected + projected.adjoint()).eval() * 0.5;
        Eigenpairs ritz = dense_eigenpairs(projected);
        Matrix y = ritz.vectors.leftCols(want);
        Matrix x = basis * y;
        Matrix residual = h_basis * y - x * ritz.values.head(want).cast<cplx>().asDiagonal();

        std::vector<Eigen::Index> open;
        for (Eigen::Index c = 0; c < want; ++c) {
            if (residual.col(c).norm() > residual_tol) {
                open.push_back(c);
            }
        }
        if (open.empty()) {
            return {ritz.values.head(want), x};
        }
        Matrix directions(n, std::min<Eigen::Index>(block, static_cast<Eigen::Index>(open.size())));
        for (Eigen::Index c = 0; c < directions.cols(); ++c) {
            directions.col(c) = residual.col(open[static_cast<std::size_t>(c)]);
        }
        next = orthogonalize(basis, directions);
    }
    throw NumericalError("block Krylov eigensolver did not converge");
}

namespace {

// One Lanczos exponential over dt; returns false when the space would need
// more than max_dim vectors.
bool lanczos_expm(const OperatorMatrix &h, double dt, const StateVector &v, double tol, int max_dim, StateVector &out) {
    const double beta0 = v.norm();
    if (beta0 == 0.0) {
        out = v;
        return true;
    }
    std::vector<StateVector> q{v / beta0};
    std::vector<double> alpha;
    std::vector<double> beta;

    for (int m = 1; m <= max_dim; ++m) {
        StateVector w = h.apply(q.back());
        alpha.push_back(std::real(q.back().dot(w)));
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &u : q) {
                w -= u * u.dot(w);
            }
        }
        double b = w.norm();

        RealMatrix t = RealMatrix::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            t(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < m) {
                t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
            }
        }
        Eigen::SelfAdjointEigenSolver<RealMatrix> solver(t);
        const RealVector &evals = solver.eigenvalues();
        const RealMatrix &evecs = solver.eigenvectors();
        StateVector phases(m);
        for (int i = 0; i < m; ++i) {
            phases(i) = std::exp(cplx(0.0, -evals(i) * dt)) * evecs(0, i);
        }
        StateVector coeffs = evecs.cast<cplx>() * phases;

        bool invariant = b <= 1e-12 * std::max(1.0, std::abs(alpha.back()));
        double estimate = b * std::abs(coeffs(m - 1)) * beta0;
        if (invariant || estimate <= tol || m == static_cast<int>(v.size())) {
            out = StateVector::Zero(v.size());
            for (int i = 0; i < m; ++i) {
                out += coeffs(i) * q[static_cast<std::size_t>(i)];
            }
            out *= beta0;
            return true;
        }
        beta.push_back(b);
        q.push_back(w / b);
    }
    return false;
}

}  // namespace

StateVector krylov_expm(const OperatorMatrix &h, double dt, const StateVector &v, double tol) {
    constexpr int kMaxDim = 48;
    StateVector out;
    if (lanczos_expm(h, dt, v, tol, kMaxDim, out)) {
        return out;
    }
    if (std::abs(dt) < 1e-12) {
        throw NumericalError("Krylov exponential failed to converge");
    }
    StateVector half = krylov_expm(h, dt / 2, v, tol / 2);
    return krylov_expm(h, dt / 2, half, tol / 2);
}

}  // namespace adiarot
