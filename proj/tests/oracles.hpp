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


// Brute-force reference implementations used by the tests. Nothing here
// goes through the operator assembler or the model builders.

#ifndef ADIAROT_TESTS_ORACLES_HPP
#define ADIAROT_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli(char p) {
    Mat m(2, 2);
    switch (p) {
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: m = Mat::Identity(2, 2);
    }
    return m;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// coefficient * P_{q0} (x) ... over n qubits, qubit 0 leftmost.
inline Mat pauli_string(int n, const std::map<int, char> &ops, double coefficient = 1.0) {
    Mat out = Mat::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
        auto it = ops.find(q);
        out = kron(out, pauli(it == ops.end() ? 'I' : it->second));
    }
    return coefficient * out;
}

inline Vec basis(std::size_t dim, std::size_t idx) {
    Vec v = Vec::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(idx)) = 1.0;
    return v;
}

inline Eigen::VectorXd eigenvalues(const Mat &h) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    return es.eigenvalues();
}

/// Nearest-neighbor hopping chain (1/2) sum (|t>-|t+1>)(<t|-<t+1|).
inline Eigen::MatrixXd hopping_chain(std::size_t steps) {
    auto d = static_cast<Eigen::Index>(steps + 1);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index t = 0; t + 1 < d; ++t) {
        h(t, t) += 0.5;
        h(t + 1, t + 1) += 0.5;
        h(t, t + 1) -= 0.5;
        h(t + 1, t) -= 0.5;
    }
    return h;
}

/// Uniform superposition over every XOR combination of the generator masks
/// applied to `start`, enumerated over all subsets.
inline Vec subset_closure_state(int n, const std::vector<std::uint64_t> &generators, std::uint64_t start) {
    std::set<std::uint64_t> orbit;
    const std::uint64_t subsets = std::uint64_t{1} << generators.size();
    for (std::uint64_t s = 0; s < subsets; ++s) {
        std::uint64_t x = start;
        for (std::size_t g = 0; g < generators.size(); ++g)
            if ((s >> g) & 1U) x ^= generators[g];
        orbit.insert(x);
    }
    Vec v = Vec::Zero(Eigen::Index{1} << n);
    for (auto x : orbit) v(static_cast<Eigen::Index>(x)) = 1.0 / std::sqrt(static_cast<double>(orbit.size()));
    return v;
}

/// Rank over the two-element field.
inline int gf2_rank(std::vector<std::uint64_t> rows) {
    int rank = 0;
    for (int bit = 63; bit >= 0; --bit) {
        auto pivot = std::find_if(rows.begin(), rows.end(), [&](std::uint64_t r) { return (r >> bit) & 1U; });
        if (pivot == rows.end()) continue;
        std::uint64_t p = *pivot;
        rows.erase(pivot);
        for (auto &r : rows)
            if ((r >> bit) & 1U) r ^= p;
        ++rank;
    }
    return rank;
}

/// |+>^n followed by a CZ on every edge.
inline Vec cz_circuit_state(int n, const std::vector<std::pair<int, int>> &edges) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Vec v = Vec::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    for (auto [a, b] : edges) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            bool ba = (i >> (n - 1 - a)) & 1;
            bool bb = (i >> (n - 1 - b)) & 1;
            if (ba && bb) v(i) = -v(i);
        }
    }
    return v;
}

inline double fidelity(const Vec &a, const Vec &b) {
    return std::norm(a.dot(b));
}

/// exp(-i h t) v by full diagonalization.
inline Vec evolve_exact(const Mat &h, double t, const Vec &v) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    Vec c = es.eigenvectors().adjoint() * v;
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) *= std::exp(cplx(0, -es.eigenvalues()(i) * t));
    return es.eigenvectors() * c;
}

}  // namespace oracle

#endif
