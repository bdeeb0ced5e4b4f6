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

#ifndef ADIAROT_KRYLOV_HPP
#define ADIAROT_KRYLOV_HPP

#include <cstddef>
#include <cstdint>

#include "adiarot/linalg.hpp"

namespace adiarot {

/// Eigenvalues ascending, eigenvectors as columns.
struct Eigenpairs {
    RealVector values;
    Matrix vectors;
};

/// Full diagonalization; uses the real symmetric solver when the operator
/// has no imaginary part.
Eigenpairs dense_eigenpairs(const Matrix &h);

/// k lowest eigenpairs of a Hermitian operator by thick-restarted block
/// Krylov iteration with full reorthogonalization. The block width covers
/// degenerate levels up to that multiplicity.
Eigenpairs krylov_lowest(const OperatorMatrix &h, std::size_t k, double residual_tol = 1e-10,
                         std::uint64_t seed = 0x5eed);

/// exp(-i h dt) v by Lanczos on the Krylov space of v, growing the space
/// until the a-posteriori error estimate drops below `tol`.
StateVector krylov_expm(const OperatorMatrix &h, double dt, const StateVector &v, double tol = 1e-13);

}  // namespace adiarot

#endif
