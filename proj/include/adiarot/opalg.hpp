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

#ifndef ADIAROT_OPALG_HPP
#define ADIAROT_OPALG_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adiarot/linalg.hpp"

namespace adiarot {

using SiteId = int;

/// Ordered list of sites with their local dimensions. Site 0 in the list is
/// the most significant digit of the composite basis index.
class HilbertLayout {
   public:
    HilbertLayout() = default;
    explicit HilbertLayout(std::vector<std::pair<SiteId, std::size_t>> sites);

    /// n qubits labeled 0..n-1.
    static HilbertLayout qubits(std::size_t n);
    /// One abstract site with `levels` basis states.
    static HilbertLayout levels(std::size_t levels, SiteId id = 0);

    const std::vector<std::pair<SiteId, std::size_t>> &sites() const { return sites_; }
    std::size_t site_count() const { return sites_.size(); }
    std::size_t total_dimension() const { return total_dimension_; }
    bool contains(SiteId id) const { return position_.count(id) != 0; }
    /// Position of the site in layout order.
    std::size_t position(SiteId id) const;
    std::size_t local_dimension(SiteId id) const;
    /// Stride of the site's digit in the composite index.
    std::size_t stride(SiteId id) const;

   private:
    std::vector<std::pair<SiteId, std::size_t>> sites_;
    std::map<SiteId, std::size_t> position_;
    std::vector<std::size_t> strides_;
    std::size_t total_dimension_ = 1;
};

/// A single-site factor.
struct SiteOperator {
    enum class Kind { Identity, X, Y, Z, Projector, Transition };
    Kind kind = Kind::Identity;
    std::size_t level_a = 0;
    std::size_t level_b = 0;

    static SiteOperator identity() { return {Kind::Identity, 0, 0}; }
    static SiteOperator x() { return {Kind::X, 0, 0}; }
    static SiteOperator y() { return {Kind::Y, 0, 0}; }
    static SiteOperator z() { return {Kind::Z, 0, 0}; }
    static SiteOperator projector(std::size_t level) { return {Kind::Projector, level, level}; }
    /// |a><b| + |b><a|.
    static SiteOperator transition(std::size_t a, std::size_t b) { return {Kind::Transition, a, b}; }

    bool is_pauli() const { return kind == Kind::X || kind == Kind::Y || kind == Kind::Z; }
    /// Smallest local dimension this factor can act on.
    std::size_t required_dimension() const;
    std::string str() const;
};

/// coefficient * (tensor product of factors); absent sites act as identity.
struct MultiSiteOperator {
    double coefficient = 1.0;
    std::map<SiteId, SiteOperator> factors;

    MultiSiteOperator() = default;
    MultiSiteOperator(double coefficient, std::map<SiteId, SiteOperator> factors)
        : coefficient(coefficient), factors(std::move(factors)) {}

    /// The identity times `coefficient`.
    static MultiSiteOperator constant(double coefficient) { return {coefficient, {}}; }
    /// coefficient * P_{s1} P_{s2} ... with P the same Pauli on every listed site.
    static MultiSiteOperator pauli_string(double coefficient, SiteOperator pauli, std::span<const SiteId> sites);
    /// Mixed Pauli string, e.g. X on one site and Z on its neighbors.
    static MultiSiteOperator pauli_product(double coefficient, std::vector<std::pair<SiteId, SiteOperator>> factors);

    MultiSiteOperator scaled(double factor) const;
    std::string str() const;
};

/// Sum over terms of coefficient x tensor product, in layout order.
/// Throws ValidationError for unknown sites, factor/dimension mismatch, or a
/// non-Hermitian result.
OperatorMatrix assemble(std::span<const MultiSiteOperator> terms, const HilbertLayout &layout);
OperatorMatrix assemble(const MultiSiteOperator &term, const HilbertLayout &layout);

/// Matrix-vector product; no normalization.
StateVector apply(const OperatorMatrix &op, const StateVector &state);

/// Computational basis state |index>.
StateVector basis_state(std::size_t dimension, std::size_t index);

}  // namespace adiarot

#endif
