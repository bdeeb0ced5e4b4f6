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

#include "adiarot/opalg.hpp"

#include <sstream>

#include "adiarot/errors.hpp"

namespace adiarot {

namespace {

constexpr double kHermitianTolerance = 1e-12;

// Image of a local level under a single-site factor: at most two (level, amplitude) pairs.
struct LocalImage {
    std::size_t count = 0;
    std::size_t level[2] = {0, 0};
    cplx amplitude[2] = {0.0, 0.0};

    void push(std::size_t l, cplx a) {
        level[count] = l;
        amplitude[count] = a;
        ++count;
    }
};

LocalImage act(const SiteOperator &op, std::size_t l) {
    LocalImage out;
    switch (op.kind) {
        case SiteOperator::Kind::Identity:
            out.push(l, 1.0);
            break;
        case SiteOperator::Kind::X:
            out.push(1 - l, 1.0);
            break;
        case SiteOperator::Kind::Y:
            out.push(1 - l, l == 0 ? cplx(0.0, 1.0) : cplx(0.0, -1.0));
            break;
        case SiteOperator::Kind::Z:
            out.push(l, l == 0 ? 1.0 : -1.0);
            break;
        case SiteOperator::Kind::Projector:
            if (l == op.level_a) {
                out.push(l, 1.0);
            }
            break;
        case SiteOperator::Kind::Transition:
            if (l == op.level_b) {
                out.push(op.level_a, 1.0);
            } else if (l == op.level_a) {
                out.push(op.level_b, 1.0);
            }
            break;
    }
    return out;
}

}  // namespace

HilbertLayout::HilbertLayout(std::vector<std::pair<SiteId, std::size_t>> sites) : sites_(std::move(sites)) {
    strides_.assign(sites_.size(), 1);
    total_dimension_ = 1;
    for (std::size_t k = sites_.size(); k-- > 0;) {
        const auto &[id, dim] = sites_[k];
        if (dim == 0) {
            throw ValidationError("site " + std::to_string(id) + " has zero local dimension");
        }
        if (!position_.emplace(id, k).second) {
            throw ValidationError("duplicate site id " + std::to_string(id));
        }
        strides_[k] = total_dimension_;
        total_dimension_ *= dim;
    }
}

HilbertLayout HilbertLayout::qubits(std::size_t n) {
    std::vector<std::pair<SiteId, std::size_t>> sites;
    for (std::size_t k = 0; k < n; ++k) {
        sites.emplace_back(static_cast<SiteId>(k), 2);
    }
    return HilbertLayout(std::move(sites));
}

HilbertLayout HilbertLayout::levels(std::size_t levels, SiteId id) {
    return HilbertLayout({{id, levels}});
}

std::size_t HilbertLayout::position(SiteId id) const {
    auto it = position_.find(id);
    if (it == position_.end()) {
        throw ValidationError("unknown site id " + std::to_string(id));
    }
    return it->second;
}

std::size_t HilbertLayout::local_dimension(SiteId id) const {
    return sites_[position(id)].second;
}

std::size_t HilbertLayout::stride(SiteId id) const {
    return strides_[position(id)];
}

std::size_t SiteOperator::required_dimension() const {
    switch (kind) {
        case Kind::Identity:
            return 1;
        case Kind::X:
        case Kind::Y:
        case Kind::Z:
            return 2;
        case Kind::Projector:
            return level_a + 1;
        case Kind::Transition:
            return std::max(level_a, level_b) + 1;
    }
    return 1;
}

std::string SiteOperator::str() const {
    switch (kind) {
        case Kind::Identity:
            return "I";
        case Kind::X:
            return "X";
        case Kind::Y:
            return "Y";
        case Kind::Z:
            return "Z";
        case Kind::Projector:
            return "P" + std::to_string(level_a);
        case Kind::Transition:
            return "T" + std::to_string(level_a) + std::to_string(level_b);
    }
    return "?";
}

MultiSiteOperator MultiSiteOperator::pauli_string(double coefficient, SiteOperator pauli, std::span<const SiteId> sites) {
    MultiSiteOperator out(coefficient, {});
    for (SiteId s : sites) {
        out.factors[s] = pauli;
    }
    return out;
}

MultiSiteOperator MultiSiteOperator::pauli_product(double coefficient,
                                                   std::vector<std::pair<SiteId, SiteOperator>> factors) {
    MultiSiteOperator out(coefficient, {});
    for (auto &[s, op] : factors) {
        if (!out.factors.emplace(s, op).second) {
            throw ValidationError("site " + std::to_string(s) + " listed twice in a product");
        }
    }
    return out;
}

MultiSiteOperator MultiSiteOperator::scaled(double factor) const {
    return {coefficient * factor, factors};
}

std::string MultiSiteOperator::str() const {
    std::ostringstream out;
    out << coefficient;
    for (const auto &[site, op] : factors) {
        out << " " << op.str() << site;
    }
    return out.str();
}

OperatorMatrix assemble(std::span<const MultiSiteOperator> terms, const HilbertLayout &layout) {
    const std::size_t dim = layout.total_dimension();
    std::vector<Eigen::Triplet<cplx>> triplets;

    for (const auto &term : terms) {
        if (term.coefficient == 0.0) {
            continue;
        }
        // Resolve factors against the layout once per term.
        struct Resolved {
            SiteOperator op;
            std::size_t stride;
            std::size_t dim;
        };
        std::vector<Resolved> resolved;
        for (const auto &[site, op] : term.factors) {
            if (!layout.contains(site)) {
                throw ValidationError("term '" + term.str() + "' references unknown site " + std::to_string(site));
            }
            std::size_t local = layout.local_dimension(site);
            bool pauli_ok = !op.is_pauli() || local == 2;
            if (!pauli_ok || op.required_dimension() > local) {
                throw ValidationError("factor " + op.str() + " does not fit site " + std::to_string(site) +
                                      " of dimension " + std::to_string(local));
            }
            if (op.kind == SiteOperator::Kind::Transition && op.level_a == op.level_b) {
                throw ValidationError("transition factor needs two distinct levels");
            }
            if (op.kind != SiteOperator::Kind::Identity) {
                resolved.push_back({op, layout.stride(site), local});
            }
        }

        for (std::size_t col = 0; col < dim; ++col) {
            // Expand the product of local images into (row, amplitude) pairs.
            std::vector<std::pair<std::size_t, cplx>> images{{col, cplx(term.coefficient)}};
            for (const auto &f : resolved) {
                std::size_t level = (col / f.stride) % f.dim;
                LocalImage img = act(f.op, level);
                std::vector<std::pair<std::size_t, cplx>> next;
                next.reserve(images.size() * img.count);
                for (const auto &[row, amp] : images) {
                    std::size_t base = row - level * f.stride;
                    for (std::size_t k = 0; k < img.count; ++k) {
                        next.emplace_back(base + img.level[k] * f.stride, amp * img.amplitude[k]);
                    }
                }
                images = std::move(next);
                if (images.empty()) {
                    break;
                }
            }
            for (const auto &[row, amp] : images) {
                triplets.emplace_back(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col), amp);
            }
        }
    }

    auto n = static_cast<Eigen::Index>(dim);
    SparseMatrix sparse(n, n);
    sparse.setFromTriplets(triplets.begin(), triplets.end());
    sparse.prune(cplx(0.0), 0.0);
    OperatorMatrix out = OperatorMatrix::from_sparse(std::move(sparse));
    double defect = out.hermiticity_defect();
    if (defect > kHermitianTolerance) {
        throw ValidationError("assembled operator is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    return out;
}

OperatorMatrix assemble(const MultiSiteOperator &term, const HilbertLayout &layout) {
    return assemble(std::span<const MultiSiteOperator>(&term, 1), layout);
}

StateVector apply(const OperatorMatrix &op, const StateVector &state) {
    return op.apply(state);
}

StateVector basis_state(std::size_t dimension, std::size_t index) {
    if (index >= dimension) {
        throw ValidationError("basis index out of range");
    }
    StateVector v = StateVector::Zero(static_cast<Eigen::Index>(dimension));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return v;
}

}  // namespace adiarot
