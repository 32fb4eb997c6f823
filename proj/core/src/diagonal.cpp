// Copyright 2026 The nandsim Authors
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

#include "nandsim/diagonal.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "nandsim/errors.hpp"

namespace nandsim {

Complex unit_root(long long num, long long den) {
    if (den <= 0) {
        throw InvalidInput("unit_root denominator must be positive");
    }
    long long m = ((num % den) + den) % den;
    if ((4 * m) % den == 0) {
        switch ((4 * m) / den) {
            case 0:
                return {1.0, 0.0};
            case 1:
                return {0.0, 1.0};
            case 2:
                return {-1.0, 0.0};
            default:
                return {0.0, -1.0};
        }
    }
    double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(den);
    return {std::cos(theta), std::sin(theta)};
}

DiagonalUnitary::DiagonalUnitary(std::vector<double> phases) : phases_(std::move(phases)) {
    entries_.reserve(phases_.size());
    for (double p : phases_) {
        if (p == 0.0) {
            entries_.push_back(unit_root(0, 2));
        } else if (p == 0.5) {
            entries_.push_back(unit_root(1, 2));
        } else {
            throw InvalidInput("oracle phases must be 0 or 1/2, got " + std::to_string(p));
        }
    }
}

DiagonalUnitary::DiagonalUnitary(std::vector<double> phases, std::vector<Complex> entries)
    : phases_(std::move(phases)), entries_(std::move(entries)) {
    if (phases_.size() != entries_.size()) {
        throw InvalidInput("phase and entry counts differ");
    }
    for (const Complex &e : entries_) {
        if (std::abs(std::abs(e) - 1.0) > 1e-12) {
            throw InvalidInput("diagonal entries must have unit modulus");
        }
    }
}

unsigned DiagonalUnitary::width() const {
    if (!std::has_single_bit(phases_.size())) {
        throw LayoutError("diagonal size " + std::to_string(phases_.size()) + " is not a power of two");
    }
    return static_cast<unsigned>(std::countr_zero(phases_.size()));
}

DiagonalHamiltonian::DiagonalHamiltonian(std::vector<double> diagonal) : diagonal_(std::move(diagonal)) {
    for (double d : diagonal_) {
        if (!std::isfinite(d)) {
            throw InvalidInput("hamiltonian diagonal must be finite");
        }
    }
}

DiagonalHamiltonian DiagonalHamiltonian::from_assignment(const LeafAssignment &a) {
    std::vector<double> diag(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        diag[j] = 2.0 * std::numbers::pi * (a[j] / 2.0);
    }
    return DiagonalHamiltonian(std::move(diag));
}

DiagonalUnitary build_diagonal_unitary(std::span<const Bit> bits) {
    std::vector<double> phases(bits.size());
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] > 1) {
            throw InvalidInput("oracle bits must be 0 or 1");
        }
        phases[j] = bits[j] / 2.0;
    }
    return DiagonalUnitary(std::move(phases));
}

DiagonalUnitary build_diagonal_unitary(const LeafAssignment &a) { return build_diagonal_unitary(a.leaves()); }

DiagonalUnitary exp_hamiltonian(const DiagonalHamiltonian &h, double t) {
    if (!std::isfinite(t)) {
        throw InvalidInput("evolution time must be finite");
    }
    std::vector<double> phases(h.size());
    std::vector<Complex> entries(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) {
        double angle = h.diagonal()[j] * t;
        entries[j] = std::exp(Complex(0.0, angle));
        phases[j] = angle / (2.0 * std::numbers::pi);
    }
    return DiagonalUnitary(std::move(phases), std::move(entries));
}

}  // namespace nandsim
