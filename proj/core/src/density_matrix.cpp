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

#include "nandsim/density_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "nandsim/errors.hpp"
#include "nandsim/json_writer.hpp"

namespace nandsim {

namespace {

constexpr Eigen::Index kPositivityCheckLimit = 256;

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
        throw InvalidInput("density matrix must be square and nonempty");
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kStateTolerance) {
        throw InvalidInput("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - Complex(1.0)) > kStateTolerance) {
        throw InvalidInput("density matrix trace is not 1");
    }
    if (m_.rows() <= kPositivityCheckLimit) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -kStateTolerance) {
            throw InvalidInput("density matrix has a negative eigenvalue");
        }
    }
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> amplitudes) {
    Eigen::Map<const Eigen::VectorXcd> v(amplitudes.data(), static_cast<Eigen::Index>(amplitudes.size()));
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix reduced_density(const StateVector &s, std::span<const Qubit> qubits, unsigned limit) {
    require_distinct(qubits, s.width());
    if (qubits.size() > limit) {
        throw TooLarge("reduction onto " + std::to_string(qubits.size()) + " qubits exceeds limit " +
                       std::to_string(limit));
    }
    const std::size_t dim = std::size_t{1} << qubits.size();
    std::vector<std::uint64_t> offsets(dim, 0);
    std::uint64_t kept = 0;
    for (std::size_t v = 0; v < dim; ++v) {
        for (std::size_t k = 0; k < qubits.size(); ++k) {
            if ((v >> (qubits.size() - 1 - k)) & 1) {
                offsets[v] |= s.mask(qubits[k]);
            }
        }
    }
    for (Qubit q : qubits) {
        kept |= s.mask(q);
    }

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    Eigen::VectorXcd slice(static_cast<Eigen::Index>(dim));
    auto amps = s.amplitudes();
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if ((base & kept) != 0) {
            continue;
        }
        bool any = false;
        for (std::size_t v = 0; v < dim; ++v) {
            slice(static_cast<Eigen::Index>(v)) = amps[base | offsets[v]];
            any = any || amps[base | offsets[v]] != Complex{};
        }
        if (any) {
            rho.noalias() += slice * slice.adjoint();
        }
    }
    rho /= rho.trace().real();
    return DensityMatrix(std::move(rho));
}

DensityMatrix reduced_density(const StateVector &s, std::span<const std::string> registers, unsigned limit) {
    return reduced_density(s, s.qubits(registers), limit);
}

DensityMatrix classical_to_density(const ClassicalState &c, std::span<const std::string> registers) {
    std::vector<std::size_t> widths(registers.size(), 0);
    bool first = true;
    for (const auto &e : c.support()) {
        for (std::size_t r = 0; r < registers.size(); ++r) {
            auto it = e.label.find(registers[r]);
            if (it == e.label.end()) {
                throw LayoutError("label has no register '" + registers[r] + "'");
            }
            if (first) {
                widths[r] = it->second.size();
            } else if (widths[r] != it->second.size()) {
                throw LayoutError("register '" + registers[r] + "' has inconsistent label widths");
            }
        }
        first = false;
    }
    std::size_t total = 0;
    for (std::size_t w : widths) {
        total += w;
    }
    if (total > 24) {
        throw TooLarge("classical state over " + std::to_string(total) + " qubits is too wide to densify");
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << total);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &e : c.support()) {
        Eigen::Index idx = 0;
        for (const std::string &name : registers) {
            for (char bit : e.label.at(name)) {
                if (bit != '0' && bit != '1') {
                    throw InvalidInput("label bits must be '0' or '1'");
                }
                idx = (idx << 1) | (bit - '0');
            }
        }
        m(idx, idx) += e.probability;
    }
    return DensityMatrix(std::move(m));
}

double trace_distance(const DensityMatrix &p, const DensityMatrix &q) {
    if (p.dimension() != q.dimension()) {
        throw InvalidInput("trace distance between dimensions " + std::to_string(p.dimension()) + " and " +
                           std::to_string(q.dimension()));
    }
    Eigen::MatrixXcd diff = p.matrix() - q.matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double coherence_mass(const DensityMatrix &p) {
    double sum = 0.0;
    for (Eigen::Index r = 0; r < p.dimension(); ++r) {
        for (Eigen::Index c = 0; c < p.dimension(); ++c) {
            if (r != c) {
                sum += std::abs(p(r, c));
            }
        }
    }
    return sum;
}

std::string to_json(const DensityMatrix &p) {
    JsonWriter w;
    w.begin_object().field("dimension", static_cast<std::int64_t>(p.dimension())).key("entries").begin_array();
    for (Eigen::Index r = 0; r < p.dimension(); ++r) {
        for (Eigen::Index c = 0; c < p.dimension(); ++c) {
            w.begin_array().value(p(r, c).real()).value(p(r, c).imag()).end_array();
        }
    }
    w.end_array().end_object();
    return w.str();
}

std::string to_json(const Distribution &d) {
    JsonWriter w;
    w.begin_object();
    for (const auto &[bits, prob] : d) {
        w.field(bits, prob);
    }
    w.end_object();
    return w.str();
}

}  // namespace nandsim
