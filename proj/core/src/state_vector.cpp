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

#include "nandsim/state_vector.hpp"

#include <cmath>

#include "nandsim/errors.hpp"

namespace nandsim {

namespace {

constexpr unsigned kMaxWidth = 30;

void check_width(unsigned width) {
    if (width > kMaxWidth) {
        throw TooLarge("state width " + std::to_string(width) + " exceeds " + std::to_string(kMaxWidth) + " qubits");
    }
}

}  // namespace

StateVector::StateVector(unsigned width) : layout_(width) {
    check_width(width);
    amplitudes_.assign(std::size_t{1} << width, Complex{});
    amplitudes_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(unsigned width, std::vector<Complex> amplitudes) {
    check_width(width);
    if (amplitudes.size() != (std::size_t{1} << width)) {
        throw InvalidInput("expected 2^" + std::to_string(width) + " amplitudes, got " +
                           std::to_string(amplitudes.size()));
    }
    StateVector s(0);
    s.layout_ = RegisterLayout(width);
    s.amplitudes_ = std::move(amplitudes);
    if (std::abs(s.norm() - 1.0) > kStateTolerance) {
        throw InvalidInput("state is not normalized (norm " + std::to_string(s.norm()) + ")");
    }
    return s;
}

StateVector StateVector::basis(unsigned width, std::uint64_t index) {
    StateVector s(width);
    if (index >= s.amplitudes_.size()) {
        throw InvalidInput("basis index out of range");
    }
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

const RegisterLayout::Register &StateVector::allocate(std::string name, unsigned count, std::uint64_t value) {
    check_width(width() + count);
    if (count < 64 && value >> count != 0) {
        throw InvalidInput("initial value does not fit in " + std::to_string(count) + " qubits");
    }
    std::vector<Complex> grown(amplitudes_.size() << count);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        grown[(i << count) | value] = amplitudes_[i];
    }
    amplitudes_ = std::move(grown);
    return layout_.allocate(std::move(name), count);
}

const RegisterLayout::Register &StateVector::name_register(std::string name, std::vector<Qubit> qubits) {
    return layout_.add(std::move(name), std::move(qubits));
}

std::vector<Qubit> StateVector::qubits(std::initializer_list<std::string> names) const {
    return layout_.qubits_of(std::span<const std::string>(names.begin(), names.size()));
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const Complex &a : amplitudes_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

Distribution measure_qubits(const StateVector &s, std::span<const Qubit> qubits) {
    require_distinct(qubits, s.width());
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    auto amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        double p = std::norm(amps[i]);
        if (p == 0.0) {
            continue;
        }
        std::size_t key = 0;
        for (Qubit q : qubits) {
            key = (key << 1) | ((i & s.mask(q)) != 0 ? 1u : 0u);
        }
        probs[key] += p;
    }
    // Born weights relative to the squared norm, so a state that is normalized
    // only up to rounding still yields probabilities in [0, 1].
    double total = 0.0;
    for (double p : probs) {
        total += p;
    }
    Distribution out;
    for (std::size_t key = 0; key < probs.size(); ++key) {
        if (probs[key] == 0.0) {
            continue;
        }
        probs[key] /= total;
        std::string bits(qubits.size(), '0');
        for (std::size_t k = 0; k < qubits.size(); ++k) {
            bits[k] = static_cast<char>('0' + ((key >> (qubits.size() - 1 - k)) & 1));
        }
        out.emplace(std::move(bits), probs[key]);
    }
    return out;
}

Distribution measure_distribution(const StateVector &s, std::span<const std::string> registers) {
    return measure_qubits(s, s.qubits(registers));
}

Distribution measure_distribution(const StateVector &s, std::initializer_list<std::string> registers) {
    return measure_qubits(s, s.qubits(registers));
}

}  // namespace nandsim
