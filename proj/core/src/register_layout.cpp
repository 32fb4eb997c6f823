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

#include "nandsim/register_layout.hpp"

#include <algorithm>

#include "nandsim/errors.hpp"

namespace nandsim {

void require_distinct(std::span<const Qubit> qubits, unsigned width) {
    std::vector<Qubit> sorted(qubits.begin(), qubits.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw LayoutError("overlapping qubit targets");
    }
    if (!sorted.empty() && sorted.back() >= width) {
        throw LayoutError("qubit " + std::to_string(sorted.back()) + " out of range for width " +
                          std::to_string(width));
    }
}

const RegisterLayout::Register &RegisterLayout::allocate(std::string name, unsigned count) {
    std::vector<Qubit> qubits(count);
    for (unsigned k = 0; k < count; ++k) {
        qubits[k] = width_ + k;
    }
    width_ += count;
    return add(std::move(name), std::move(qubits));
}

const RegisterLayout::Register &RegisterLayout::add(std::string name, std::vector<Qubit> qubits) {
    if (contains(name)) {
        throw LayoutError("duplicate register name '" + name + "'");
    }
    std::vector<Qubit> all = qubits;
    for (const Register &r : registers_) {
        all.insert(all.end(), r.qubits.begin(), r.qubits.end());
    }
    require_distinct(all, width_);
    registers_.push_back({std::move(name), std::move(qubits)});
    return registers_.back();
}

bool RegisterLayout::contains(std::string_view name) const {
    return std::any_of(registers_.begin(), registers_.end(), [&](const Register &r) { return r.name == name; });
}

const RegisterLayout::Register &RegisterLayout::at(std::string_view name) const {
    for (const Register &r : registers_) {
        if (r.name == name) {
            return r;
        }
    }
    throw LayoutError("unknown register '" + std::string(name) + "'");
}

std::vector<Qubit> RegisterLayout::qubits_of(std::span<const std::string> names) const {
    std::vector<Qubit> out;
    for (const std::string &n : names) {
        const Register &r = at(n);
        out.insert(out.end(), r.qubits.begin(), r.qubits.end());
    }
    require_distinct(out, width_);
    return out;
}

}  // namespace nandsim
