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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nandsim {

using Qubit = unsigned;

/// Named registers over global qubit indices.
///
/// Global qubit 0 is the most significant bit of a basis index, and each
/// register lists its qubits most-significant first, so the basis index of a
/// register is the concatenation of its qubits in listed order.
class RegisterLayout {
   public:
    struct Register {
        std::string name;
        std::vector<Qubit> qubits;
    };

    RegisterLayout() = default;
    explicit RegisterLayout(unsigned width) : width_(width) {}

    unsigned width() const { return width_; }
    std::span<const Register> registers() const { return registers_; }

    /// Appends `count` new qubits to the end of the layout (least significant)
    /// and registers them under `name`. Zero-width registers are allowed.
    const Register &allocate(std::string name, unsigned count);

    /// Registers existing qubits under a new name. Throws LayoutError on an
    /// out-of-range or already-claimed qubit, or a duplicate name.
    const Register &add(std::string name, std::vector<Qubit> qubits);

    bool contains(std::string_view name) const;
    const Register &at(std::string_view name) const;

    /// Concatenated qubit lists of `names`; throws LayoutError when they overlap.
    std::vector<Qubit> qubits_of(std::span<const std::string> names) const;

   private:
    unsigned width_ = 0;
    std::vector<Register> registers_;
};

/// Throws LayoutError if any qubit repeats or is >= width.
void require_distinct(std::span<const Qubit> qubits, unsigned width);

}  // namespace nandsim
