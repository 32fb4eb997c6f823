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
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nandsim {

using Bit = std::uint8_t;

/// Leaf values of a complete binary NAND tree of a given depth.
///
/// Leaf j is the computational basis state |j> of an n-qubit index register
/// read most-significant-qubit first. Leaves with an even index (last bit 0)
/// are the left children of their parent; odd indices are the right children.
class LeafAssignment {
   public:
    LeafAssignment() = default;

    /// Throws InvalidInput unless leaves.size() == 2^depth and every entry is 0 or 1.
    LeafAssignment(unsigned depth, std::vector<Bit> leaves);

    /// Builds the assignment whose leaf bitstring, read with leaf 0 as the most
    /// significant bit, equals `value`. Requires depth <= 6.
    static LeafAssignment from_index(unsigned depth, std::uint64_t value);

    /// Accepts either an explicit 0/1 string of 2^depth characters or a hex
    /// string of ceil(2^depth / 4) digits.
    static LeafAssignment parse(unsigned depth, std::string_view text);

    unsigned depth() const { return depth_; }
    std::size_t size() const { return leaves_.size(); }
    std::span<const Bit> leaves() const { return leaves_; }
    Bit operator[](std::size_t j) const { return leaves_[j]; }

    /// Leaf bitstring as an integer, leaf 0 most significant. Requires depth <= 6.
    std::uint64_t index() const;

    /// ceil(2^depth / 4) lowercase hex digits; the leaf bitstring right-aligned.
    std::string to_hex() const;
    std::string to_bits() const;

    bool operator==(const LeafAssignment &) const = default;

   private:
    unsigned depth_ = 0;
    std::vector<Bit> leaves_{0};
};

struct ProbeStats {
    std::size_t probes = 0;
    Bit result = 0;
};

inline constexpr unsigned kExhaustiveDepthLimit = 3;

inline Bit nand(Bit a, Bit b) { return static_cast<Bit>(!(a && b)); }

/// One bottom-up level: output[j] = NAND(input[2j], input[2j+1]).
std::vector<Bit> nand_layer(std::span<const Bit> values);

/// Exact root value, reading every leaf.
Bit eval_root(const LeafAssignment &a);

/// Short-circuit evaluation with a uniformly random child order at every
/// internal node. The second child is skipped whenever the first one is 0.
ProbeStats randomized_eval(const LeafAssignment &a, std::uint64_t seed);

/// Exact expectation of `randomized_eval(a, seed).probes` over the child-order
/// coin flips, computed by recursion on subtree expectations.
double expected_probes(const LeafAssignment &a);

/// All 2^(2^n) assignments of depth n in ascending index order.
std::vector<LeafAssignment> enumerate_assignments(unsigned depth, unsigned limit = kExhaustiveDepthLimit);

/// Streaming form of enumerate_assignments.
void for_each_assignment(unsigned depth, const std::function<void(const LeafAssignment &)> &fn,
                         unsigned limit = kExhaustiveDepthLimit);

}  // namespace nandsim
