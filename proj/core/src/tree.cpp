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

#include "nandsim/tree.hpp"

#include <algorithm>
#include <random>

#include "nandsim/errors.hpp"

namespace nandsim {

namespace {

constexpr unsigned kMaxIndexDepth = 6;

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

struct ShortCircuit {
    std::span<const Bit> leaves;
    std::mt19937_64 rng;
    std::size_t probes = 0;

    Bit eval(std::size_t first, std::size_t count) {
        if (count == 1) {
            ++probes;
            return leaves[first];
        }
        std::size_t half = count / 2;
        std::size_t left = first;
        std::size_t right = first + half;
        if ((rng() >> 63) != 0) {
            std::swap(left, right);
        }
        if (eval(left, half) == 0) {
            return 1;
        }
        return nand(1, eval(right, half));
    }
};

struct Expectation {
    Bit value;
    double probes;
};

Expectation expect(std::span<const Bit> leaves) {
    if (leaves.size() == 1) {
        return {leaves[0], 1.0};
    }
    std::size_t half = leaves.size() / 2;
    Expectation l = expect(leaves.first(half));
    Expectation r = expect(leaves.subspan(half));
    double left_first = l.probes + (l.value == 0 ? 0.0 : r.probes);
    double right_first = r.probes + (r.value == 0 ? 0.0 : l.probes);
    return {nand(l.value, r.value), 0.5 * (left_first + right_first)};
}

}  // namespace

LeafAssignment::LeafAssignment(unsigned depth, std::vector<Bit> leaves) : depth_(depth), leaves_(std::move(leaves)) {
    if (depth >= 8 * sizeof(std::size_t) || leaves_.size() != (std::size_t{1} << depth)) {
        throw InvalidInput("leaf count " + std::to_string(leaves_.size()) + " does not equal 2^" +
                           std::to_string(depth));
    }
    for (Bit b : leaves_) {
        if (b > 1) {
            throw InvalidInput("leaf values must be 0 or 1");
        }
    }
}

LeafAssignment LeafAssignment::from_index(unsigned depth, std::uint64_t value) {
    if (depth > kMaxIndexDepth) {
        throw TooLarge("integer leaf index requires depth <= 6");
    }
    std::size_t n = std::size_t{1} << depth;
    if (n < 64 && value >> n != 0) {
        throw InvalidInput("index " + std::to_string(value) + " out of range for depth " + std::to_string(depth));
    }
    std::vector<Bit> leaves(n);
    for (std::size_t j = 0; j < n; ++j) {
        leaves[j] = static_cast<Bit>((value >> (n - 1 - j)) & 1);
    }
    return LeafAssignment(depth, std::move(leaves));
}

LeafAssignment LeafAssignment::parse(unsigned depth, std::string_view text) {
    if (depth >= 30) {
        throw TooLarge("depth " + std::to_string(depth) + " is too large to parse");
    }
    std::size_t n = std::size_t{1} << depth;
    std::size_t hex_digits = (n + 3) / 4;

    bool all_binary = !text.empty();
    for (char c : text) {
        all_binary = all_binary && (c == '0' || c == '1');
    }
    if (text.size() == n && all_binary) {
        std::vector<Bit> leaves(n);
        for (std::size_t j = 0; j < n; ++j) {
            leaves[j] = static_cast<Bit>(text[j] - '0');
        }
        return LeafAssignment(depth, std::move(leaves));
    }
    if (text.size() != hex_digits) {
        throw InvalidInput("assignment '" + std::string(text) + "' is neither " + std::to_string(n) +
                           " bits nor " + std::to_string(hex_digits) + " hex digits");
    }
    // Hex digits hold the leaf bitstring right-aligned; the top pad bits must be zero.
    std::size_t pad = 4 * hex_digits - n;
    std::vector<Bit> leaves(n);
    for (std::size_t d = 0; d < hex_digits; ++d) {
        int v = hex_value(text[d]);
        if (v < 0) {
            throw InvalidInput("bad hex digit '" + std::string(1, text[d]) + "' in assignment");
        }
        for (int b = 3; b >= 0; --b) {
            std::size_t pos = 4 * d + static_cast<std::size_t>(3 - b);
            Bit bit = static_cast<Bit>((v >> b) & 1);
            if (pos < pad) {
                if (bit != 0) {
                    throw InvalidInput("hex assignment '" + std::string(text) + "' exceeds 2^" +
                                       std::to_string(n) + " - 1");
                }
                continue;
            }
            leaves[pos - pad] = bit;
        }
    }
    return LeafAssignment(depth, std::move(leaves));
}

std::uint64_t LeafAssignment::index() const {
    if (depth_ > kMaxIndexDepth) {
        throw TooLarge("integer leaf index requires depth <= 6");
    }
    std::uint64_t v = 0;
    for (Bit b : leaves_) {
        v = (v << 1) | b;
    }
    return v;
}

std::string LeafAssignment::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::size_t n = leaves_.size();
    std::size_t hex_digits = (n + 3) / 4;
    std::size_t pad = 4 * hex_digits - n;
    std::string out(hex_digits, '0');
    for (std::size_t d = 0; d < hex_digits; ++d) {
        int v = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            std::size_t pos = 4 * d + k;
            v <<= 1;
            if (pos >= pad) {
                v |= leaves_[pos - pad];
            }
        }
        out[d] = kDigits[v];
    }
    return out;
}

std::string LeafAssignment::to_bits() const {
    std::string out(leaves_.size(), '0');
    for (std::size_t j = 0; j < leaves_.size(); ++j) {
        out[j] = static_cast<char>('0' + leaves_[j]);
    }
    return out;
}

std::vector<Bit> nand_layer(std::span<const Bit> values) {
    if (values.empty() || values.size() % 2 != 0) {
        throw InvalidInput("nand_layer needs a nonempty even-length input, got " + std::to_string(values.size()));
    }
    std::vector<Bit> out(values.size() / 2);
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = nand(values[2 * j], values[2 * j + 1]);
    }
    return out;
}

Bit eval_root(const LeafAssignment &a) {
    std::vector<Bit> level(a.leaves().begin(), a.leaves().end());
    while (level.size() > 1) {
        level = nand_layer(level);
    }
    return level[0];
}

ProbeStats randomized_eval(const LeafAssignment &a, std::uint64_t seed) {
    ShortCircuit sc{a.leaves(), std::mt19937_64(seed)};
    Bit result = sc.eval(0, a.size());
    return {sc.probes, result};
}

double expected_probes(const LeafAssignment &a) { return expect(a.leaves()).probes; }

void for_each_assignment(unsigned depth, const std::function<void(const LeafAssignment &)> &fn, unsigned limit) {
    if (depth > limit || depth > 4) {
        throw TooLarge("exhaustive enumeration of depth " + std::to_string(depth) + " exceeds limit " +
                       std::to_string(std::min(limit, 4u)));
    }
    std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << depth);
    for (std::uint64_t v = 0; v < count; ++v) {
        fn(LeafAssignment::from_index(depth, v));
    }
}

std::vector<LeafAssignment> enumerate_assignments(unsigned depth, unsigned limit) {
    std::vector<LeafAssignment> out;
    for_each_assignment(depth, [&](const LeafAssignment &a) { out.push_back(a); }, limit);
    return out;
}

}  // namespace nandsim
