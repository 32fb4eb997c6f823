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

#include <map>
#include <span>
#include <string>
#include <vector>

namespace nandsim {

/// Register name -> bitstring (most significant first). Zero-width registers map to "".
using Label = std::map<std::string, std::string>;

/// A computational-basis-diagonal mixed state: distinct labels with positive
/// probabilities summing to 1. Entries are kept sorted by label, so equality
/// is independent of construction order.
class ClassicalState {
   public:
    struct Entry {
        double probability;
        Label label;
        bool operator==(const Entry &) const = default;
    };

    ClassicalState() = default;

    /// Throws InvalidInput on a nonpositive probability, a total away from 1
    /// by more than 1e-12, duplicate labels, or labels over differing registers.
    explicit ClassicalState(std::vector<Entry> support);

    /// Equal weight 1/labels.size() on each label.
    static ClassicalState uniform(std::vector<Label> labels);

    std::span<const Entry> support() const { return support_; }
    std::vector<std::string> registers() const;

    bool operator==(const ClassicalState &) const = default;
    bool approx_equal(const ClassicalState &other, double tol) const;

   private:
    std::vector<Entry> support_;
};

}  // namespace nandsim
