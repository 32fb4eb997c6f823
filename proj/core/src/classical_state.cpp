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

#include "nandsim/classical_state.hpp"

#include <algorithm>
#include <cmath>

#include "nandsim/errors.hpp"

namespace nandsim {

ClassicalState::ClassicalState(std::vector<Entry> support) : support_(std::move(support)) {
    if (support_.empty()) {
        throw InvalidInput("classical state needs at least one label");
    }
    double total = 0.0;
    for (const Entry &e : support_) {
        if (!(e.probability > 0.0)) {
            throw InvalidInput("classical state probabilities must be strictly positive");
        }
        total += e.probability;
        if (e.label.size() != support_.front().label.size() ||
            !std::equal(e.label.begin(), e.label.end(), support_.front().label.begin(),
                        [](const auto &a, const auto &b) { return a.first == b.first; })) {
            throw InvalidInput("classical state labels cover different registers");
        }
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw InvalidInput("classical state probabilities sum to " + std::to_string(total));
    }
    std::sort(support_.begin(), support_.end(), [](const Entry &a, const Entry &b) { return a.label < b.label; });
    auto dup = std::adjacent_find(support_.begin(), support_.end(),
                                  [](const Entry &a, const Entry &b) { return a.label == b.label; });
    if (dup != support_.end()) {
        throw InvalidInput("classical state labels must be distinct");
    }
}

ClassicalState ClassicalState::uniform(std::vector<Label> labels) {
    std::vector<Entry> support;
    double p = 1.0 / static_cast<double>(labels.size());
    for (Label &l : labels) {
        support.push_back({p, std::move(l)});
    }
    return ClassicalState(std::move(support));
}

std::vector<std::string> ClassicalState::registers() const {
    std::vector<std::string> out;
    if (!support_.empty()) {
        for (const auto &[name, bits] : support_.front().label) {
            out.push_back(name);
        }
    }
    return out;
}

bool ClassicalState::approx_equal(const ClassicalState &other, double tol) const {
    if (support_.size() != other.support_.size()) {
        return false;
    }
    for (std::size_t k = 0; k < support_.size(); ++k) {
        if (support_[k].label != other.support_[k].label ||
            std::abs(support_[k].probability - other.support_[k].probability) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace nandsim
