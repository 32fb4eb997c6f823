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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nandsim {

/// Round-trip-exact decimal: 17 significant digits ("%.17g"); non-finite values render as "null".
std::string format_double(double v);

/// Minimal compact JSON emitter. Keys come out in insertion order and floats
/// through format_double, so identical inputs give byte-identical text.
class JsonWriter {
   public:
    JsonWriter &begin_object();
    JsonWriter &end_object();
    JsonWriter &begin_array();
    JsonWriter &end_array();
    JsonWriter &key(std::string_view k);

    JsonWriter &value(double v);
    JsonWriter &value(std::int64_t v);
    JsonWriter &value(std::uint64_t v);
    JsonWriter &value(int v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter &value(unsigned v) { return value(static_cast<std::uint64_t>(v)); }
    JsonWriter &value(bool v);
    JsonWriter &value(std::string_view v);
    JsonWriter &value(const char *v) { return value(std::string_view(v)); }
    JsonWriter &null();

    template <typename T>
    JsonWriter &field(std::string_view k, const T &v) {
        key(k);
        return value(v);
    }

    const std::string &str() const { return out_; }

   private:
    void separate();
    void raw(std::string_view s);

    std::string out_;
    // One entry per open container: true once it holds an element.
    std::vector<bool> nonempty_;
    bool after_key_ = false;
};

std::string json_escape(std::string_view s);

}  // namespace nandsim
