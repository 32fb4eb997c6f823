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

#include "nandsim/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nandsim {

std::string format_double(double v) {
    if (!std::isfinite(v)) {
        return "null";
    }
    if (v == 0.0) {
        v = 0.0;  // drop the sign of -0
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            case '\t':
                out += "\\t";
                break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

void JsonWriter::separate() {
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (!nonempty_.empty()) {
        if (nonempty_.back()) {
            out_ += ',';
        }
        nonempty_.back() = true;
    }
}

void JsonWriter::raw(std::string_view s) {
    separate();
    out_ += s;
}

JsonWriter &JsonWriter::begin_object() {
    raw("{");
    nonempty_.push_back(false);
    return *this;
}

JsonWriter &JsonWriter::end_object() {
    if (nonempty_.empty()) {
        throw std::logic_error("unbalanced end_object");
    }
    nonempty_.pop_back();
    out_ += '}';
    return *this;
}

JsonWriter &JsonWriter::begin_array() {
    raw("[");
    nonempty_.push_back(false);
    return *this;
}

JsonWriter &JsonWriter::end_array() {
    if (nonempty_.empty()) {
        throw std::logic_error("unbalanced end_array");
    }
    nonempty_.pop_back();
    out_ += ']';
    return *this;
}

JsonWriter &JsonWriter::key(std::string_view k) {
    raw(json_escape(k));
    out_ += ':';
    after_key_ = true;
    return *this;
}

JsonWriter &JsonWriter::value(double v) {
    raw(format_double(v));
    return *this;
}

JsonWriter &JsonWriter::value(std::int64_t v) {
    raw(std::to_string(v));
    return *this;
}

JsonWriter &JsonWriter::value(std::uint64_t v) {
    raw(std::to_string(v));
    return *this;
}

JsonWriter &JsonWriter::value(bool v) {
    raw(v ? "true" : "false");
    return *this;
}

JsonWriter &JsonWriter::value(std::string_view v) {
    raw(json_escape(v));
    return *this;
}

JsonWriter &JsonWriter::null() {
    raw("null");
    return *this;
}

}  // namespace nandsim
