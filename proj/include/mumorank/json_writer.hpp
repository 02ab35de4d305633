/*
 * Copyright 2026 The mumorank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <mumorank/errors.hpp>

namespace mumorank {

/**
 * Minimal JSON document builder for the report files. Produced text is
 * deterministic: object keys are kept in sorted order, doubles are
 * rendered with 17 significant digits via locale-independent to_chars,
 * and indentation is fixed at two spaces.
 */
class JsonValue {
public:
    using Object = std::map<std::string, JsonValue>;
    using Array = std::vector<JsonValue>;

    JsonValue() : value_(nullptr) {}
    JsonValue(std::nullptr_t) : value_(nullptr) {}
    JsonValue(bool v) : value_(v) {}
    JsonValue(double v) : value_(v) {}
    JsonValue(std::int64_t v) : value_(v) {}
    JsonValue(std::uint64_t v) : value_(v) {}
    JsonValue(int v) : value_(static_cast<std::int64_t>(v)) {}
    JsonValue(unsigned v) : value_(static_cast<std::uint64_t>(v)) {}
    JsonValue(const char* v) : value_(std::string(v)) {}
    JsonValue(std::string v) : value_(std::move(v)) {}
    JsonValue(Object v) : value_(std::move(v)) {}
    JsonValue(Array v) : value_(std::move(v)) {}

    static JsonValue object() { return JsonValue(Object{}); }
    static JsonValue array() { return JsonValue(Array{}); }

    JsonValue& operator[](const std::string& key) { return std::get<Object>(value_)[key]; }

    void push_back(JsonValue v) { std::get<Array>(value_).push_back(std::move(v)); }

    std::string dump() const {
        std::string out;
        write(out, 0);
        out.push_back('\n');
        return out;
    }

private:
    std::variant<std::nullptr_t, bool, double, std::int64_t, std::uint64_t, std::string, Object,
                 Array>
        value_;

    static void write_escaped(std::string& out, const std::string& text) {
        out.push_back('"');
        for (char c : text) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\r': out += "\\r"; break;
                case '\t': out += "\\t"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        out += buf;
                    } else {
                        out.push_back(c);
                    }
            }
        }
        out.push_back('"');
    }

    static void write_double(std::string& out, double v) {
        if (!std::isfinite(v)) throw SchemaError("non-finite number in a report");
        char buf[64];
        auto result = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
        out.append(buf, result.ptr);
    }

    void write(std::string& out, int depth) const {
        const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
        const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
        switch (value_.index()) {
            case 0: out += "null"; break;
            case 1: out += std::get<bool>(value_) ? "true" : "false"; break;
            case 2: write_double(out, std::get<double>(value_)); break;
            case 3: out += std::to_string(std::get<std::int64_t>(value_)); break;
            case 4: out += std::to_string(std::get<std::uint64_t>(value_)); break;
            case 5: write_escaped(out, std::get<std::string>(value_)); break;
            case 6: {
                const auto& object = std::get<Object>(value_);
                if (object.empty()) {
                    out += "{}";
                    break;
                }
                out += "{\n";
                std::size_t n = 0;
                for (const auto& [key, value] : object) {
                    out += inner;
                    write_escaped(out, key);
                    out += ": ";
                    value.write(out, depth + 1);
                    if (++n < object.size()) out.push_back(',');
                    out.push_back('\n');
                }
                out += pad + "}";
                break;
            }
            case 7: {
                const auto& array = std::get<Array>(value_);
                if (array.empty()) {
                    out += "[]";
                    break;
                }
                out += "[\n";
                for (std::size_t n = 0; n < array.size(); ++n) {
                    out += inner;
                    array[n].write(out, depth + 1);
                    if (n + 1 < array.size()) out.push_back(',');
                    out.push_back('\n');
                }
                out += pad + "]";
                break;
            }
        }
    }
};

} // namespace mumorank
