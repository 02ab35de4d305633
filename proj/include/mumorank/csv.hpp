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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <mumorank/errors.hpp>
#include <mumorank/hypergraph.hpp>

namespace mumorank {

/**
 * Parsed hyperedge CSV: the header row names the modalities, every other
 * row is one hyperedge with one node label per modality.
 */
struct HyperedgeTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline std::string trim(std::string_view text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && (text[begin] == ' ' || text[begin] == '\t' || text[begin] == '\r' ||
                           text[begin] == '\f' || text[begin] == '\v'))
        ++begin;
    while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t' ||
                           text[end - 1] == '\r' || text[end - 1] == '\f' ||
                           text[end - 1] == '\v'))
        --end;
    return std::string(text.substr(begin, end - begin));
}

inline std::vector<std::string> split_fields(std::string_view line, std::size_t line_number) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        const auto piece = line.substr(start, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - start);
        std::string field = trim(piece);
        if (field.empty())
            throw SchemaError("line " + std::to_string(line_number) + ": empty field " +
                              std::to_string(fields.size() + 1));
        fields.push_back(std::move(field));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

} // namespace detail

/**
 * Parses hyperedge CSV text. Labels are taken verbatim apart from
 * stripping surrounding whitespace (which also absorbs CR line endings);
 * there is no quoting, so labels cannot contain commas. Ragged rows,
 * empty fields, blank interior lines, and duplicate or empty header
 * names are rejected with their line number.
 */
inline HyperedgeTable parse_hyperedge_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t newline = text.find('\n', start);
        if (newline == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, newline - start));
        start = newline + 1;
    }
    while (!lines.empty() && detail::trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw SchemaError("empty file: no header row");

    HyperedgeTable table;
    table.header = detail::split_fields(lines[0], 1);
    for (std::size_t i = 0; i < table.header.size(); ++i)
        for (std::size_t j = i + 1; j < table.header.size(); ++j)
            if (table.header[i] == table.header[j])
                throw SchemaError("line 1: duplicate column name '" + table.header[i] + "'");

    for (std::size_t n = 1; n < lines.size(); ++n) {
        if (detail::trim(lines[n]).empty())
            throw SchemaError("line " + std::to_string(n + 1) + ": blank line");
        auto fields = detail::split_fields(lines[n], n + 1);
        if (fields.size() != table.header.size())
            throw SchemaError("line " + std::to_string(n + 1) + ": expected " +
                              std::to_string(table.header.size()) + " fields, got " +
                              std::to_string(fields.size()));
        table.rows.push_back(std::move(fields));
    }
    return table;
}

/**
 * Turns a parsed table into a raw hypergraph. Without a roster, nodes
 * are declared in order of first appearance. With a roster, the listed
 * modalities become closed universes: their nodes come from the roster
 * alone (so zero-degree nodes can exist) and row labels outside the
 * roster show up as validation violations. Modalities missing from the
 * roster keep the inferred behavior.
 */
inline HypergraphInput
build_hypergraph(const HyperedgeTable& table,
                 const std::map<std::string, std::vector<std::string>>& roster,
                 bool multiplicity_allowed) {
    ModalitySchema schema{table.header};
    for (const auto& [name, labels] : roster)
        if (!schema.find(name))
            throw LookupError("node roster references unknown modality '" + name + "'");

    HypergraphInput input(schema, multiplicity_allowed, /*closed_universe=*/!roster.empty());
    if (!roster.empty()) {
        for (std::size_t i = 0; i < schema.size(); ++i) {
            auto it = roster.find(schema.names[i]);
            if (it != roster.end()) {
                for (const auto& label : it->second) {
                    if (label.empty())
                        throw SchemaError("empty node label in roster of modality '" +
                                          schema.names[i] + "'");
                    if (input.declared(i, label))
                        throw SchemaError("duplicate node '" + label + "' in roster of modality '" +
                                          schema.names[i] + "'");
                    input.declare_node(i, label);
                }
            } else {
                for (const auto& row : table.rows)
                    if (i < row.size()) input.declare_node(i, row[i]);
            }
        }
    }
    for (const auto& row : table.rows) input.add_row(row);
    return input;
}

} // namespace mumorank
