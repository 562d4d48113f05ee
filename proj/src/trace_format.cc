// Copyright 2026 The Nikhilam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nikhilam/errors.h"
#include "nikhilam/nikhilam.h"

namespace nikhilam {
namespace {

using Json = nlohmann::ordered_json;

std::string bin(const Natural& n) { return to_text(n, 2); }

std::string padded_bin(const Natural& n, std::size_t width) {
  std::string s = bin(n);
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  return s;
}

Natural read_bin(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string()) {
    throw ParseError(std::string("trace field '") + key +
                         "' missing or not a string",
                     std::string::npos);
  }
  return from_text(doc[key].get<std::string>(), 2);
}

std::uint64_t read_uint(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_unsigned()) {
    throw ParseError(std::string("trace field '") + key +
                         "' missing or not an unsigned integer",
                     std::string::npos);
  }
  return doc[key].get<std::uint64_t>();
}

}  // namespace

std::string trace_to_json(const SquaringTrace& trace, int indent) {
  Json doc;
  doc["input"] = bin(trace.input);
  doc["bit_length"] = trace.bit_length;
  Json steps = Json::array();
  for (const SquaringStep& s : trace.steps) {
    steps.push_back({{"i", s.i},
                     {"j", s.j},
                     {"bit_set", s.bit_set},
                     {"residue", bin(s.residue)},
                     {"partial", bin(s.partial)}});
  }
  doc["steps"] = std::move(steps);
  doc["base_residue"] = bin(trace.base_residue);
  doc["base_partial"] = bin(trace.base_partial);
  doc["result"] = bin(trace.result);
  return doc.dump(indent);
}

SquaringTrace trace_from_json(std::string_view json) {
  Json doc;
  try {
    doc = Json::parse(json);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid trace JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) {
    throw ParseError("trace JSON must be an object", std::string::npos);
  }

  SquaringTrace trace;
  trace.input = read_bin(doc, "input");
  trace.bit_length = read_uint(doc, "bit_length");
  if (!doc.contains("steps") || !doc["steps"].is_array()) {
    throw ParseError("trace field 'steps' missing or not an array",
                     std::string::npos);
  }
  for (const Json& s : doc["steps"]) {
    SquaringStep step;
    step.i = read_uint(s, "i");
    step.j = read_uint(s, "j");
    if (!s.contains("bit_set") || !s["bit_set"].is_boolean()) {
      throw ParseError("step field 'bit_set' missing or not a boolean",
                       std::string::npos);
    }
    step.bit_set = s["bit_set"].get<bool>();
    step.residue = read_bin(s, "residue");
    step.partial = read_bin(s, "partial");
    trace.steps.push_back(std::move(step));
  }
  trace.base_residue = read_bin(doc, "base_residue");
  trace.base_partial = read_bin(doc, "base_partial");
  trace.result = read_bin(doc, "result");
  return trace;
}

std::string render_trace_table(const SquaringTrace& trace) {
  const std::uint64_t n = std::max<std::uint64_t>(trace.bit_length, 1);
  const auto columns = trace.columns();

  // rows[r][0] is the label; rows[r][c] is column c.
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header(n + 1);
  header[1] = "Binary Digits";
  if (n >= 2) header[2] = "Base Difference";
  for (std::uint64_t c = 3; c <= n; ++c) header[c] = "Next Difference";
  rows.push_back(header);

  std::vector<std::string> residues(n + 1);
  for (const auto& col : columns) {
    residues[col.index] = padded_bin(col.residue, n - col.index + 1);
  }
  residues[0] = "Multiplicand";
  rows.push_back(residues);
  residues[0] = "Multiplier";
  rows.push_back(residues);

  // B_k sits under column n + 1 - k; the last one is the result.
  std::vector<std::vector<std::string>> partial_rows(n);
  for (const auto& col : columns) {
    const std::uint64_t k = n + 1 - col.index;
    std::vector<std::string> row(n + 1);
    const std::string name = "B_" + std::to_string(k);
    row[0] = k == n ? "Result" : name;
    row[col.index] = name + "=" + bin(col.partial);
    partial_rows[k - 1] = std::move(row);
  }
  for (auto& row : partial_rows) rows.push_back(std::move(row));

  std::vector<std::size_t> width(n + 1, 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }

  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        out << row[c] << std::string(width[c] - row[c].size(), ' ');
      } else {
        out << " | " << std::string(width[c] - row[c].size(), ' ') << row[c];
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace nikhilam
