/*
 * Copyright 2026 vacuumpair contributors
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

#ifndef VACUUMPAIR_FORMAT_HPP_
#define VACUUMPAIR_FORMAT_HPP_

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

// Deterministic text output. Every number is printed as 12 significant
// digits in scientific notation so equal inputs produce byte-equal files.

namespace vacuumpair::format {

inline std::string sci12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

// JSON value for one double. Magnitudes whose base-10 exponent passes +-300
// would round-trip poorly through lenient parsers, so they are emitted as
// quoted decimal strings; non-finite values are quoted as well.
inline std::string json_number(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0.0 ? "\"inf\"" : "\"-inf\"";
  if (v != 0.0) {
    const double decades = std::log10(std::fabs(v));
    if (decades > 300.0 || decades < -300.0) return "\"" + sci12(v) + "\"";
  }
  return sci12(v);
}

// One CSV row, comma separated, LF terminated, no quoting (no field emitted
// here ever contains a comma).
inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) row += ',';
    row += fields[i];
  }
  row += '\n';
  return row;
}

// JSON object from (name, already-rendered value) pairs, keys in the order
// given.
inline std::string json_object(
    const std::vector<std::pair<std::string, std::string>>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i != 0) out += ",";
    out += "\"" + members[i].first + "\":" + members[i].second;
  }
  out += "}";
  return out;
}

inline std::string json_array(const std::vector<std::string>& elements) {
  std::string out = "[";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i != 0) out += ",";
    out += elements[i];
  }
  out += "]";
  return out;
}

}  // namespace vacuumpair::format

#endif  // VACUUMPAIR_FORMAT_HPP_
