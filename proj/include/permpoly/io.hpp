/* Copyright (C) 2026 The permpoly authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "permpoly/construct.hpp"
#include "permpoly/oracle.hpp"

namespace permpoly {
namespace io {

using json = nlohmann::json;

/// Reads and parses a JSON document; throws ParseError with the reason.
json read_json_file(const std::string& path);
json parse_json(const std::string& text);

/// Field specification: keys p, n, m and optional base_poly / ext_poly as
/// integer-code lists (low-to-high) or "c0,c1,..." strings.
FieldTower field_from_json(const json& j,
                           std::uint64_t size_limit = FieldTower::kDefaultSizeLimit);
json field_to_json(const FieldTower& t);

/// Element wire format: the decimal integer code (number or string).
code_t element_from_json(const FieldTower& t, const json& j);

/// "c0,c1,..." string or array of integer codes, low-to-high.
SubfieldPoly poly_from_json(const FieldTower& t, const json& j, PolyDomain domain);

/// Array of [i, code] pairs meaning code * x^{p^i}, or one of the named
/// shortcuts "0", "x", "x^q", "x^q-x", "tr".
LinearizedPoly linearized_from_json(const FieldTower& t, const json& j);

/// Polynomial over F_q, or {"table": [q codes]}.
FqFunc fqfunc_from_json(const FieldTower& t, const json& j);

/// "tr" | "lambda:<j>" | "mu:<j>", {"poly": <ext polynomial>} or
/// {"table": [Q codes]}.
FqMap fqmap_from_json(const FieldTower& t, const json& j);

struct Cor23Instance {
  const FieldTower* tower;
  LinearizedPoly L;
  code_t gamma;
  SubfieldPoly h;
};

/// A parsed instance file.  Corollary ids are translated into the general
/// instance they specialize: cor21/cor22 into sums of linearized terms,
/// cor41 into the translator form; cor23 keeps its own predicate.
struct LoadedInstance {
  std::string construction;  // normalized id: thm21|thm31|thm32|thm41|cor23
  std::string original_id;   // as written in the file
  std::variant<Thm21Instance, Thm3Instance, Thm41Instance, Cor23Instance> payload;
};

LoadedInstance instance_from_json(const FieldTower& t, const json& j);

json permutation_report_to_json(const oracle::PermutationReport& rep);
json audit_report_to_json(const oracle::AuditReport& rep);

/// Two-column CSV "input_code,output_code", ascending input.
void write_permutation_csv(std::ostream& out, const std::vector<code_t>& table);

}  // namespace io
}  // namespace permpoly
