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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permpoly/field.hpp"

namespace permpoly {

/// Selects one of the F_q-valued maps on F_{q^m}: the relative trace,
/// lambda_j (j-th elementary symmetric function of the Frobenius
/// conjugates) or mu_j = Tr(x^j).
struct SymmetricKind {
  enum class Kind { Trace, Lambda, Mu };

  Kind kind = Kind::Trace;
  std::uint64_t j = 1;

  /// CLI-facing names: "tr", "lambda:<j>", "mu:<j>".
  static SymmetricKind parse(std::string_view text);
  std::string to_string() const;
  /// Range checks: lambda needs 1 <= j <= m-1, mu needs 1 <= j <= q^m-1.
  void validate(const FieldTower& tower) const;
};

/// x + x^q + ... + x^{q^(m-1)}, returned as an F_q code.
code_t trace_rel(const FieldTower& tower, code_t x);

/// sigma_j evaluated at the conjugates (x, x^q, ..., x^{q^(m-1)}), computed
/// by expanding the product of (T + x^{q^i}) and reading the coefficient of
/// T^{m-j}.  The value always lands in F_q; a failed subfield check is an
/// internal error.
code_t lambda_j(const FieldTower& tower, code_t x, unsigned j);

/// Tr(x^j).
code_t mu_j(const FieldTower& tower, code_t x, std::uint64_t j);

code_t eval_symmetric(const FieldTower& tower, const SymmetricKind& kind,
                      code_t x);

/// Exhaustive image over the full field, ascending F_q codes.
std::vector<code_t> image_of(const FieldTower& tower, const SymmetricKind& kind);

}  // namespace permpoly
