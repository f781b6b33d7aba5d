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
#include "permpoly/symm.hpp"

#include <charconv>

namespace permpoly {

SymmetricKind SymmetricKind::parse(std::string_view text) {
  if (text == "tr" || text == "trace") return {Kind::Trace, 1};
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const auto head = text.substr(0, colon);
    const auto tail = text.substr(colon + 1);
    std::uint64_t j = 0;
    const auto res = std::from_chars(tail.data(), tail.data() + tail.size(), j);
    if (res.ec == std::errc{} && res.ptr == tail.data() + tail.size()) {
      if (head == "lambda") return {Kind::Lambda, j};
      if (head == "mu") return {Kind::Mu, j};
    }
  }
  fail(ErrorCode::ParseError,
       "expected 'tr', 'lambda:<j>' or 'mu:<j>', got '" + std::string(text) + "'");
}

std::string SymmetricKind::to_string() const {
  switch (kind) {
    case Kind::Trace: return "tr";
    case Kind::Lambda: return "lambda:" + std::to_string(j);
    case Kind::Mu: return "mu:" + std::to_string(j);
  }
  return "?";
}

void SymmetricKind::validate(const FieldTower& tower) const {
  switch (kind) {
    case Kind::Trace:
      return;
    case Kind::Lambda:
      if (j < 1 || j + 1 > tower.m())
        fail(ErrorCode::IndexOutOfRange,
             "lambda index must satisfy 1 <= j <= m-1");
      return;
    case Kind::Mu:
      if (j < 1 || j > tower.size() - 1)
        fail(ErrorCode::IndexOutOfRange,
             "mu index must satisfy 1 <= j <= q^m-1");
      return;
  }
}

code_t trace_rel(const FieldTower& tower, code_t x) {
  code_t acc = x;
  code_t conj = x;
  for (unsigned i = 1; i < tower.m(); ++i) {
    conj = tower.frobenius_q(conj, 1);
    acc = tower.add(acc, conj);
  }
  if (!tower.in_subfield(acc))
    fail(ErrorCode::Internal, "trace value escaped the subfield");
  return tower.project(acc);
}

code_t lambda_j(const FieldTower& tower, code_t x, unsigned j) {
  SymmetricKind{SymmetricKind::Kind::Lambda, j}.validate(tower);
  const unsigned m = tower.m();
  // prod_i (T + x^{q^i}); coeffs[k] is the coefficient of T^k.
  std::vector<code_t> coeffs(m + 1, 0);
  coeffs[0] = 1;
  code_t conj = x;
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned k = i + 1; k-- > 0;) {
      coeffs[k + 1] = tower.add(coeffs[k + 1], coeffs[k]);  // shift by T
      coeffs[k] = tower.mul(coeffs[k], conj);
    }
    conj = tower.frobenius_q(conj, 1);
  }
  const code_t value = coeffs[m - j];
  if (!tower.in_subfield(value))
    fail(ErrorCode::Internal, "lambda value escaped the subfield");
  return tower.project(value);
}

code_t mu_j(const FieldTower& tower, code_t x, std::uint64_t j) {
  SymmetricKind{SymmetricKind::Kind::Mu, j}.validate(tower);
  return trace_rel(tower, tower.pow(x, j));
}

code_t eval_symmetric(const FieldTower& tower, const SymmetricKind& kind,
                      code_t x) {
  switch (kind.kind) {
    case SymmetricKind::Kind::Trace: return trace_rel(tower, x);
    case SymmetricKind::Kind::Lambda:
      return lambda_j(tower, x, static_cast<unsigned>(kind.j));
    case SymmetricKind::Kind::Mu: return mu_j(tower, x, kind.j);
  }
  fail(ErrorCode::Internal, "bad symmetric kind");
}

std::vector<code_t> image_of(const FieldTower& tower, const SymmetricKind& kind) {
  kind.validate(tower);
  std::vector<bool> seen(tower.q(), false);
  for (code_t x = 0; x < tower.size(); ++x) seen[eval_symmetric(tower, kind, x)] = true;
  std::vector<code_t> out;
  for (code_t v = 0; v < tower.q(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

}  // namespace permpoly
