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
#include <optional>
#include <string>
#include <vector>

#include "permpoly/errors.hpp"

namespace permpoly {

/// Canonical integer encoding of a field element.
///
/// An element of F_{q^m} is a vector of m digits over F_q, each digit a
/// vector of n residues mod p; the code packs all n*m residues as a base-p
/// integer, low coordinate first.  Codes in [0, q) are exactly the embedded
/// F_q subfield.
using code_t = std::uint32_t;

enum class Which { Full, Subfield };
enum class Exec { Serial, Parallel };

class FieldElement;

/// The tower F_p < F_q = F_{p^n} < F_{q^m}, with exact table-backed
/// arithmetic on integer codes.
///
/// Immutable after construction and safe to share across threads; every
/// arithmetic operation is a pure function of its inputs.  Multiplication
/// and powers go through discrete-log tables (O(size) memory); a plain
/// polynomial-reduction product is kept public as an independent route.
class FieldTower {
 public:
  static constexpr std::uint64_t kDefaultSizeLimit = std::uint64_t{1} << 20;

  /// Builds and validates a tower.  When a defining polynomial is omitted
  /// the default is the first monic irreducible of the required degree in
  /// ascending integer-code order of its coefficient list (low-to-high).
  ///
  /// Throws NotPrime, Reducible or SizeLimitExceeded.
  static FieldTower make(unsigned p, unsigned n, unsigned m,
                         std::optional<std::vector<code_t>> base_poly = {},
                         std::optional<std::vector<code_t>> ext_poly = {},
                         std::uint64_t size_limit = kDefaultSizeLimit);

  unsigned p() const noexcept { return p_; }
  unsigned n() const noexcept { return n_; }
  unsigned m() const noexcept { return m_; }
  code_t q() const noexcept { return q_; }
  /// |F_{q^m}| = p^{n*m}.
  code_t size() const noexcept { return size_; }
  /// Dimension over F_p.
  unsigned degree_over_p() const noexcept { return n_ * m_; }
  /// Monic irreducible of degree n over F_p, coefficients low-to-high.
  const std::vector<code_t>& base_poly() const noexcept { return base_poly_; }
  /// Monic irreducible of degree m over F_q, coefficient codes low-to-high.
  const std::vector<code_t>& ext_poly() const noexcept { return ext_poly_; }
  /// The multiplicative generator the log tables are built on.
  code_t generator() const noexcept { return gen_; }

  code_t add(code_t a, code_t b) const;
  code_t sub(code_t a, code_t b) const;
  code_t neg(code_t a) const;
  code_t mul(code_t a, code_t b) const;
  code_t inv(code_t a) const;  ///< throws DivisionByZero on 0
  /// a^e with the convention 0^0 = 1.
  code_t pow(code_t a, std::uint64_t e) const;
  /// x -> x^{p^i} (F_p-linear Frobenius iterate).
  code_t frobenius_p(code_t a, unsigned i = 1) const;
  /// x -> x^{q^k}; frobenius_q(x, m) == x.
  code_t frobenius_q(code_t a, unsigned k = 1) const;

  /// Structural subfield test; equivalent to x^q == x.
  bool in_subfield(code_t a) const noexcept { return a < q_; }
  /// Places an F_q code as the degree-0 tower coordinate.
  code_t embed(code_t subfield_code) const;
  /// Inverse of embed; throws NotInSubfield.
  code_t project(code_t a) const;

  /// Base-p residues of the code, low-to-high, length n*m.
  std::vector<unsigned> p_digits(code_t a) const;
  code_t from_p_digits(const std::vector<unsigned>& digits) const;

  /// Slow product by polynomial reduction, independent of the log tables.
  code_t mul_poly(code_t a, code_t b) const;

  /// True when the two objects describe the same field (same parameters
  /// and defining polynomials).
  bool same_field(const FieldTower& other) const noexcept;

  FieldElement element(code_t code) const;

  FieldTower(const FieldTower&) = delete;
  FieldTower& operator=(const FieldTower&) = delete;
  FieldTower(FieldTower&&) = default;
  FieldTower& operator=(FieldTower&&) = default;

 private:
  FieldTower() = default;

  unsigned p_ = 0, n_ = 0, m_ = 0;
  code_t q_ = 0, size_ = 0;
  code_t ord_ = 0;  // size - 1
  code_t gen_ = 0;
  std::vector<code_t> base_poly_;
  std::vector<code_t> ext_poly_;
  std::vector<code_t> exp_;  // exp_[k] = gen^k, k in [0, ord)
  std::vector<code_t> log_;  // log_[exp_[k]] = k; log_[0] unused
  std::vector<std::uint64_t> q_pow_;  // q^0..q^m
};

/// A value of F_{q^m} in tower coordinates, bound to its tower.
/// Equality is structural (same field, same code); operations on elements
/// of different fields throw MixedTowers.
class FieldElement {
 public:
  FieldElement(const FieldTower& tower, code_t code);

  code_t code() const noexcept { return code_; }
  const FieldTower& tower() const noexcept { return *tower_; }
  /// m digit vectors of n residues each.
  std::vector<std::vector<unsigned>> coords() const;
  bool in_subfield() const noexcept { return tower_->in_subfield(code_); }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius_q(unsigned k = 1) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  const FieldTower* tower_;
  code_t code_;
};

/// All elements in ascending code order: the full field (size Q) or the
/// embedded subfield (size q).
std::vector<FieldElement> enumerate_field(const FieldTower& tower,
                                          Which which = Which::Full);

}  // namespace permpoly
