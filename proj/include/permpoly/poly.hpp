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
#include <string_view>
#include <utility>
#include <vector>

#include "permpoly/field.hpp"

namespace permpoly {

/// Whether a polynomial lives over F_q (all codes < q, maps F_q to F_q)
/// or over F_{q^m}.
enum class PolyDomain { Base, Ext };

/// Ordinary polynomial, coefficients low-to-high with trailing zeros
/// stripped; the zero polynomial is the empty list.
class SubfieldPoly {
 public:
  SubfieldPoly(const FieldTower& tower, std::vector<code_t> coeffs,
               PolyDomain domain);
  static SubfieldPoly constant(const FieldTower& tower, code_t c,
                               PolyDomain domain);
  /// Parses the comma-separated code list, e.g. "2,1,1" for x^2+x+2.
  static SubfieldPoly parse(const FieldTower& tower, std::string_view text,
                            PolyDomain domain);

  const FieldTower& tower() const noexcept { return *tower_; }
  const std::vector<code_t>& coeffs() const noexcept { return coeffs_; }
  PolyDomain domain() const noexcept { return domain_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Re-tags a base-domain polynomial as a polynomial over F_{q^m}.
  SubfieldPoly as_ext() const;

  code_t eval(code_t x) const;  // Horner
  FieldElement eval(const FieldElement& x) const;  // MixedTowers-checked
  std::string to_string() const;

 private:
  const FieldTower* tower_;
  std::vector<code_t> coeffs_;
  PolyDomain domain_;
};

/// Additive polynomial sum a_i x^{p^i} with exponent indices i in [0, n*m).
/// q-polynomials (all indices multiples of n) are the flagged sub-case.
class LinearizedPoly {
 public:
  using Term = std::pair<unsigned, code_t>;  // (i, a_i)

  LinearizedPoly(const FieldTower& tower, std::vector<Term> terms);

  static LinearizedPoly zero(const FieldTower& t);
  static LinearizedPoly identity(const FieldTower& t);
  static LinearizedPoly scalar(const FieldTower& t, code_t c);  // c*x
  static LinearizedPoly monomial(const FieldTower& t, unsigned i, code_t c);
  static LinearizedPoly frobenius_q(const FieldTower& t, unsigned k = 1);
  /// x + x^q + ... + x^{q^(m-1)}.
  static LinearizedPoly trace(const FieldTower& t);
  static LinearizedPoly frobenius_q_minus_identity(const FieldTower& t);
  /// sum a_k x^{q^k} from coefficient codes a_0..a_{m-1}, low-to-high.
  static LinearizedPoly q_poly(const FieldTower& t,
                               const std::vector<code_t>& a);

  const FieldTower& tower() const noexcept { return *tower_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_q_poly() const noexcept;
  bool has_fq_coeffs() const noexcept;
  /// Coefficient of x^{q^k} (zero if absent); requires is_q_poly().
  code_t q_coeff(unsigned k) const;

  code_t eval(code_t x) const;
  FieldElement eval(const FieldElement& x) const;  // MixedTowers-checked
  std::string to_string() const;

 private:
  const FieldTower* tower_;
  std::vector<Term> terms_;  // sorted by index, nonzero coefficients
};

/// (n*m) x (n*m) matrix over F_p: an additive map in the F_p-basis induced
/// by tower coordinates (column k = p-digits of the image of basis k).
class AdditiveMatrix {
 public:
  explicit AdditiveMatrix(const FieldTower& tower);  // zero matrix
  static AdditiveMatrix identity(const FieldTower& tower);
  static AdditiveMatrix of_map(const LinearizedPoly& L);
  /// Matrix of x -> c*x.
  static AdditiveMatrix of_scalar_mul(const FieldTower& tower, code_t c);

  const FieldTower& tower() const noexcept { return *tower_; }
  unsigned dim() const noexcept { return dim_; }
  unsigned at(unsigned r, unsigned c) const { return a_[r * dim_ + c]; }
  void set(unsigned r, unsigned c, unsigned v) { a_[r * dim_ + c] = v % p_; }

  AdditiveMatrix operator*(const AdditiveMatrix& o) const;
  AdditiveMatrix operator+(const AdditiveMatrix& o) const;
  bool operator==(const AdditiveMatrix& o) const;
  bool operator!=(const AdditiveMatrix& o) const { return !(*this == o); }

  code_t apply(code_t x) const;
  unsigned rank() const;
  bool invertible() const { return rank() == dim_; }
  std::optional<AdditiveMatrix> inverse() const;
  /// Unique v with M v = coords(c); empty when the matrix is singular.
  std::optional<code_t> solve(code_t c) const;
  /// F_p null-space basis vectors (digit vectors of length dim).
  std::vector<std::vector<unsigned>> null_space_basis() const;
  /// All field elements in the null space, ascending code order.
  std::vector<code_t> null_space_elements() const;
  /// Column rank of [A; B] stacked; full rank means trivial joint kernel.
  static unsigned stacked_rank(const AdditiveMatrix& A, const AdditiveMatrix& B);

 private:
  const FieldTower* tower_;
  unsigned p_, dim_;
  std::vector<unsigned> a_;  // row-major
};

AdditiveMatrix to_matrix(const LinearizedPoly& L);
/// All roots of L, ascending code order; the size is a power of p.
std::vector<code_t> kernel(const LinearizedPoly& L);
/// True iff the matrix of L is invertible over F_p (equivalently, the
/// kernel is trivial; equivalently, L permutes the field).
bool is_linearized_permutation(const LinearizedPoly& L);
/// Unique x with L(x) = c; throws NotInvertible when L is not a permutation.
code_t linearized_solve(const LinearizedPoly& L, code_t c);
/// True iff B(L(x)) == L(B(x)) as maps (matrix comparison).
bool check_commutation(const LinearizedPoly& L, const LinearizedPoly& B);

/// Dickson polynomial value D_nn(x, a) by the recurrence
/// D_0 = 2, D_1 = x, D_k = x D_{k-1} - a D_{k-2}.
code_t dickson_eval(unsigned nn, code_t a, code_t x, const FieldTower& tower);

/// gcd(j, field size - 1) == 1; Which::Full tests over F_{q^m},
/// Which::Subfield over F_q.
bool is_monomial_pp(std::uint64_t j, const FieldTower& tower, Which which);

}  // namespace permpoly
