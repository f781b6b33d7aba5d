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
#include "permpoly/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace permpoly {
namespace {

unsigned mod_inverse(unsigned a, unsigned p) {
  // p prime, a != 0 mod p
  unsigned r = 1;
  unsigned b = a % p;
  unsigned e = p - 2;
  while (e) {
    if (e & 1) r = static_cast<unsigned>((std::uint64_t(r) * b) % p);
    b = static_cast<unsigned>((std::uint64_t(b) * b) % p);
    e >>= 1;
  }
  return r;
}

// Row echelon form in place; returns (rank, pivot column list).
std::pair<unsigned, std::vector<unsigned>> echelon(
    std::vector<std::vector<unsigned>>& rows, unsigned p) {
  const unsigned nrows = static_cast<unsigned>(rows.size());
  const unsigned ncols = rows.empty() ? 0 : static_cast<unsigned>(rows[0].size());
  std::vector<unsigned> pivots;
  unsigned r = 0;
  for (unsigned c = 0; c < ncols && r < nrows; ++c) {
    unsigned sel = r;
    while (sel < nrows && rows[sel][c] == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(rows[r], rows[sel]);
    const unsigned inv = mod_inverse(rows[r][c], p);
    for (unsigned j = c; j < ncols; ++j)
      rows[r][j] = static_cast<unsigned>((std::uint64_t(rows[r][j]) * inv) % p);
    for (unsigned i = 0; i < nrows; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const unsigned f = rows[i][c];
      for (unsigned j = c; j < ncols; ++j)
        rows[i][j] =
            (rows[i][j] + p - static_cast<unsigned>((std::uint64_t(f) * rows[r][j]) % p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return {r, pivots};
}

}  // namespace

// ---------------------------------------------------------------------------
// SubfieldPoly

SubfieldPoly::SubfieldPoly(const FieldTower& tower, std::vector<code_t> coeffs,
                           PolyDomain domain)
    : tower_(&tower), coeffs_(std::move(coeffs)), domain_(domain) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  const code_t bound = domain == PolyDomain::Base ? tower.q() : tower.size();
  for (code_t c : coeffs_)
    if (c >= bound)
      fail(domain == PolyDomain::Base ? ErrorCode::NotInSubfield
                                      : ErrorCode::IndexOutOfRange,
           "coefficient code " + std::to_string(c) + " out of range");
}

SubfieldPoly SubfieldPoly::constant(const FieldTower& tower, code_t c,
                                    PolyDomain domain) {
  return SubfieldPoly(tower, std::vector<code_t>{c}, domain);
}

SubfieldPoly SubfieldPoly::parse(const FieldTower& tower, std::string_view text,
                                 PolyDomain domain) {
  std::vector<code_t> coeffs;
  std::string tok;
  std::istringstream in{std::string(text)};
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad coefficient '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size())
      fail(ErrorCode::ParseError, "bad coefficient '" + tok + "'");
    coeffs.push_back(static_cast<code_t>(v));
  }
  return SubfieldPoly(tower, std::move(coeffs), domain);
}

SubfieldPoly SubfieldPoly::as_ext() const {
  return SubfieldPoly(*tower_, coeffs_, PolyDomain::Ext);
}

code_t SubfieldPoly::eval(code_t x) const {
  code_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = tower_->add(tower_->mul(acc, x), coeffs_[i]);
  return acc;
}

FieldElement SubfieldPoly::eval(const FieldElement& x) const {
  if (!x.tower().same_field(*tower_))
    fail(ErrorCode::MixedTowers, "argument belongs to a different field");
  return FieldElement(*tower_, eval(x.code()));
}

std::string SubfieldPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// LinearizedPoly

LinearizedPoly::LinearizedPoly(const FieldTower& tower, std::vector<Term> terms)
    : tower_(&tower) {
  std::map<unsigned, code_t> acc;
  for (const auto& [i, c] : terms) {
    if (i >= tower.degree_over_p())
      fail(ErrorCode::IndexOutOfRange,
           "exponent index " + std::to_string(i) + " outside [0, n*m)");
    if (c >= tower.size())
      fail(ErrorCode::IndexOutOfRange, "coefficient code out of range");
    acc[i] = tower.add(acc.count(i) ? acc[i] : 0, c);
  }
  for (const auto& [i, c] : acc)
    if (c != 0) terms_.emplace_back(i, c);
}

LinearizedPoly LinearizedPoly::zero(const FieldTower& t) {
  return LinearizedPoly(t, {});
}
LinearizedPoly LinearizedPoly::identity(const FieldTower& t) {
  return LinearizedPoly(t, {{0, 1}});
}
LinearizedPoly LinearizedPoly::scalar(const FieldTower& t, code_t c) {
  return LinearizedPoly(t, {{0, c}});
}
LinearizedPoly LinearizedPoly::monomial(const FieldTower& t, unsigned i,
                                        code_t c) {
  return LinearizedPoly(t, {{i, c}});
}
LinearizedPoly LinearizedPoly::frobenius_q(const FieldTower& t, unsigned k) {
  return LinearizedPoly(t, {{(k % t.m()) * t.n(), 1}});
}
LinearizedPoly LinearizedPoly::trace(const FieldTower& t) {
  std::vector<Term> terms;
  for (unsigned k = 0; k < t.m(); ++k) terms.emplace_back(k * t.n(), 1);
  return LinearizedPoly(t, std::move(terms));
}
LinearizedPoly LinearizedPoly::frobenius_q_minus_identity(const FieldTower& t) {
  if (t.m() == 1) return LinearizedPoly(t, {});  // x^q == x
  return LinearizedPoly(t, {{0, t.neg(1)}, {t.n(), 1}});
}
LinearizedPoly LinearizedPoly::q_poly(const FieldTower& t,
                                      const std::vector<code_t>& a) {
  if (a.size() > t.m())
    fail(ErrorCode::IndexOutOfRange, "too many q-power coefficients");
  std::vector<Term> terms;
  for (unsigned k = 0; k < a.size(); ++k)
    if (a[k] != 0) terms.emplace_back(k * t.n(), a[k]);
  return LinearizedPoly(t, std::move(terms));
}

bool LinearizedPoly::is_q_poly() const noexcept {
  for (const auto& [i, c] : terms_)
    if (i % tower_->n() != 0) return false;
  return true;
}

bool LinearizedPoly::has_fq_coeffs() const noexcept {
  for (const auto& [i, c] : terms_)
    if (!tower_->in_subfield(c)) return false;
  return true;
}

code_t LinearizedPoly::q_coeff(unsigned k) const {
  if (!is_q_poly()) fail(ErrorCode::Internal, "not a q-polynomial");
  for (const auto& [i, c] : terms_)
    if (i == k * tower_->n()) return c;
  return 0;
}

code_t LinearizedPoly::eval(code_t x) const {
  code_t acc = 0;
  for (const auto& [i, c] : terms_)
    acc = tower_->add(acc, tower_->mul(c, tower_->frobenius_p(x, i)));
  return acc;
}

FieldElement LinearizedPoly::eval(const FieldElement& x) const {
  if (!x.tower().same_field(*tower_))
    fail(ErrorCode::MixedTowers, "argument belongs to a different field");
  return FieldElement(*tower_, eval(x.code()));
}

std::string LinearizedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::uint64_t e = 1;
    for (unsigned k = 0; k < i; ++k) e *= tower_->p();
    if (c != 1) out += std::to_string(c) + "*";
    out += "x";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// AdditiveMatrix

AdditiveMatrix::AdditiveMatrix(const FieldTower& tower)
    : tower_(&tower),
      p_(tower.p()),
      dim_(tower.degree_over_p()),
      a_(std::size_t(dim_) * dim_, 0) {}

AdditiveMatrix AdditiveMatrix::identity(const FieldTower& tower) {
  AdditiveMatrix m(tower);
  for (unsigned i = 0; i < m.dim_; ++i) m.set(i, i, 1);
  return m;
}

AdditiveMatrix AdditiveMatrix::of_map(const LinearizedPoly& L) {
  AdditiveMatrix m(L.tower());
  const auto& t = L.tower();
  for (unsigned k = 0; k < m.dim_; ++k) {
    code_t basis = 1;
    for (unsigned i = 0; i < k; ++i) basis *= t.p();
    const auto col = t.p_digits(L.eval(basis));
    for (unsigned r = 0; r < m.dim_; ++r) m.set(r, k, col[r]);
  }
  return m;
}

AdditiveMatrix AdditiveMatrix::of_scalar_mul(const FieldTower& tower, code_t c) {
  AdditiveMatrix m(tower);
  for (unsigned k = 0; k < m.dim_; ++k) {
    code_t basis = 1;
    for (unsigned i = 0; i < k; ++i) basis *= tower.p();
    const auto col = tower.p_digits(tower.mul(c, basis));
    for (unsigned r = 0; r < m.dim_; ++r) m.set(r, k, col[r]);
  }
  return m;
}

AdditiveMatrix AdditiveMatrix::operator*(const AdditiveMatrix& o) const {
  AdditiveMatrix r(*tower_);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) {
      std::uint64_t s = 0;
      for (unsigned k = 0; k < dim_; ++k) s += std::uint64_t(at(i, k)) * o.at(k, j);
      r.set(i, j, static_cast<unsigned>(s % p_));
    }
  return r;
}

AdditiveMatrix AdditiveMatrix::operator+(const AdditiveMatrix& o) const {
  AdditiveMatrix r(*tower_);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) r.set(i, j, at(i, j) + o.at(i, j));
  return r;
}

bool AdditiveMatrix::operator==(const AdditiveMatrix& o) const {
  return dim_ == o.dim_ && p_ == o.p_ && a_ == o.a_;
}

code_t AdditiveMatrix::apply(code_t x) const {
  const auto d = tower_->p_digits(x);
  std::vector<unsigned> out(dim_, 0);
  for (unsigned r = 0; r < dim_; ++r) {
    std::uint64_t s = 0;
    for (unsigned c = 0; c < dim_; ++c) s += std::uint64_t(at(r, c)) * d[c];
    out[r] = static_cast<unsigned>(s % p_);
  }
  return tower_->from_p_digits(out);
}

unsigned AdditiveMatrix::rank() const {
  std::vector<std::vector<unsigned>> rows(dim_, std::vector<unsigned>(dim_));
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) rows[i][j] = at(i, j);
  return echelon(rows, p_).first;
}

std::optional<AdditiveMatrix> AdditiveMatrix::inverse() const {
  std::vector<std::vector<unsigned>> rows(dim_, std::vector<unsigned>(2 * dim_, 0));
  for (unsigned i = 0; i < dim_; ++i) {
    for (unsigned j = 0; j < dim_; ++j) rows[i][j] = at(i, j);
    rows[i][dim_ + i] = 1;
  }
  auto [rank, pivots] = echelon(rows, p_);
  if (rank < dim_ || pivots.back() >= dim_) return std::nullopt;
  AdditiveMatrix r(*tower_);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) r.set(i, j, rows[i][dim_ + j]);
  return r;
}

std::optional<code_t> AdditiveMatrix::solve(code_t c) const {
  const auto inv = inverse();
  if (!inv) return std::nullopt;
  return inv->apply(c);
}

std::vector<std::vector<unsigned>> AdditiveMatrix::null_space_basis() const {
  std::vector<std::vector<unsigned>> rows(dim_, std::vector<unsigned>(dim_));
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) rows[i][j] = at(i, j);
  auto [rank, pivots] = echelon(rows, p_);

  std::vector<bool> is_pivot(dim_, false);
  for (unsigned c : pivots) is_pivot[c] = true;
  std::vector<std::vector<unsigned>> basis;
  for (unsigned f = 0; f < dim_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<unsigned> v(dim_, 0);
    v[f] = 1;
    for (unsigned r = 0; r < rank; ++r) {
      // row r: x_{pivot[r]} + sum over free columns = 0
      v[pivots[r]] = (p_ - rows[r][f] % p_) % p_;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<code_t> AdditiveMatrix::null_space_elements() const {
  const auto basis = null_space_basis();
  const std::size_t f = basis.size();
  std::vector<code_t> out;
  std::vector<unsigned> coeff(f, 0);
  while (true) {
    std::vector<unsigned> v(dim_, 0);
    for (std::size_t b = 0; b < f; ++b) {
      if (coeff[b] == 0) continue;
      for (unsigned j = 0; j < dim_; ++j)
        v[j] = (v[j] + coeff[b] * basis[b][j]) % p_;
    }
    out.push_back(tower_->from_p_digits(v));
    std::size_t pos = 0;
    while (pos < f && ++coeff[pos] == p_) coeff[pos++] = 0;
    if (pos == f) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned AdditiveMatrix::stacked_rank(const AdditiveMatrix& A,
                                      const AdditiveMatrix& B) {
  const unsigned dim = A.dim_;
  std::vector<std::vector<unsigned>> rows(2 * dim, std::vector<unsigned>(dim));
  for (unsigned i = 0; i < dim; ++i)
    for (unsigned j = 0; j < dim; ++j) {
      rows[i][j] = A.at(i, j);
      rows[dim + i][j] = B.at(i, j);
    }
  return echelon(rows, A.p_).first;
}

// ---------------------------------------------------------------------------
// Free functions

AdditiveMatrix to_matrix(const LinearizedPoly& L) {
  return AdditiveMatrix::of_map(L);
}

std::vector<code_t> kernel(const LinearizedPoly& L) {
  return to_matrix(L).null_space_elements();
}

bool is_linearized_permutation(const LinearizedPoly& L) {
  return to_matrix(L).invertible();
}

code_t linearized_solve(const LinearizedPoly& L, code_t c) {
  const auto x = to_matrix(L).solve(c);
  if (!x) fail(ErrorCode::NotInvertible, "linearized map is not a permutation");
  return *x;
}

bool check_commutation(const LinearizedPoly& L, const LinearizedPoly& B) {
  if (!L.tower().same_field(B.tower()))
    fail(ErrorCode::MixedTowers, "commutation check across fields");
  const auto ml = to_matrix(L);
  const auto mb = to_matrix(B);
  return ml * mb == mb * ml;
}

code_t dickson_eval(unsigned nn, code_t a, code_t x, const FieldTower& tower) {
  code_t prev = tower.add(1, 1);  // D_0 = 2
  if (nn == 0) return prev;
  code_t cur = x;
  for (unsigned k = 2; k <= nn; ++k) {
    const code_t next = tower.sub(tower.mul(x, cur), tower.mul(a, prev));
    prev = cur;
    cur = next;
  }
  return cur;
}

bool is_monomial_pp(std::uint64_t j, const FieldTower& tower, Which which) {
  if (j < 1) fail(ErrorCode::IndexOutOfRange, "monomial degree must be >= 1");
  const std::uint64_t size = which == Which::Full ? tower.size() : tower.q();
  return std::gcd(j, size - 1) == 1;
}

}  // namespace permpoly
