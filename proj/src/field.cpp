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
#include "permpoly/field.hpp"

#include <algorithm>
#include <cstdlib>

namespace permpoly {
namespace {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

// Dense polynomial helpers over a coefficient field given by an Ops object
// (add/sub/mul on codes, plus the field size).  Coefficients low-to-high.
template <class Ops>
std::vector<code_t> pol_mul(const std::vector<code_t>& a,
                            const std::vector<code_t>& b, const Ops& F) {
  if (a.empty() || b.empty()) return {};
  std::vector<code_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return r;
}

// Remainder of a by the monic polynomial f (no inversions needed).
template <class Ops>
std::vector<code_t> pol_mod(std::vector<code_t> a, const std::vector<code_t>& f,
                            const Ops& F) {
  const std::size_t d = f.size() - 1;
  while (a.size() > d) {
    const code_t c = a.back();
    if (c != 0) {
      const std::size_t off = a.size() - f.size();
      for (std::size_t i = 0; i + 1 < f.size(); ++i)
        a[off + i] = F.sub(a[off + i], F.mul(c, f[i]));
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Decodes `code` into `len` coefficients base `s`, appending a leading 1:
// the monic polynomial of degree `len` with coefficient-list code `code`.
std::vector<code_t> monic_from_code(std::uint64_t code, unsigned len,
                                    std::uint64_t s) {
  std::vector<code_t> f(len + 1, 0);
  for (unsigned i = 0; i < len; ++i) {
    f[i] = static_cast<code_t>(code % s);
    code /= s;
  }
  f[len] = 1;
  return f;
}

// Trial division by every monic polynomial of degree 1..deg/2.  Exact at
// the sizes this library caps itself to.
template <class Ops>
bool pol_irreducible(const std::vector<code_t>& f, std::uint64_t s,
                     const Ops& F) {
  const unsigned deg = static_cast<unsigned>(f.size()) - 1;
  if (deg <= 1) return true;
  for (unsigned d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= s;
    for (std::uint64_t code = 0; code < count; ++code) {
      if (pol_mod(f, monic_from_code(code, d, s), F).empty()) return false;
    }
  }
  return true;
}

template <class Ops>
std::vector<code_t> default_irreducible(unsigned deg, std::uint64_t s,
                                        const Ops& F) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < deg; ++i) count *= s;
  for (std::uint64_t code = 0; code < count; ++code) {
    auto f = monic_from_code(code, deg, s);
    if (pol_irreducible(f, s, F)) return f;
  }
  fail(ErrorCode::Internal, "no irreducible polynomial found");
}

template <class Ops>
code_t pow_with(code_t a, std::uint64_t e, const Ops& F) {
  code_t r = 1;
  code_t b = a;
  while (e) {
    if (e & 1) r = F.mul(r, b);
    b = F.mul(b, b);
    e >>= 1;
  }
  return r;
}

// Smallest code that generates the multiplicative group of a field of
// `size` elements under F.mul.
template <class Ops>
code_t find_generator(std::uint64_t size, const Ops& F) {
  const std::uint64_t ord = size - 1;
  if (ord == 1) return 1;
  const auto factors = prime_factors(ord);
  for (code_t cand = 2; cand < size; ++cand) {
    bool primitive = true;
    for (auto ell : factors) {
      if (pow_with(cand, ord / ell, F) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return cand;
  }
  fail(ErrorCode::Internal, "no multiplicative generator found");
}

struct FpOps {
  unsigned p;
  code_t add(code_t a, code_t b) const { return (a + b) % p; }
  code_t sub(code_t a, code_t b) const { return (a + p - b) % p; }
  code_t mul(code_t a, code_t b) const {
    return static_cast<code_t>((std::uint64_t(a) * b) % p);
  }
};

// F_q arithmetic on digit codes, built from the base polynomial; used only
// while the tower tables are constructed.
struct FqOps {
  unsigned p, n;
  code_t q;
  const std::vector<code_t>* base_poly;

  std::vector<code_t> digits(code_t a) const {
    std::vector<code_t> d(n);
    for (unsigned i = 0; i < n; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }
  code_t encode(const std::vector<code_t>& d) const {
    code_t c = 0;
    for (unsigned i = n; i-- > 0;) c = c * p + (i < d.size() ? d[i] : 0);
    return c;
  }
  code_t add(code_t a, code_t b) const {
    if (p == 2) return a ^ b;
    auto da = digits(a), db = digits(b);
    for (unsigned i = 0; i < n; ++i) da[i] = (da[i] + db[i]) % p;
    return encode(da);
  }
  code_t sub(code_t a, code_t b) const {
    if (p == 2) return a ^ b;
    auto da = digits(a), db = digits(b);
    for (unsigned i = 0; i < n; ++i) da[i] = (da[i] + p - db[i]) % p;
    return encode(da);
  }
  code_t mul(code_t a, code_t b) const {
    FpOps fp{p};
    auto r = pol_mod(pol_mul(digits(a), digits(b), fp), *base_poly, fp);
    return encode(r);
  }
};

// Full-field arithmetic on codes via base-q digits; the bootstrap route
// multiplication tables are generated from.
struct ExtOps {
  const FqOps* fq;
  unsigned m;
  const std::vector<code_t>* ext_poly;

  std::vector<code_t> digits(code_t a) const {
    std::vector<code_t> d(m);
    for (unsigned i = 0; i < m; ++i) {
      d[i] = a % fq->q;
      a /= fq->q;
    }
    return d;
  }
  code_t encode(const std::vector<code_t>& d) const {
    code_t c = 0;
    for (unsigned i = m; i-- > 0;) c = c * fq->q + (i < d.size() ? d[i] : 0);
    return c;
  }
  code_t add(code_t a, code_t b) const {
    if (fq->p == 2) return a ^ b;
    auto da = digits(a), db = digits(b);
    for (unsigned i = 0; i < m; ++i) da[i] = fq->add(da[i], db[i]);
    return encode(da);
  }
  code_t sub(code_t a, code_t b) const {
    if (fq->p == 2) return a ^ b;
    auto da = digits(a), db = digits(b);
    for (unsigned i = 0; i < m; ++i) da[i] = fq->sub(da[i], db[i]);
    return encode(da);
  }
  code_t mul(code_t a, code_t b) const {
    auto r = pol_mod(pol_mul(digits(a), digits(b), *fq), *ext_poly, *fq);
    return encode(r);
  }
};

void validate_poly_shape(const std::vector<code_t>& f, unsigned deg,
                         std::uint64_t coeff_bound, const char* which) {
  if (f.size() != deg + 1 || f.back() != 1)
    fail(ErrorCode::Reducible,
         std::string(which) + " polynomial must be monic of degree " +
             std::to_string(deg));
  for (code_t c : f)
    if (c >= coeff_bound)
      fail(ErrorCode::Reducible,
           std::string(which) + " polynomial coefficient out of range");
}

}  // namespace

const char* error_code_name(ErrorCode c) noexcept {
  switch (c) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::MixedTowers: return "MixedTowers";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotInSubfield: return "NotInSubfield";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegenerateInstance: return "DegenerateInstance";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::GcdViolation: return "GcdViolation";
    case ErrorCode::ZeroAlpha: return "ZeroAlpha";
    case ErrorCode::ImageEscape: return "ImageEscape";
    case ErrorCode::NotPermutationL: return "NotPermutationL";
    case ErrorCode::NotPermutationL1: return "NotPermutationL1";
    case ErrorCode::NotSurjectiveF: return "NotSurjectiveF";
    case ErrorCode::NotTranslator: return "NotTranslator";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

FieldTower FieldTower::make(unsigned p, unsigned n, unsigned m,
                            std::optional<std::vector<code_t>> base_poly,
                            std::optional<std::vector<code_t>> ext_poly,
                            std::uint64_t size_limit) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1 || m < 1)
    fail(ErrorCode::IndexOutOfRange, "extension degrees must be positive");

  // Codes are 32-bit; 2^30 is a hard ceiling regardless of the configured limit.
  const std::uint64_t limit = std::min(size_limit, std::uint64_t{1} << 30);
  std::uint64_t q64 = 1;
  for (unsigned i = 0; i < n; ++i) {
    q64 *= p;
    if (q64 > limit)
      fail(ErrorCode::SizeLimitExceeded, "p^n exceeds the size limit of " +
                                             std::to_string(size_limit));
  }
  std::uint64_t Q64 = 1;
  for (unsigned i = 0; i < m; ++i) {
    Q64 *= q64;
    if (Q64 > limit)
      fail(ErrorCode::SizeLimitExceeded,
           "field size p^(n*m) exceeds the size limit of " +
               std::to_string(size_limit));
  }

  FieldTower t;
  t.p_ = p;
  t.n_ = n;
  t.m_ = m;
  t.q_ = static_cast<code_t>(q64);
  t.size_ = static_cast<code_t>(Q64);
  t.ord_ = t.size_ - 1;

  const FpOps fp{p};
  if (base_poly) {
    validate_poly_shape(*base_poly, n, p, "base");
    if (!pol_irreducible(*base_poly, p, fp))
      fail(ErrorCode::Reducible, "base polynomial is reducible over F_p");
    t.base_poly_ = std::move(*base_poly);
  } else {
    t.base_poly_ = default_irreducible(n, p, fp);
  }

  const FqOps fq{p, n, t.q_, &t.base_poly_};
  if (ext_poly) {
    validate_poly_shape(*ext_poly, m, t.q_, "extension");
    if (!pol_irreducible(*ext_poly, t.q_, fq))
      fail(ErrorCode::Reducible, "extension polynomial is reducible over F_q");
    t.ext_poly_ = std::move(*ext_poly);
  } else {
    t.ext_poly_ = default_irreducible(m, t.q_, fq);
  }

  t.q_pow_.resize(m + 1);
  t.q_pow_[0] = 1;
  for (unsigned i = 1; i <= m; ++i) t.q_pow_[i] = t.q_pow_[i - 1] * t.q_;

  // Discrete-log tables from the smallest primitive element.
  const ExtOps ext{&fq, m, &t.ext_poly_};
  t.gen_ = find_generator(t.size_, ext);
  t.exp_.assign(t.ord_, 0);
  t.log_.assign(t.size_, 0);
  code_t cur = 1;
  for (code_t k = 0; k < t.ord_; ++k) {
    t.exp_[k] = cur;
    t.log_[cur] = k;
    cur = ext.mul(cur, t.gen_);
  }
  if (cur != 1) fail(ErrorCode::Internal, "generator order mismatch");

  return t;
}

code_t FieldTower::add(code_t a, code_t b) const {
  if (p_ == 2) return a ^ b;
  code_t r = 0, scale = 1;
  while (a || b) {
    r += scale * ((a % p_ + b % p_) % p_);
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

code_t FieldTower::sub(code_t a, code_t b) const {
  if (p_ == 2) return a ^ b;
  code_t r = 0, scale = 1;
  while (a || b) {
    r += scale * ((a % p_ + p_ - b % p_) % p_);
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

code_t FieldTower::neg(code_t a) const {
  if (p_ == 2) return a;
  return sub(0, a);
}

code_t FieldTower::mul(code_t a, code_t b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t e = std::uint64_t(log_[a]) + log_[b];
  if (e >= ord_) e -= ord_;
  return exp_[e];
}

code_t FieldTower::inv(code_t a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  const code_t l = log_[a];
  return exp_[l == 0 ? 0 : ord_ - l];
}

code_t FieldTower::pow(code_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const std::uint64_t r = (std::uint64_t(log_[a]) * (e % ord_)) % ord_;
  return exp_[r];
}

code_t FieldTower::frobenius_p(code_t a, unsigned i) const {
  i %= n_ * m_;
  std::uint64_t e = 1;
  for (unsigned k = 0; k < i; ++k) e *= p_;
  return pow(a, e);
}

code_t FieldTower::frobenius_q(code_t a, unsigned k) const {
  k %= m_;
  return pow(a, q_pow_[k]);
}

code_t FieldTower::embed(code_t subfield_code) const {
  if (subfield_code >= q_)
    fail(ErrorCode::IndexOutOfRange, "not an F_q code: " + std::to_string(subfield_code));
  return subfield_code;
}

code_t FieldTower::project(code_t a) const {
  if (!in_subfield(a))
    fail(ErrorCode::NotInSubfield,
         "code " + std::to_string(a) + " has a nonzero coordinate above F_q");
  return a;
}

std::vector<unsigned> FieldTower::p_digits(code_t a) const {
  std::vector<unsigned> d(n_ * m_);
  for (unsigned i = 0; i < n_ * m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

code_t FieldTower::from_p_digits(const std::vector<unsigned>& digits) const {
  code_t c = 0;
  for (unsigned i = n_ * m_; i-- > 0;)
    c = c * p_ + (i < digits.size() ? digits[i] % p_ : 0);
  return c;
}

code_t FieldTower::mul_poly(code_t a, code_t b) const {
  const FqOps fq{p_, n_, q_, &base_poly_};
  const ExtOps ext{&fq, m_, &ext_poly_};
  return ext.mul(a, b);
}

bool FieldTower::same_field(const FieldTower& other) const noexcept {
  if (this == &other) return true;
  return p_ == other.p_ && n_ == other.n_ && m_ == other.m_ &&
         base_poly_ == other.base_poly_ && ext_poly_ == other.ext_poly_;
}

FieldElement FieldTower::element(code_t code) const {
  return FieldElement(*this, code);
}

FieldElement::FieldElement(const FieldTower& tower, code_t code)
    : tower_(&tower), code_(code) {
  if (code >= tower.size())
    fail(ErrorCode::IndexOutOfRange,
         "code " + std::to_string(code) + " outside field of size " +
             std::to_string(tower.size()));
}

std::vector<std::vector<unsigned>> FieldElement::coords() const {
  const auto flat = tower_->p_digits(code_);
  std::vector<std::vector<unsigned>> out(tower_->m(),
                                         std::vector<unsigned>(tower_->n()));
  for (unsigned i = 0; i < tower_->m(); ++i)
    for (unsigned j = 0; j < tower_->n(); ++j)
      out[i][j] = flat[i * tower_->n() + j];
  return out;
}

namespace {
void require_same(const FieldTower& a, const FieldTower& b) {
  if (!a.same_field(b))
    fail(ErrorCode::MixedTowers, "operands belong to different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(*tower_, *o.tower_);
  return FieldElement(*tower_, tower_->add(code_, o.code_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(*tower_, *o.tower_);
  return FieldElement(*tower_, tower_->sub(code_, o.code_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(*tower_, *o.tower_);
  return FieldElement(*tower_, tower_->mul(code_, o.code_));
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same(*tower_, *o.tower_);
  return FieldElement(*tower_, tower_->mul(code_, tower_->inv(o.code_)));
}
FieldElement FieldElement::operator-() const {
  return FieldElement(*tower_, tower_->neg(code_));
}
FieldElement FieldElement::pow(std::uint64_t e) const {
  return FieldElement(*tower_, tower_->pow(code_, e));
}
FieldElement FieldElement::frobenius_q(unsigned k) const {
  return FieldElement(*tower_, tower_->frobenius_q(code_, k));
}
bool FieldElement::operator==(const FieldElement& o) const {
  return tower_->same_field(*o.tower_) && code_ == o.code_;
}

std::vector<FieldElement> enumerate_field(const FieldTower& tower, Which which) {
  const code_t count = which == Which::Full ? tower.size() : tower.q();
  std::vector<FieldElement> out;
  out.reserve(count);
  for (code_t c = 0; c < count; ++c) out.emplace_back(tower, c);
  return out;
}

}  // namespace permpoly
