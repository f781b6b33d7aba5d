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
#include "permpoly/construct.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permpoly {

// ---------------------------------------------------------------------------
// FqMap / FqFunc

FqMap::FqMap(const FieldTower& t, std::vector<code_t> values, std::string name)
    : tower_(&t), values_(std::move(values)), name_(std::move(name)) {
  if (values_.size() != t.size())
    fail(ErrorCode::ParseError, "value table must have one entry per element");
  std::vector<bool> seen(t.q(), false);
  for (code_t v : values_) {
    if (!t.in_subfield(v))
      fail(ErrorCode::NotInSubfield, "value " + std::to_string(v) + " outside F_q");
    seen[v] = true;
  }
  surjective_ = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

FqMap FqMap::trace(const FieldTower& t) {
  return of_kind(t, SymmetricKind{SymmetricKind::Kind::Trace, 1});
}
FqMap FqMap::lambda(const FieldTower& t, std::uint64_t j) {
  return of_kind(t, SymmetricKind{SymmetricKind::Kind::Lambda, j});
}
FqMap FqMap::mu(const FieldTower& t, std::uint64_t j) {
  return of_kind(t, SymmetricKind{SymmetricKind::Kind::Mu, j});
}

FqMap FqMap::of_kind(const FieldTower& t, const SymmetricKind& kind) {
  kind.validate(t);
  std::vector<code_t> values(t.size());
  for (code_t x = 0; x < t.size(); ++x) values[x] = eval_symmetric(t, kind, x);
  return FqMap(t, std::move(values), kind.to_string());
}

FqMap FqMap::from_poly(const SubfieldPoly& f) {
  const auto& t = f.tower();
  std::vector<code_t> values(t.size());
  for (code_t x = 0; x < t.size(); ++x) {
    const code_t v = f.eval(x);
    if (!t.in_subfield(v))
      fail(ErrorCode::NotInSubfield,
           "polynomial is not F_q-valued at x=" + std::to_string(x));
    values[x] = v;
  }
  return FqMap(t, std::move(values), "poly:" + f.to_string());
}

FqMap FqMap::from_table(const FieldTower& t, std::vector<code_t> values,
                        std::string name) {
  return FqMap(t, std::move(values), std::move(name));
}

FqFunc::FqFunc(const FieldTower& t, std::vector<code_t> values, std::string name)
    : tower_(&t), values_(std::move(values)), name_(std::move(name)) {
  if (values_.size() != t.q())
    fail(ErrorCode::ParseError, "table must have q entries");
  for (code_t v : values_)
    if (!t.in_subfield(v))
      fail(ErrorCode::NotInSubfield, "table value outside F_q");
}

FqFunc FqFunc::from_poly(const SubfieldPoly& h) {
  if (h.domain() != PolyDomain::Base)
    fail(ErrorCode::ParseError, "h must be a polynomial over F_q");
  const auto& t = h.tower();
  std::vector<code_t> values(t.q());
  for (code_t x = 0; x < t.q(); ++x) values[x] = h.eval(x);
  return FqFunc(t, std::move(values), "poly:" + h.to_string());
}

FqFunc FqFunc::from_table(const FieldTower& t, std::vector<code_t> values) {
  return FqFunc(t, std::move(values), "table");
}

FqFunc FqFunc::zero(const FieldTower& t) {
  return FqFunc(t, std::vector<code_t>(t.q(), 0), "0");
}

std::string FqFunc::to_string() const {
  std::string out = name_ + "[";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Theorem "sum of linearized terms" machinery

Thm21Instance::Thm21Instance(const FieldTower& t, std::vector<LinearizedPoly> L,
                             std::vector<code_t> g, std::vector<SubfieldPoly> hs,
                             LinearizedPoly B)
    : tower(&t),
      ell(std::move(L)),
      gamma(std::move(g)),
      h(std::move(hs)),
      b_map(std::move(B)) {
  if (ell.empty())
    fail(ErrorCode::DegenerateInstance, "at least one summand is required");
  if (gamma.size() != ell.size() || h.size() != ell.size())
    fail(ErrorCode::DegenerateInstance, "term lists must have equal length");
  for (const auto& Li : ell)
    if (!Li.tower().same_field(t)) fail(ErrorCode::MixedTowers, "L_i field");
  for (const auto& hi : h) {
    if (!hi.tower().same_field(t)) fail(ErrorCode::MixedTowers, "h_i field");
    if (hi.domain() != PolyDomain::Ext)
      fail(ErrorCode::ParseError, "h_i must be polynomials over F_{q^m}");
  }
  if (!b_map.tower().same_field(t)) fail(ErrorCode::MixedTowers, "B field");
  for (code_t gi : gamma)
    if (gi >= t.size()) fail(ErrorCode::IndexOutOfRange, "gamma code out of range");
}

std::string Thm21Instance::describe() const {
  std::string out = "B=" + b_map.to_string();
  for (std::size_t i = 0; i < ell.size(); ++i)
    out += "; L=" + ell[i].to_string() + " g=" + std::to_string(gamma[i]) +
           " h=" + h[i].to_string();
  return out;
}

namespace {

// Sorted image of an additive map over the full field.
std::vector<code_t> map_image(const FieldTower& t, const LinearizedPoly& B) {
  std::vector<bool> seen(t.size(), false);
  for (code_t x = 0; x < t.size(); ++x) seen[B.eval(x)] = true;
  std::vector<code_t> out;
  for (code_t v = 0; v < t.size(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

}  // namespace

Thm21Hypotheses check_thm21_hypotheses(const Thm21Instance& inst) {
  const auto& t = *inst.tower;
  Thm21Hypotheses rep;

  // (a) h_i(B(x)) in F_q for every i and x.
  rep.h_values_in_fq = true;
  for (code_t x = 0; x < t.size() && rep.h_values_in_fq; ++x) {
    const code_t bx = inst.b_map.eval(x);
    for (std::size_t i = 0; i < inst.k(); ++i) {
      if (!t.in_subfield(inst.h[i].eval(bx))) {
        rep.h_values_in_fq = false;
        rep.wa = Thm21Hypotheses::Witness{i, x, 0};
        break;
      }
    }
  }

  // (b) every map agrees with its own F_p-matrix everywhere; agreement with
  // a linear map on the whole field is an exhaustive additivity certificate.
  rep.additive = true;
  for (std::size_t i = 0; i <= inst.k() && rep.additive; ++i) {
    const auto& L = i < inst.k() ? inst.ell[i] : inst.b_map;
    const auto M = to_matrix(L);
    for (code_t x = 0; x < t.size(); ++x) {
      if (L.eval(x) != M.apply(x)) {
        rep.additive = false;
        rep.wb = Thm21Hypotheses::Witness{i, x, 0};
        break;
      }
    }
  }

  // (c) B commutes with every L_i.
  rep.commutes = true;
  for (std::size_t i = 0; i < inst.k(); ++i) {
    if (!check_commutation(inst.ell[i], inst.b_map)) {
      rep.commutes = false;
      for (code_t x = 0; x < t.size(); ++x) {
        if (inst.b_map.eval(inst.ell[i].eval(x)) !=
            inst.ell[i].eval(inst.b_map.eval(x))) {
          rep.wc = Thm21Hypotheses::Witness{i, x, 0};
          break;
        }
      }
      break;
    }
  }

  // (d) B is F_q-homogeneous.
  rep.fq_homogeneous = true;
  for (code_t c = 0; c < t.q() && rep.fq_homogeneous; ++c) {
    for (code_t v = 0; v < t.size(); ++v) {
      if (inst.b_map.eval(t.mul(c, v)) != t.mul(c, inst.b_map.eval(v))) {
        rep.fq_homogeneous = false;
        rep.wd = Thm21Hypotheses::Witness{inst.k(), v, c};
        break;
      }
    }
  }

  return rep;
}

Cond1Result check_thm21_cond1_detail(const Thm21Instance& inst) {
  const auto& t = *inst.tower;
  const auto S = map_image(t, inst.b_map);
  std::vector<bool> in_S(t.size(), false);
  for (code_t s : S) in_S[s] = true;

  std::vector<code_t> b_gamma(inst.k());
  for (std::size_t i = 0; i < inst.k(); ++i)
    b_gamma[i] = inst.b_map.eval(inst.gamma[i]);

  Cond1Result res;
  res.holds = true;
  std::vector<code_t> first_preimage(t.size(), t.size());
  for (code_t s : S) {
    code_t g = 0;
    for (std::size_t i = 0; i < inst.k(); ++i)
      g = t.add(g, t.mul(t.add(inst.ell[i].eval(s), b_gamma[i]),
                         inst.h[i].eval(s)));
    if (!in_S[g])
      fail(ErrorCode::ImageEscape,
           "G(" + std::to_string(s) + ") = " + std::to_string(g) +
               " left B(F_{q^m}); the hypotheses preclude this");
    if (first_preimage[g] != t.size()) {
      if (res.holds) {
        res.holds = false;
        res.collision = {first_preimage[g], s};
      }
    } else {
      first_preimage[g] = s;
    }
  }
  return res;
}

bool check_thm21_cond1(const Thm21Instance& inst) {
  return check_thm21_cond1_detail(inst).holds;
}

Cond2Result check_thm21_cond2_detail(const Thm21Instance& inst) {
  const auto& t = *inst.tower;
  const auto S = map_image(t, inst.b_map);
  const auto matB = to_matrix(inst.b_map);

  std::vector<AdditiveMatrix> matL;
  matL.reserve(inst.k());
  for (const auto& L : inst.ell) matL.push_back(to_matrix(L));

  Cond2Result res;
  res.holds = true;
  const unsigned dim = t.degree_over_p();
  for (code_t y : S) {
    AdditiveMatrix My(t);
    for (std::size_t i = 0; i < inst.k(); ++i) {
      const code_t hy = inst.h[i].eval(y);
      My = My + AdditiveMatrix::of_scalar_mul(t, hy) * matL[i];
    }
    if (AdditiveMatrix::stacked_rank(My, matB) == dim) continue;

    // Rank-deficient: the joint kernel is nontrivial.  The witness is the
    // smallest nonzero x in ker(B) killed by M_y, found by scanning.
    res.holds = false;
    for (code_t x : matB.null_space_elements()) {
      if (x != 0 && My.apply(x) == 0) {
        res.witness = {y, x};
        break;
      }
    }
    break;
  }
  return res;
}

bool check_thm21_cond2(const Thm21Instance& inst) {
  return check_thm21_cond2_detail(inst).holds;
}

Map build_thm21(const Thm21Instance& inst) {
  const auto& t = *inst.tower;
  // Clause (a) is what keeps the evaluator total; verify it eagerly so the
  // returned closure never throws.
  for (code_t x = 0; x < t.size(); ++x) {
    const code_t bx = inst.b_map.eval(x);
    for (std::size_t i = 0; i < inst.k(); ++i)
      if (!t.in_subfield(inst.h[i].eval(bx)))
        fail(ErrorCode::HypothesisViolation,
             "h_" + std::to_string(i + 1) + "(B(" + std::to_string(x) +
                 ")) lies outside F_q");
  }
  auto shared = std::make_shared<Thm21Instance>(inst);
  return Map{"thm21[" + inst.describe() + "]", &t, [shared, &t](code_t x) {
               const code_t bx = shared->b_map.eval(x);
               code_t acc = 0;
               for (std::size_t i = 0; i < shared->k(); ++i)
                 acc = t.add(acc, t.mul(t.add(shared->ell[i].eval(x),
                                              shared->gamma[i]),
                                        shared->h[i].eval(bx)));
               return acc;
             }};
}

Thm21Instance make_cor21(const FieldTower& t, LinearizedPoly L1,
                         LinearizedPoly L2, code_t gamma,
                         const SubfieldPoly& h_base) {
  std::vector<LinearizedPoly> L{std::move(L1), std::move(L2)};
  std::vector<code_t> g{0, gamma};
  std::vector<SubfieldPoly> hs{SubfieldPoly::constant(t, 1, PolyDomain::Ext),
                               h_base.as_ext()};
  return Thm21Instance(t, std::move(L), std::move(g), std::move(hs),
                       LinearizedPoly::trace(t));
}

Thm21Instance make_cor22(const FieldTower& t, LinearizedPoly L,
                         const SubfieldPoly& h_base) {
  return make_cor21(t, std::move(L), LinearizedPoly::identity(t), 0, h_base);
}

// ---------------------------------------------------------------------------
// x h(lambda_j) / x h(mu_j)

Thm3Instance::Thm3Instance(const FieldTower& t, SymmetricKind::Kind variant,
                           std::uint64_t j, SubfieldPoly h_poly)
    : tower(&t), variant(variant), j(j), h(std::move(h_poly)) {
  if (variant != SymmetricKind::Kind::Lambda && variant != SymmetricKind::Kind::Mu)
    fail(ErrorCode::ParseError, "variant must be lambda or mu");
  SymmetricKind{variant, j}.validate(t);
  const std::uint64_t order =
      variant == SymmetricKind::Kind::Lambda ? t.q() - 1 : t.size() - 1;
  if (std::gcd(j, order) != 1)
    fail(ErrorCode::GcdViolation,
         "gcd(j, " + std::to_string(order) + ") != 1 for j=" + std::to_string(j));
  if (!h.tower().same_field(t)) fail(ErrorCode::MixedTowers, "h field");
  if (h.domain() != PolyDomain::Base)
    fail(ErrorCode::ParseError, "h must be a polynomial over F_q");
}

std::string Thm3Instance::describe() const {
  const char* v = variant == SymmetricKind::Kind::Lambda ? "lambda" : "mu";
  return std::string(v) + ":" + std::to_string(j) + " h=" + h.to_string();
}

Map build_thm3(const Thm3Instance& inst) {
  const auto& t = *inst.tower;
  const SymmetricKind kind{inst.variant, inst.j};
  const SubfieldPoly h = inst.h;
  return Map{"thm3[" + inst.describe() + "]", &t, [&t, kind, h](code_t x) {
               const code_t v = eval_symmetric(t, kind, x);
               return t.mul(x, t.embed(h.eval(v)));
             }};
}

bool predicate_thm3(const Thm3Instance& inst) {
  const auto& t = *inst.tower;
  if (inst.h.eval(0) == 0) return false;
  std::vector<bool> seen(t.q(), false);
  for (code_t x = 0; x < t.q(); ++x) {
    const code_t y = t.mul(x, t.pow(inst.h.eval(x), inst.j));
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Linear translators

bool is_linear_translator(const FqMap& f, code_t alpha, code_t a) {
  const auto& t = f.tower();
  if (alpha == 0) fail(ErrorCode::ZeroAlpha, "alpha must be nonzero");
  if (!t.in_subfield(a))
    fail(ErrorCode::IndexOutOfRange, "translator constant must lie in F_q");
  for (code_t u = 0; u < t.q(); ++u) {
    const code_t ua = t.mul(u, a);
    const code_t ualpha = t.mul(u, alpha);
    for (code_t x = 0; x < t.size(); ++x)
      if (t.sub(f(t.add(x, ualpha)), f(x)) != ua) return false;
  }
  // The u = 1, x = 0 case above pins the constant.
  if (t.sub(f(alpha), f(0)) != a)
    fail(ErrorCode::Internal, "translator constant inconsistent");
  return true;
}

std::vector<LinearTranslatorCert> find_linear_translators(const FqMap& f,
                                                          Exec exec) {
  const auto& t = f.tower();
  const code_t Q = t.size();
  std::vector<std::uint8_t> ok(Q, 0);
  std::vector<code_t> pinned(Q, 0);

  const auto probe = [&](code_t alpha) {
    const code_t a = t.sub(f(alpha), f(0));
    pinned[alpha] = a;
    ok[alpha] = is_linear_translator(f, alpha, a) ? 1 : 0;
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t alpha = 1; alpha < static_cast<std::int64_t>(Q); ++alpha)
      probe(static_cast<code_t>(alpha));
  } else {
    for (code_t alpha = 1; alpha < Q; ++alpha) probe(alpha);
  }

  std::vector<LinearTranslatorCert> out;
  for (code_t alpha = 1; alpha < Q; ++alpha)
    if (ok[alpha]) out.push_back({alpha, pinned[alpha], f.name()});
  return out;
}

// ---------------------------------------------------------------------------
// L_1(x) + L_2(gamma) h(f(x))

Thm41Instance::Thm41Instance(const FieldTower& t, LinearizedPoly L1,
                             LinearizedPoly L2, code_t g, FqFunc h_func,
                             FqMap f_map)
    : tower(&t),
      l1(std::move(L1)),
      l2(std::move(L2)),
      gamma(g),
      h(std::move(h_func)),
      f(std::move(f_map)) {
  if (!l1.tower().same_field(t) || !l2.tower().same_field(t) ||
      !h.tower().same_field(t) || !f.tower().same_field(t))
    fail(ErrorCode::MixedTowers, "instance parts belong to different fields");
  if (gamma >= t.size()) fail(ErrorCode::IndexOutOfRange, "gamma out of range");
}

std::string Thm41Instance::describe() const {
  return "L1=" + l1.to_string() + "; L2=" + l2.to_string() +
         "; gamma=" + std::to_string(gamma) + "; h=" + h.to_string() +
         "; f=" + f.name();
}

Thm41Analysis analyze_thm41(const Thm41Instance& inst) {
  const auto& t = *inst.tower;
  if (!is_linearized_permutation(inst.l1))
    fail(ErrorCode::NotPermutationL1, "L_1 does not permute the field");
  if (!inst.f.surjective())
    fail(ErrorCode::NotSurjectiveF, "f is not onto F_q");

  Thm41Analysis res;
  res.l2_gamma = inst.l2.eval(inst.gamma);
  if (res.l2_gamma == 0) return res;  // no translator needed

  res.alpha = linearized_solve(inst.l1, res.l2_gamma);
  res.b = t.sub(inst.f(res.alpha), inst.f(0));
  if (!is_linear_translator(inst.f, res.alpha, res.b))
    fail(ErrorCode::NotTranslator,
         "alpha=" + std::to_string(res.alpha) +
             " is not a linear translator of f=" + inst.f.name());
  return res;
}

Map build_thm41(const Thm41Instance& inst) {
  const auto& t = *inst.tower;
  const auto analysis = analyze_thm41(inst);
  auto shared = std::make_shared<Thm41Instance>(inst);
  const code_t l2g = analysis.l2_gamma;
  return Map{"thm41[" + inst.describe() + "]", &t, [shared, &t, l2g](code_t x) {
               return t.add(shared->l1.eval(x),
                            t.mul(l2g, shared->h(shared->f(x))));
             }};
}

bool predicate_thm41(const Thm41Instance& inst) {
  const auto& t = *inst.tower;
  const auto analysis = analyze_thm41(inst);
  if (analysis.l2_gamma == 0) return true;
  std::vector<bool> seen(t.q(), false);
  for (code_t x = 0; x < t.q(); ++x) {
    const code_t y = t.add(x, t.mul(analysis.b, inst.h(x)));
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

Thm41Instance make_cor41(const FieldTower& t, const LinearizedPoly& L,
                         code_t gamma, FqFunc h, FqMap f) {
  return Thm41Instance(t, L, L, gamma, std::move(h), std::move(f));
}

// ---------------------------------------------------------------------------
// q-polynomial + gamma h(Tr(x))

bool cor23_g_permutes(const FieldTower& t, code_t s, code_t c,
                      const SubfieldPoly& h_base) {
  std::vector<bool> seen(t.q(), false);
  for (code_t x = 0; x < t.q(); ++x) {
    const code_t y = t.add(t.mul(s, x), t.mul(c, h_base.eval(x)));
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

bool predicate_cor23(const LinearizedPoly& L, code_t gamma,
                     const SubfieldPoly& h_base) {
  const auto& t = L.tower();
  if (!L.is_q_poly() || !L.has_fq_coeffs())
    fail(ErrorCode::HypothesisViolation,
         "L must be a q-polynomial with coefficients in F_q");
  if (!is_linearized_permutation(L))
    fail(ErrorCode::NotPermutationL, "L does not permute the field");
  code_t s = 0;
  for (unsigned k = 0; k < t.m(); ++k) s = t.add(s, L.q_coeff(k));
  return cor23_g_permutes(t, s, trace_rel(t, gamma), h_base);
}

Map build_cor23(const LinearizedPoly& L, code_t gamma,
                const SubfieldPoly& h_base) {
  const auto& t = L.tower();
  const LinearizedPoly Lc = L;
  const SubfieldPoly h = h_base;
  return Map{"cor23[L=" + L.to_string() + " gamma=" + std::to_string(gamma) +
                 " h=" + h_base.to_string() + "]",
             &t, [&t, Lc, gamma, h](code_t x) {
               return t.add(Lc.eval(x),
                            t.mul(gamma, t.embed(h.eval(trace_rel(t, x)))));
             }};
}

}  // namespace permpoly
