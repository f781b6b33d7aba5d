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
#include "permpoly/families.hpp"

#include <memory>
#include <random>

namespace permpoly {
namespace families {
namespace {

oracle::AuditOutcome checked(std::string id, bool predicate, bool orc) {
  return {std::move(id), false, predicate, orc};
}

oracle::AuditOutcome skipped(std::string id) { return {std::move(id), true, false, false}; }

}  // namespace

AuditFamily thm3_family(const FieldTower& tower, SymmetricKind::Kind variant,
                        std::uint64_t j, unsigned max_deg) {
  // Validates the index and gcd hypotheses once for the whole family.
  Thm3Instance probe(tower, variant, j,
                     SubfieldPoly::constant(tower, 1, PolyDomain::Base));
  (void)probe;

  std::size_t size = 1;
  for (unsigned i = 0; i <= max_deg; ++i) size *= tower.q();

  const char* vn = variant == SymmetricKind::Kind::Lambda ? "thm31" : "thm32";
  const std::string name = std::string(vn) + "(q=" + std::to_string(tower.q()) +
                           ",m=" + std::to_string(tower.m()) +
                           ",j=" + std::to_string(j) +
                           ",deg<=" + std::to_string(max_deg) + ")";

  auto run = [&tower, variant, j, max_deg](std::size_t idx) {
    std::vector<code_t> coeffs(max_deg + 1);
    std::size_t c = idx;
    for (unsigned i = 0; i <= max_deg; ++i) {
      coeffs[i] = static_cast<code_t>(c % tower.q());
      c /= tower.q();
    }
    Thm3Instance inst(tower, variant, j,
                      SubfieldPoly(tower, std::move(coeffs), PolyDomain::Base));
    const bool pred = predicate_thm3(inst);
    const bool orc =
        oracle::is_permutation(build_thm3(inst), Exec::Serial).is_permutation;
    return checked("h=" + inst.h.to_string(), pred, orc);
  };
  return {name, size, std::move(run)};
}

AuditFamily thm21_dickson_family(const FieldTower& tower) {
  if (tower.q() != 8)
    fail(ErrorCode::ParseError, "this preset needs q = 8");
  if (tower.m() < 2)
    fail(ErrorCode::ParseError, "this preset needs an extension, m > 1");

  auto run = [&tower](std::size_t idx) {
    const code_t a = static_cast<code_t>(idx + 1);  // a in F_8*
    std::vector<LinearizedPoly> L{
        LinearizedPoly::scalar(tower, tower.mul(a, a)),
        LinearizedPoly::monomial(tower, 1, 1)};  // x^p = x^2
    std::vector<code_t> gamma{0, 0};
    std::vector<SubfieldPoly> h{
        SubfieldPoly::constant(tower, 1, PolyDomain::Ext),
        SubfieldPoly(tower, {0, tower.neg(a), 0, 1}, PolyDomain::Ext)};
    Thm21Instance inst(tower, std::move(L), std::move(gamma), std::move(h),
                       LinearizedPoly::trace(tower));
    const std::string id = "a=" + std::to_string(a);
    if (!check_thm21_hypotheses(inst).all()) return skipped(id);
    const bool pred = check_thm21_cond1(inst) && check_thm21_cond2(inst);
    const bool orc =
        oracle::is_permutation(build_thm21(inst), Exec::Serial).is_permutation;
    return checked(id, pred, orc);
  };
  return {"thm21(dickson,q=8,m=" + std::to_string(tower.m()) + ")", 7,
          std::move(run)};
}

AuditFamily thm21_generated_family(const FieldTower& tower) {
  if (tower.m() < 2)
    fail(ErrorCode::ParseError, "the generated family needs m > 1");

  struct State {
    const FieldTower* t;
    code_t c;  // first element outside F_q
    std::vector<LinearizedPoly> b_opts, l_opts;
    std::vector<std::string> b_names, l_names;
    std::vector<code_t> gamma_opts;
    std::size_t n_h;        // q^2 degree-<=1 polynomials
    std::size_t per_term;   // 3 * n_h * 2
    std::size_t k1, k2;     // block sizes per B
    // hypothesis clause caches
    std::vector<std::uint8_t> b_ok;               // additive+homogeneous per B
    std::vector<std::uint8_t> l_ok;               // additive per L
    std::vector<std::uint8_t> commute;            // [B][L]
    std::vector<std::uint8_t> h_ok;               // [B][h_code]
  };
  auto st = std::make_shared<State>();
  st->t = &tower;
  st->c = tower.q();
  st->b_opts = {LinearizedPoly::trace(tower), LinearizedPoly::identity(tower),
                LinearizedPoly::frobenius_q_minus_identity(tower)};
  st->b_names = {"tr", "id", "xq-x"};
  st->l_opts = {LinearizedPoly::identity(tower),
                LinearizedPoly::frobenius_q(tower, 1),
                LinearizedPoly::scalar(tower, st->c)};
  st->l_names = {"x", "x^q", "c*x"};
  st->gamma_opts = {0, st->c};
  st->n_h = std::size_t(tower.q()) * tower.q();
  st->per_term = 3 * st->n_h * 2;
  st->k1 = st->per_term;
  st->k2 = st->per_term * st->per_term;

  const auto additive_everywhere = [&](const LinearizedPoly& L) {
    const auto M = to_matrix(L);
    for (code_t x = 0; x < tower.size(); ++x)
      if (L.eval(x) != M.apply(x)) return false;
    return true;
  };
  const auto homogeneous = [&](const LinearizedPoly& B) {
    for (code_t c = 0; c < tower.q(); ++c)
      for (code_t v = 0; v < tower.size(); ++v)
        if (B.eval(tower.mul(c, v)) != tower.mul(c, B.eval(v))) return false;
    return true;
  };

  st->b_ok.resize(3);
  st->l_ok.resize(3);
  st->commute.resize(9);
  st->h_ok.resize(3 * st->n_h);
  for (std::size_t b = 0; b < 3; ++b) {
    st->b_ok[b] = additive_everywhere(st->b_opts[b]) && homogeneous(st->b_opts[b]);
    for (std::size_t l = 0; l < 3; ++l)
      st->commute[b * 3 + l] = check_commutation(st->l_opts[l], st->b_opts[b]);
    // image of B, for the h-value clause
    std::vector<bool> seen(tower.size(), false);
    for (code_t x = 0; x < tower.size(); ++x) seen[st->b_opts[b].eval(x)] = true;
    for (std::size_t hc = 0; hc < st->n_h; ++hc) {
      const code_t c0 = static_cast<code_t>(hc % tower.q());
      const code_t c1 = static_cast<code_t>(hc / tower.q());
      bool ok = true;
      for (code_t s = 0; s < tower.size() && ok; ++s)
        if (seen[s] && !tower.in_subfield(tower.add(c0, tower.mul(c1, s))))
          ok = false;
      st->h_ok[b * st->n_h + hc] = ok;
    }
  }
  for (std::size_t l = 0; l < 3; ++l)
    st->l_ok[l] = additive_everywhere(st->l_opts[l]);

  const std::size_t size = 3 * (st->k1 + st->k2);
  auto run = [st](std::size_t idx) {
    const auto& t = *st->t;
    const std::size_t block = st->k1 + st->k2;
    const std::size_t b_idx = idx / block;
    std::size_t rest = idx % block;
    const std::size_t k = rest < st->k1 ? 1 : 2;
    if (k == 2) rest -= st->k1;

    std::vector<LinearizedPoly> L;
    std::vector<code_t> gamma;
    std::vector<SubfieldPoly> h;
    std::string id = "#" + std::to_string(idx) + " B=" + st->b_names[b_idx] +
                     " k=" + std::to_string(k);
    bool hyp_ok = st->b_ok[b_idx];
    for (std::size_t term = 0; term < k; ++term) {
      const std::size_t tc = rest % st->per_term;
      rest /= st->per_term;
      const std::size_t l_idx = tc % 3;
      const std::size_t hc = (tc / 3) % st->n_h;
      const std::size_t g_idx = tc / (3 * st->n_h);
      L.push_back(st->l_opts[l_idx]);
      gamma.push_back(st->gamma_opts[g_idx]);
      h.push_back(SubfieldPoly(t,
                               {static_cast<code_t>(hc % t.q()),
                                static_cast<code_t>(hc / t.q())},
                               PolyDomain::Ext));
      id += " (L=" + st->l_names[l_idx] + ",h=" + std::to_string(hc) +
            ",g=" + std::to_string(st->gamma_opts[g_idx]) + ")";
      hyp_ok = hyp_ok && st->l_ok[l_idx] && st->commute[b_idx * 3 + l_idx] &&
               st->h_ok[b_idx * st->n_h + hc];
    }
    if (!hyp_ok) return skipped(std::move(id));

    Thm21Instance inst(t, std::move(L), std::move(gamma), std::move(h),
                       st->b_opts[b_idx]);
    const bool pred = check_thm21_cond1(inst) && check_thm21_cond2(inst);
    const bool orc =
        oracle::is_permutation(build_thm21(inst), Exec::Serial).is_permutation;
    return checked(std::move(id), pred, orc);
  };

  return {"thm21(generated,q=" + std::to_string(tower.q()) +
              ",m=" + std::to_string(tower.m()) + ")",
          size, std::move(run)};
}

AuditFamily thm41_trace_family(const FieldTower& tower) {
  if (tower.m() < 2)
    fail(ErrorCode::ParseError, "the translator family needs m > 1");

  struct State {
    const FieldTower* t;
    std::vector<LinearizedPoly> l1_opts, l2_opts;
    std::vector<std::string> l1_names, l2_names;
    std::shared_ptr<const FqMap> f;
    std::size_t n_tables;  // q^q
  };
  auto st = std::make_shared<State>();
  st->t = &tower;
  st->l1_opts = {LinearizedPoly::identity(tower),
                 LinearizedPoly::frobenius_q(tower, 1)};
  st->l1_names = {"x", "x^q"};
  st->l2_opts = {LinearizedPoly::identity(tower),
                 LinearizedPoly::scalar(tower, tower.q())};
  st->l2_names = {"x", "c*x"};
  st->f = std::make_shared<const FqMap>(FqMap::trace(tower));
  st->n_tables = 1;
  for (code_t i = 0; i < tower.q(); ++i) st->n_tables *= tower.q();

  const std::size_t size = 2 * 2 * tower.size() * st->n_tables;
  auto run = [st](std::size_t idx) {
    const auto& t = *st->t;
    const std::size_t l1_idx = idx % 2;
    std::size_t rest = idx / 2;
    const std::size_t l2_idx = rest % 2;
    rest /= 2;
    const code_t gamma = static_cast<code_t>(rest % t.size());
    const std::size_t hc = rest / t.size();

    std::vector<code_t> table(t.q());
    std::size_t c = hc;
    for (code_t i = 0; i < t.q(); ++i) {
      table[i] = static_cast<code_t>(c % t.q());
      c /= t.q();
    }
    Thm41Instance inst(t, st->l1_opts[l1_idx], st->l2_opts[l2_idx], gamma,
                       FqFunc::from_table(t, std::move(table)), *st->f);
    const std::string id = "#" + std::to_string(idx) +
                           " L1=" + st->l1_names[l1_idx] +
                           " L2=" + st->l2_names[l2_idx] +
                           " g=" + std::to_string(gamma) +
                           " h=" + std::to_string(hc);
    const bool pred = predicate_thm41(inst);
    const bool orc =
        oracle::is_permutation(build_thm41(inst), Exec::Serial).is_permutation;
    return checked(id, pred, orc);
  };

  return {"thm41(f=tr,q=" + std::to_string(tower.q()) +
              ",m=" + std::to_string(tower.m()) + ")",
          size, std::move(run)};
}

AuditFamily cor23_random_family(const FieldTower& tower, std::size_t count,
                                std::uint64_t seed) {
  auto run = [&tower, seed](std::size_t idx) {
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (idx + 1)));
    const auto draw = [&rng](code_t bound) {
      return static_cast<code_t>(rng() % bound);
    };

    // A random q-polynomial permutation with F_q coefficients.
    LinearizedPoly L = LinearizedPoly::zero(tower);
    while (true) {
      std::vector<code_t> coeffs(tower.m());
      for (auto& a : coeffs) a = draw(tower.q());
      L = LinearizedPoly::q_poly(tower, coeffs);
      if (is_linearized_permutation(L)) break;
    }
    const code_t gamma = draw(tower.size());
    SubfieldPoly h(tower, {draw(tower.q()), draw(tower.q()), draw(tower.q())},
                   PolyDomain::Base);

    const std::string id = "#" + std::to_string(idx) + " L=" + L.to_string() +
                           " g=" + std::to_string(gamma) + " h=" + h.to_string();
    const bool pred = predicate_cor23(L, gamma, h);
    const bool orc =
        oracle::is_permutation(build_cor23(L, gamma, h), Exec::Serial)
            .is_permutation;
    return checked(id, pred, orc);
  };
  return {"cor23(random,q=" + std::to_string(tower.q()) +
              ",m=" + std::to_string(tower.m()) + ",seed=" + std::to_string(seed) +
              ")",
          count, std::move(run)};
}

}  // namespace families
}  // namespace permpoly
