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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "permpoly/construct.hpp"

using namespace permpoly;

namespace {

// F(x) = a^2 x + x^2 (Tr(x)^3 - a Tr(x)) over F_{8^m} as a two-term instance.
Thm21Instance dickson_instance(const FieldTower& t, code_t a) {
  std::vector<LinearizedPoly> L{LinearizedPoly::scalar(t, t.mul(a, a)),
                                LinearizedPoly::monomial(t, 1, 1)};
  std::vector<code_t> gamma{0, 0};
  std::vector<SubfieldPoly> h{SubfieldPoly::constant(t, 1, PolyDomain::Ext),
                              SubfieldPoly(t, {0, t.neg(a), 0, 1}, PolyDomain::Ext)};
  return Thm21Instance(t, std::move(L), std::move(gamma), std::move(h),
                       LinearizedPoly::trace(t));
}

bool map_is_bijection(const Map& map) {
  std::set<code_t> img;
  for (code_t x = 0; x < map.tower->size(); ++x) img.insert(map(x));
  return img.size() == map.tower->size();
}

}  // namespace

TEST_CASE("dickson-style instance passes everything") {
  const auto t = FieldTower::make(2, 3, 3);
  for (code_t a = 1; a < 8; ++a) {
    const auto inst = dickson_instance(t, a);
    const auto hyp = check_thm21_hypotheses(inst);
    CHECK(hyp.h_values_in_fq);
    CHECK(hyp.additive);
    CHECK(hyp.commutes);
    CHECK(hyp.fq_homogeneous);
    CHECK(hyp.all());
    CHECK(check_thm21_cond1(inst));
    CHECK(check_thm21_cond2(inst));
    CHECK(map_is_bijection(build_thm21(inst)));
  }
}

TEST_CASE("degenerate and simple instances") {
  const auto t = FieldTower::make(2, 2, 2);

  // k = 0 is rejected
  try {
    Thm21Instance(t, {}, {}, {}, LinearizedPoly::trace(t));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateInstance);
  }

  // k = 1, h = 1, gamma = 0 reduces to L_1
  const auto frob = LinearizedPoly::frobenius_q(t, 1);
  Thm21Instance reduce(t, {frob}, {0},
                       {SubfieldPoly::constant(t, 1, PolyDomain::Ext)},
                       LinearizedPoly::trace(t));
  const auto F = build_thm21(reduce);
  for (code_t x = 0; x < t.size(); ++x) CHECK(F(x) == frob.eval(x));

  // k = 1, L = 0, h = 1: constant gamma, never a permutation
  Thm21Instance constant(t, {LinearizedPoly::zero(t)}, {7},
                         {SubfieldPoly::constant(t, 1, PolyDomain::Ext)},
                         LinearizedPoly::trace(t));
  const auto C = build_thm21(constant);
  for (code_t x = 0; x < t.size(); ++x) CHECK(C(x) == 7);
  CHECK(!map_is_bijection(C));
}

TEST_CASE("hypothesis clause (a)") {
  const auto t = FieldTower::make(2, 2, 2);
  const auto tr = LinearizedPoly::trace(t);

  // h(x) = x composed with the trace stays in F_q
  Thm21Instance ok(t, {LinearizedPoly::identity(t)}, {0},
                   {SubfieldPoly(t, {0, 1}, PolyDomain::Ext)}, tr);
  CHECK(check_thm21_hypotheses(ok).h_values_in_fq);

  // h(x) = w x with w outside F_q escapes
  const code_t w = t.q();
  Thm21Instance bad(t, {LinearizedPoly::identity(t)}, {0},
                    {SubfieldPoly(t, {0, w}, PolyDomain::Ext)}, tr);
  const auto hyp = check_thm21_hypotheses(bad);
  CHECK(!hyp.h_values_in_fq);
  REQUIRE(hyp.wa.has_value());
  // the reported witness is the first x in code order with h(B(x)) outside F_q
  CHECK(!t.in_subfield(t.mul(w, tr.eval(hyp.wa->x))));
  for (code_t x = 0; x < hyp.wa->x; ++x)
    CHECK(t.in_subfield(t.mul(w, tr.eval(x))));

  try {
    build_thm21(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisViolation);
  }
}

TEST_CASE("hypothesis clauses (c) and (d)") {
  const auto t = FieldTower::make(2, 2, 2);
  const auto one = SubfieldPoly::constant(t, 1, PolyDomain::Ext);

  // c*x with c outside F_q does not commute with x^q - x
  Thm21Instance inst(t, {LinearizedPoly::scalar(t, t.q())}, {0}, {one},
                     LinearizedPoly::frobenius_q_minus_identity(t));
  const auto hyp = check_thm21_hypotheses(inst);
  CHECK(hyp.additive);
  CHECK(!hyp.commutes);
  CHECK(hyp.fq_homogeneous);

  // B = x^p is additive but not F_q-homogeneous once q > p
  Thm21Instance inst2(t, {LinearizedPoly::identity(t)}, {0}, {one},
                      LinearizedPoly::monomial(t, 1, 1));
  const auto hyp2 = check_thm21_hypotheses(inst2);
  CHECK(hyp2.additive);
  CHECK(!hyp2.fq_homogeneous);
  REQUIRE(hyp2.wd.has_value());
  CHECK(!t.in_subfield(t.q()));  // sanity: F_16/F_4 has elements beyond F_4

  // scalar multiplication by any c is F_q-homogeneous, even for c outside F_q
  Thm21Instance inst3(t, {LinearizedPoly::identity(t)}, {0}, {one},
                      LinearizedPoly::scalar(t, t.q()));
  CHECK(check_thm21_hypotheses(inst3).fq_homogeneous);
}

TEST_CASE("condition 1") {
  const auto t = FieldTower::make(2, 2, 2);
  const auto one = SubfieldPoly::constant(t, 1, PolyDomain::Ext);

  // B = identity: the condition is over the whole field
  Thm21Instance whole(t, {LinearizedPoly::identity(t)}, {0}, {one},
                      LinearizedPoly::identity(t));
  CHECK(check_thm21_cond1(whole));

  // B = Tr, G = x on S = F_q
  Thm21Instance on_sub(t, {LinearizedPoly::identity(t)}, {0}, {one},
                       LinearizedPoly::trace(t));
  CHECK(check_thm21_cond1(on_sub));

  // over F_{8^3} the Dickson case restricts to D_5 on F_8
  const auto big = FieldTower::make(2, 3, 3);
  CHECK(check_thm21_cond1(dickson_instance(big, 2)));

  // L = 0 makes G constant on S, which fails whenever |S| > 1
  Thm21Instance zero(t, {LinearizedPoly::zero(t)}, {0}, {one},
                     LinearizedPoly::trace(t));
  const auto det = check_thm21_cond1_detail(zero);
  CHECK(!det.holds);
  REQUIRE(det.collision.has_value());
  CHECK(det.collision->first == 0);
  CHECK(det.collision->second == 1);
}

TEST_CASE("condition 2") {
  const auto t = FieldTower::make(2, 2, 2);
  const auto one = SubfieldPoly::constant(t, 1, PolyDomain::Ext);

  // B a permutation: vacuously true
  Thm21Instance vac(t, {LinearizedPoly::zero(t)}, {0}, {one},
                    LinearizedPoly::frobenius_q(t, 1));
  CHECK(check_thm21_cond2(vac));

  // L = 0 with B = Tr fails; witness is the smallest nonzero trace-zero x
  Thm21Instance fails(t, {LinearizedPoly::zero(t)}, {0}, {one},
                      LinearizedPoly::trace(t));
  const auto det = check_thm21_cond2_detail(fails);
  CHECK(!det.holds);
  REQUIRE(det.witness.has_value());
  const auto tr = LinearizedPoly::trace(t);
  CHECK(det.witness->second != 0);
  CHECK(tr.eval(det.witness->second) == 0);
  for (code_t x = 1; x < det.witness->second; ++x) CHECK(tr.eval(x) != 0);

  const auto big = FieldTower::make(2, 3, 3);
  CHECK(check_thm21_cond2(dickson_instance(big, 2)));
}

TEST_CASE("theorem equivalence on a small generated corpus") {
  const auto t = FieldTower::make(2, 2, 2);
  const auto tr = LinearizedPoly::trace(t);
  std::size_t both_true = 0, both_false = 0;
  for (code_t h0 = 0; h0 < t.q(); ++h0)
    for (code_t h1 = 0; h1 < t.q(); ++h1)
      for (int l_idx = 0; l_idx < 2; ++l_idx) {
        const auto L = l_idx == 0 ? LinearizedPoly::identity(t)
                                  : LinearizedPoly::frobenius_q(t, 1);
        Thm21Instance inst(t, {L}, {0},
                           {SubfieldPoly(t, {h0, h1}, PolyDomain::Ext)}, tr);
        if (!check_thm21_hypotheses(inst).all()) continue;
        const bool pred = check_thm21_cond1(inst) && check_thm21_cond2(inst);
        const bool orc = map_is_bijection(build_thm21(inst));
        CHECK(pred == orc);
        (orc ? both_true : both_false)++;
      }
  CHECK(both_true > 0);
  CHECK(both_false > 0);
}

TEST_CASE("x h(lambda_j) construction") {
  const auto f25 = FieldTower::make(5, 1, 2);
  Thm3Instance inst(f25, SymmetricKind::Kind::Lambda, 1,
                    SubfieldPoly::parse(f25, "2,1,1", PolyDomain::Base));
  CHECK(predicate_thm3(inst));
  CHECK(map_is_bijection(build_thm3(inst)));

  // x h(x) maps F_5 as 0,1,2,3,4 -> 0,4,1,2,3
  const auto h = inst.h;
  const std::vector<code_t> expect{0, 4, 1, 2, 3};
  for (code_t x = 0; x < 5; ++x) CHECK(f25.mul(x, h.eval(x)) == expect[x]);

  // h(0) = 0 fails the predicate and the construction is not a permutation
  Thm3Instance zero_h(f25, SymmetricKind::Kind::Lambda, 1,
                      SubfieldPoly::parse(f25, "0,1", PolyDomain::Base));
  CHECK(!predicate_thm3(zero_h));
  CHECK(!map_is_bijection(build_thm3(zero_h)));

  // constant nonzero h scales by a unit
  Thm3Instance c_h(f25, SymmetricKind::Kind::Lambda, 1,
                   SubfieldPoly::constant(f25, 3, PolyDomain::Base));
  CHECK(predicate_thm3(c_h));
  CHECK(map_is_bijection(build_thm3(c_h)));

  // zero h gives the zero map
  Thm3Instance zero(f25, SymmetricKind::Kind::Lambda, 1,
                    SubfieldPoly(f25, {}, PolyDomain::Base));
  CHECK(!predicate_thm3(zero));
  CHECK(!map_is_bijection(build_thm3(zero)));
}

TEST_CASE("gcd hypotheses are enforced") {
  const auto f125 = FieldTower::make(5, 1, 3);
  try {
    Thm3Instance(f125, SymmetricKind::Kind::Lambda, 2,
                 SubfieldPoly::constant(f125, 1, PolyDomain::Base));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GcdViolation);  // gcd(2, 4) = 2
  }

  const auto f16 = FieldTower::make(2, 2, 2);
  try {
    Thm3Instance(f16, SymmetricKind::Kind::Mu, 3,
                 SubfieldPoly::constant(f16, 1, PolyDomain::Base));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GcdViolation);  // gcd(3, 15) = 3
  }

  try {
    Thm3Instance(f16, SymmetricKind::Kind::Lambda, 2,
                 SubfieldPoly::constant(f16, 1, PolyDomain::Base));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);  // m = 2 allows only j = 1
  }
}

TEST_CASE("linear translators of the trace") {
  const auto t = FieldTower::make(2, 2, 2);
  const auto f = FqMap::trace(t);
  for (code_t alpha = 1; alpha < t.size(); ++alpha) {
    CHECK(is_linear_translator(f, alpha, trace_rel(t, alpha)));
  }
  const auto certs = find_linear_translators(f);
  REQUIRE(certs.size() == t.size() - 1);
  for (const auto& c : certs) CHECK(c.a == trace_rel(t, c.alpha));

  // a wrong constant is rejected: pick alpha with Tr(alpha) = 1, claim a = 0
  CHECK(!is_linear_translator(f, 4, 0));  // Tr(y) = 1

  try {
    is_linear_translator(f, 0, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroAlpha);
  }
}

TEST_CASE("translators of a constant map and of Tr(x^2)") {
  const auto t = FieldTower::make(2, 2, 2);
  const auto constant =
      FqMap::from_table(t, std::vector<code_t>(t.size(), 3), "const3");
  const auto certs = find_linear_translators(constant);
  REQUIRE(certs.size() == t.size() - 1);
  for (const auto& c : certs) CHECK(c.a == 0);

  // f(x) = Tr(x^2): translators are exactly the nonzero alpha with
  // Tr(alpha^2) = 0, each with constant 0.
  std::vector<code_t> table(t.size());
  for (code_t x = 0; x < t.size(); ++x)
    table[x] = trace_rel(t, t.mul(x, x));
  const auto f2 = FqMap::from_table(t, std::move(table), "tr(x^2)");
  const auto certs2 = find_linear_translators(f2);
  REQUIRE(certs2.size() == 3);
  CHECK(certs2[0].alpha == 1);
  CHECK(certs2[1].alpha == 2);
  CHECK(certs2[2].alpha == 3);
  for (const auto& c : certs2) CHECK(c.a == 0);

  // f = mu_3 on F_16/F_4 admits no translator at all
  const auto mu3 = FqMap::mu(t, 3);
  CHECK(find_linear_translators(mu3).empty());
}

TEST_CASE("translator-form analysis") {
  const auto t = FieldTower::make(2, 2, 2);
  const code_t c = t.q();  // first element outside F_4
  Thm41Instance inst(t, LinearizedPoly::frobenius_q(t, 1),
                     LinearizedPoly::scalar(t, c), 7,
                     FqFunc::from_poly(SubfieldPoly(t, {0, 1}, PolyDomain::Base)),
                     FqMap::trace(t));
  const auto an = analyze_thm41(inst);
  CHECK(an.l2_gamma == 10);  // c * 7
  CHECK(an.alpha == 8);      // (c*7)^{q^(m-1)}
  CHECK(an.b == 2);          // Tr(8)
  CHECK(t.frobenius_q(an.alpha, 1) == an.l2_gamma);

  // L_2(gamma) = 0 collapses to L_1
  Thm41Instance collapse(t, LinearizedPoly::frobenius_q(t, 1),
                         LinearizedPoly::zero(t), 7,
                         FqFunc::from_poly(SubfieldPoly(t, {1, 2}, PolyDomain::Base)),
                         FqMap::trace(t));
  const auto an0 = analyze_thm41(collapse);
  CHECK(an0.l2_gamma == 0);
  CHECK(predicate_thm41(collapse));
  const auto G = build_thm41(collapse);
  const auto L1 = LinearizedPoly::frobenius_q(t, 1);
  for (code_t x = 0; x < t.size(); ++x) CHECK(G(x) == L1.eval(x));
  CHECK(map_is_bijection(G));
}

TEST_CASE("translator-form error paths") {
  const auto t = FieldTower::make(2, 2, 2);
  const auto h = FqFunc::from_poly(SubfieldPoly(t, {0, 1}, PolyDomain::Base));

  try {
    Thm41Instance bad(t, LinearizedPoly::frobenius_q_minus_identity(t),
                      LinearizedPoly::identity(t), 1, h, FqMap::trace(t));
    analyze_thm41(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPermutationL1);
  }

  try {
    Thm41Instance bad(t, LinearizedPoly::identity(t),
                      LinearizedPoly::identity(t), 1, h,
                      FqMap::from_table(t, std::vector<code_t>(t.size(), 2),
                                        "const2"));
    analyze_thm41(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSurjectiveF);
  }

  // f = Tr(x^2) is onto, but alpha = gamma = y has Tr(y^2) = 1 != 0, so it
  // is not a translator.
  std::vector<code_t> table(t.size());
  for (code_t x = 0; x < t.size(); ++x) table[x] = trace_rel(t, t.mul(x, x));
  try {
    Thm41Instance bad(t, LinearizedPoly::identity(t),
                      LinearizedPoly::identity(t), 4, h,
                      FqMap::from_table(t, std::move(table), "tr(x^2)"));
    analyze_thm41(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTranslator);
  }
}

TEST_CASE("translator-form predicate rows") {
  // b = 0: x + 0 h(x) is the identity, so the predicate holds.
  const auto t = FieldTower::make(2, 2, 2);
  Thm41Instance b0(t, LinearizedPoly::identity(t), LinearizedPoly::identity(t),
                   1,  // gamma = 1 in F_q, so alpha = 1 and b = Tr(1) = 0
                   FqFunc::from_poly(SubfieldPoly(t, {3, 2, 1}, PolyDomain::Base)),
                   FqMap::trace(t));
  const auto an = analyze_thm41(b0);
  CHECK(an.b == 0);
  CHECK(predicate_thm41(b0));
  CHECK(map_is_bijection(build_thm41(b0)));

  // h = 0 leaves the identity as well.
  Thm41Instance h0(t, LinearizedPoly::identity(t), LinearizedPoly::identity(t),
                   4, FqFunc::zero(t), FqMap::trace(t));
  CHECK(predicate_thm41(h0));
  CHECK(map_is_bijection(build_thm41(h0)));

  // q = 5: b = 1 and h(x) = -x makes g identically zero.
  const auto f25 = FieldTower::make(5, 1, 2);
  Thm41Instance deg(f25, LinearizedPoly::identity(f25),
                    LinearizedPoly::identity(f25), 3,
                    FqFunc::from_poly(SubfieldPoly(f25, {0, 4}, PolyDomain::Base)),
                    FqMap::trace(f25));
  const auto an2 = analyze_thm41(deg);
  CHECK(an2.b == 1);  // Tr(3) = 2*3 = 1 mod 5
  CHECK(!predicate_thm41(deg));
  CHECK(!map_is_bijection(build_thm41(deg)));
}

TEST_CASE("translator-form equivalence (corollary shape included)") {
  const auto t = FieldTower::make(2, 2, 2);
  const auto f = FqMap::trace(t);
  std::mt19937_64 rng(77);
  std::size_t seen_true = 0, seen_false = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<code_t> table(t.q());
    for (auto& v : table) v = static_cast<code_t>(rng() % t.q());
    const code_t gamma = static_cast<code_t>(rng() % t.size());
    Thm41Instance inst = make_cor41(t, LinearizedPoly::frobenius_q(t, 1), gamma,
                                    FqFunc::from_table(t, std::move(table)), f);
    const bool pred = predicate_thm41(inst);
    const bool orc = map_is_bijection(build_thm41(inst));
    CHECK(pred == orc);
    (orc ? seen_true : seen_false)++;
  }
  CHECK(seen_true > 0);
  CHECK(seen_false > 0);
}

TEST_CASE("coefficient-sum predicate") {
  const auto t = FieldTower::make(2, 2, 2);
  const auto h = SubfieldPoly::parse(t, "1,2", PolyDomain::Base);

  // Tr(gamma) = 0 with s != 0: a scalar bijection
  const auto L = LinearizedPoly::identity(t);  // s = 1
  CHECK(predicate_cor23(L, 1, h));  // gamma = 1 lies in F_4, so Tr = 0

  // the inner map with s = 0 and c = 0 is identically zero
  CHECK(!cor23_g_permutes(t, 0, 0, h));
  CHECK(cor23_g_permutes(t, 1, 0, h));

  // a non-permutation L is rejected
  try {
    predicate_cor23(LinearizedPoly::frobenius_q_minus_identity(t), 0, h);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPermutationL);
  }

  // a p-linear map that is not a q-polynomial is rejected
  const auto f512 = FieldTower::make(2, 3, 3);
  try {
    predicate_cor23(LinearizedPoly::monomial(f512, 1, 1), 0,
                    SubfieldPoly::constant(f512, 1, PolyDomain::Base));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisViolation);
  }
}

TEST_CASE("coefficient-sum predicate agrees with the oracle") {
  const auto t = FieldTower::make(2, 2, 2);
  std::mt19937_64 rng(31337);
  std::size_t tested = 0, seen_true = 0, seen_false = 0;
  while (tested < 100) {
    std::vector<code_t> coeffs(t.m());
    for (auto& a : coeffs) a = static_cast<code_t>(rng() % t.q());
    const auto L = LinearizedPoly::q_poly(t, coeffs);
    if (!is_linearized_permutation(L)) continue;
    const code_t gamma = static_cast<code_t>(rng() % t.size());
    SubfieldPoly h(t, {static_cast<code_t>(rng() % t.q()),
                       static_cast<code_t>(rng() % t.q()),
                       static_cast<code_t>(rng() % t.q())},
                   PolyDomain::Base);
    const bool pred = predicate_cor23(L, gamma, h);
    const bool orc = map_is_bijection(build_cor23(L, gamma, h));
    CHECK(pred == orc);
    (orc ? seen_true : seen_false)++;
    ++tested;
  }
  CHECK(seen_true > 0);
  CHECK(seen_false > 0);
}

TEST_CASE("corollary translations agree with the general machinery") {
  const auto t = FieldTower::make(2, 2, 2);
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 40; ++i) {
    std::vector<code_t> coeffs(t.m());
    for (auto& a : coeffs) a = static_cast<code_t>(rng() % t.q());
    const auto L = LinearizedPoly::q_poly(t, coeffs);
    SubfieldPoly h(t, {static_cast<code_t>(rng() % t.q()),
                       static_cast<code_t>(rng() % t.q())},
                   PolyDomain::Base);

    // direct evaluation of L(x) + x h(Tr(x))
    const auto inst = make_cor22(t, L, h);
    CHECK(check_thm21_hypotheses(inst).all());
    const auto F = build_thm21(inst);
    for (code_t x = 0; x < t.size(); ++x) {
      const code_t direct = t.add(
          L.eval(x), t.mul(x, t.embed(h.eval(trace_rel(t, x)))));
      CHECK(F(x) == direct);
    }
    const bool pred = check_thm21_cond1(inst) && check_thm21_cond2(inst);
    CHECK(pred == map_is_bijection(F));

    // the first condition is exactly "L(x) + x h(x) permutes F_q"
    std::set<code_t> g_img;
    for (code_t x = 0; x < t.q(); ++x)
      g_img.insert(t.add(L.eval(x), t.mul(x, h.eval(x))));
    CHECK(check_thm21_cond1(inst) == (g_img.size() == t.q()));
  }
}

TEST_CASE("value-map validation") {
  const auto t = FieldTower::make(2, 2, 2);

  // an F_{q^m}[x] polynomial that is not F_q-valued is rejected
  try {
    FqMap::from_poly(SubfieldPoly(t, {0, 1}, PolyDomain::Ext));  // x itself
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInSubfield);
  }

  // wrong table length
  try {
    FqMap::from_table(t, {0, 1, 2});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }

  CHECK(FqMap::trace(t).surjective());
  CHECK(!FqMap::from_table(t, std::vector<code_t>(t.size(), 0), "0").surjective());

  try {
    FqFunc::from_table(t, {0, 1});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}
