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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permpoly/field.hpp"
#include "permpoly/poly.hpp"
#include "permpoly/symm.hpp"

namespace permpoly {

/// A total map on the field, named for reports; fn must be a pure function
/// of the code (it is called concurrently).
struct Map {
  std::string name;
  const FieldTower* tower;
  std::function<code_t(code_t)> fn;

  code_t operator()(code_t x) const { return fn(x); }
};

/// Materialized F_q-valued map on F_{q^m}.
class FqMap {
 public:
  static FqMap trace(const FieldTower& t);
  static FqMap lambda(const FieldTower& t, std::uint64_t j);
  static FqMap mu(const FieldTower& t, std::uint64_t j);
  static FqMap of_kind(const FieldTower& t, const SymmetricKind& kind);
  /// From an F_{q^m}[x] polynomial whose values all lie in F_q
  /// (throws NotInSubfield otherwise).
  static FqMap from_poly(const SubfieldPoly& f);
  /// From an explicit table of Q entries, each an F_q code.
  static FqMap from_table(const FieldTower& t, std::vector<code_t> values,
                          std::string name = "table");

  const FieldTower& tower() const noexcept { return *tower_; }
  const std::string& name() const noexcept { return name_; }
  code_t operator()(code_t x) const { return values_[x]; }
  bool surjective() const noexcept { return surjective_; }
  const std::vector<code_t>& values() const noexcept { return values_; }

 private:
  FqMap(const FieldTower& t, std::vector<code_t> values, std::string name);

  const FieldTower* tower_;
  std::vector<code_t> values_;
  std::string name_;
  bool surjective_;
};

/// h: F_q -> F_q as a q-entry table.
class FqFunc {
 public:
  static FqFunc from_poly(const SubfieldPoly& h);  // base-domain polynomial
  static FqFunc from_table(const FieldTower& t, std::vector<code_t> values);
  static FqFunc zero(const FieldTower& t);

  const FieldTower& tower() const noexcept { return *tower_; }
  code_t operator()(code_t x) const { return values_[x]; }
  const std::vector<code_t>& values() const noexcept { return values_; }
  std::string to_string() const;

 private:
  FqFunc(const FieldTower& t, std::vector<code_t> values, std::string name);
  const FieldTower* tower_;
  std::vector<code_t> values_;
  std::string name_;
};

// ---------------------------------------------------------------------------
// Sums of linearized terms: F(x) = sum_i (L_i(x) + gamma_i) h_i(B(x))

struct Thm21Instance {
  const FieldTower* tower;
  std::vector<LinearizedPoly> ell;  // L_1..L_k, k >= 1
  std::vector<code_t> gamma;        // gamma_1..gamma_k
  std::vector<SubfieldPoly> h;      // h_1..h_k over F_{q^m}
  LinearizedPoly b_map;             // B

  Thm21Instance(const FieldTower& t, std::vector<LinearizedPoly> L,
                std::vector<code_t> g, std::vector<SubfieldPoly> hs,
                LinearizedPoly B);
  std::size_t k() const noexcept { return ell.size(); }
  std::string describe() const;
};

/// Which of the four hypothesis clauses hold, with the first counterexample
/// (in iteration order: term index, then element code) for each failing one.
struct Thm21Hypotheses {
  struct Witness {
    std::size_t term;  // 0-based; k() means "the B map"
    code_t x;
    code_t c;  // F_q scalar for the homogeneity clause
  };
  bool h_values_in_fq = false;   // (a) h_i(B(x)) in F_q for all i, x
  bool additive = false;         // (b) B and every L_i agree with their matrix
  bool commutes = false;         // (c) B(L_i(x)) == L_i(B(x))
  bool fq_homogeneous = false;   // (d) B(c x) == c B(x) for c in F_q
  std::optional<Witness> wa, wb, wc, wd;

  bool all() const noexcept {
    return h_values_in_fq && additive && commutes && fq_homogeneous;
  }
};

Thm21Hypotheses check_thm21_hypotheses(const Thm21Instance& inst);

struct Cond1Result {
  bool holds = false;
  std::optional<std::pair<code_t, code_t>> collision;  // (s1, s2) in S
};
struct Cond2Result {
  bool holds = false;
  std::optional<std::pair<code_t, code_t>> witness;  // (y, x)
};

/// Condition: G(x) = sum (L_i(x) + B(gamma_i)) h_i(x) maps S = B(F_{q^m})
/// bijectively onto itself.  G(S) not contained in S throws ImageEscape.
Cond1Result check_thm21_cond1_detail(const Thm21Instance& inst);
bool check_thm21_cond1(const Thm21Instance& inst);

/// Condition: for every y in S, ker(M_y) and ker(B) meet only in 0, where
/// M_y(x) = sum L_i(x) h_i(y).  Decided by the joint null space over F_p.
Cond2Result check_thm21_cond2_detail(const Thm21Instance& inst);
bool check_thm21_cond2(const Thm21Instance& inst);

/// Evaluator for F; B(x) is computed once per x and shared across the k
/// summands.  Verifies clause (a) up front and throws HypothesisViolation.
Map build_thm21(const Thm21Instance& inst);

/// F(x) = L_1(x) + (L_2(x) + gamma) h(Tr(x)) as a k = 2 instance.
Thm21Instance make_cor21(const FieldTower& t, LinearizedPoly L1,
                         LinearizedPoly L2, code_t gamma,
                         const SubfieldPoly& h_base);
/// F(x) = L(x) + x h(Tr(x)).
Thm21Instance make_cor22(const FieldTower& t, LinearizedPoly L,
                         const SubfieldPoly& h_base);

// ---------------------------------------------------------------------------
// x h(lambda_j(x)) and x h(mu_j(x))

struct Thm3Instance {
  const FieldTower* tower;
  SymmetricKind::Kind variant;  // Lambda or Mu
  std::uint64_t j;
  SubfieldPoly h;  // over F_q

  /// Validates the index range and the gcd hypothesis
  /// (gcd(j, q-1) = 1 for lambda, gcd(j, q^m-1) = 1 for mu).
  Thm3Instance(const FieldTower& t, SymmetricKind::Kind variant,
               std::uint64_t j, SubfieldPoly h);
  std::string describe() const;
};

Map build_thm3(const Thm3Instance& inst);
/// h(0) != 0 and x h(x)^j permutes F_q (exhaustively over the q codes).
bool predicate_thm3(const Thm3Instance& inst);

// ---------------------------------------------------------------------------
// Linear translators and L_1(x) + L_2(gamma) h(f(x))

struct LinearTranslatorCert {
  code_t alpha;  // nonzero
  code_t a;      // F_q code; equals f(alpha) - f(0)
  std::string f_name;
};

/// Exhaustive check of f(x + u*alpha) - f(x) == u*a over all x in F_{q^m}
/// and u in F_q.  alpha must be nonzero (ZeroAlpha).
bool is_linear_translator(const FqMap& f, code_t alpha, code_t a);

/// All certificates, ascending alpha code.  For each alpha only
/// a = f(alpha) - f(0) can satisfy the identity, so that value is tested.
std::vector<LinearTranslatorCert> find_linear_translators(
    const FqMap& f, Exec exec = Exec::Serial);

struct Thm41Instance {
  const FieldTower* tower;
  LinearizedPoly l1;  // must permute F_{q^m}
  LinearizedPoly l2;
  code_t gamma;
  FqFunc h;
  FqMap f;  // must be surjective onto F_q

  Thm41Instance(const FieldTower& t, LinearizedPoly L1, LinearizedPoly L2,
                code_t gamma, FqFunc h, FqMap f);
  std::string describe() const;
};

struct Thm41Analysis {
  code_t l2_gamma = 0;  // L_2(gamma)
  code_t alpha = 0;     // L_1^{-1}(L_2(gamma)); 0 iff l2_gamma == 0
  code_t b = 0;         // translator constant f(alpha) - f(0)
};

/// Validates the theorem hypotheses: L_1 a permutation (NotPermutationL1),
/// f surjective (NotSurjectiveF), and alpha = L_1^{-1}L_2(gamma) a b-linear
/// translator of f whenever L_2(gamma) != 0 (NotTranslator).
Thm41Analysis analyze_thm41(const Thm41Instance& inst);

/// Evaluator for G(x) = L_1(x) + L_2(gamma) h(f(x)).
Map build_thm41(const Thm41Instance& inst);
/// L_2(gamma) == 0, or x + b h(x) permutes F_q.
bool predicate_thm41(const Thm41Instance& inst);

Thm41Instance make_cor41(const FieldTower& t, const LinearizedPoly& L,
                         code_t gamma, FqFunc h, FqMap f);

// ---------------------------------------------------------------------------
// L(x) + gamma h(Tr(x)) for a q-polynomial permutation L with F_q
// coefficients

/// Whether s x + c h(x) permutes F_q, with s = a_0 + ... + a_{m-1} the
/// coefficient sum of L and c = Tr(gamma).  Throws NotPermutationL when L
/// does not permute F_{q^m} and HypothesisViolation when L is not a
/// q-polynomial with F_q coefficients.
bool predicate_cor23(const LinearizedPoly& L, code_t gamma,
                     const SubfieldPoly& h_base);
/// The inner bijection test of predicate_cor23, exposed on raw values:
/// x -> s x + c h(x) over F_q.
bool cor23_g_permutes(const FieldTower& t, code_t s, code_t c,
                      const SubfieldPoly& h_base);
/// Evaluator for F(x) = L(x) + gamma h(Tr(x)).
Map build_cor23(const LinearizedPoly& L, code_t gamma,
                const SubfieldPoly& h_base);

}  // namespace permpoly
