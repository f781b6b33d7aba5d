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
#include <string>

#include "permpoly/oracle.hpp"

namespace permpoly {
namespace families {

/// A generated audit family: `run(index)` builds the index-th instance,
/// evaluates the theorem predicate and the exhaustive oracle, and reports
/// both (or marks the instance skipped when its hypotheses fail).
struct AuditFamily {
  std::string name;
  std::size_t size = 0;
  std::function<oracle::AuditOutcome(std::size_t)> run;
};

/// All q^(max_deg+1) coefficient tuples for h, audited through
/// x h(lambda_j(x)) or x h(mu_j(x)).
AuditFamily thm3_family(const FieldTower& tower, SymmetricKind::Kind variant,
                        std::uint64_t j, unsigned max_deg);

/// The seven instances a in F_8* of
/// F(x) = a^2 x + x^2 (Tr(x)^3 - a Tr(x)) over F_{8^m}; requires q = 8.
AuditFamily thm21_dickson_family(const FieldTower& tower);

/// Generated sum-of-linearized-terms family: B in {Tr, id, x^q - x},
/// k in {1, 2}, each term from L in {x, x^q, c x}, h of degree <= 1 over
/// F_q, gamma in {0, c}, where c is the first element outside F_q.
/// Instances failing the hypothesis clauses are skipped (and counted by the
/// audit); hypothesis sub-checks are cached per (B, L) and (B, h) pair.
AuditFamily thm21_generated_family(const FieldTower& tower);

/// f = Tr, L1 in {x, x^q}, L2 in {x, c x}, gamma over the whole field and
/// h over every function F_q -> F_q given as a table.  Every instance
/// carries a certified translator.
AuditFamily thm41_trace_family(const FieldTower& tower);

/// Seeded random (L, gamma, h) triples with L a q-polynomial permutation
/// with F_q coefficients, audited through L(x) + gamma h(Tr(x)).
AuditFamily cor23_random_family(const FieldTower& tower, std::size_t count,
                                std::uint64_t seed);

}  // namespace families
}  // namespace permpoly
