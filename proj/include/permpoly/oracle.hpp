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
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permpoly/construct.hpp"
#include "permpoly/field.hpp"

namespace permpoly {
namespace oracle {

/// Ground-truth bijectivity verdict from exhaustive evaluation.
struct PermutationReport {
  bool is_permutation = false;
  std::size_t domain_size = 0;
  std::size_t image_size = 0;
  /// First pair (x1, x2) in ascending scan order with F(x1) = F(x2), x1 < x2.
  std::optional<std::pair<code_t, code_t>> first_collision;
  double elapsed_ms = 0.0;

  /// Equality of the verdict fields (elapsed_ms is timing noise).
  bool same_verdict(const PermutationReport& o) const {
    return is_permutation == o.is_permutation && domain_size == o.domain_size &&
           image_size == o.image_size && first_collision == o.first_collision;
  }
};

/// Map values over the full field in code order.  The parallel kernel and
/// the serial reference produce identical tables; everything downstream of
/// the table is a deterministic serial scan.
std::vector<code_t> tabulate(const Map& map, Exec exec = Exec::Parallel);
std::vector<code_t> tabulate_serial(const Map& map);
std::vector<code_t> tabulate_parallel(const Map& map);

/// Evaluates every element of the full field once.
PermutationReport is_permutation(const Map& map, Exec exec = Exec::Parallel);

/// Subset variant: verifies image(domain) is contained in domain (throws
/// ImageEscape otherwise) before deciding bijectivity.  The domain must be
/// sorted and duplicate-free.
PermutationReport is_permutation_on(const Map& map,
                                    const std::vector<code_t>& domain,
                                    Exec exec = Exec::Parallel);

/// Exhaustive image as sorted codes.
std::vector<code_t> image(const Map& map, Exec exec = Exec::Parallel);
std::vector<code_t> image_on(const Map& map, const std::vector<code_t>& domain,
                             Exec exec = Exec::Parallel);

/// One audited instance: the theorem-side verdict against the oracle-side
/// verdict, or skipped when the instance fails its hypotheses.
struct AuditOutcome {
  std::string id;
  bool skipped = false;
  bool predicate = false;
  bool oracle = false;
};

struct AuditReport {
  std::string family;
  std::size_t family_size = 0;
  std::size_t instances_checked = 0;  // excludes skipped
  std::size_t skipped = 0;
  std::size_t agreements = 0;
  struct Disagreement {
    std::string id;
    bool predicate = false;
    bool oracle = false;
  };
  std::vector<Disagreement> disagreements;
  bool sampled = false;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
};

constexpr std::size_t kDefaultAuditBudget = 1'000'000;
constexpr std::uint64_t kDefaultAuditSeed = 0x70b1ed5eedULL;

/// Runs `run(index)` for every instance of the family (or for a seeded
/// deterministic sample of `budget` indices when the family is larger) and
/// tallies predicate/oracle agreement.  Results are independent of the
/// execution policy and worker count.
AuditReport audit_equivalence(
    const std::string& family_name, std::size_t family_size,
    const std::function<AuditOutcome(std::size_t)>& run,
    Exec exec = Exec::Parallel, std::size_t budget = kDefaultAuditBudget,
    std::uint64_t seed = kDefaultAuditSeed);

/// Enumerates every h over F_q with deg <= max_deg (all coefficient tuples
/// in ascending code order) and returns those whose construction passes the
/// theorem predicate; each survivor is re-certified by the full-field
/// oracle before inclusion, and a predicate/oracle mismatch is an internal
/// error.
std::vector<SubfieldPoly> search_h(SymmetricKind::Kind variant,
                                   const FieldTower& tower, std::uint64_t j,
                                   unsigned max_deg,
                                   Exec exec = Exec::Parallel);

}  // namespace oracle
}  // namespace permpoly
