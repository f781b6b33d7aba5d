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
#include "permpoly/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

namespace permpoly {
namespace oracle {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<code_t> eval_over(const Map& map, const std::vector<code_t>& xs,
                              Exec exec) {
  std::vector<code_t> out(xs.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(xs.size()); ++i)
      out[i] = map.fn(xs[i]);
  } else {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = map.fn(xs[i]);
  }
  return out;
}

// Serial collision scan over precomputed values; xs[i] are the domain codes
// in ascending order, vals[i] their images.
PermutationReport scan_for_bijection(const FieldTower& t,
                                     const std::vector<code_t>& xs,
                                     const std::vector<code_t>& vals) {
  PermutationReport rep;
  rep.domain_size = xs.size();
  const code_t none = t.size();
  std::vector<code_t> first_preimage(t.size(), none);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const code_t v = vals[i];
    if (first_preimage[v] == none) {
      first_preimage[v] = xs[i];
      ++rep.image_size;
    } else if (!rep.first_collision) {
      rep.first_collision = {first_preimage[v], xs[i]};
    }
  }
  rep.is_permutation = rep.image_size == rep.domain_size;
  return rep;
}

}  // namespace

std::vector<code_t> tabulate_serial(const Map& map) {
  const code_t Q = map.tower->size();
  std::vector<code_t> out(Q);
  for (code_t x = 0; x < Q; ++x) out[x] = map.fn(x);
  return out;
}

std::vector<code_t> tabulate_parallel(const Map& map) {
  const code_t Q = map.tower->size();
  std::vector<code_t> out(Q);
#pragma omp parallel for schedule(static)
  for (std::int64_t x = 0; x < static_cast<std::int64_t>(Q); ++x)
    out[x] = map.fn(static_cast<code_t>(x));
  return out;
}

std::vector<code_t> tabulate(const Map& map, Exec exec) {
  return exec == Exec::Parallel ? tabulate_parallel(map) : tabulate_serial(map);
}

PermutationReport is_permutation(const Map& map, Exec exec) {
  const auto t0 = Clock::now();
  const auto& t = *map.tower;
  const auto vals = tabulate(map, exec);
  std::vector<code_t> xs(t.size());
  std::iota(xs.begin(), xs.end(), 0);
  auto rep = scan_for_bijection(t, xs, vals);
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

PermutationReport is_permutation_on(const Map& map,
                                    const std::vector<code_t>& domain,
                                    Exec exec) {
  const auto t0 = Clock::now();
  const auto& t = *map.tower;
  const auto vals = eval_over(map, domain, exec);

  std::vector<bool> in_domain(t.size(), false);
  for (code_t x : domain) in_domain[x] = true;
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (!in_domain[vals[i]])
      fail(ErrorCode::ImageEscape,
           "F(" + std::to_string(domain[i]) + ") = " + std::to_string(vals[i]) +
               " is outside the domain");

  auto rep = scan_for_bijection(t, domain, vals);
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

std::vector<code_t> image(const Map& map, Exec exec) {
  const auto& t = *map.tower;
  const auto vals = tabulate(map, exec);
  std::vector<bool> seen(t.size(), false);
  for (code_t v : vals) seen[v] = true;
  std::vector<code_t> out;
  for (code_t v = 0; v < t.size(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

std::vector<code_t> image_on(const Map& map, const std::vector<code_t>& domain,
                             Exec exec) {
  const auto& t = *map.tower;
  const auto vals = eval_over(map, domain, exec);
  std::vector<bool> seen(t.size(), false);
  for (code_t v : vals) seen[v] = true;
  std::vector<code_t> out;
  for (code_t v = 0; v < t.size(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

AuditReport audit_equivalence(const std::string& family_name,
                              std::size_t family_size,
                              const std::function<AuditOutcome(std::size_t)>& run,
                              Exec exec, std::size_t budget,
                              std::uint64_t seed) {
  const auto t0 = Clock::now();
  AuditReport rep;
  rep.family = family_name;
  rep.family_size = family_size;
  rep.seed = seed;

  std::vector<std::size_t> indices;
  if (family_size <= budget) {
    indices.resize(family_size);
    std::iota(indices.begin(), indices.end(), std::size_t{0});
  } else {
    rep.sampled = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dist(0, family_size - 1);
    indices.reserve(budget);
    for (std::size_t i = 0; i < budget; ++i) indices.push_back(dist(rng));
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  }

  std::vector<AuditOutcome> outcomes(indices.size());
  struct Failure {
    std::size_t slot;
    ErrorCode code;
    std::string message;
  };
  std::optional<Failure> failure;

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 32)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(indices.size()); ++i) {
      try {
        outcomes[i] = run(indices[i]);
      } catch (const Error& e) {
#pragma omp critical
        if (!failure || failure->slot > static_cast<std::size_t>(i))
          failure = Failure{static_cast<std::size_t>(i), e.code(), e.what()};
      } catch (const std::exception& e) {
#pragma omp critical
        if (!failure || failure->slot > static_cast<std::size_t>(i))
          failure = Failure{static_cast<std::size_t>(i), ErrorCode::Internal,
                            e.what()};
      }
    }
  } else {
    for (std::size_t i = 0; i < indices.size(); ++i) {
      try {
        outcomes[i] = run(indices[i]);
      } catch (const Error& e) {
        if (!failure) failure = Failure{i, e.code(), e.what()};
        break;
      } catch (const std::exception& e) {
        if (!failure) failure = Failure{i, ErrorCode::Internal, e.what()};
        break;
      }
    }
  }
  if (failure) throw Error(failure->code, failure->message);

  for (const auto& oc : outcomes) {
    if (oc.skipped) {
      ++rep.skipped;
      continue;
    }
    ++rep.instances_checked;
    if (oc.predicate == oc.oracle)
      ++rep.agreements;
    else
      rep.disagreements.push_back({oc.id, oc.predicate, oc.oracle});
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

std::vector<SubfieldPoly> search_h(SymmetricKind::Kind variant,
                                   const FieldTower& tower, std::uint64_t j,
                                   unsigned max_deg, Exec exec) {
  // Instance construction validates the index and gcd hypotheses; do it
  // once up front so callers get the error eagerly.
  Thm3Instance probe(tower, variant, j,
                     SubfieldPoly::constant(tower, 1, PolyDomain::Base));
  (void)probe;

  std::uint64_t count = 1;
  for (unsigned i = 0; i <= max_deg; ++i) count *= tower.q();

  std::vector<std::uint8_t> keep(count, 0);
  std::vector<std::uint8_t> mismatch(count, 0);
  const auto consider = [&](std::uint64_t code) {
    std::vector<code_t> coeffs(max_deg + 1);
    std::uint64_t c = code;
    for (unsigned i = 0; i <= max_deg; ++i) {
      coeffs[i] = static_cast<code_t>(c % tower.q());
      c /= tower.q();
    }
    Thm3Instance inst(tower, variant, j,
                      SubfieldPoly(tower, std::move(coeffs), PolyDomain::Base));
    if (!predicate_thm3(inst)) return;
    if (is_permutation(build_thm3(inst), Exec::Serial).is_permutation)
      keep[code] = 1;
    else
      mismatch[code] = 1;
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t code = 0; code < static_cast<std::int64_t>(count); ++code)
      consider(static_cast<std::uint64_t>(code));
  } else {
    for (std::uint64_t code = 0; code < count; ++code) consider(code);
  }

  for (std::uint64_t code = 0; code < count; ++code)
    if (mismatch[code])
      fail(ErrorCode::Internal,
           "predicate accepted h #" + std::to_string(code) +
               " but the oracle rejected it");

  std::vector<SubfieldPoly> out;
  for (std::uint64_t code = 0; code < count; ++code) {
    if (!keep[code]) continue;
    std::vector<code_t> coeffs(max_deg + 1);
    std::uint64_t c = code;
    for (unsigned i = 0; i <= max_deg; ++i) {
      coeffs[i] = static_cast<code_t>(c % tower.q());
      c /= tower.q();
    }
    out.emplace_back(tower, std::move(coeffs), PolyDomain::Base);
  }
  return out;
}

}  // namespace oracle
}  // namespace permpoly
