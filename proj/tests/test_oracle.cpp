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

#include <omp.h>

#include "permpoly/families.hpp"
#include "permpoly/oracle.hpp"

using namespace permpoly;
using oracle::AuditOutcome;

namespace {

Map identity_map(const FieldTower& t) {
  return {"id", &t, [](code_t x) { return x; }};
}

Map frobq_minus_id_map(const FieldTower& t) {
  return {"x^q-x", &t,
          [&t](code_t x) { return t.sub(t.frobenius_q(x, 1), x); }};
}

Map dickson5_map(const FieldTower& t, code_t a) {
  return {"D5", &t, [&t, a](code_t x) { return dickson_eval(5, a, x, t); }};
}

}  // namespace

TEST_CASE("bijection reports") {
  const auto t = FieldTower::make(2, 2, 2);

  const auto rep = oracle::is_permutation(identity_map(t));
  CHECK(rep.is_permutation);
  CHECK(rep.domain_size == 16);
  CHECK(rep.image_size == 16);
  CHECK(!rep.first_collision.has_value());

  const auto rep2 = oracle::is_permutation(frobq_minus_id_map(t));
  CHECK(!rep2.is_permutation);
  CHECK(rep2.image_size == 4);  // the image has Q/q elements
  REQUIRE(rep2.first_collision.has_value());
  CHECK(rep2.first_collision->first == 0);
  CHECK(rep2.first_collision->second == 1);
}

TEST_CASE("the worked permutation of F_512") {
  const auto t = FieldTower::make(2, 3, 3);
  const code_t a = 2;
  const Map F{"F", &t, [&t, a](code_t x) {
                const code_t tr = trace_rel(t, x);
                const code_t h =
                    t.sub(t.mul(t.mul(tr, tr), tr), t.mul(a, tr));
                return t.add(t.mul(t.mul(a, a), x), t.mul(t.mul(x, x), h));
              }};
  const auto rep = oracle::is_permutation(F);
  CHECK(rep.is_permutation);
  CHECK(rep.image_size == 512);
}

TEST_CASE("subset domains") {
  const auto t = FieldTower::make(2, 3, 3);
  // the embedded F_8 is closed under the Dickson map
  std::vector<code_t> sub;
  for (code_t c = 0; c < 8; ++c) sub.push_back(c);
  const auto rep = oracle::is_permutation_on(dickson5_map(t, 3), sub);
  CHECK(rep.is_permutation);
  CHECK(rep.domain_size == 8);

  // multiplying by an element outside the subfield escapes it
  const Map esc{"escape", &t, [&t](code_t x) { return t.mul(x, 8); }};
  try {
    oracle::is_permutation_on(esc, sub);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ImageEscape);
  }
}

TEST_CASE("images") {
  const auto t = FieldTower::make(2, 3, 3);
  const Map tr{"tr", &t, [&t](code_t x) { return trace_rel(t, x); }};
  CHECK(oracle::image(tr) == std::vector<code_t>{0, 1, 2, 3, 4, 5, 6, 7});

  const auto f4 = FieldTower::make(2, 2, 1);
  const Map cube{"x^3", &f4, [&f4](code_t x) { return f4.pow(x, 3); }};
  CHECK(oracle::image(cube) == std::vector<code_t>{0, 1});

  const Map c7{"const", &t, [](code_t) { return code_t{7}; }};
  CHECK(oracle::image(c7) == std::vector<code_t>{7});
}

TEST_CASE("serial and parallel kernels produce identical reports") {
  const auto t = FieldTower::make(2, 3, 3);
  std::vector<Map> corpus;
  corpus.push_back(identity_map(t));
  corpus.push_back(frobq_minus_id_map(t));
  corpus.push_back(dickson5_map(t, 5));
  corpus.push_back({"const", &t, [](code_t) { return code_t{3}; }});
  corpus.push_back({"tr", &t, [&t](code_t x) { return trace_rel(t, x); }});

  for (const int threads : {1, 2, 3, 8}) {
    omp_set_num_threads(threads);
    for (const auto& map : corpus) {
      const auto serial = oracle::is_permutation(map, Exec::Serial);
      const auto parallel = oracle::is_permutation(map, Exec::Parallel);
      CHECK(serial.same_verdict(parallel));
      CHECK(oracle::tabulate_serial(map) == oracle::tabulate_parallel(map));
      CHECK(oracle::image(map, Exec::Serial) == oracle::image(map, Exec::Parallel));
    }
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("audit of the symmetric-function family") {
  const auto f25 = FieldTower::make(5, 1, 2);
  const auto fam = families::thm3_family(f25, SymmetricKind::Kind::Lambda, 1, 2);
  CHECK(fam.size == 125);
  const auto rep = oracle::audit_equivalence(fam.name, fam.size, fam.run);
  CHECK(rep.instances_checked == 125);
  CHECK(rep.skipped == 0);
  CHECK(rep.agreements == 125);
  CHECK(rep.disagreements.empty());
  CHECK(!rep.sampled);

  const auto f16 = FieldTower::make(2, 2, 2);
  const auto fam2 = families::thm3_family(f16, SymmetricKind::Kind::Mu, 7, 2);
  CHECK(fam2.size == 64);
  const auto rep2 = oracle::audit_equivalence(fam2.name, fam2.size, fam2.run);
  CHECK(rep2.agreements == 64);
  CHECK(rep2.disagreements.empty());

  // degree-3 coverage on both variants
  const auto fam3 = families::thm3_family(f25, SymmetricKind::Kind::Lambda, 1, 3);
  CHECK(fam3.size == 625);
  CHECK(oracle::audit_equivalence(fam3.name, fam3.size, fam3.run)
            .disagreements.empty());
  const auto fam4 = families::thm3_family(f16, SymmetricKind::Kind::Mu, 7, 3);
  CHECK(fam4.size == 256);
  CHECK(oracle::audit_equivalence(fam4.name, fam4.size, fam4.run)
            .disagreements.empty());
}

TEST_CASE("audit bookkeeping") {
  // empty family
  const auto rep = oracle::audit_equivalence(
      "empty", 0, [](std::size_t) { return AuditOutcome{}; });
  CHECK(rep.instances_checked == 0);
  CHECK(rep.agreements == 0);
  CHECK(rep.disagreements.empty());

  // a deliberately broken predicate shows up as a disagreement
  const auto bad = oracle::audit_equivalence(
      "broken", 10, [](std::size_t i) {
        return AuditOutcome{"#" + std::to_string(i), false, i % 2 == 0, true};
      });
  CHECK(bad.instances_checked == 10);
  CHECK(bad.agreements == 5);
  REQUIRE(bad.disagreements.size() == 5);
  CHECK(bad.agreements + bad.disagreements.size() == bad.instances_checked);
  CHECK(bad.disagreements[0].id == "#1");

  // skipped instances are counted separately
  const auto skippy = oracle::audit_equivalence(
      "skippy", 10, [](std::size_t i) {
        AuditOutcome oc;
        oc.id = "#" + std::to_string(i);
        oc.skipped = i < 4;
        oc.predicate = oc.oracle = true;
        return oc;
      });
  CHECK(skippy.skipped == 4);
  CHECK(skippy.instances_checked == 6);
}

TEST_CASE("audit sampling is seeded and deterministic") {
  const auto run = [](std::size_t i) {
    return AuditOutcome{"#" + std::to_string(i), false, true, true};
  };
  const auto a = oracle::audit_equivalence("sampled", 10'000'000, run,
                                           Exec::Parallel, 1000, 42);
  CHECK(a.sampled);
  CHECK(a.seed == 42);
  CHECK(a.instances_checked <= 1000);
  CHECK(a.instances_checked > 900);

  const auto b = oracle::audit_equivalence("sampled", 10'000'000, run,
                                           Exec::Serial, 1000, 42);
  CHECK(a.instances_checked == b.instances_checked);
  CHECK(a.agreements == b.agreements);
}

TEST_CASE("audit results are independent of worker count") {
  const auto f16 = FieldTower::make(2, 2, 2);
  const auto fam = families::thm3_family(f16, SymmetricKind::Kind::Lambda, 1, 2);
  oracle::AuditReport base;
  for (const int threads : {1, 3, 8}) {
    omp_set_num_threads(threads);
    const auto rep = oracle::audit_equivalence(fam.name, fam.size, fam.run);
    if (threads == 1) {
      base = rep;
    } else {
      CHECK(rep.instances_checked == base.instances_checked);
      CHECK(rep.skipped == base.skipped);
      CHECK(rep.agreements == base.agreements);
      CHECK(rep.disagreements.size() == base.disagreements.size());
    }
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("search for h") {
  const auto f25 = FieldTower::make(5, 1, 2);
  const auto found =
      oracle::search_h(SymmetricKind::Kind::Lambda, f25, 1, 2);
  bool has_target = false;
  for (const auto& h : found) {
    CHECK(h.eval(0) != 0);  // h(0) = 0 never qualifies
    if (h.to_string() == "2,1,1") has_target = true;
  }
  CHECK(has_target);

  // degree 0: exactly the q-1 nonzero constants
  const auto consts = oracle::search_h(SymmetricKind::Kind::Lambda, f25, 1, 0);
  REQUIRE(consts.size() == 4);
  for (code_t c = 1; c < 5; ++c) CHECK(consts[c - 1].to_string() == std::to_string(c));

  // the mu variant works through the same plumbing
  const auto f16 = FieldTower::make(2, 2, 2);
  const auto mu_found = oracle::search_h(SymmetricKind::Kind::Mu, f16, 7, 1);
  for (const auto& h : mu_found) CHECK(h.eval(0) != 0);
  CHECK(!mu_found.empty());

  try {
    oracle::search_h(SymmetricKind::Kind::Mu, f16, 3, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GcdViolation);
  }
}

TEST_CASE("failures inside parallel audits surface as exceptions") {
  try {
    oracle::audit_equivalence("boom", 64, [](std::size_t i) -> AuditOutcome {
      if (i == 13) fail(ErrorCode::GcdViolation, "instance 13");
      return AuditOutcome{"#" + std::to_string(i), false, true, true};
    });
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GcdViolation);
  }
}
