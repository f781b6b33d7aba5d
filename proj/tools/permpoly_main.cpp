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

// Batch command-line front end.  Exit codes:
//   0   verified permutation / audit with zero disagreements / success
//   1   verified non-permutation (predicate and oracle agree)
//   2   predicate/oracle disagreement - an implementation bug, not an input
//   64  unusable input (bad flags, files, field parameters)
//   65  instance rejected by a theorem hypothesis (failing clause named)
//   70  internal error

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "permpoly/families.hpp"
#include "permpoly/io.hpp"

using namespace permpoly;
using io::json;

namespace {

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::NotPrime:
    case ErrorCode::Reducible:
    case ErrorCode::SizeLimitExceeded:
      return 64;
    case ErrorCode::HypothesisViolation:
    case ErrorCode::GcdViolation:
    case ErrorCode::NotPermutationL:
    case ErrorCode::NotPermutationL1:
    case ErrorCode::NotSurjectiveF:
    case ErrorCode::NotTranslator:
    case ErrorCode::ZeroAlpha:
    case ErrorCode::DegenerateInstance:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::NotInSubfield:
      return 65;
    default:
      return 70;
  }
}

struct CommonOpts {
  std::string field_file;
  unsigned p = 0, n = 1, m = 1;
  std::uint64_t q = 0;
  std::string base_poly, ext_poly;
  std::uint64_t limit = FieldTower::kDefaultSizeLimit;
  unsigned workers = 0;
  std::string format = "table";
  std::string out_path;
};

void add_field_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--field", o.field_file, "field specification file (JSON)");
  cmd->add_option("--p", o.p, "characteristic");
  cmd->add_option("--n", o.n, "base degree, q = p^n");
  cmd->add_option("--m", o.m, "extension degree over F_q");
  cmd->add_option("--q", o.q, "subfield size q = p^n (alternative to --p/--n)");
  cmd->add_option("--base-poly", o.base_poly, "base polynomial codes, low-to-high");
  cmd->add_option("--ext-poly", o.ext_poly, "extension polynomial codes");
  cmd->add_option("--limit", o.limit, "field size limit");
}

void add_output_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "table|json")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--out", o.out_path, "write output to this path");
  cmd->add_option("--workers", o.workers, "worker threads (default: all cores)");
}

// q = p^n for prime p, or fails.
std::pair<unsigned, unsigned> split_prime_power(std::uint64_t q) {
  if (q < 2) fail(ErrorCode::ParseError, "q must be at least 2");
  std::uint64_t p = 2;
  while (q % p != 0) {
    ++p;
    if (p * p > q) {
      p = q;
      break;
    }
  }
  unsigned n = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1)
    fail(ErrorCode::ParseError, std::to_string(q) + " is not a prime power");
  return {static_cast<unsigned>(p), n};
}

std::vector<code_t> parse_code_csv(const std::string& text) {
  std::vector<code_t> codes;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      codes.push_back(static_cast<code_t>(std::stoul(tok, &used)));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad code '" + tok + "'");
    }
  }
  return codes;
}

FieldTower make_tower(const CommonOpts& o) {
  if (!o.field_file.empty())
    return io::field_from_json(io::read_json_file(o.field_file), o.limit);
  unsigned p = o.p, n = o.n;
  if (o.q != 0) {
    const auto pn = split_prime_power(o.q);
    p = pn.first;
    n = pn.second;
  }
  if (p == 0)
    fail(ErrorCode::ParseError, "specify a field with --field, --q or --p/--n");
  std::optional<std::vector<code_t>> base, ext;
  if (!o.base_poly.empty()) base = parse_code_csv(o.base_poly);
  if (!o.ext_poly.empty()) ext = parse_code_csv(o.ext_poly);
  return FieldTower::make(p, n, o.m, std::move(base), std::move(ext), o.limit);
}

void apply_workers(const CommonOpts& o) {
#ifdef _OPENMP
  if (o.workers > 0) omp_set_num_threads(static_cast<int>(o.workers));
#endif
}

// Output sink: stdout by default, --out path otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) fail(ErrorCode::ParseError, "cannot write '" + path + "'");
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct VerifyOutcome {
  json report;
  bool predicate = false;
  bool oracle_verdict = false;
  std::vector<code_t> table;
  std::string hypothesis_failure;  // empty when hypotheses hold
};

VerifyOutcome run_loaded(const FieldTower& t, const io::LoadedInstance& li,
                         Exec exec) {
  VerifyOutcome out;
  out.report["construction"] = li.original_id;
  out.report["field"] = io::field_to_json(t);

  const Map map = std::visit(
      [&](const auto& inst) -> Map {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, Thm21Instance>) {
          const auto hyp = check_thm21_hypotheses(inst);
          out.report["hypotheses"] = {
              {"h_values_in_fq", hyp.h_values_in_fq},
              {"additive", hyp.additive},
              {"commutes", hyp.commutes},
              {"fq_homogeneous", hyp.fq_homogeneous}};
          if (!hyp.all()) {
            out.hypothesis_failure =
                !hyp.h_values_in_fq  ? "h_values_in_fq"
                : !hyp.additive      ? "additive"
                : !hyp.commutes      ? "commutes"
                                     : "fq_homogeneous";
            return Map{};
          }
          const auto c1 = check_thm21_cond1_detail(inst);
          const auto c2 = check_thm21_cond2_detail(inst);
          out.report["cond1"] = c1.holds;
          out.report["cond2"] = c2.holds;
          if (c1.collision)
            out.report["cond1_collision"] = {c1.collision->first,
                                             c1.collision->second};
          if (c2.witness)
            out.report["cond2_witness"] = {c2.witness->first,
                                           c2.witness->second};
          out.predicate = c1.holds && c2.holds;
          return build_thm21(inst);
        } else if constexpr (std::is_same_v<T, Thm3Instance>) {
          out.report["h0_nonzero"] = inst.h.eval(0) != 0;
          out.predicate = predicate_thm3(inst);
          out.report["predicate_detail"] = "h(0) != 0 and x*h(x)^j permutes F_q";
          return build_thm3(inst);
        } else if constexpr (std::is_same_v<T, Thm41Instance>) {
          const auto an = analyze_thm41(inst);
          out.report["l2_gamma"] = an.l2_gamma;
          out.report["alpha"] = an.alpha;
          out.report["b"] = an.b;
          out.predicate = predicate_thm41(inst);
          return build_thm41(inst);
        } else {
          out.predicate = predicate_cor23(inst.L, inst.gamma, inst.h);
          return build_cor23(inst.L, inst.gamma, inst.h);
        }
      },
      li.payload);

  if (!out.hypothesis_failure.empty()) return out;

  const auto rep = oracle::is_permutation(map, exec);
  out.oracle_verdict = rep.is_permutation;
  out.table = oracle::tabulate(map, exec);
  out.report["predicate"] = out.predicate;
  out.report["oracle"] = io::permutation_report_to_json(rep);
  out.report["agreement"] = out.predicate == rep.is_permutation;
  return out;
}

std::pair<std::unique_ptr<FieldTower>, io::LoadedInstance> load_instance_file(
    const CommonOpts& o, const std::string& instance_path) {
  const json j = io::read_json_file(instance_path);
  std::unique_ptr<FieldTower> tower;
  if (j.contains("field"))
    tower = std::make_unique<FieldTower>(io::field_from_json(j["field"], o.limit));
  else if (!o.field_file.empty())
    tower = std::make_unique<FieldTower>(
        io::field_from_json(io::read_json_file(o.field_file), o.limit));
  else
    fail(ErrorCode::ParseError,
         "no field: add a \"field\" key to the instance or pass --field");
  auto loaded = io::instance_from_json(*tower, j);
  return {std::move(tower), std::move(loaded)};
}

int cmd_verify(const CommonOpts& o, const std::string& instance_path) {
  apply_workers(o);
  auto [tower, loaded] = load_instance_file(o, instance_path);
  const auto outcome = run_loaded(*tower, loaded, Exec::Parallel);
  Sink sink(o.out_path);
  auto& os = sink.out();

  if (!outcome.hypothesis_failure.empty()) {
    os << "hypothesis check failed: clause '" << outcome.hypothesis_failure
       << "'\n";
    return 65;
  }

  if (o.format == "json") {
    os << outcome.report.dump(2) << "\n";
  } else {
    os << "construction: " << loaded.original_id << "\n";
    os << "field: p=" << tower->p() << " n=" << tower->n() << " m=" << tower->m()
       << " q=" << tower->q() << " |F|=" << tower->size() << "\n";
    if (outcome.report.contains("cond1"))
      os << "cond1=" << outcome.report["cond1"] << " cond2="
         << outcome.report["cond2"] << "\n";
    os << "predicate: " << (outcome.predicate ? "true" : "false") << "\n";
    os << "oracle:    " << (outcome.oracle_verdict ? "permutation" : "not a permutation")
       << " (image " << outcome.report["oracle"]["image_size"] << "/"
       << outcome.report["oracle"]["domain_size"] << ")\n";
    os << (outcome.predicate == outcome.oracle_verdict ? "AGREEMENT"
                                                       : "DISAGREEMENT")
       << "\n";
  }
  if (outcome.predicate != outcome.oracle_verdict) return 2;
  return outcome.oracle_verdict ? 0 : 1;
}

int cmd_export(const CommonOpts& o, const std::string& instance_path) {
  apply_workers(o);
  auto [tower, loaded] = load_instance_file(o, instance_path);
  const auto outcome = run_loaded(*tower, loaded, Exec::Parallel);
  if (!outcome.hypothesis_failure.empty()) {
    std::cerr << "hypothesis check failed: clause '"
              << outcome.hypothesis_failure << "'\n";
    return 65;
  }
  Sink sink(o.out_path);
  io::write_permutation_csv(sink.out(), outcome.table);
  return 0;
}

int emit_audit(const CommonOpts& o, const families::AuditFamily& fam,
               std::size_t budget, std::uint64_t seed) {
  const auto rep =
      oracle::audit_equivalence(fam.name, fam.size, fam.run, Exec::Parallel,
                                budget, seed);
  Sink sink(o.out_path);
  auto& os = sink.out();
  if (o.format == "json") {
    os << io::audit_report_to_json(rep).dump(2) << "\n";
  } else {
    os << "family: " << rep.family << "\n";
    os << "instances: " << rep.family_size << " total, " << rep.instances_checked
       << " checked, " << rep.skipped << " skipped"
       << (rep.sampled ? " (sampled, seed=" + std::to_string(rep.seed) + ")" : "")
       << "\n";
    os << "agreements: " << rep.agreements << "\n";
    os << "disagreements: " << rep.disagreements.size() << "\n";
    for (const auto& d : rep.disagreements)
      os << "  " << d.id << " predicate=" << d.predicate
         << " oracle=" << d.oracle << "\n";
    os << "elapsed_ms: " << rep.elapsed_ms << "\n";
  }
  return rep.disagreements.empty() ? 0 : 2;
}

int cmd_translators(const CommonOpts& o, const std::string& f_spec) {
  apply_workers(o);
  const auto tower = make_tower(o);
  FqMap f = [&]() {
    if (f_spec.rfind("poly:", 0) == 0)
      return FqMap::from_poly(
          SubfieldPoly::parse(tower, f_spec.substr(5), PolyDomain::Ext));
    if (f_spec.rfind("table:", 0) == 0) {
      std::vector<code_t> codes;
      std::string tok;
      std::istringstream in(f_spec.substr(6));
      while (std::getline(in, tok, ',')) codes.push_back(std::stoul(tok));
      return FqMap::from_table(tower, std::move(codes));
    }
    return FqMap::of_kind(tower, SymmetricKind::parse(f_spec));
  }();

  const auto certs = find_linear_translators(f, Exec::Parallel);
  Sink sink(o.out_path);
  auto& os = sink.out();
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& c : certs) arr.push_back({{"alpha", c.alpha}, {"a", c.a}});
    os << json{{"f", f.name()}, {"count", certs.size()}, {"certificates", arr}}
              .dump(2)
       << "\n";
  } else {
    os << "alpha,a\n";
    for (const auto& c : certs) os << c.alpha << ',' << c.a << '\n';
  }
  return 0;
}

int cmd_field_info(const CommonOpts& o) {
  const auto tower = make_tower(o);
  Sink sink(o.out_path);
  auto& os = sink.out();
  auto j = io::field_to_json(tower);
  j["generator"] = tower.generator();
  if (o.format == "json") {
    os << j.dump(2) << "\n";
  } else {
    os << "p=" << tower.p() << " n=" << tower.n() << " m=" << tower.m()
       << " q=" << tower.q() << " |F|=" << tower.size() << "\n";
    os << "base_poly: " << json(tower.base_poly()).dump() << "\n";
    os << "ext_poly:  " << json(tower.ext_poly()).dump() << "\n";
    os << "generator: " << tower.generator() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation polynomial construction and verification"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string instance_path, construction, f_spec, preset;
  std::uint64_t j_index = 1;
  unsigned max_deg = 2;
  std::size_t count = 200, budget = oracle::kDefaultAuditBudget;
  std::uint64_t seed = oracle::kDefaultAuditSeed;

  auto* verify = app.add_subcommand("verify", "check one instance file");
  verify->add_option("--instance", instance_path, "instance file (JSON)")
      ->required();
  add_field_options(verify, o);
  add_output_options(verify, o);

  auto* audit = app.add_subcommand("audit", "predicate vs oracle over a family");
  audit->add_option("construction", construction, "thm21|thm31|thm32|thm41|cor23")
      ->required();
  audit->add_option("--j", j_index, "symmetric-function index");
  audit->add_option("--max-deg", max_deg, "h degree bound");
  audit->add_option("--preset", preset, "named family (thm21: example21)");
  audit->add_option("--count", count, "random-family size (cor23)");
  audit->add_option("--budget", budget, "sampling budget");
  audit->add_option("--seed", seed, "sampler seed");
  add_field_options(audit, o);
  add_output_options(audit, o);

  auto* search = app.add_subcommand("search", "enumerate h passing a predicate");
  search->add_option("construction", construction, "thm31|thm32")->required();
  search->add_option("--j", j_index, "symmetric-function index");
  search->add_option("--max-deg", max_deg, "h degree bound");
  add_field_options(search, o);
  add_output_options(search, o);

  auto* exportc = app.add_subcommand("export", "write the permutation table CSV");
  exportc->add_option("--instance", instance_path, "instance file (JSON)")
      ->required();
  add_field_options(exportc, o);
  add_output_options(exportc, o);

  auto* translators = app.add_subcommand("translators", "list linear translators");
  translators
      ->add_option("--f", f_spec, "tr | lambda:<j> | mu:<j> | poly:<codes> | table:<codes>")
      ->required();
  add_field_options(translators, o);
  add_output_options(translators, o);

  auto* field_info = app.add_subcommand("field-info", "show a field's parameters");
  add_field_options(field_info, o);
  add_output_options(field_info, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 64;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, instance_path);
    if (exportc->parsed()) return cmd_export(o, instance_path);
    if (translators->parsed()) return cmd_translators(o, f_spec);
    if (field_info->parsed()) return cmd_field_info(o);

    if (search->parsed()) {
      apply_workers(o);
      const auto tower = make_tower(o);
      const auto variant = [&] {
        if (construction == "thm31") return SymmetricKind::Kind::Lambda;
        if (construction == "thm32") return SymmetricKind::Kind::Mu;
        fail(ErrorCode::ParseError, "search supports thm31 and thm32");
      }();
      const auto found =
          oracle::search_h(variant, tower, j_index, max_deg, Exec::Parallel);
      Sink sink(o.out_path);
      auto& os = sink.out();
      if (o.format == "json") {
        json arr = json::array();
        for (const auto& h : found) arr.push_back(h.to_string());
        os << json{{"count", found.size()}, {"results", arr}}.dump(2) << "\n";
      } else {
        for (const auto& h : found) os << h.to_string() << "\n";
      }
      return 0;
    }

    if (audit->parsed()) {
      apply_workers(o);
      if (construction == "thm21" && preset == "example21") {
        if (o.q == 0 && o.p == 0) o.q = 8;
        if (o.m == 1) o.m = 3;
        const auto tower = make_tower(o);
        return emit_audit(o, families::thm21_dickson_family(tower), budget, seed);
      }
      const auto tower = make_tower(o);
      if (construction == "thm31")
        return emit_audit(
            o, families::thm3_family(tower, SymmetricKind::Kind::Lambda, j_index, max_deg),
            budget, seed);
      if (construction == "thm32")
        return emit_audit(
            o, families::thm3_family(tower, SymmetricKind::Kind::Mu, j_index, max_deg),
            budget, seed);
      if (construction == "thm21")
        return emit_audit(o, families::thm21_generated_family(tower), budget, seed);
      if (construction == "thm41")
        return emit_audit(o, families::thm41_trace_family(tower), budget, seed);
      if (construction == "cor23")
        return emit_audit(o, families::cor23_random_family(tower, count, seed),
                          budget, seed);
      fail(ErrorCode::ParseError, "unknown audit family '" + construction + "'");
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 64;
}
