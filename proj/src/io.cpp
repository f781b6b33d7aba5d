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
#include "permpoly/io.hpp"

#include <fstream>
#include <ostream>

namespace permpoly {
namespace io {
namespace {

bool is_nonneg_int(const json& j) {
  return j.is_number_unsigned() ||
         (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

std::uint64_t uint_field(const json& j, const char* key) {
  if (!j.contains(key) || !is_nonneg_int(j[key]))
    fail(ErrorCode::ParseError,
         std::string("missing or non-integer key '") + key + "'");
  return j[key].get<std::uint64_t>();
}

std::vector<code_t> code_list(const json& j, const char* what) {
  std::vector<code_t> out;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const auto comma = s.find(',', pos);
      const std::string tok = s.substr(pos, comma == std::string::npos
                                                ? std::string::npos
                                                : comma - pos);
      try {
        std::size_t used = 0;
        out.push_back(static_cast<code_t>(std::stoul(tok, &used)));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError,
             std::string(what) + ": bad code '" + tok + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return out;
  }
  if (j.is_array()) {
    for (const auto& v : j) {
      if (!is_nonneg_int(v))
        fail(ErrorCode::ParseError, std::string(what) + ": codes must be non-negative integers");
      out.push_back(v.get<code_t>());
    }
    return out;
  }
  fail(ErrorCode::ParseError,
       std::string(what) + ": expected a \"c0,c1,...\" string or an array");
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

FieldTower field_from_json(const json& j, std::uint64_t size_limit) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "field spec must be an object");
  const auto p = uint_field(j, "p");
  const auto n = uint_field(j, "n");
  const auto m = uint_field(j, "m");
  std::optional<std::vector<code_t>> base, ext;
  if (j.contains("base_poly")) base = code_list(j["base_poly"], "base_poly");
  if (j.contains("ext_poly")) ext = code_list(j["ext_poly"], "ext_poly");
  return FieldTower::make(static_cast<unsigned>(p), static_cast<unsigned>(n),
                          static_cast<unsigned>(m), std::move(base),
                          std::move(ext), size_limit);
}

json field_to_json(const FieldTower& t) {
  return json{{"p", t.p()},
              {"n", t.n()},
              {"m", t.m()},
              {"q", t.q()},
              {"size", t.size()},
              {"base_poly", t.base_poly()},
              {"ext_poly", t.ext_poly()}};
}

code_t element_from_json(const FieldTower& t, const json& j) {
  code_t code = 0;
  if (is_nonneg_int(j)) {
    code = j.get<code_t>();
  } else if (j.is_string()) {
    try {
      std::size_t used = 0;
      code = static_cast<code_t>(std::stoul(j.get<std::string>(), &used));
      if (used != j.get<std::string>().size())
        throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError,
           "bad element code '" + j.get<std::string>() + "'");
    }
  } else {
    fail(ErrorCode::ParseError, "element code must be a decimal integer");
  }
  if (code >= t.size())
    fail(ErrorCode::ParseError,
         "element code " + std::to_string(code) + " outside field of size " +
             std::to_string(t.size()));
  return code;
}

SubfieldPoly poly_from_json(const FieldTower& t, const json& j, PolyDomain domain) {
  return SubfieldPoly(t, code_list(j, "polynomial"), domain);
}

LinearizedPoly linearized_from_json(const FieldTower& t, const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "0" || s == "zero") return LinearizedPoly::zero(t);
    if (s == "x" || s == "id") return LinearizedPoly::identity(t);
    if (s == "x^q") return LinearizedPoly::frobenius_q(t, 1);
    if (s == "x^q-x") return LinearizedPoly::frobenius_q_minus_identity(t);
    if (s == "tr" || s == "trace") return LinearizedPoly::trace(t);
    fail(ErrorCode::ParseError, "unknown linearized shortcut '" + s + "'");
  }
  if (!j.is_array())
    fail(ErrorCode::ParseError,
         "linearized polynomial must be an array of [i, code] pairs");
  std::vector<LinearizedPoly::Term> terms;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !is_nonneg_int(pair[0]) ||
        !is_nonneg_int(pair[1]))
      fail(ErrorCode::ParseError, "each term must be a [i, code] pair");
    terms.emplace_back(pair[0].get<unsigned>(), pair[1].get<code_t>());
  }
  return LinearizedPoly(t, std::move(terms));
}

FqFunc fqfunc_from_json(const FieldTower& t, const json& j) {
  if (j.is_object() && j.contains("table"))
    return FqFunc::from_table(t, code_list(j["table"], "h table"));
  return FqFunc::from_poly(poly_from_json(t, j, PolyDomain::Base));
}

FqMap fqmap_from_json(const FieldTower& t, const json& j) {
  if (j.is_string())
    return FqMap::of_kind(t, SymmetricKind::parse(j.get<std::string>()));
  if (j.is_object() && j.contains("table"))
    return FqMap::from_table(t, code_list(j["table"], "f table"));
  if (j.is_object() && j.contains("poly"))
    return FqMap::from_poly(poly_from_json(t, j["poly"], PolyDomain::Ext));
  fail(ErrorCode::ParseError,
       "f must be 'tr', 'lambda:<j>', 'mu:<j>', {\"poly\":...} or {\"table\":...}");
}

LoadedInstance instance_from_json(const FieldTower& t, const json& j) {
  if (!j.is_object() || !j.contains("construction") ||
      !j["construction"].is_string())
    fail(ErrorCode::ParseError, "instance needs a 'construction' id");
  const std::string id = j["construction"].get<std::string>();

  const auto need = [&](const char* key) -> const json& {
    if (!j.contains(key))
      fail(ErrorCode::ParseError, "construction '" + id + "' needs key '" + key + "'");
    return j[key];
  };

  if (id == "thm21") {
    const auto& terms = need("terms");
    if (!terms.is_array() || terms.empty())
      fail(ErrorCode::ParseError, "'terms' must be a non-empty array");
    std::vector<LinearizedPoly> L;
    std::vector<code_t> gamma;
    std::vector<SubfieldPoly> h;
    for (const auto& term : terms) {
      if (!term.is_object())
        fail(ErrorCode::ParseError, "each term must be an object");
      if (!term.contains("L") || !term.contains("h"))
        fail(ErrorCode::ParseError, "each term needs 'L' and 'h'");
      L.push_back(linearized_from_json(t, term["L"]));
      gamma.push_back(term.contains("gamma")
                          ? element_from_json(t, term["gamma"])
                          : 0);
      h.push_back(poly_from_json(t, term["h"], PolyDomain::Ext));
    }
    return {"thm21", id,
            Thm21Instance(t, std::move(L), std::move(gamma), std::move(h),
                          linearized_from_json(t, need("B")))};
  }
  if (id == "cor21") {
    return {"thm21", id,
            make_cor21(t, linearized_from_json(t, need("L1")),
                       linearized_from_json(t, need("L2")),
                       element_from_json(t, need("gamma")),
                       poly_from_json(t, need("h"), PolyDomain::Base))};
  }
  if (id == "cor22") {
    return {"thm21", id,
            make_cor22(t, linearized_from_json(t, need("L")),
                       poly_from_json(t, need("h"), PolyDomain::Base))};
  }
  if (id == "thm31" || id == "thm32") {
    const auto variant = id == "thm31" ? SymmetricKind::Kind::Lambda
                                       : SymmetricKind::Kind::Mu;
    return {id, id,
            Thm3Instance(t, variant, uint_field(j, "j"),
                         poly_from_json(t, need("h"), PolyDomain::Base))};
  }
  if (id == "thm41") {
    return {"thm41", id,
            Thm41Instance(t, linearized_from_json(t, need("L1")),
                          linearized_from_json(t, need("L2")),
                          element_from_json(t, need("gamma")),
                          fqfunc_from_json(t, need("h")),
                          fqmap_from_json(t, need("f")))};
  }
  if (id == "cor41") {
    return {"thm41", id,
            make_cor41(t, linearized_from_json(t, need("L")),
                       element_from_json(t, need("gamma")),
                       fqfunc_from_json(t, need("h")),
                       fqmap_from_json(t, need("f")))};
  }
  if (id == "cor23") {
    return {"cor23", id,
            Cor23Instance{&t, linearized_from_json(t, need("L")),
                          element_from_json(t, need("gamma")),
                          poly_from_json(t, need("h"), PolyDomain::Base)}};
  }
  fail(ErrorCode::ParseError, "unknown construction '" + id + "'");
}

json permutation_report_to_json(const oracle::PermutationReport& rep) {
  json j{{"is_permutation", rep.is_permutation},
         {"domain_size", rep.domain_size},
         {"image_size", rep.image_size},
         {"elapsed_ms", rep.elapsed_ms}};
  if (rep.first_collision)
    j["first_collision"] = {rep.first_collision->first, rep.first_collision->second};
  else
    j["first_collision"] = nullptr;
  return j;
}

json audit_report_to_json(const oracle::AuditReport& rep) {
  json dis = json::array();
  for (const auto& d : rep.disagreements)
    dis.push_back({{"id", d.id}, {"predicate", d.predicate}, {"oracle", d.oracle}});
  return json{{"family", rep.family},
              {"family_size", rep.family_size},
              {"instances_checked", rep.instances_checked},
              {"skipped", rep.skipped},
              {"agreements", rep.agreements},
              {"disagreements", dis},
              {"sampled", rep.sampled},
              {"seed", rep.seed},
              {"elapsed_ms", rep.elapsed_ms}};
}

void write_permutation_csv(std::ostream& out, const std::vector<code_t>& table) {
  out << "input_code,output_code\n";
  for (std::size_t x = 0; x < table.size(); ++x)
    out << x << ',' << table[x] << '\n';
}

}  // namespace io
}  // namespace permpoly
