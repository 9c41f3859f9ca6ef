#include "cubemob/reports.hpp"

#include <algorithm>
#include <sstream>

namespace cubemob {

namespace {

using nlohmann::json;

std::string csv_cell(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char ch : value) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string opt_str(const std::optional<BigInt>& value) { return value ? value->str() : std::string(); }

json type_json(const TypeVector& type) {
  json arr = json::array();
  for (int v : type.t) arr.push_back(v);
  return arr;
}

json discrepancy_json(const Discrepancy& d) {
  return json{{"check", d.check}, {"n", d.n}, {"note", d.note}, {"oracle", d.oracle}, {"paper", d.paper}};
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "table") return Format::Table;
  throw std::invalid_argument("unsupported format: " + text);
}

nlohmann::json bigint_to_json(const BigInt& value) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (value >= lo && value <= hi) return value.convert_to<std::int64_t>();
  return value.str();
}

std::string emit(const Report& report, Format format) {
  switch (format) {
    case Format::Json:
      return report.body.dump(2) + "\n";
    case Format::Csv: {
      std::string out;
      for (std::size_t i = 0; i < report.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_cell(report.columns[i]);
      }
      out += '\n';
      for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) out += ',';
          out += csv_cell(row[i]);
        }
        out += '\n';
      }
      return out;
    }
    case Format::Table: {
      std::vector<std::size_t> widths(report.columns.size(), 0);
      for (std::size_t i = 0; i < report.columns.size(); ++i) widths[i] = report.columns[i].size();
      for (const auto& row : report.rows)
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
          widths[i] = std::max(widths[i], row[i].size());
      std::ostringstream out;
      out << report.title << "\n";
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          out << cells[i] << std::string(widths[i] - cells[i].size(), ' ');
          out << (i + 1 < cells.size() ? "  " : "");
        }
        out << "\n";
      };
      line(report.columns);
      std::size_t total = 0;
      for (std::size_t w : widths) total += w + 2;
      out << std::string(total > 2 ? total - 2 : total, '-') << "\n";
      for (const auto& row : report.rows) line(row);
      return out.str();
    }
  }
  throw std::logic_error("emit: unreachable");
}

Report faces_report(int n) {
  Report report;
  report.title = "face census, n=" + std::to_string(n);
  report.columns = {"r", "count", "formula", "match"};
  std::vector<BigInt> counts(n + 1, 0);
  for (const Face& f : all_faces(n)) counts[f.corank()] += 1;
  json census = json::array();
  BigInt total = 0;
  bool all_match = true;
  for (int r = 0; r <= n; ++r) {
    BigInt formula = pow2(r) * binomial(n, r);
    bool match = counts[r] == formula;
    all_match = all_match && match;
    total += counts[r];
    census.push_back(json{{"count", bigint_to_json(counts[r])},
                          {"formula", bigint_to_json(formula)},
                          {"match", match},
                          {"r", r}});
    report.rows.push_back({std::to_string(r), counts[r].str(), formula.str(), match ? "true" : "false"});
  }
  report.body = json{{"all_match", all_match},
                     {"corank_census", census},
                     {"n", n},
                     {"total_faces", bigint_to_json(total)}};
  return report;
}

Report subalgebras_report(int n) {
  Report report;
  report.title = "MR-subalgebras, n=" + std::to_string(n);
  report.columns = {"id", "subalgebra", "type", "r", "k"};
  auto algebras = enumerate_subalgebras(n);
  json rows = json::array();
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    auto type = type_of(algebras[i]);
    rows.push_back(json{{"blocks", subalgebra_to_json(algebras[i])["blocks"]},
                        {"id", i},
                        {"k", type.k()},
                        {"r", type.r()},
                        {"type", type_json(type)}});
    report.rows.push_back({std::to_string(i), algebras[i].str(), type.str(), std::to_string(type.r()),
                           std::to_string(type.k())});
  }
  report.body = json{{"count", algebras.size()}, {"n", n}, {"subalgebras", rows}};
  return report;
}

Report census_report(int n, const CensusOptions& options) {
  Report report;
  report.title = "orbit census, n=" + std::to_string(n);
  report.columns = {"type",       "representative", "r",          "k",        "orbit_formula",
                    "orbit_brute", "stab_formula",  "stab_brute", "fr_formula", "fr_brute",
                    "im_rho_formula", "im_rho_brute", "f", "g", "s"};
  auto rows = build_census(n, options);
  json body_rows = json::array();
  BigInt orbit_sum = 0;
  bool brute_all_match = true;
  for (const auto& row : rows) {
    orbit_sum += row.orbit_formula;
    brute_all_match = brute_all_match && row.brute_match;
    json jr{{"f", bigint_to_json(row.f)},
            {"g", bigint_to_json(row.g)},
            {"im_rho_formula", bigint_to_json(row.im_rho_formula)},
            {"k", row.k},
            {"orbit_formula", bigint_to_json(row.orbit_formula)},
            {"r", row.r},
            {"representative", row.representative},
            {"stab_formula", bigint_to_json(row.stab_formula)},
            {"fr_formula", bigint_to_json(row.fr_formula)},
            {"type", type_json(row.type)}};
    if (row.orbit_bf) jr["orbit_brute"] = bigint_to_json(*row.orbit_bf);
    if (row.stab_bf) jr["stab_brute"] = bigint_to_json(*row.stab_bf);
    if (row.fr_bf) jr["fr_brute"] = bigint_to_json(*row.fr_bf);
    if (row.im_rho_bf) jr["im_rho_brute"] = bigint_to_json(*row.im_rho_bf);
    if (row.s) jr["s"] = bigint_to_json(*row.s);
    body_rows.push_back(std::move(jr));
    report.rows.push_back({row.type.str(), row.representative, std::to_string(row.r), std::to_string(row.k),
                           row.orbit_formula.str(), opt_str(row.orbit_bf), row.stab_formula.str(),
                           opt_str(row.stab_bf), row.fr_formula.str(), opt_str(row.fr_bf),
                           row.im_rho_formula.str(), opt_str(row.im_rho_bf), row.f.str(), row.g.str(),
                           opt_str(row.s)});
  }
  BigInt subalgebra_count(enumerate_subalgebras(n).size());
  report.body = json{{"brute_all_match", brute_all_match},
                     {"group_order", bigint_to_json(pow2(n) * factorial(n))},
                     {"n", n},
                     {"orbit_sum", bigint_to_json(orbit_sum)},
                     {"orbit_sum_matches_count", orbit_sum == subalgebra_count},
                     {"rows", body_rows},
                     {"subalgebra_count", bigint_to_json(subalgebra_count)}};
  if (n == 4) {
    report.body["sample_seed"] = options.seed;
    report.body["sample_size"] = options.sample_size;
  }
  return report;
}

Report mobius_report(int n, Cache& cache) {
  Report report;
  report.title = "Moebius values, n=" + std::to_string(n);
  report.columns = {"quantity", "value"};
  json body{{"n", n}};
  auto add_row = [&report](const std::string& name, const std::string& value) {
    report.rows.push_back({name, value});
  };

  BigInt paper = mr_recurrence_paper(n);
  BigInt adjudicated = mr_recurrence_adjudicated(n);
  body["mu_recurrence_paper"] = bigint_to_json(paper);
  body["mu_recurrence_adjudicated"] = bigint_to_json(adjudicated);
  add_row("mu_recurrence_paper", paper.str());
  add_row("mu_recurrence_adjudicated", adjudicated.str());

  json discrepancies = json::array();
  std::optional<BigInt> brute;
  if (n <= 4) {
    auto poset = build_mr_poset(n);
    std::uint64_t hash = poset.table->content_hash();
    if (auto cached = cache.get("mr_mu_row", n, hash)) {
      std::vector<std::pair<std::pair<std::size_t, std::size_t>, BigInt>> entries;
      for (std::size_t i = 0; i < cached->size() && i < poset.table->size(); ++i)
        entries.push_back({{poset.bottom, i}, BigInt((*cached)[i])});
      poset.table->memo_preload(entries);
    }
    std::vector<std::string> row;
    for (std::size_t i = 0; i < poset.table->size(); ++i)
      row.push_back(poset.table->leq(poset.bottom, i) ? poset.table->mu(poset.bottom, i).str() : "0");
    cache.put("mr_mu_row", n, hash, row);
    brute = poset.table->mu(poset.bottom, poset.top);
    body["mu_bruteforce"] = bigint_to_json(*brute);
    add_row("mu_bruteforce", brute->str());

    if (n <= 3) {
      auto cl = mr_closure_map(poset);
      auto closure = closure_audit(*poset.table, cl, poset.bottom);
      json fibers = json::array();
      for (const auto& fiber : closure.fibers) {
        json members = json::array();
        for (std::size_t x : fiber.fiber) members.push_back(poset.table->label(x));
        fibers.push_back(json{{"closed", poset.table->label(fiber.closed_element)},
                              {"fiber", members},
                              {"match", fiber.match},
                              {"mu_closed", bigint_to_json(fiber.mu_closed)},
                              {"sum", bigint_to_json(fiber.fiber_sum)}});
      }
      body["closure_fibers"] = fibers;
      body["closure_laws_ok"] = closure.laws_ok;
      body["closure_all_match"] = closure.all_match;
    } else {
      body["closure_fibers"] = nullptr;
    }
  } else {
    body["mu_bruteforce"] = nullptr;
    body["closure_fibers"] = nullptr;
  }

  if (n <= 5) {
    auto impl = build_imp_poset(n);
    std::uint64_t hash = impl.table->content_hash();
    if (auto cached = cache.get("impl_mu_row", n, hash)) {
      std::vector<std::pair<std::pair<std::size_t, std::size_t>, BigInt>> entries;
      for (std::size_t i = 0; i < cached->size() && i < impl.table->size(); ++i)
        entries.push_back({{impl.bottom, i}, BigInt((*cached)[i])});
      impl.table->memo_preload(entries);
    }
    std::vector<std::string> row;
    for (std::size_t i = 0; i < impl.table->size(); ++i)
      row.push_back(impl.table->leq(impl.bottom, i) ? impl.table->mu(impl.bottom, i).str() : "0");
    cache.put("impl_mu_row", n, hash, row);
    BigInt impl_top = impl.table->mu(impl.bottom, impl.top);
    body["impl_mu_top_oracle"] = bigint_to_json(impl_top);
    add_row("impl_mu_top_oracle", impl_top.str());
    BigInt printed = factorial(n);
    if (impl_top != printed)
      discrepancies.push_back(discrepancy_json(
          Discrepancy{"impl.mu_top_printed_value", n, printed.str(), impl_top.str(),
                      "printed special case mu({1},B)=n! drops the sign; the oracle value is (-1)^n n!"}));
  } else {
    body["impl_mu_top_oracle"] = nullptr;
  }

  const BigInt& reference = brute ? *brute : adjudicated;
  if (paper != reference)
    discrepancies.push_back(discrepancy_json(Discrepancy{
        "mobius.mr_recurrence_printed", n, paper.str(), reference.str(),
        brute ? "printed recurrence does not reproduce the poset value"
              : "printed recurrence does not reproduce the adjudicated value (poset oracle supports n <= 4)"}));
  body["discrepancies"] = discrepancies;
  report.body = std::move(body);
  for (const auto& d : report.body["discrepancies"])
    add_row("discrepancy:" + d["check"].get<std::string>(), d["paper"].dump() + " vs " + d["oracle"].dump());
  return report;
}

Report derangements_report(int n, DerangementMethod method, int jobs) {
  Report report;
  report.title = "derangements, n=" + std::to_string(n);
  report.columns = {"n", "inversion", "direct", "agree"};
  auto result = derangements(n, method, jobs);
  json body{{"n", n}};
  std::string inv, dir, agree;
  if (result.inversion) {
    body["inversion"] = bigint_to_json(*result.inversion);
    inv = result.inversion->str();
  }
  if (result.direct) {
    body["direct"] = bigint_to_json(*result.direct);
    dir = result.direct->str();
  }
  if (result.inversion && result.direct) {
    body["agree"] = result.agree;
    agree = result.agree ? "true" : "false";
  }
  report.body = std::move(body);
  report.rows.push_back({std::to_string(n), inv, dir, agree});
  return report;
}

Report audit_report(int n, const AuditOptions& options) {
  Report report;
  report.title = "audit, n<=" + std::to_string(n);
  report.columns = {"check", "pass", "detail"};
  auto audit = run_audit(n, options);
  json checks = json::array();
  for (const auto& check : audit.checks) {
    checks.push_back(json{{"detail", check.detail}, {"name", check.name}, {"pass", check.pass}});
    report.rows.push_back({check.name, check.pass ? "true" : "false", check.detail});
  }
  json discrepancies = json::array();
  for (const auto& d : audit.discrepancies) {
    discrepancies.push_back(discrepancy_json(d));
    report.rows.push_back({"discrepancy:" + d.check, "n=" + std::to_string(d.n),
                           "paper " + d.paper + " vs oracle " + d.oracle});
  }
  report.body = json{{"all_pass", audit.all_pass},
                     {"checks", checks},
                     {"discrepancies", discrepancies},
                     {"n", n}};
  return report;
}

nlohmann::json subalgebra_to_json(const MRSubalgebra& alg) {
  json blocks = json::array();
  for (const auto& b : alg.blocks()) {
    json coords = json::array();
    std::string signs;
    for (int i = 1; i <= alg.ambient_dim(); ++i) {
      std::uint32_t bit = 1u << (i - 1);
      if (b.coords & bit) {
        coords.push_back(i);
        signs += (b.plus & bit) ? '+' : '-';
      }
    }
    blocks.push_back(json{{"coords", coords}, {"signs", signs}});
  }
  return json{{"blocks", blocks}, {"n", alg.ambient_dim()}};
}

MRSubalgebra subalgebra_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<Block> blocks;
  for (const auto& jb : j.at("blocks")) {
    auto coords = jb.at("coords").get<std::vector<int>>();
    auto signs = jb.at("signs").get<std::string>();
    if (coords.size() != signs.size())
      throw std::invalid_argument("subalgebra_from_json: signs/coords length mismatch");
    Block b;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] < 1 || coords[i] > n) throw std::invalid_argument("subalgebra_from_json: coordinate range");
      std::uint32_t bit = 1u << (coords[i] - 1);
      b.coords |= bit;
      if (signs[i] == '+')
        b.plus |= bit;
      else if (signs[i] != '-')
        throw std::invalid_argument("subalgebra_from_json: invalid sign character");
    }
    blocks.push_back(b);
  }
  return MRSubalgebra::from_blocks(n, std::move(blocks));
}

nlohmann::json locator_to_json(const LocatorPair& pair) {
  json support = json::array(), partition = json::array();
  for (int i = 1; i <= pair.B.ambient_dim(); ++i)
    if (pair.B.support() & (1u << (i - 1))) support.push_back(i);
  for (std::uint32_t part : pair.B.parts()) {
    json block = json::array();
    for (int i = 1; i <= pair.B.ambient_dim(); ++i)
      if (part & (1u << (i - 1))) block.push_back(i);
    partition.push_back(block);
  }
  return json{{"B", json{{"partition", partition}, {"support", support}}}, {"c", pair.c.str()}};
}

LocatorPair locator_from_json(const nlohmann::json& j) {
  Face c = Face::parse(j.at("c").get<std::string>());
  const auto& jb = j.at("B");
  std::uint32_t support = 0;
  for (int coord : jb.at("support").get<std::vector<int>>()) {
    if (coord < 1 || coord > c.dim()) throw std::invalid_argument("locator_from_json: coordinate range");
    support |= 1u << (coord - 1);
  }
  std::vector<std::uint32_t> parts;
  for (const auto& block : jb.at("partition")) {
    std::uint32_t mask = 0;
    for (int coord : block.get<std::vector<int>>()) {
      if (coord < 1 || coord > c.dim()) throw std::invalid_argument("locator_from_json: coordinate range");
      mask |= 1u << (coord - 1);
    }
    parts.push_back(mask);
  }
  return make_locator(c, ImpSublattice(c.dim(), support, std::move(parts)));
}

}  // namespace cubemob
