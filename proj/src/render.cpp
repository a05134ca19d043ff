#include "render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "column_engine.hpp"
#include "config_blocks.hpp"
#include "derivation.hpp"
#include "fq_oracle.hpp"
#include "group_rep.hpp"
#include "spectral.hpp"

namespace trig5::render {

using nlohmann::json;

namespace {

void check_format(const std::string& format) {
  if (format != "json" && format != "markdown" && format != "pretty")
    throw Error(Errc::usage, "unknown format '" + format + "' (valid: json markdown pretty)");
}

std::string envelope(const std::string& command, json inputs, json results, json verdicts,
                     json citations) {
  json doc{{"command", command},
           {"inputs", std::move(inputs)},
           {"results", std::move(results)},
           {"verdicts", std::move(verdicts)},
           {"citations", std::move(citations)}};
  return doc.dump(2) + "\n";
}

struct LabelledPoly {
  std::string label;
  HGPoly poly;
};

std::string class_label(long w, long long m) {
  std::string s = "Q(" + std::to_string(w) + ")";
  if (m > 1) s += "^" + std::to_string(m);
  return s;
}

// markdown grid out of (col, row) -> weight -> mult cells
std::string markdown_grid(const std::map<std::pair<long, long>, std::map<long, long long>>& cells,
                          const std::vector<std::string>& col_names, long col_base) {
  std::set<long> rows;
  for (const auto& [key, wm] : cells) rows.insert(key.second);
  std::ostringstream os;
  os << "| row |";
  for (const auto& c : col_names) os << " " << c << " |";
  os << "\n|---|";
  for (size_t i = 0; i < col_names.size(); ++i) os << "---|";
  os << "\n";
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    os << "| " << *it << " |";
    for (size_t c = 0; c < col_names.size(); ++c) {
      auto cell = cells.find({col_base + static_cast<long>(c), *it});
      std::string entry;
      if (cell != cells.end())
        for (const auto& [w, m] : cell->second) {
          if (!entry.empty()) entry += " + ";
          entry += class_label(w, m);
        }
      os << " " << entry << " |";
    }
    os << "\n";
  }
  return os.str();
}

json cells_to_json(const std::map<std::pair<long, long>, std::map<long, long long>>& cells,
                   const std::vector<std::string>& col_names, long col_base) {
  json arr = json::array();
  for (const auto& [key, wm] : cells)
    for (const auto& [w, m] : wm)
      arr.push_back({{"column", col_names[key.first - col_base]},
                     {"row", key.second},
                     {"weight", w},
                     {"mult", m}});
  return arr;
}

std::string labelled_report(const std::string& command, const std::string& id,
                            const std::vector<LabelledPoly>& values, const json& citations,
                            const std::string& format) {
  if (format == "json") {
    json results = json::object();
    for (const auto& v : values) results[v.label] = hg_to_json(v.poly);
    return envelope(command, {{"id", id}}, results, json::object(), citations);
  }
  std::ostringstream os;
  if (format == "markdown") {
    os << "## " << command << " " << id << "\n\n";
    for (const auto& v : values) os << "- `" << v.label << "`: " << hg_pretty(v.poly) << "\n";
    return os.str();
  }
  if (values.size() == 1) return hg_pretty(values[0].poly) + "\n";
  for (const auto& v : values) os << v.label << ": " << hg_pretty(v.poly) << "\n";
  return os.str();
}

json signed_to_json(const std::vector<blocks::SignedClass>& cs) {
  json arr = json::array();
  for (const auto& c : cs) {
    json p = json::object();
    for (const auto& [n, s] : c.parity) p[n] = s;
    arr.push_back({{"weight", c.weight}, {"degree", c.degree}, {"parity", p}});
  }
  return arr;
}

std::string derivation_text(const Derivation& d, const std::string& format) {
  if (format == "json") return derivation_to_json(d).dump(2) + "\n";
  std::ostringstream os;
  if (format == "markdown")
    os << "## derivation " << d.id << "\n\n";
  else
    os << "derivation " << d.id << "\n";
  int i = 1;
  for (const auto& s : d.steps) {
    std::string out = s.output.is_string() ? s.output.get<std::string>()
                      : s.output.contains("pretty") ? s.output["pretty"].get<std::string>()
                                                    : s.output.dump();
    if (format == "markdown")
      os << i << ". **" << s.op << "** (" << s.ref << "): `" << out << "`\n";
    else
      os << "  " << i << ". " << s.op << " [" << s.ref << "] -> " << out << "\n";
    ++i;
  }
  std::string fin = d.final_value.contains("pretty") ? d.final_value["pretty"].get<std::string>()
                                                     : d.final_value.dump();
  os << (format == "markdown" ? "\n**result:** " : "result: ") << fin << "\n";
  return os.str();
}

}  // namespace

std::vector<std::string> lemma_ids() {
  return {"2.1a", "2.1b", "2.2", "2.3", "2.4", "2.5", "2.6", "2.7"};
}

std::string lemma_report(const std::string& id, const std::string& format) {
  check_format(format);
  json citations = json::array();
  std::vector<LabelledPoly> values;
  if (id == "2.1a") {
    values = {{"B(C,2) twisted", blocks::bm_cell_config({1}, 2)},
              {"B(C^2,3) twisted", blocks::bm_cell_config({2}, 3)}};
    citations.push_back("one affine cell holding two points dies");
  } else if (id == "2.1b") {
    values = {{"B(P^1,2) twisted", blocks::bm_B_proj_twisted(1, 2)},
              {"B(P^2,2) twisted", blocks::bm_B_proj_twisted(2, 2)},
              {"B(P^1,3) twisted", blocks::bm_B_proj_twisted(1, 3)}};
    citations.push_back("Grassmannian homology, shifted and twisted");
  } else if (id == "2.2") {
    for (long k = 1; k <= 3; ++k) {
      HGPoly p(Kind::BM);
      for (const auto& c : blocks::bm_B_cstar_twisted(k)) p.add_term(c.weight, c.degree, 1);
      values.push_back({"B(C*," + std::to_string(k) + ") twisted", p});
    }
    citations.push_back("odd-degree classes are anti-invariant under inversion");
  } else if (id == "2.3") {
    values = {{"B(P^2-pt,2) twisted", blocks::bm_cell_config({2, 1}, 2)},
              {"B(P^2-pt,3) twisted", blocks::bm_cell_config({2, 1}, 3)}};
    citations.push_back("cells C^2 and C, one point each");
  } else if (id == "2.4") {
    values = {{"Ftilde(P^2-pt,2)", blocks::bm_ftilde2()}};
    citations.push_back("localization against pairs sharing a ruling line");
  } else if (id == "2.5") {
    values = {{"Ftilde(P^2-pt,3)", blocks::bm_ftilde3()}};
    citations.push_back("localization against degenerate triples");
  } else if (id == "2.6") {
    values = {{"Btilde(P^2-pt,2) twisted", blocks::btilde_p2_twisted(2)},
              {"Btilde(P^2-pt,3) twisted", blocks::btilde_p2_twisted(3)}};
    citations.push_back("generic configurations carry the unordered values");
  } else if (id == "2.7") {
    HGPoly y(Kind::BM);
    for (const auto& line : blocks::bm_M05_as_D4()) {
      long long m = rep::isotypic_multiplicity(line.d4, "psi2");
      if (m != 0) y.add_term(line.weight, line.degree, m);
    }
    values = {{"psi2-isotypic part of the marked moduli classes", y}};
    citations.push_back("finite cover pushes local systems to isotypic parts");
  } else {
    throw Error(Errc::usage, "unknown lemma id '" + id +
                                 "' (valid: 2.1a 2.1b 2.2 2.3 2.4 2.5 2.6 2.7)");
  }
  return labelled_report("lemma", id, values, citations, format);
}

std::string column_report(const std::string& id, const std::string& format) {
  check_format(format);
  Derivation trace;
  trace.id = "column-" + id;
  HGPoly value = columns::column_value(id, &trace);
  const auto& spec = columns::column_spec(id);
  json citations = json::array({"column " + id + ": " + spec.base_desc});
  if (format == "json") {
    json results{{"value", hg_to_json(value)},
                 {"bundle", {{"d", spec.d}, {"m", spec.m}}},
                 {"derivation", derivation_to_json(trace)}};
    return envelope("column", {{"id", id}}, results, json::object(), citations);
  }
  if (format == "markdown") {
    std::ostringstream os;
    os << "## column " << id << "\n\n" << spec.base_desc << "\n\n";
    os << "P(F_" << id << ") = " << hg_pretty(value) << "\n";
    return os.str();
  }
  return hg_pretty(value) + "\n";
}

std::vector<std::string> table_ids() { return {"1", "2", "3", "4", "S2", "S3", "S4", "S5", "D4"}; }

std::string table_report(const std::string& id, const std::string& format) {
  check_format(format);
  if (id == "1") {
    auto table = blocks::involution_table_data();
    if (format == "json")
      return envelope("table", {{"id", id}}, {{"classes", signed_to_json(table)}}, json::object(),
                      json::array({"involution parities of the conic-pair fiber"}));
    std::ostringstream os;
    if (format == "markdown") {
      os << "| degree | i | j | k |\n|---|---|---|---|\n";
      for (const auto& c : table) {
        os << "| " << c.degree << " |";
        for (const char* n : {"i", "j", "k"}) os << " " << (c.parity.at(n) > 0 ? "+" : "-") << " |";
        os << "\n";
      }
    } else {
      for (const auto& c : table) {
        os << "degree " << c.degree << "  Q(" << c.weight << ")  ";
        for (const char* n : {"i", "j", "k"})
          os << n << (c.parity.at(n) > 0 ? "+" : "-") << " ";
        os << "\n";
      }
    }
    return os.str();
  }
  if (id == "2") {
    auto page = columns::cone_page();
    std::vector<std::string> names = {"A", "B", "C", "D", "E", "F", "G", "H", "L"};
    if (format == "json")
      return envelope("table", {{"id", id}}, {{"cells", cells_to_json(page.cells, names, 1)}},
                      json::object(), json::array({"cone page before cancellation"}));
    return markdown_grid(page.cells, names, 1);
  }
  if (id == "3") {
    auto t = ss::assemble_main_table();
    std::vector<std::string> names = {"A", "B", "C", "D", "E", "F", "G", "H", "L", "M"};
    if (format == "json")
      return envelope("table", {{"id", id}},
                      {{"cells", cells_to_json(t.cells, names, 1)}, {"total", hg_to_json(t.total)}},
                      json::object(), json::array({"main page of the discriminant resolution"}));
    return markdown_grid(t.cells, names, 1);
  }
  if (id == "4") {
    auto r = ss::run_pipeline();
    std::map<std::pair<long, long>, std::map<long, long long>> cells;
    for (const auto& [k, m] : r.t5.terms()) {
      cells[{k.first, 0}][k.second] += m;
      cells[{k.first, 1}][k.second - 1] += m;
    }
    std::vector<std::string> names;
    for (long p = 0; p <= r.t5.max_degree(); ++p) names.push_back(std::to_string(p));
    if (format == "json")
      return envelope("table", {{"id", id}}, {{"cells", cells_to_json(cells, names, 0)}},
                      json::object(), json::array({"two-row page of the residual C*-bundle"}));
    std::ostringstream os;
    os << "| q \\ p |";
    for (const auto& n : names) os << " " << n << " |";
    os << "\n|---|";
    for (size_t i = 0; i < names.size(); ++i) os << "---|";
    os << "\n";
    for (long q = 1; q >= 0; --q) {
      os << "| " << q << " |";
      for (long p = 0; p < static_cast<long>(names.size()); ++p) {
        auto it = cells.find({p, q});
        std::string entry;
        if (it != cells.end())
          for (const auto& [w, m] : it->second) entry += class_label(w, m);
        os << " " << entry << " |";
      }
      os << "\n";
    }
    return os.str();
  }
  // group character tables
  for (const auto& gid : rep::group_ids())
    if (gid == id) {
      const auto& g = rep::group(id);
      if (format == "json")
        return envelope("table", {{"id", id}}, rep::table_to_json(g), json::object(),
                        json::array({"character table"}));
      std::ostringstream os;
      if (format == "markdown") {
        os << "| |";
        for (const auto& c : g.classes) os << " " << c.name << " |";
        os << "\n|---|";
        for (size_t i = 0; i < g.classes.size(); ++i) os << "---|";
        os << "\n| size |";
        for (const auto& c : g.classes) os << " " << c.size << " |";
        os << "\n";
        for (const auto& ir : g.irreps) {
          os << "| " << ir.name << " |";
          for (auto v : ir.values) os << " " << v << " |";
          os << "\n";
        }
      } else {
        for (const auto& ir : g.irreps) {
          os << ir.name << ":";
          for (auto v : ir.values) os << " " << v;
          os << "\n";
        }
      }
      return os.str();
    }
  throw Error(Errc::usage, "unknown table id '" + id + "' (valid: 1 2 3 4 S2 S3 S4 S5 D4)");
}

std::string pipeline_report(const std::string& format, bool* exit_ok) {
  check_format(format);
  ss::PipelineResult r = ss::run_pipeline();
  if (exit_ok) *exit_ok = r.all_ok;
  if (format == "json") {
    json killed = json::array();
    for (const auto& k : r.wang.killed)
      killed.push_back({{"fiber", {k.fiber_pos.first, k.fiber_pos.second}},
                        {"base", {k.base_pos.first, k.base_pos.second}},
                        {"weight", k.weight}});
    json verdicts = json::object();
    for (const auto& v : r.verdicts) verdicts[v.name] = v.ok;
    json results{{"Sigma", hg_to_json(r.sigma)},
                 {"X", hg_to_json(r.x)},
                 {"X_mod_GL2", hg_to_json(r.x_mod_gl2)},
                 {"T5", hg_to_json(r.t5)},
                 {"T5_union_H5", hg_to_json(r.t5_with_hyp)},
                 {"killed", killed},
                 {"wennink", {{"computed", cp_to_json(r.wennink_computed)},
                              {"expected", cp_to_json(r.wennink_predicted)},
                              {"dim_V", r.dim_v},
                              {"parameter_count", "3+4+5+6"}}}};
    return envelope("pipeline", json::object(), results, verdicts,
                    json::array({"main page", "duality in dimension 18",
                                 "division by the group cohomology", "residual C*-bundle",
                                 "point-count identity"}));
  }
  std::ostringstream os;
  const char* bullet = format == "markdown" ? "- " : "  ";
  if (format == "markdown") os << "## pipeline\n\n";
  os << "P(Sigma)      = " << hg_pretty(r.sigma) << "\n";
  os << "P(X)          = " << hg_pretty(r.x) << "\n";
  os << "P(X/GL2)      = " << hg_pretty(r.x_mod_gl2) << "\n";
  os << "P(T5)         = " << hg_pretty(r.t5) << "\n";
  os << "P(T5 u H5)    = " << hg_pretty(r.t5_with_hyp) << "\n";
  os << "point count   = " << cp_pretty(r.wennink_computed) << "\n";
  if (format == "markdown") os << "\n### verdicts\n\n";
  for (const auto& v : r.verdicts)
    os << bullet << (v.ok ? "[ok]   " : "[FAIL] ") << v.name << ": " << v.detail << "\n";
  if (format == "markdown") {
    os << "\n### main page\n\n" << table_report("3", "markdown");
    os << "\n### residual bundle page\n\n" << table_report("4", "markdown");
  }
  os << (r.all_ok ? "PIPELINE OK\n" : "PIPELINE FAILED\n");
  return os.str();
}

std::string appendix_report(int config, const std::string& format) {
  check_format(format);
  Derivation d = columns::appendix_check(config);
  if (format == "json") {
    return envelope("appendix", {{"config", config}},
                    {{"derivation", derivation_to_json(d)}, {"value", d.final_value}},
                    {{"trivial", true}}, json::array({"recorded reduction, arithmetic recomputed"}));
  }
  return derivation_text(d, format);
}

std::string verify_report(const std::vector<std::string>& spaces, const std::vector<int>& qs,
                          const std::string& format, bool* all_match) {
  check_format(format);
  auto results = fq::compare_euler(spaces, qs);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.match;
  if (all_match) *all_match = ok;
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : results)
      rows.push_back({{"space", r.space},
                      {"q", r.q},
                      {"count", r.count},
                      {"predicted", r.predicted},
                      {"match", r.match}});
    return envelope("verify", {{"spaces", spaces}, {"qs", qs}}, {{"rows", rows}},
                    {{"all_match", ok}},
                    json::array({"brute-force counts against Euler specializations"}));
  }
  std::ostringstream os;
  if (format == "markdown") {
    os << "| space | q | count | predicted | verdict |\n|---|---|---|---|---|\n";
    for (const auto& r : results)
      os << "| " << r.space << " | " << r.q << " | " << r.count << " | " << r.predicted << " | "
         << (r.match ? "match" : "MISMATCH") << " |\n";
  } else {
    for (const auto& r : results) {
      os << r.space;
      for (size_t i = r.space.size(); i < 12; ++i) os << ' ';
      os << " q=" << r.q << "  count=" << r.count << "  predicted=" << r.predicted << "  "
         << (r.match ? "match" : "MISMATCH") << "\n";
    }
  }
  os << (ok ? "ALL MATCH\n" : "MISMATCH FOUND\n");
  return os.str();
}

std::vector<std::string> explain_ids() {
  std::vector<std::string> ids = {"A", "B",   "C",   "D",   "E",    "F",     "G", "H",
                                  "IJ", "L",  "M",   "2.4", "2.5",  "M05",  "PGL3", "Ztilde"};
  for (int c : columns::appendix_configs()) ids.push_back(std::to_string(c));
  ids.push_back("47");
  ids.push_back("48");
  return ids;
}

std::string explain_report(const std::string& id, const std::string& format) {
  check_format(format);
  Derivation d;
  bool numeric = !id.empty() && std::all_of(id.begin(), id.end(), ::isdigit);
  if (numeric) {
    d = columns::appendix_check(std::stoi(id));
  } else if (id == "2.4") {
    d.id = "lemma-2.4";
    d.final_value = hg_to_json(blocks::bm_ftilde2(&d));
  } else if (id == "2.5") {
    d.id = "lemma-2.5";
    d.final_value = hg_to_json(blocks::bm_ftilde3(&d));
  } else if (id == "M05") {
    d.id = "block-M05";
    blocks::bm_M05_as_D4(&d);
    d.final_value = hg_to_json(blocks::bm_M05_poly());
  } else if (id == "PGL3") {
    d.id = "block-PGL3";
    d.final_value = hg_to_json(blocks::bm_PGL3(&d));
  } else if (id == "Ztilde") {
    d.id = "block-Ztilde";
    d.final_value = hg_to_json(blocks::bm_Ztilde_fiber(&d).full);
  } else {
    d.id = "column-" + id;
    d.final_value = hg_to_json(columns::column_value(id, &d));
  }
  if (!columns::replay(d))
    throw Error(Errc::mismatch, "explain: derivation replay diverged for '" + id + "'");
  return derivation_text(d, format);
}

}  // namespace trig5::render
