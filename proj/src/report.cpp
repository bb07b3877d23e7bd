// Copyright 2026, The rulekit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rulekit/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "json.hpp"
#include "rulekit/error.hpp"

namespace rulekit {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kArrowUtf8 = "→";
constexpr const char* kArrowAscii = "->";

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string relation_string(const Rule& r, const char* arrow) {
  return join(r.antecedent(), "+") + arrow + join(r.consequent(), "+");
}

std::string md_table(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::string out = "| " + join(header, " | ") + " |\n|";
  for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
  out += '\n';
  for (const auto& row : rows) {
    out += "| " + join(row, " | ") + " |\n";
  }
  return out;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::string out = join(header, ",") + "\n";
  for (const auto& row : rows) out += join(row, ",") + "\n";
  return out;
}

// measures present in at least one rule, canonical order
std::vector<std::string> populated_measures(
    const std::vector<ScoredRule>& rules) {
  auto has = [&](auto member) {
    return std::any_of(rules.begin(), rules.end(), [&](const ScoredRule& r) {
      return (r.measures.*member).has_value();
    });
  };
  std::vector<std::string> out;
  if (has(&MeasureSet::support)) out.push_back("support");
  if (has(&MeasureSet::confidence)) out.push_back("confidence");
  if (has(&MeasureSet::cosine)) out.push_back("cosine");
  if (has(&MeasureSet::lift)) out.push_back("lift");
  return out;
}

std::optional<double> measure_value(const MeasureSet& m,
                                    const std::string& name) {
  if (name == "support") return m.support;
  if (name == "confidence") return m.confidence;
  if (name == "cosine") return m.cosine;
  return m.lift;
}

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(s[0]));
  return s;
}

bool bare_dot_id(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string dot_id(const std::string& s) {
  if (bare_dot_id(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

bool is_bundled_fixture(const TransactionDB& db) {
  if (db.n_total() != 350) return false;
  static const TransactionDB fixture = paper_fixture();
  if (item_counts(db) != item_counts(fixture)) return false;
  const auto pairs = pair_counts(db);
  const auto expected = pair_counts(fixture);
  if (pairs.size() != expected.size()) return false;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].itemset != expected[i].itemset ||
        pairs[i].count != expected[i].count) {
      return false;
    }
  }
  // also require that no transaction has extra items
  return std::all_of(db.transactions().begin(), db.transactions().end(),
                     [](const Transaction& tx) { return tx.size() == 2; });
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "markdown") return Format::kMarkdown;
  if (name == "csv") return Format::kCsv;
  if (name == "dot") return Format::kDot;
  if (name == "json") return Format::kJson;
  return std::nullopt;
}

std::string format_name(Format f) {
  switch (f) {
    case Format::kMarkdown: return "markdown";
    case Format::kCsv: return "csv";
    case Format::kDot: return "dot";
    case Format::kJson: return "json";
  }
  return "?";
}

std::string format_fixed(double value, int decimals) {
  if (decimals < 1 || decimals > 15) {
    throw std::invalid_argument("decimals must lie in [1, 15]");
  }
  if (!std::isfinite(value)) {
    throw std::invalid_argument("value must be finite");
  }
  std::int64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  if (std::abs(value) >= 9e17 / static_cast<double>(scale)) {
    throw std::invalid_argument("value too large for fixed formatting");
  }
  // round half up (half away from zero; all rulekit measures are >= 0)
  auto scaled = std::llround(value * static_cast<double>(scale));
  bool negative = scaled < 0;
  std::uint64_t magnitude =
      negative ? 0ull - static_cast<std::uint64_t>(scaled)
               : static_cast<std::uint64_t>(scaled);
  std::string frac = std::to_string(magnitude % static_cast<std::uint64_t>(scale));
  frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
  std::string out = negative ? "-" : "";
  out += std::to_string(magnitude / static_cast<std::uint64_t>(scale));
  out += '.';
  out += frac;
  return out;
}

std::string render_measure_table(const std::vector<ScoredRule>& rules,
                                 const ReportConfig& cfg) {
  if (cfg.format == Format::kDot) {
    throw Error(ErrorKind::kUnsupportedFormat,
                "measure tables cannot be rendered as dot");
  }
  const auto columns = populated_measures(rules);

  if (cfg.format == Format::kJson) {
    ordered_json arr = ordered_json::array();
    for (const auto& rule : rules) {
      ordered_json row;
      row["relation"] = relation_string(rule.rule, kArrowUtf8);
      row["antecedent"] = rule.rule.antecedent();
      row["consequent"] = rule.rule.consequent();
      ordered_json measures;
      for (const auto& name : columns) {
        if (auto v = measure_value(rule.measures, name)) {
          measures[name] = format_fixed(*v, cfg.decimals);
        }
      }
      row["measures"] = std::move(measures);
      arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
  }

  const char* arrow =
      cfg.format == Format::kCsv ? kArrowAscii : kArrowUtf8;
  std::vector<std::string> header = {cfg.format == Format::kCsv ? "relation"
                                                                : "Relation"};
  for (const auto& name : columns) {
    header.push_back(cfg.format == Format::kCsv ? name : capitalize(name));
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& rule : rules) {
    std::vector<std::string> row = {relation_string(rule.rule, arrow)};
    for (const auto& name : columns) {
      auto v = measure_value(rule.measures, name);
      row.push_back(v ? format_fixed(*v, cfg.decimals) : "");
    }
    rows.push_back(std::move(row));
  }
  return cfg.format == Format::kCsv ? csv_table(header, rows)
                                    : md_table(header, rows);
}

std::string render_itemset_table(const std::vector<ItemsetCount>& itemsets,
                                 const ReportConfig& cfg) {
  if (cfg.format == Format::kDot) {
    throw Error(ErrorKind::kUnsupportedFormat,
                "itemset tables cannot be rendered as dot");
  }
  if (cfg.format == Format::kJson) {
    ordered_json arr = ordered_json::array();
    for (const auto& ic : itemsets) {
      ordered_json row;
      row["itemset"] = ic.itemset;
      row["count"] = ic.count;
      row["support"] = format_fixed(ic.support, cfg.decimals);
      arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
  }
  bool csv = cfg.format == Format::kCsv;
  std::vector<std::string> header =
      csv ? std::vector<std::string>{"itemset", "count", "support"}
          : std::vector<std::string>{"Itemset", "Count", "Support"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& ic : itemsets) {
    rows.push_back({join(ic.itemset, "+"), std::to_string(ic.count),
                    format_fixed(ic.support, cfg.decimals)});
  }
  return csv ? csv_table(header, rows) : md_table(header, rows);
}

std::string render_dot(const RelationGraph& g) {
  std::string out = "graph G {\n";
  for (const auto& node : g.nodes()) {
    out += "  " + dot_id(node) + ";\n";
  }
  for (const auto& [key, edge] : g.edges()) {
    out += "  " + dot_id(key.first) + " -- " + dot_id(key.second);
    if (auto c = edge.cosine()) {
      out += " [label=\"" + format_fixed(*c, 4) + "\"]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string render_hubs(
    const std::vector<std::pair<std::string, std::size_t>>& hubs,
    const TransactionDB& db, const ReportConfig& cfg) {
  if (cfg.format == Format::kDot) {
    throw Error(ErrorKind::kUnsupportedFormat,
                "hub rankings cannot be rendered as dot");
  }
  if (cfg.format == Format::kJson) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < hubs.size(); ++i) {
      ordered_json row;
      row["rank"] = i + 1;
      row["code"] = hubs[i].first;
      auto it = db.universe().find(hubs[i].first);
      if (it != db.universe().end() && !it->second.empty()) {
        row["label"] = it->second;
      }
      row["degree"] = hubs[i].second;
      arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
  }
  if (cfg.format == Format::kCsv) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < hubs.size(); ++i) {
      rows.push_back({std::to_string(i + 1), hubs[i].first,
                      std::to_string(hubs[i].second)});
    }
    return csv_table({"rank", "code", "degree"}, rows);
  }
  std::string out;
  for (std::size_t i = 0; i < hubs.size(); ++i) {
    out += std::to_string(i + 1) + ". " + hubs[i].first;
    auto it = db.universe().find(hubs[i].first);
    if (it != db.universe().end() && !it->second.empty()) {
      out += " (" + it->second + ")";
    }
    out += ": degree " + std::to_string(hubs[i].second) + "\n";
  }
  return out;
}

std::string render_report(const TransactionDB& db, const ReportConfig& cfg) {
  if (cfg.format != Format::kMarkdown) {
    throw Error(ErrorKind::kUnsupportedFormat,
                "the full report is markdown only");
  }
  const auto counts = item_counts(db);
  const auto pairs = pair_counts(db);
  const auto rules = generate_rules(db, pairs, Thresholds{});
  const auto graph = build_relation_graph(rules);
  const auto degree_map = degrees(graph);
  const auto hubs = recommend_hubs(graph, db, 2);

  std::string out = "# Association Rule Report\n\n";
  out += "Transactions: " + std::to_string(db.n_total()) + "\n";
  out += "Items: " + std::to_string(db.universe().size()) + "\n";

  out += "\n## Items\n\n";
  {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [code, label] : db.universe()) {
      rows.push_back({code, label, std::to_string(counts.at(code))});
    }
    out += md_table({"Code", "Label", "Count"}, rows);
  }

  out += "\n## Pairs\n\n";
  {
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : pairs) {
      rows.push_back({join(p.itemset, "+"), std::to_string(p.count),
                      format_fixed(p.support, cfg.decimals)});
    }
    out += md_table({"Pair", "Count", "Support"}, rows);
  }

  out += "\n## Rules\n\n";
  {
    ReportConfig table_cfg = cfg;
    table_cfg.format = Format::kMarkdown;
    out += render_measure_table(rules, table_cfg);
  }

  out += "\n## Cosine\n\n";
  {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, edge] : graph.edges()) {
      auto c = edge.cosine();
      std::string value = c ? format_fixed(*c, cfg.decimals) : "";
      std::string strength =
          c ? (classify_cosine(*c, cfg.strong_threshold) == Strength::kStrong
                   ? "strong"
                   : "weak")
            : "";
      rows.push_back({key.first + "+" + key.second, value, strength});
    }
    out += md_table({"Pair", "Cosine", "Class"}, rows);
  }

  out += "\n## Graph Degrees\n\n";
  {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [code, degree] : degree_map) {
      rows.push_back({code, std::to_string(degree)});
    }
    out += md_table({"Code", "Degree"}, rows);
  }

  out += "\n## Recommendation\n\n";
  if (hubs.empty()) {
    out += "No relations found.\n";
  } else {
    out += "Highest-degree items in the relation graph:\n\n";
    ReportConfig list_cfg = cfg;
    list_cfg.format = Format::kMarkdown;
    out += render_hubs(hubs, db, list_cfg);
  }

  if (cfg.include_errata_notes && is_bundled_fixture(db)) {
    // confidence values published with the bundled survey's relation
    // table that disagree with count(X ∪ Y) / count(X)
    struct Erratum {
      const char* from;
      const char* to;
      const char* published;
    };
    static constexpr Erratum kErrata[] = {
        {"N", "C", "0.4571"},
        {"P", "C", "0.2857"},
        {"C", "R", "0.6667"},
        {"C", "V", "0.3714"},
    };
    out += "\n## Errata\n\n";
    out +=
        "Confidence values published with the bundled survey data that do "
        "not\nfollow from the confidence definition; the Computed column "
        "is\ncount(X ∪ Y) / count(X) on the data itself:\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : kErrata) {
      Rule rule({e.from}, {e.to});
      double computed = confidence(db, rule);
      rows.push_back({relation_string(rule, kArrowUtf8),
                      format_fixed(computed, 4), e.published});
    }
    out += md_table({"Relation", "Computed", "Published"}, rows);
  }

  return out;
}

}  // namespace rulekit
