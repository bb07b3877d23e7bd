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

#ifndef RULEKIT_REPORT_HPP
#define RULEKIT_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rulekit/mine.hpp"
#include "rulekit/rulegraph.hpp"
#include "rulekit/txdb.hpp"

namespace rulekit {

enum class Format { kMarkdown, kCsv, kDot, kJson };

std::optional<Format> parse_format(std::string_view name);
std::string format_name(Format f);

struct ReportConfig {
  Format format = Format::kMarkdown;
  int decimals = 4;                  // display precision, >= 1
  bool include_errata_notes = false;
  double strong_threshold = 0.5;     // cosine classification cut
};

// Fixed-point rendering with round-half-up at `decimals` places.
// Locale-independent: '.' separator, no grouping.
std::string format_fixed(double value, int decimals);

// One row per rule in input order, columns Relation then each populated
// measure. Markdown and JSON spell the relation "X→Y"; CSV uses the
// ASCII "X->Y". Multi-item sides are joined with '+'. Byte-deterministic.
// Errors: kUnsupportedFormat for dot.
std::string render_measure_table(const std::vector<ScoredRule>& rules,
                                 const ReportConfig& cfg);

// Itemset/count/support table in markdown, CSV or JSON.
std::string render_itemset_table(const std::vector<ItemsetCount>& itemsets,
                                 const ReportConfig& cfg);

// Undirected DOT graph: nodes sorted lexicographically, edges sorted by
// (min code, max code), edge labels carry the cosine at 4 decimals when
// available. Byte-deterministic.
std::string render_dot(const RelationGraph& g);

// Hub ranking as a numbered markdown list (or CSV rows) using labels
// from `db` when present.
std::string render_hubs(
    const std::vector<std::pair<std::string, std::size_t>>& hubs,
    const TransactionDB& db, const ReportConfig& cfg);

// Full markdown analysis report with sections, in order: Items, Pairs,
// Rules, Cosine, Graph Degrees, Recommendation. When
// cfg.include_errata_notes is set and db is the bundled survey fixture,
// appends the known discrepancies of the published confidence column.
// Errors: kUnsupportedFormat for anything but markdown.
std::string render_report(const TransactionDB& db, const ReportConfig& cfg);

}  // namespace rulekit

#endif  // RULEKIT_REPORT_HPP
