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

#ifndef RULEKIT_RULEGRAPH_HPP
#define RULEKIT_RULEGRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rulekit/measures.hpp"
#include "rulekit/mine.hpp"
#include "rulekit/txdb.hpp"

namespace rulekit {

struct ScoredRule {
  Rule rule;
  MeasureSet measures;  // populated at least for support and confidence
};

struct Thresholds {
  double min_support = 0.0;
  double min_confidence = 0.0;
};

// Undirected graph over item codes. Each edge keeps the best surviving
// rule in each direction; both directions share support and cosine.
class RelationGraph {
 public:
  struct Edge {
    std::string a;  // a < b
    std::string b;
    std::optional<ScoredRule> forward;   // a -> b
    std::optional<ScoredRule> backward;  // b -> a

    std::optional<double> cosine() const;
  };

  void add_rule(const ScoredRule& rule);

  const std::set<std::string>& nodes() const { return nodes_; }
  const std::map<std::pair<std::string, std::string>, Edge>& edges() const {
    return edges_;
  }
  std::size_t edge_count() const { return edges_.size(); }
  bool adjacent(const std::string& u, const std::string& v) const;

 private:
  std::set<std::string> nodes_;
  std::map<std::pair<std::string, std::string>, Edge> edges_;
};

// Scores both directions of every frequent pair and keeps the rules
// passing both thresholds (exact integer comparisons, no rounded
// quotients). Sorted by descending support, then descending confidence,
// then lexicographic rule. Populates support, confidence and cosine.
// `frequent_pairs` must be size-2 itemsets counted against the same db.
std::vector<ScoredRule> generate_rules(
    const TransactionDB& db, const std::vector<ItemsetCount>& frequent_pairs,
    const Thresholds& thresholds);

// One undirected edge per unordered pair with at least one surviving
// rule; nodes are the items of surviving rules. Rules must be
// singleton -> singleton.
RelationGraph build_relation_graph(const std::vector<ScoredRule>& rules);

// Incident-edge count per node.
std::map<std::string, std::size_t> degrees(const RelationGraph& g);

// Top-k nodes by descending degree; ties broken by descending item
// count in db, then by code. Returns fewer than k when the graph is
// smaller.
std::vector<std::pair<std::string, std::size_t>> recommend_hubs(
    const RelationGraph& g, const TransactionDB& db, std::size_t k);

enum class Strength { kWeak, kStrong };

// strong iff value >= strong_threshold. value must lie in [0, 1]
// (Error kOutOfRange otherwise); the threshold must too
// (std::invalid_argument).
Strength classify_cosine(double value, double strong_threshold = 0.5);

}  // namespace rulekit

#endif  // RULEKIT_RULEGRAPH_HPP
