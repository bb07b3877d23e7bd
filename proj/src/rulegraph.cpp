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

#include "rulekit/rulegraph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rulekit/error.hpp"

namespace rulekit {

namespace {

// exact comparison of a1/b1 vs a2/b2 without division
int compare_ratios(std::int64_t a1, std::int64_t b1, std::int64_t a2,
                   std::int64_t b2) {
  auto lhs = static_cast<__int128>(a1) * b2;
  auto rhs = static_cast<__int128>(a2) * b1;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

bool rule_less(const Rule& a, const Rule& b) {
  if (a.antecedent() != b.antecedent()) return a.antecedent() < b.antecedent();
  return a.consequent() < b.consequent();
}

}  // namespace

std::optional<double> RelationGraph::Edge::cosine() const {
  if (forward && forward->measures.cosine) return forward->measures.cosine;
  if (backward && backward->measures.cosine) return backward->measures.cosine;
  return std::nullopt;
}

void RelationGraph::add_rule(const ScoredRule& rule) {
  if (rule.rule.antecedent().size() != 1 ||
      rule.rule.consequent().size() != 1) {
    throw std::invalid_argument(
        "relation graph edges require singleton -> singleton rules");
  }
  const std::string& from = rule.rule.antecedent()[0];
  const std::string& to = rule.rule.consequent()[0];
  std::pair<std::string, std::string> key = std::minmax(from, to);
  nodes_.insert(from);
  nodes_.insert(to);
  Edge& edge = edges_[key];
  edge.a = key.first;
  edge.b = key.second;
  auto& slot = (from == key.first) ? edge.forward : edge.backward;
  if (!slot || slot->measures.confidence.value_or(0.0) <
                   rule.measures.confidence.value_or(0.0)) {
    slot = rule;
  }
}

bool RelationGraph::adjacent(const std::string& u,
                             const std::string& v) const {
  return edges_.find(std::minmax(u, v)) != edges_.end();
}

std::vector<ScoredRule> generate_rules(
    const TransactionDB& db, const std::vector<ItemsetCount>& frequent_pairs,
    const Thresholds& thresholds) {
  if (!(thresholds.min_support >= 0.0 && thresholds.min_support <= 1.0) ||
      !(thresholds.min_confidence >= 0.0 &&
        thresholds.min_confidence <= 1.0)) {
    throw std::invalid_argument("thresholds must lie in [0, 1]");
  }
  const auto counts = item_counts(db);
  const auto n = static_cast<std::int64_t>(db.n_total());

  struct Scored {
    ScoredRule rule;
    std::int64_t pair_count;
    std::int64_t antecedent_count;
  };
  std::vector<Scored> kept;

  for (const auto& pair : frequent_pairs) {
    if (pair.itemset.size() != 2) {
      throw std::invalid_argument("frequent_pairs must contain size-2 itemsets");
    }
    for (int dir = 0; dir < 2; ++dir) {
      const std::string& from = pair.itemset[dir == 0 ? 0 : 1];
      const std::string& to = pair.itemset[dir == 0 ? 1 : 0];
      auto it = counts.find(from);
      std::int64_t from_count = it == counts.end() ? 0 : it->second;
      if (!ratio_meets_threshold(pair.count, n, thresholds.min_support)) {
        continue;
      }
      if (from_count == 0 ||
          !ratio_meets_threshold(pair.count, from_count,
                                 thresholds.min_confidence)) {
        continue;
      }
      Rule rule({from}, {to});
      MeasureSet measures =
          evaluate(db, rule, {"support", "confidence", "cosine"});
      kept.push_back(Scored{ScoredRule{rule, measures}, pair.count,
                            from_count});
    }
  }

  std::sort(kept.begin(), kept.end(), [](const Scored& a, const Scored& b) {
    if (a.pair_count != b.pair_count) return a.pair_count > b.pair_count;
    int conf = compare_ratios(a.pair_count, a.antecedent_count, b.pair_count,
                              b.antecedent_count);
    if (conf != 0) return conf > 0;
    return rule_less(a.rule.rule, b.rule.rule);
  });

  std::vector<ScoredRule> out;
  out.reserve(kept.size());
  for (auto& s : kept) out.push_back(std::move(s.rule));
  return out;
}

RelationGraph build_relation_graph(const std::vector<ScoredRule>& rules) {
  RelationGraph g;
  for (const auto& rule : rules) g.add_rule(rule);
  return g;
}

std::map<std::string, std::size_t> degrees(const RelationGraph& g) {
  std::map<std::string, std::size_t> out;
  for (const auto& node : g.nodes()) out[node] = 0;
  for (const auto& [key, edge] : g.edges()) {
    ++out[key.first];
    ++out[key.second];
  }
  return out;
}

std::vector<std::pair<std::string, std::size_t>> recommend_hubs(
    const RelationGraph& g, const TransactionDB& db, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  const auto deg = degrees(g);
  const auto counts = item_counts(db);
  std::vector<std::pair<std::string, std::size_t>> ranked(deg.begin(),
                                                          deg.end());
  std::sort(ranked.begin(), ranked.end(),
            [&](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              auto ca = counts.count(a.first) ? counts.at(a.first) : 0;
              auto cb = counts.count(b.first) ? counts.at(b.first) : 0;
              if (ca != cb) return ca > cb;
              return a.first < b.first;
            });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

Strength classify_cosine(double value, double strong_threshold) {
  if (!(strong_threshold >= 0.0 && strong_threshold <= 1.0)) {
    throw std::invalid_argument("strong_threshold must lie in [0, 1]");
  }
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorKind::kOutOfRange,
                "cosine value must lie in [0, 1]");
  }
  return value >= strong_threshold ? Strength::kStrong : Strength::kWeak;
}

}  // namespace rulekit
