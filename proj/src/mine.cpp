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

#include "rulekit/mine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace rulekit {

namespace {

void validate_config(const MiningConfig& cfg) {
  if (!(cfg.min_support >= 0.0 && cfg.min_support <= 1.0)) {
    throw std::invalid_argument("min_support must lie in [0, 1]");
  }
  if (cfg.max_itemset_size == 0) {
    throw std::invalid_argument("max_itemset_size must be positive");
  }
}

bool contains_all(const Transaction& tx, const Itemset& items) {
  return std::includes(tx.begin(), tx.end(), items.begin(), items.end());
}

ItemsetCount make_count(Itemset itemset, std::int64_t count,
                        std::size_t n_total) {
  ItemsetCount out;
  out.itemset = std::move(itemset);
  out.count = count;
  out.support = static_cast<double>(count) / static_cast<double>(n_total);
  return out;
}

bool itemset_order(const ItemsetCount& a, const ItemsetCount& b) {
  if (a.itemset.size() != b.itemset.size()) {
    return a.itemset.size() < b.itemset.size();
  }
  return a.itemset < b.itemset;
}

}  // namespace

bool ratio_meets_threshold(std::int64_t count, std::int64_t denom,
                           double threshold) {
  if (!(threshold > 0.0)) return true;  // any ratio >= 0 qualifies
  if (count <= 0) return false;
  if (threshold > 1.0) return false;    // ratios never exceed 1
  // Decompose the threshold into its exact dyadic value m * 2^e and
  // compare count * 2^-e >= m * denom in 128-bit integers. Nothing is
  // rounded, so exact boundary hits classify correctly.
  int exp = 0;
  double frac = std::frexp(threshold, &exp);
  auto mantissa = static_cast<std::int64_t>(std::ldexp(frac, 53));
  int e = exp - 53;
  while ((mantissa & 1) == 0 && e < 0) {
    mantissa >>= 1;
    ++e;
  }
  auto rhs = static_cast<unsigned __int128>(mantissa) *
             static_cast<unsigned __int128>(denom);
  auto lhs = static_cast<unsigned __int128>(count);
  int shift = -e;
  if (shift >= 128) return true;  // lhs * 2^shift >= 2^128 > rhs
  if (shift > 0) {
    if ((lhs >> (128 - shift)) != 0) return true;  // same overflow argument
    lhs <<= shift;
  }
  return lhs >= rhs;
}

std::vector<ItemsetCount> pair_counts(const TransactionDB& db) {
  std::map<std::pair<std::string, std::string>, std::int64_t> counts;
  for (const auto& tx : db.transactions()) {
    for (std::size_t i = 0; i < tx.size(); ++i) {
      for (std::size_t j = i + 1; j < tx.size(); ++j) {
        ++counts[{tx[i], tx[j]}];  // tx is sorted, so (i, j) is (min, max)
      }
    }
  }
  std::vector<ItemsetCount> out;
  out.reserve(counts.size());
  for (const auto& [pair, count] : counts) {
    out.push_back(
        make_count({pair.first, pair.second}, count, db.n_total()));
  }
  return out;  // map order is already (size fixed, lexicographic)
}

std::vector<ItemsetCount> apriori(const TransactionDB& db,
                                  const MiningConfig& cfg) {
  validate_config(cfg);
  const auto n = static_cast<std::int64_t>(db.n_total());

  auto keep = [&](std::int64_t count) {
    return count >= 1 && ratio_meets_threshold(count, n, cfg.min_support);
  };

  std::vector<ItemsetCount> result;

  // level 1
  std::map<Itemset, std::int64_t> level;
  for (const auto& tx : db.transactions()) {
    for (const auto& code : tx) ++level[{code}];
  }
  std::erase_if(level, [&](const auto& kv) { return !keep(kv.second); });

  std::size_t k = 1;
  while (!level.empty()) {
    for (const auto& [itemset, count] : level) {
      result.push_back(make_count(itemset, count, db.n_total()));
    }
    if (k >= cfg.max_itemset_size) break;
    ++k;

    // candidates: join two frequent (k-1)-itemsets sharing a (k-2)-prefix
    std::vector<Itemset> prev;
    prev.reserve(level.size());
    for (const auto& [itemset, count] : level) prev.push_back(itemset);

    std::vector<Itemset> candidates;
    for (std::size_t i = 0; i < prev.size(); ++i) {
      for (std::size_t j = i + 1; j < prev.size(); ++j) {
        if (!std::equal(prev[i].begin(), prev[i].end() - 1,
                        prev[j].begin(), prev[j].end() - 1)) {
          continue;  // prev is sorted, so shared prefixes are adjacent
        }
        Itemset cand = prev[i];
        cand.push_back(prev[j].back());  // back(i) < back(j) by map order
        // prune: every (k-1)-subset must itself be frequent
        bool all_subsets_frequent = true;
        Itemset subset(cand.begin() + 1, cand.end());
        for (std::size_t drop = 0; drop < cand.size(); ++drop) {
          if (drop > 0) subset[drop - 1] = cand[drop - 1];
          if (!std::binary_search(prev.begin(), prev.end(), subset)) {
            all_subsets_frequent = false;
            break;
          }
        }
        if (all_subsets_frequent) candidates.push_back(std::move(cand));
      }
    }

    level.clear();
    if (candidates.empty()) break;
    for (const auto& tx : db.transactions()) {
      if (tx.size() < k) continue;
      for (const auto& cand : candidates) {
        if (contains_all(tx, cand)) ++level[cand];
      }
    }
    std::erase_if(level, [&](const auto& kv) { return !keep(kv.second); });
  }

  std::sort(result.begin(), result.end(), itemset_order);
  return result;
}

}  // namespace rulekit
