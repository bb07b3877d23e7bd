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

#ifndef RULEKIT_MINE_HPP
#define RULEKIT_MINE_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "rulekit/txdb.hpp"

namespace rulekit {

// An itemset with its absolute occurrence count. `support` is
// count / n_total, computed from the integers with a single division.
struct ItemsetCount {
  Itemset itemset;
  std::int64_t count = 0;
  double support = 0.0;
};

inline constexpr std::size_t kNoSizeLimit =
    std::numeric_limits<std::size_t>::max();

struct MiningConfig {
  double min_support = 0.0;                      // fraction in [0, 1]
  std::size_t max_itemset_size = kNoSizeLimit;   // >= 1
};

// Exact test of count/denom >= threshold. The threshold's value is
// taken exactly as the dyadic rational the double encodes and compared
// by cross-multiplied integer arithmetic, so no quotient is ever
// rounded. count and denom must be non-negative, denom may be 0 only
// when count is 0.
bool ratio_meets_threshold(std::int64_t count, std::int64_t denom,
                           double threshold);

// One entry per unordered pair occurring in at least one transaction;
// a transaction contributes every pair it contains. Sorted
// lexicographically.
std::vector<ItemsetCount> pair_counts(const TransactionDB& db);

// Level-wise frequent itemset mining. Returns exactly the itemsets with
// support >= cfg.min_support and size <= cfg.max_itemset_size, sorted by
// (size, lexicographic itemset). min_support = 0 means "occurs at least
// once"; zero-count itemsets are never materialized. Throws
// std::invalid_argument on an invalid config.
std::vector<ItemsetCount> apriori(const TransactionDB& db,
                                  const MiningConfig& cfg);

}  // namespace rulekit

#endif  // RULEKIT_MINE_HPP
