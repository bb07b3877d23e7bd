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

#ifndef RULEKIT_MEASURES_HPP
#define RULEKIT_MEASURES_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rulekit/txdb.hpp"

namespace rulekit {

// Directed implication between two disjoint, non-empty itemsets.
// Construction canonicalizes (sorts) both sides and throws
// Error(kInvalidRule) when either side is empty or they intersect.
class Rule {
 public:
  Rule(Itemset antecedent, Itemset consequent);

  const Itemset& antecedent() const { return antecedent_; }
  const Itemset& consequent() const { return consequent_; }

  bool operator==(const Rule& other) const = default;

 private:
  Itemset antecedent_;
  Itemset consequent_;
};

// Scores of one rule; only requested measures are populated.
struct MeasureSet {
  std::optional<double> support;
  std::optional<double> confidence;
  std::optional<double> cosine;
  std::optional<double> lift;
};

// count(X ∪ Y) / N.
// Errors: kUnknownItem, kEmptyDatabase.
double support(const TransactionDB& db, const Rule& r);

// count(X ∪ Y) / count(X).
// Errors: kUnknownItem, kUndefinedConfidence when count(X) = 0.
double confidence(const TransactionDB& db, const Rule& r);

// count(X ∪ Y) / sqrt(count(X) * count(Y)). The itemsets are an
// unordered pair; the value is symmetric and null-invariant. x and y
// must be non-empty and disjoint.
// Errors: kUnknownItem, kInvalidRule, kUndefinedCosine when either
// count is 0.
double cosine(const TransactionDB& db, const Itemset& x, const Itemset& y);

// N * count(X ∪ Y) / (count(X) * count(Y)); 1 means independence.
// Errors: kUnknownItem, kUndefinedLift when either count is 0.
double lift(const TransactionDB& db, const Rule& r);

// Registry of measure names accepted by evaluate(), in canonical order.
const std::vector<std::string>& measure_names();

// Populates exactly the requested measures. Unknown names raise
// kUnknownMeasure; per-measure errors propagate.
MeasureSet evaluate(const TransactionDB& db, const Rule& r,
                    const std::set<std::string>& which);

}  // namespace rulekit

#endif  // RULEKIT_MEASURES_HPP
