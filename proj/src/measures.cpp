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

#include "rulekit/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "rulekit/error.hpp"

namespace rulekit {

namespace {

Itemset canonicalize(Itemset items, const char* side) {
  if (items.empty()) {
    throw Error(ErrorKind::kInvalidRule,
                std::string(side) + " itemset must not be empty");
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

void require_known(const TransactionDB& db, const Itemset& items) {
  for (const auto& code : items) {
    if (!db.contains_code(code)) {
      throw Error(ErrorKind::kUnknownItem, "unknown item code '" + code + "'");
    }
  }
}

Itemset merge_union(const Itemset& x, const Itemset& y) {
  Itemset u;
  u.reserve(x.size() + y.size());
  std::set_union(x.begin(), x.end(), y.begin(), y.end(),
                 std::back_inserter(u));
  return u;
}

std::int64_t count_containing(const TransactionDB& db, const Itemset& items) {
  std::int64_t count = 0;
  for (const auto& tx : db.transactions()) {
    if (std::includes(tx.begin(), tx.end(), items.begin(), items.end())) {
      ++count;
    }
  }
  return count;
}

bool disjoint(const Itemset& x, const Itemset& y) {
  Itemset common;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                        std::back_inserter(common));
  return common.empty();
}

}  // namespace

Rule::Rule(Itemset antecedent, Itemset consequent)
    : antecedent_(canonicalize(std::move(antecedent), "antecedent")),
      consequent_(canonicalize(std::move(consequent), "consequent")) {
  if (!disjoint(antecedent_, consequent_)) {
    throw Error(ErrorKind::kInvalidRule,
                "antecedent and consequent must be disjoint");
  }
}

double support(const TransactionDB& db, const Rule& r) {
  require_known(db, r.antecedent());
  require_known(db, r.consequent());
  if (db.n_total() == 0) {
    throw Error(ErrorKind::kEmptyDatabase, "support undefined on empty database");
  }
  auto both = count_containing(db, merge_union(r.antecedent(), r.consequent()));
  return static_cast<double>(both) / static_cast<double>(db.n_total());
}

double confidence(const TransactionDB& db, const Rule& r) {
  require_known(db, r.antecedent());
  require_known(db, r.consequent());
  auto antecedent_count = count_containing(db, r.antecedent());
  if (antecedent_count == 0) {
    throw Error(ErrorKind::kUndefinedConfidence,
                "antecedent never occurs; confidence undefined");
  }
  auto both = count_containing(db, merge_union(r.antecedent(), r.consequent()));
  return static_cast<double>(both) / static_cast<double>(antecedent_count);
}

double cosine(const TransactionDB& db, const Itemset& x, const Itemset& y) {
  Itemset cx = canonicalize(x, "first");
  Itemset cy = canonicalize(y, "second");
  if (!disjoint(cx, cy)) {
    throw Error(ErrorKind::kInvalidRule, "itemsets must be disjoint");
  }
  require_known(db, cx);
  require_known(db, cy);
  auto count_x = count_containing(db, cx);
  auto count_y = count_containing(db, cy);
  if (count_x == 0 || count_y == 0) {
    throw Error(ErrorKind::kUndefinedCosine,
                "an itemset never occurs; cosine undefined");
  }
  auto both = count_containing(db, merge_union(cx, cy));
  // the 1/N factors cancel, so this is computed from raw counts
  return static_cast<double>(both) /
         std::sqrt(static_cast<double>(count_x) * static_cast<double>(count_y));
}

double lift(const TransactionDB& db, const Rule& r) {
  require_known(db, r.antecedent());
  require_known(db, r.consequent());
  auto count_x = count_containing(db, r.antecedent());
  auto count_y = count_containing(db, r.consequent());
  if (count_x == 0 || count_y == 0) {
    throw Error(ErrorKind::kUndefinedLift,
                "a side never occurs; lift undefined");
  }
  auto both = count_containing(db, merge_union(r.antecedent(), r.consequent()));
  return static_cast<double>(db.n_total()) * static_cast<double>(both) /
         (static_cast<double>(count_x) * static_cast<double>(count_y));
}

const std::vector<std::string>& measure_names() {
  static const std::vector<std::string> kNames = {"support", "confidence",
                                                  "cosine", "lift"};
  return kNames;
}

MeasureSet evaluate(const TransactionDB& db, const Rule& r,
                    const std::set<std::string>& which) {
  for (const auto& name : which) {
    const auto& names = measure_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw Error(ErrorKind::kUnknownMeasure,
                  "unknown measure '" + name + "'");
    }
  }
  MeasureSet out;
  if (which.count("support")) out.support = support(db, r);
  if (which.count("confidence")) out.confidence = confidence(db, r);
  if (which.count("cosine")) {
    out.cosine = cosine(db, r.antecedent(), r.consequent());
  }
  if (which.count("lift")) out.lift = lift(db, r);
  return out;
}

}  // namespace rulekit
