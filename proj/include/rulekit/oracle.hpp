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

#ifndef RULEKIT_ORACLE_HPP
#define RULEKIT_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rulekit/measures.hpp"
#include "rulekit/mine.hpp"
#include "rulekit/txdb.hpp"

// Ground-truth kit: a deterministic synthetic data generator plus
// brute-force recomputations of counting and measures. The brute-force
// paths share no counting or threshold code with the mine/measures
// modules, so the two can check each other.
namespace rulekit::oracle {

// Recipe for a synthetic database: size-2 transactions per weighted
// pair plus size-1 transactions per extra singleton, shuffled
// deterministically by seed.
struct SynthSpec {
  std::uint64_t seed = 0;
  std::vector<std::string> universe;
  // key is the (min, max) code pair
  std::map<std::pair<std::string, std::string>, std::int64_t> pair_weights;
  std::map<std::string, std::int64_t> extra_singletons;
};

// Key-value text format, line oriented:
//
//   # comment
//   seed 42
//   items H,N,P,R,V,C
//   pair H N 120
//   singleton Q 5
//
// `items` is mandatory and every pair endpoint or singleton code must be
// declared in it. Errors: kInvalidSpec with the offending line.
SynthSpec parse_synth_spec(std::string_view text);

// Builds the database: pairs in sorted order, each repeated by its
// multiplicity, then singletons, then a Fisher-Yates shuffle driven by
// mt19937_64(seed) with modulo index reduction. The shuffle is pinned to
// that exact procedure so identical seeds give identical databases on
// every platform. Errors: kInvalidSpec.
TransactionDB synth_db(const SynthSpec& spec);

// Enumerates every non-empty subset of the universe, counts it by full
// scan, and keeps those occurring at least once with support >=
// min_support (exact rational comparison). Same sort order as apriori.
// Errors: kUniverseTooLarge when the universe exceeds 20 items.
std::vector<ItemsetCount> brute_force_frequent(const TransactionDB& db,
                                               double min_support);

// Support, confidence, cosine and lift from independent full-scan
// counts; agrees with measures::evaluate bit for bit, including error
// behaviour.
MeasureSet brute_force_measures(const TransactionDB& db, const Rule& r);

}  // namespace rulekit::oracle

#endif  // RULEKIT_ORACLE_HPP
