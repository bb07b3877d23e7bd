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

#include "rulekit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "rulekit/error.hpp"

// Everything here recounts from the raw transactions on purpose; none of
// the counting, thresholding or candidate logic of mine/measures is
// reused. Threshold tests go through an arbitrary-precision rational
// instead of the library's dyadic integer comparison, so the two exact
// routes cross-check each other.
namespace rulekit::oracle {

namespace {

using boost::multiprecision::cpp_rational;

// plain nested-loop subset test, independent of std::includes usage
// elsewhere
bool transaction_has_all(const Transaction& tx, const Itemset& items) {
  for (const auto& code : items) {
    bool found = false;
    for (const auto& t : tx) {
      if (t == code) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::int64_t scan_count(const TransactionDB& db, const Itemset& items) {
  std::int64_t count = 0;
  for (const auto& tx : db.transactions()) {
    if (transaction_has_all(tx, items)) ++count;
  }
  return count;
}

bool meets_support(std::int64_t count, std::int64_t n, double min_support) {
  if (n == 0) return false;
  return cpp_rational(count, n) >= cpp_rational(min_support);
}

void require_known(const TransactionDB& db, const Itemset& items) {
  for (const auto& code : items) {
    if (!db.contains_code(code)) {
      throw Error(ErrorKind::kUnknownItem, "unknown item code '" + code + "'");
    }
  }
}

Itemset union_of(const Itemset& x, const Itemset& y) {
  Itemset u = x;
  u.insert(u.end(), y.begin(), y.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

void validate_spec(const SynthSpec& spec) {
  std::set<std::string> universe(spec.universe.begin(), spec.universe.end());
  if (universe.size() != spec.universe.size()) {
    throw Error(ErrorKind::kInvalidSpec, "duplicate code in universe");
  }
  for (const auto& code : spec.universe) {
    if (!valid_item_code(code)) {
      throw Error(ErrorKind::kInvalidSpec,
                  "invalid item code '" + code + "'");
    }
  }
  std::int64_t total = 0;
  for (const auto& [pair, weight] : spec.pair_weights) {
    if (pair.first >= pair.second) {
      throw Error(ErrorKind::kInvalidSpec,
                  "pair must be two distinct codes in (min, max) order");
    }
    if (!universe.count(pair.first) || !universe.count(pair.second)) {
      throw Error(ErrorKind::kInvalidSpec,
                  "pair endpoint not in universe: " + pair.first + "," +
                      pair.second);
    }
    if (weight < 0) {
      throw Error(ErrorKind::kInvalidSpec, "negative pair multiplicity");
    }
    total += weight;
  }
  for (const auto& [code, count] : spec.extra_singletons) {
    if (!universe.count(code)) {
      throw Error(ErrorKind::kInvalidSpec,
                  "singleton code not in universe: " + code);
    }
    if (count < 0) {
      throw Error(ErrorKind::kInvalidSpec, "negative singleton count");
    }
    total += count;
  }
  if (total == 0) {
    throw Error(ErrorKind::kInvalidSpec,
                "spec would generate no transactions");
  }
}

std::int64_t parse_int(std::string_view token, std::size_t line_no) {
  try {
    std::size_t used = 0;
    std::string s(token);
    std::int64_t value = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorKind::kInvalidSpec,
                "expected an integer, got '" + std::string(token) + "'",
                line_no);
  }
}

std::vector<std::string> whitespace_split(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

SynthSpec parse_synth_spec(std::string_view text) {
  SynthSpec spec;
  bool have_items = false;
  bool have_seed = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    bool last = end == std::string_view::npos;
    std::string_view line =
        text.substr(start, last ? text.size() - start : end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (last && line.empty() && start == text.size()) break;

    auto tokens = whitespace_split(line);
    if (!tokens.empty() && tokens[0][0] != '#') {
      const std::string& directive = tokens[0];
      if (directive == "seed") {
        if (have_seed || tokens.size() != 2) {
          throw Error(ErrorKind::kInvalidSpec, "bad seed line", line_no);
        }
        spec.seed = static_cast<std::uint64_t>(parse_int(tokens[1], line_no));
        have_seed = true;
      } else if (directive == "items") {
        if (have_items || tokens.size() != 2) {
          throw Error(ErrorKind::kInvalidSpec, "bad items line", line_no);
        }
        std::string list = tokens[1];
        std::size_t pos = 0;
        while (pos <= list.size()) {
          std::size_t comma = list.find(',', pos);
          std::string code = list.substr(
              pos, comma == std::string::npos ? std::string::npos
                                              : comma - pos);
          if (code.empty()) {
            throw Error(ErrorKind::kInvalidSpec, "empty item code", line_no);
          }
          spec.universe.push_back(code);
          if (comma == std::string::npos) break;
          pos = comma + 1;
        }
        have_items = true;
      } else if (directive == "pair") {
        if (tokens.size() != 4) {
          throw Error(ErrorKind::kInvalidSpec,
                      "expected: pair CODE CODE COUNT", line_no);
        }
        if (tokens[1] == tokens[2]) {
          throw Error(ErrorKind::kInvalidSpec,
                      "pair endpoints must differ", line_no);
        }
        std::pair<std::string, std::string> key =
            std::minmax(tokens[1], tokens[2]);
        if (!spec.pair_weights.emplace(key, parse_int(tokens[3], line_no))
                 .second) {
          throw Error(ErrorKind::kInvalidSpec,
                      "duplicate pair " + key.first + "," + key.second,
                      line_no);
        }
      } else if (directive == "singleton") {
        if (tokens.size() != 3) {
          throw Error(ErrorKind::kInvalidSpec,
                      "expected: singleton CODE COUNT", line_no);
        }
        if (!spec.extra_singletons
                 .emplace(tokens[1], parse_int(tokens[2], line_no))
                 .second) {
          throw Error(ErrorKind::kInvalidSpec,
                      "duplicate singleton " + tokens[1], line_no);
        }
      } else {
        throw Error(ErrorKind::kInvalidSpec,
                    "unknown directive '" + directive + "'", line_no);
      }
    }
    if (last) break;
    start = end + 1;
  }

  if (!have_items) {
    throw Error(ErrorKind::kInvalidSpec, "missing items line");
  }
  validate_spec(spec);
  return spec;
}

TransactionDB synth_db(const SynthSpec& spec) {
  validate_spec(spec);
  std::vector<Transaction> txs;
  for (const auto& [pair, weight] : spec.pair_weights) {
    for (std::int64_t i = 0; i < weight; ++i) {
      txs.push_back({pair.first, pair.second});
    }
  }
  for (const auto& [code, count] : spec.extra_singletons) {
    for (std::int64_t i = 0; i < count; ++i) {
      txs.push_back({code});
    }
  }
  // Fisher-Yates with mt19937_64 and modulo index reduction; pinned so
  // every platform shuffles identically for a given seed.
  std::mt19937_64 rng(spec.seed);
  for (std::size_t end = txs.size(); end > 1; --end) {
    std::size_t j = static_cast<std::size_t>(rng() % end);
    std::swap(txs[end - 1], txs[j]);
  }
  std::map<std::string, std::string> labels;
  for (const auto& code : spec.universe) labels.try_emplace(code);
  return TransactionDB(std::move(txs), std::move(labels));
}

std::vector<ItemsetCount> brute_force_frequent(const TransactionDB& db,
                                               double min_support) {
  const auto& universe = db.universe();
  if (universe.size() > 20) {
    throw Error(ErrorKind::kUniverseTooLarge,
                "brute force capped at 20 items, got " +
                    std::to_string(universe.size()));
  }
  std::vector<std::string> codes;
  codes.reserve(universe.size());
  for (const auto& [code, label] : universe) codes.push_back(code);

  const auto n = static_cast<std::int64_t>(db.n_total());
  std::vector<ItemsetCount> out;
  for (std::uint32_t mask = 1; mask < (1u << codes.size()); ++mask) {
    Itemset items;
    for (std::size_t bit = 0; bit < codes.size(); ++bit) {
      if (mask & (1u << bit)) items.push_back(codes[bit]);
    }
    std::int64_t count = scan_count(db, items);
    if (count >= 1 && meets_support(count, n, min_support)) {
      ItemsetCount ic;
      ic.itemset = std::move(items);
      ic.count = count;
      ic.support = static_cast<double>(count) / static_cast<double>(n);
      out.push_back(std::move(ic));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ItemsetCount& a, const ItemsetCount& b) {
              if (a.itemset.size() != b.itemset.size()) {
                return a.itemset.size() < b.itemset.size();
              }
              return a.itemset < b.itemset;
            });
  return out;
}

MeasureSet brute_force_measures(const TransactionDB& db, const Rule& r) {
  require_known(db, r.antecedent());
  require_known(db, r.consequent());
  const auto n = static_cast<std::int64_t>(db.n_total());
  if (n == 0) {
    throw Error(ErrorKind::kEmptyDatabase, "support undefined on empty database");
  }
  const auto both = scan_count(db, union_of(r.antecedent(), r.consequent()));
  const auto count_x = scan_count(db, r.antecedent());
  const auto count_y = scan_count(db, r.consequent());

  MeasureSet out;
  out.support = static_cast<double>(both) / static_cast<double>(n);
  if (count_x == 0) {
    throw Error(ErrorKind::kUndefinedConfidence,
                "antecedent never occurs; confidence undefined");
  }
  out.confidence = static_cast<double>(both) / static_cast<double>(count_x);
  if (count_y == 0) {
    throw Error(ErrorKind::kUndefinedCosine,
                "an itemset never occurs; cosine undefined");
  }
  out.cosine =
      static_cast<double>(both) /
      std::sqrt(static_cast<double>(count_x) * static_cast<double>(count_y));
  out.lift = static_cast<double>(n) * static_cast<double>(both) /
             (static_cast<double>(count_x) * static_cast<double>(count_y));
  return out;
}

}  // namespace rulekit::oracle
