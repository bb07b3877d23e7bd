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

#ifndef RULEKIT_TXDB_HPP
#define RULEKIT_TXDB_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rulekit {

// An item as it appears in the universe: short code plus optional
// display label. Codes are case-sensitive, non-empty, and contain no
// comma, whitespace or '#'.
struct Item {
  std::string code;
  std::string label;
};

// A transaction is a duplicate-free set of item codes, stored sorted.
using Transaction = std::vector<std::string>;

// An itemset uses the same representation: sorted, duplicate-free codes.
using Itemset = std::vector<std::string>;

// Immutable multiset of transactions plus the item universe they draw
// from. n_total() is the denominator of every probability computed
// downstream. Safe for concurrent reads once constructed.
class TransactionDB {
 public:
  TransactionDB() = default;

  // Transactions are canonicalized (sorted) on entry. The universe is
  // the union of all transaction codes and all label-map keys, so items
  // that never occur can still be declared. Throws std::invalid_argument
  // on empty transactions, duplicate codes within a transaction, or
  // codes violating the charset rules.
  explicit TransactionDB(std::vector<Transaction> transactions,
                         std::map<std::string, std::string> labels = {});

  std::size_t n_total() const { return transactions_.size(); }
  const std::vector<Transaction>& transactions() const {
    return transactions_;
  }

  // code -> label; label is "" when unlabeled. Sorted by code.
  const std::map<std::string, std::string>& universe() const {
    return universe_;
  }

  bool contains_code(std::string_view code) const;

 private:
  std::vector<Transaction> transactions_;
  std::map<std::string, std::string> universe_;
};

// True when `code` is usable as an item code: non-empty, no comma,
// no whitespace, no '#'.
bool valid_item_code(std::string_view code);

// Parses the transaction file format: one comma-separated code list per
// line, blank lines and '#' comments skipped, CR stripped, tokens
// trimmed. Errors carry the 1-based line number.
TransactionDB parse_transactions(std::string_view text);

// Parses the two-answer survey CSV: exact header
// `respondent_id,answer1,answer2`, one size-2 transaction per row.
// Fields are not trimmed (plain RFC-4180 style, quoting unnecessary
// because codes exclude commas). The respondent id is checked for
// uniqueness and then dropped.
TransactionDB parse_survey_csv(std::string_view text);

// The bundled advertisement-channel survey: 350 two-answer enquiry
// forms over items {H, N, P, R, V, C}, reconstructed deterministically
// from the published pair-occurrence table (pairs in table row order,
// each repeated by its multiplicity).
TransactionDB paper_fixture();

// Transactions containing each universe code; zero-count items are
// present and map to 0.
std::map<std::string, std::int64_t> item_counts(const TransactionDB& db);

// Serializes to the transaction file format (codes sorted within each
// line, LF endings). Labels are not representable and are dropped.
std::string to_transaction_text(const TransactionDB& db);

}  // namespace rulekit

#endif  // RULEKIT_TXDB_HPP
