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

#include "rulekit/txdb.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "rulekit/error.hpp"

namespace rulekit {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Iterates physical lines, 1-based, LF separated with CR stripped.
template <typename Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    bool last = end == std::string_view::npos;
    std::string_view line =
        text.substr(start, last ? text.size() - start : end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    // a trailing newline does not open an extra empty line
    if (!(last && line.empty() && start == text.size())) fn(line_no, line);
    if (last) break;
    start = end + 1;
  }
}

}  // namespace

bool valid_item_code(std::string_view code) {
  if (code.empty()) return false;
  for (char c : code) {
    if (c == ',' || c == '#' || is_space(c)) return false;
  }
  return true;
}

TransactionDB::TransactionDB(std::vector<Transaction> transactions,
                             std::map<std::string, std::string> labels) {
  for (auto& tx : transactions) {
    if (tx.empty()) {
      throw std::invalid_argument("transaction must not be empty");
    }
    std::sort(tx.begin(), tx.end());
    if (std::adjacent_find(tx.begin(), tx.end()) != tx.end()) {
      throw std::invalid_argument("duplicate item code within a transaction");
    }
    for (const auto& code : tx) {
      if (!valid_item_code(code)) {
        throw std::invalid_argument("invalid item code: '" + code + "'");
      }
      universe_.try_emplace(code);
    }
  }
  for (auto& [code, label] : labels) {
    if (!valid_item_code(code)) {
      throw std::invalid_argument("invalid item code: '" + code + "'");
    }
    universe_[code] = label;
  }
  transactions_ = std::move(transactions);
}

bool TransactionDB::contains_code(std::string_view code) const {
  return universe_.find(std::string(code)) != universe_.end();
}

TransactionDB parse_transactions(std::string_view text) {
  std::vector<Transaction> txs;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') return;
    Transaction tx;
    for (std::string_view raw : split(line, ',')) {
      std::string_view token = trim(raw);
      if (token.empty()) {
        throw Error(ErrorKind::kMalformedLine, "empty item token", line_no);
      }
      if (!valid_item_code(token)) {
        throw Error(ErrorKind::kMalformedLine,
                    "invalid item code '" + std::string(token) + "'", line_no);
      }
      tx.emplace_back(token);
    }
    auto sorted = tx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::kDuplicateItemInTransaction,
                  "duplicate item code within transaction", line_no);
    }
    txs.push_back(std::move(sorted));
  });
  return TransactionDB(std::move(txs));
}

TransactionDB parse_survey_csv(std::string_view text) {
  constexpr std::string_view kHeader = "respondent_id,answer1,answer2";
  std::vector<Transaction> txs;
  std::set<std::string> seen_ids;
  bool have_header = false;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (!have_header) {
      if (line != kHeader) {
        throw Error(ErrorKind::kMalformedLine,
                    "expected header '" + std::string(kHeader) + "'", line_no);
      }
      have_header = true;
      return;
    }
    if (line.empty()) return;
    auto fields = split(line, ',');
    if (fields.size() != 3) {
      throw Error(ErrorKind::kMalformedLine,
                  "expected 3 columns, got " + std::to_string(fields.size()),
                  line_no);
    }
    std::string id(fields[0]);
    if (id.empty()) {
      throw Error(ErrorKind::kMalformedLine, "empty respondent_id", line_no);
    }
    if (!seen_ids.insert(id).second) {
      throw Error(ErrorKind::kDuplicateRespondent,
                  "duplicate respondent_id '" + id + "'", line_no);
    }
    std::string a1(fields[1]);
    std::string a2(fields[2]);
    for (const auto& a : {a1, a2}) {
      if (!valid_item_code(a)) {
        throw Error(ErrorKind::kMalformedLine,
                    "invalid answer code '" + a + "'", line_no);
      }
    }
    if (a1 == a2) {
      throw Error(ErrorKind::kDuplicateItemInTransaction,
                  "answer1 equals answer2 ('" + a1 + "')", line_no);
    }
    txs.push_back(a1 < a2 ? Transaction{a1, a2} : Transaction{a2, a1});
  });
  if (!have_header) {
    throw Error(ErrorKind::kMalformedLine, "missing header line", 1);
  }
  return TransactionDB(std::move(txs));
}

TransactionDB paper_fixture() {
  struct PairRow {
    const char* a;
    const char* b;
    int count;
  };
  // pair occurrences of the bundled 350-respondent survey, in the
  // published row order
  static constexpr PairRow kPairs[] = {
      {"H", "N", 120}, {"H", "P", 70}, {"H", "R", 10},
      {"H", "C", 30},  {"N", "P", 20}, {"N", "C", 20},
      {"P", "C", 10},  {"R", "C", 20}, {"V", "C", 50},
  };
  std::map<std::string, std::string> labels = {
      {"H", "Hording"},           {"N", "News paper"}, {"P", "Pamphlets"},
      {"R", "Radio"},             {"V", "Advertisement Van"},
      {"C", "Personal Contact"},
  };
  std::vector<Transaction> txs;
  txs.reserve(350);
  for (const auto& row : kPairs) {
    for (int i = 0; i < row.count; ++i) {
      txs.push_back({row.a, row.b});
    }
  }
  return TransactionDB(std::move(txs), std::move(labels));
}

std::map<std::string, std::int64_t> item_counts(const TransactionDB& db) {
  std::map<std::string, std::int64_t> counts;
  for (const auto& [code, label] : db.universe()) counts[code] = 0;
  for (const auto& tx : db.transactions()) {
    for (const auto& code : tx) ++counts[code];
  }
  return counts;
}

std::string to_transaction_text(const TransactionDB& db) {
  std::string out;
  for (const auto& tx : db.transactions()) {
    for (std::size_t i = 0; i < tx.size(); ++i) {
      if (i > 0) out += ',';
      out += tx[i];
    }
    out += '\n';
  }
  return out;
}

}  // namespace rulekit
