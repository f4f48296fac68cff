#pragma once

#include "snakelat/word.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace snakelat {

enum class CheckStatus { Pass, Fail, HeuristicPass, NoConverge, Skip };

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string word;
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  bool conjecture = false;
};

enum class Suite { Theorems, Conjectures, All };

std::string to_string(Suite s);
Suite parse_suite(const std::string& s);

/// Exact theorem and invariant checks for one word; expensive parts are skipped
/// beyond fixed size guards.
std::vector<CheckRecord> theorem_checks(const SnakeWord& w);
/// Conjecture evidence for one word; never throws on a failed conjecture.
std::vector<CheckRecord> conjecture_checks(const SnakeWord& w);

struct VerifyOptions {
  std::size_t max_length = 5;
  Suite suite = Suite::All;
  unsigned jobs = 1;
};

struct Report {
  std::size_t max_length = 0;
  Suite suite = Suite::All;
  std::size_t word_count = 0;
  /// Lexicographic by (length, word), theorem checks before conjectures per word.
  std::vector<CheckRecord> records;

  std::size_t theorem_failures() const;
  std::size_t conjecture_failures() const;
};

/// Runs over every canonical word of length <= max_length (and ε).
Report run_verification(const VerifyOptions& opts);

/// Runs f(i) for i in [0, count) on up to jobs threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& f);

/// All canonical words of length 0..max_length in report order.
std::vector<SnakeWord> canonical_words_up_to(std::size_t max_length);

nlohmann::ordered_json to_json(const Report& r);
std::string to_csv(const Report& r);

}  // namespace snakelat
