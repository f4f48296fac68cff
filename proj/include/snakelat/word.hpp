#pragma once

#include "snakelat/numeric.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace snakelat {

enum class Letter : char { L = 'L', R = 'R' };

inline Letter flip(Letter c) { return c == Letter::L ? Letter::R : Letter::L; }

class ParseError : public Error {
 public:
  ParseError(std::size_t position, char offending);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A generalized snake word ε w_1 ... w_n. The leading ε is implicit.
class SnakeWord {
 public:
  SnakeWord() = default;
  explicit SnakeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Accepts "RRL" or "eRRL"; the empty string is ε.
  static SnakeWord parse(std::string_view text);

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  /// w_j for 1 <= j <= n.
  Letter at(std::size_t j) const;
  Letter last() const { return letters_.back(); }

  /// w[i:j] read as a snake word: letters w_{i+1} ... w_j.
  SnakeWord subword(std::size_t i, std::size_t j) const;

  /// All letters equal (ε and single letters count).
  bool is_ladder() const;
  /// Letters alternate (ε and single letters count).
  bool is_snake() const;

  /// "eRRL"; "e" for ε.
  std::string str() const;
  /// "RRL"; empty for ε.
  std::string letters_str() const;

  friend bool operator==(const SnakeWord&, const SnakeWord&) = default;
  friend std::strong_ordering operator<=>(const SnakeWord& a, const SnakeWord& b) {
    if (a.length() != b.length()) return a.length() <=> b.length();
    return a.letters_str() <=> b.letters_str();
  }

 private:
  std::vector<Letter> letters_;
};

SnakeWord complement(const SnakeWord& w);

/// Complement words ending in L so that the last letter is R.
SnakeWord canonicalize(const SnakeWord& w);
bool is_canonical(const SnakeWord& w);

/// Complement every letter whose index is >= i, where ε has index 1 and w_j
/// has index j+1. Valid for 1 <= i <= n+1.
SnakeWord swap(const SnakeWord& w, std::size_t i);

/// Indices visited by the monotonicity statements: i = 1, and i >= 3 with
/// equal letters at indices i-1 and i (letters w_{i-2} = w_{i-1}).
bool swap_index_admissible(const SnakeWord& w, std::size_t i);
std::vector<std::size_t> admissible_swap_indices(const SnakeWord& w);

struct TailSplit {
  std::size_t k = 0;
  SnakeWord prefix_short;  // w[0:k-1]
  SnakeWord prefix_long;   // w[0:k]
  SnakeWord tail_long;     // w[k:n], a ladder of length n-k
  SnakeWord tail_short;    // w[k+1:n], a ladder of length n-k-1
};

/// Split at the largest k in 1..n-1 with w_k != w_n. Throws on ladders.
TailSplit split_at_tail(const SnakeWord& w);

/// Length guard; SNAKELAT_MAX_N overrides the default of 16.
std::size_t max_word_length();

/// All words of length n in lexicographic order (L < R).
std::vector<SnakeWord> enumerate_words(std::size_t n, bool canonical_only);

}  // namespace snakelat
