#include "snakelat/word.hpp"

#include <cstdlib>

namespace snakelat {

ParseError::ParseError(std::size_t position, char offending)
    : Error("invalid character '" + std::string(1, offending) + "' at position " +
            std::to_string(position) + " (expected L or R)"),
      position_(position) {}

SnakeWord SnakeWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t start = 0;
  if (!text.empty() && text.front() == 'e') start = 1;
  letters.reserve(text.size());
  for (std::size_t pos = start; pos < text.size(); ++pos) {
    switch (text[pos]) {
      case 'L': letters.push_back(Letter::L); break;
      case 'R': letters.push_back(Letter::R); break;
      default: throw ParseError(pos, text[pos]);
    }
  }
  return SnakeWord(std::move(letters));
}

Letter SnakeWord::at(std::size_t j) const {
  if (j < 1 || j > letters_.size())
    throw RangeError("letter index " + std::to_string(j) + " out of range 1.." +
                     std::to_string(letters_.size()));
  return letters_[j - 1];
}

SnakeWord SnakeWord::subword(std::size_t i, std::size_t j) const {
  if (i > j || j > letters_.size()) throw RangeError("subword bounds out of range");
  return SnakeWord(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(i),
                                       letters_.begin() + static_cast<std::ptrdiff_t>(j)));
}

bool SnakeWord::is_ladder() const {
  for (std::size_t j = 1; j < letters_.size(); ++j)
    if (letters_[j] != letters_[0]) return false;
  return true;
}

bool SnakeWord::is_snake() const {
  for (std::size_t j = 1; j < letters_.size(); ++j)
    if (letters_[j] == letters_[j - 1]) return false;
  return true;
}

std::string SnakeWord::str() const { return "e" + letters_str(); }

std::string SnakeWord::letters_str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter c : letters_) s.push_back(static_cast<char>(c));
  return s;
}

SnakeWord complement(const SnakeWord& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (Letter c : w.letters()) out.push_back(flip(c));
  return SnakeWord(std::move(out));
}

SnakeWord canonicalize(const SnakeWord& w) {
  return is_canonical(w) ? w : complement(w);
}

bool is_canonical(const SnakeWord& w) { return w.empty() || w.last() == Letter::R; }

SnakeWord swap(const SnakeWord& w, std::size_t i) {
  const std::size_t n = w.length();
  if (i < 1 || i > n + 1)
    throw RangeError("swap index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(n + 1));
  std::vector<Letter> out = w.letters();
  for (std::size_t j = 1; j <= n; ++j)
    if (j + 1 >= i) out[j - 1] = flip(out[j - 1]);
  return SnakeWord(std::move(out));
}

bool swap_index_admissible(const SnakeWord& w, std::size_t i) {
  const std::size_t n = w.length();
  if (i == 1) return true;
  if (i < 3 || i > n + 1) return false;
  return w.at(i - 2) == w.at(i - 1);
}

std::vector<std::size_t> admissible_swap_indices(const SnakeWord& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= w.length() + 1; ++i)
    if (swap_index_admissible(w, i)) out.push_back(i);
  return out;
}

TailSplit split_at_tail(const SnakeWord& w) {
  const std::size_t n = w.length();
  std::size_t k = 0;
  for (std::size_t j = n >= 1 ? n - 1 : 0; j >= 1; --j) {
    if (w.at(j) != w.at(n)) {
      k = j;
      break;
    }
  }
  if (k == 0) throw Error("no split exists for ladder " + w.str() + "; use closed form");
  TailSplit s;
  s.k = k;
  s.prefix_short = w.subword(0, k - 1);
  s.prefix_long = w.subword(0, k);
  s.tail_long = w.subword(k, n);
  s.tail_short = w.subword(k + 1, n);
  return s;
}

std::size_t max_word_length() {
  if (const char* env = std::getenv("SNAKELAT_MAX_N")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return 16;
}

std::vector<SnakeWord> enumerate_words(std::size_t n, bool canonical_only) {
  const std::size_t limit = max_word_length();
  if (n > limit)
    throw SizeGuardError("word length " + std::to_string(n) + " exceeds limit " +
                         std::to_string(limit) + " (set SNAKELAT_MAX_N to raise it)");
  if (n >= 63) throw SizeGuardError("word length too large to enumerate");
  std::vector<SnakeWord> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  out.reserve(canonical_only && n > 0 ? total / 2 : total);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<Letter> letters(n);
    for (std::size_t j = 0; j < n; ++j)
      letters[j] = (bits >> (n - 1 - j)) & 1 ? Letter::R : Letter::L;
    if (canonical_only && n > 0 && letters.back() != Letter::R) continue;
    out.emplace_back(std::move(letters));
  }
  return out;
}

}  // namespace snakelat
