#pragma once

#include "snakelat/numeric.hpp"
#include "snakelat/word.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace snakelat {

/// Finite poset on small integer labels, stored as covers plus strict up-set masks.
/// Used for P(w) (labels 0..2n+3) and its induced segments.
class Poset {
 public:
  static constexpr int kMaxLabel = 63;

  /// Build from covers; throws if the cover digraph has a cycle or labels exceed kMaxLabel.
  Poset(std::size_t word_length, std::vector<int> elements,
        const std::vector<std::pair<int, int>>& covers);

  std::size_t word_length() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  /// Labels in increasing order.
  const std::vector<int>& elements() const { return elements_; }
  bool contains(int e) const;
  std::uint64_t element_mask() const { return mask_; }

  /// (a, b) means a is covered by b.
  const std::set<std::pair<int, int>>& covers() const { return covers_; }
  bool covered_by(int a, int b) const { return covers_.count({a, b}) > 0; }
  std::span<const int> upper_covers(int e) const;
  std::span<const int> lower_covers(int e) const;

  /// a <_P b.
  bool less(int a, int b) const;
  std::uint64_t strictly_above(int e) const;
  std::uint64_t strictly_below(int e) const;

  /// Length of the longest chain from a minimal element to e.
  int rank(int e) const;
  int max_rank() const { return max_rank_; }
  std::vector<std::vector<int>> rank_levels() const;
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  /// Restriction of the order to the given labels, covers recomputed.
  Poset induced(const std::vector<int>& subset) const;

 private:
  std::size_t n_;
  std::vector<int> elements_;
  std::uint64_t mask_ = 0;
  std::set<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<std::uint64_t> above_, below_;
  std::vector<int> rank_;
  int max_rank_ = 0;
};

/// P(w) on labels 0..2n+3; minimum 2n+3, maximum 0.
Poset build_poset(const SnakeWord& w);

/// The element that 2m+2 covers in P(w) (m >= 1), i.e. the top of square m.
int square_top(const SnakeWord& w, std::size_t m);
/// Labels of square m: {0,1,2,3} for m = 0, else {2m+3, 2m+1, 2m+2, square_top}.
std::vector<int> square_elements(const SnakeWord& w, std::size_t m);

/// Induced subposet on the squares added by letters i..j (square 0 is the base).
Poset subposet_segment(const SnakeWord& w, std::size_t i, std::size_t j);

struct LinearExtension {
  /// Bottom to top.
  std::vector<int> sequence;
  friend bool operator==(const LinearExtension&, const LinearExtension&) = default;
};

bool is_linear_extension(const Poset& p, std::span<const int> seq);

/// Visits extensions in lexicographic order of label sequences. Return false to stop.
void for_each_linear_extension(const Poset& p,
                               const std::function<bool(std::span<const int>)>& visit);
std::vector<LinearExtension> linear_extensions(const Poset& p);
/// DP over down-sets, no enumeration.
BigInt count_linear_extensions(const Poset& p);

std::size_t ascent_count(std::span<const int> seq);
inline std::size_t ascent_count(const LinearExtension& e) { return ascent_count(e.sequence); }
/// Entry k counts extensions with k ascents.
std::vector<BigInt> ascent_distribution(const Poset& p);

/// One "a b" line per cover a < b.
std::string to_edge_list(const Poset& p);

}  // namespace snakelat
