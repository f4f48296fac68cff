#pragma once

#include "snakelat/numeric.hpp"
#include "snakelat/poset.hpp"
#include "snakelat/word.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace snakelat {

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend std::strong_ordering operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// An upper order ideal (filter) of P(w) with its embedding.
struct Ideal {
  std::uint64_t members = 0;
  /// Minimal elements, increasing; empty for the empty filter.
  std::vector<int> generators;
  LatticePoint coord;
};

/// J(P(w)) ordered by reverse inclusion, embedded in Z^2. The word is
/// canonicalized first, so the minimum <2n+3> sits at (-1, 0) and the empty
/// filter at (n+1, n+2).
class IdealLattice {
 public:
  static IdealLattice build(const SnakeWord& w);

  const SnakeWord& word() const { return word_; }
  const Poset& poset() const { return poset_; }
  std::size_t size() const { return elements_.size(); }
  /// Sorted by (y, x).
  const std::vector<Ideal>& elements() const { return elements_; }
  std::optional<std::size_t> index_of(LatticePoint c) const;
  bool contains(LatticePoint c) const { return index_of(c).has_value(); }
  /// Index pairs (a, b) with b covering a, i.e. b = a with one element removed.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

  LatticePoint min_coord() const { return {-1, 0}; }
  LatticePoint max_coord() const;

  /// Chains of P used for the embedding, each listed bottom to top.
  const std::vector<int>& x_chain() const { return x_chain_; }
  const std::vector<int>& y_chain() const { return y_chain_; }
  /// Poset element removed by the unit step from c in the x or y direction.
  int removed_by_x_step(LatticePoint c) const { return x_chain_.at(static_cast<std::size_t>(c.x + 1)); }
  int removed_by_y_step(LatticePoint c) const { return y_chain_.at(static_cast<std::size_t>(c.y)); }

  int min_y() const { return 0; }
  int max_y() const { return max_coord().y; }
  /// Smallest and largest x present at height y.
  std::pair<int, int> row_bounds(int y) const;

 private:
  SnakeWord word_;
  Poset poset_;
  std::vector<int> x_chain_, y_chain_;
  std::vector<Ideal> elements_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<int>> grid_;  // [y][x+1] -> index or -1

  IdealLattice(SnakeWord w, Poset p) : word_(std::move(w)), poset_(std::move(p)) {}
};

inline IdealLattice build_ideal_lattice(const SnakeWord& w) { return IdealLattice::build(w); }

/// 6 + sum over letters of (3 + m - k_m), k_m the largest index < m with w_k != w_m (0 if none).
std::size_t lattice_size_recursive(const SnakeWord& w);

struct MaximalChain {
  std::vector<LatticePoint> path;
  LinearExtension removal_sequence;
};

/// Visits chains from the minimum, x-steps tried before y-steps. Return false to stop.
void for_each_maximal_chain(const IdealLattice& j,
                            const std::function<bool(const MaximalChain&)>& visit);
std::vector<MaximalChain> maximal_chains(const IdealLattice& j);
BigInt count_maximal_chains(const IdealLattice& j);

struct RedTurn {
  LatticePoint low, mid, high;
  friend bool operator==(const RedTurn&, const RedTurn&) = default;
  friend auto operator<=>(const RedTurn&, const RedTurn&) = default;
};

struct RedTurnColoring {
  /// One per unit square, sorted by low corner.
  std::vector<RedTurn> red_turns;
  bool is_red(LatticePoint low, LatticePoint mid, LatticePoint high) const;
};

/// Unit squares given by their low corners, sorted.
std::vector<LatticePoint> unit_squares(const IdealLattice& j);
RedTurnColoring color_red_turns(const IdealLattice& j);
/// Number of complete red turns in a chain (consecutive triples).
std::size_t red_turn_count(const MaximalChain& c, const RedTurnColoring& coloring);
/// Entry k = number of maximal chains with exactly k red turns (DP over the embedding).
std::vector<BigInt> red_turn_distribution(const IdealLattice& j, const RedTurnColoring& coloring);

/// Entry i is 1 iff poset element i belongs to the filter.
std::vector<int> characteristic_vector(const IdealLattice& j, const Ideal& a);

/// One "x y <generators>" line per element.
std::string to_coordinate_text(const IdealLattice& j);

}  // namespace snakelat
