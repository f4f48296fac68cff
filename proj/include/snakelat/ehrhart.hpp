#pragma once

#include "snakelat/numeric.hpp"
#include "snakelat/polynomial.hpp"
#include "snakelat/poset.hpp"
#include "snakelat/word.hpp"

#include <utility>
#include <vector>

namespace snakelat {

struct EhrhartRecord {
  SnakeWord word;
  int dimension = 0;
  RatPolynomial L;
  IntPolynomial hstar;
  BigInt normalized_volume;
  int gorenstein_index = 0;
};

/// L = hstar_to_ehrhart(h*(w), 2n+4) with h* from the recurrence.
EhrhartRecord ehrhart_polynomial(const SnakeWord& w);

/// Maps x: P -> {lo..hi} with x_a <= x_b (or < when strict) whenever a is covered by b,
/// counted rank by rank. Requires a graded poset with at most two elements per rank.
BigInt count_monotone_maps(const Poset& p, long lo, long hi, bool strict);

/// Lattice points of t*O(P(w)).
BigInt lattice_point_oracle(const SnakeWord& w, unsigned t);
/// Interior lattice points of t*O(P(w)), by direct DP.
BigInt interior_point_count(const SnakeWord& w, unsigned t);

/// Normalized volume via the Catalan split at the largest k with w_k != w_n.
BigInt volume_recurrence(const SnakeWord& w);

struct RootsReport {
  bool divisible = false;
  bool symmetric = false;
  bool integer_roots_confined = false;
  /// Distinct integer roots, increasing.
  std::vector<BigInt> integer_roots;
  BigInt cauchy_bound;
  BigInt fujiwara_bound;
  /// Candidates checked: every integer in [-search_bound, search_bound].
  BigInt search_bound;
  /// L / prod_{i=1}^{n+3} (t+i) when divisible.
  RatPolynomial cofactor;
  bool passed() const { return divisible && symmetric && integer_roots_confined; }
};

RootsReport check_roots_theorem(const SnakeWord& w);
RootsReport check_roots_theorem(const SnakeWord& w, const RatPolynomial& L);

/// ceil(1 + max |a_i / a_d|).
BigInt cauchy_root_bound(const RatPolynomial& p);
/// 2 * max_i ceil(|a_{d-i} / a_d|^(1/i)).
BigInt fujiwara_root_bound(const RatPolynomial& p);
/// Integer roots with multiplicity, searched within the smaller bound.
std::vector<std::pair<BigInt, int>> integer_roots_with_multiplicity(const RatPolynomial& p);

struct GorensteinCheck {
  int index = 0;
  bool verified = false;
};

/// index n+4; verified iff (-1)^d L(-(n+4)) = 1 and L(-j) = 0 for 1 <= j <= n+3.
GorensteinCheck gorenstein_index(const SnakeWord& w);
GorensteinCheck gorenstein_index(const SnakeWord& w, const RatPolynomial& L);

/// (t+1)(t+2)^2...(t+n+2)^2(t+n+3) / ((n+2)!(n+3)!).
RatPolynomial ladder_ehrhart_closed(std::size_t length);

/// Plane partitions in an r x s box with parts at most t.
BigInt macmahon_box(unsigned r, unsigned s, unsigned t);

}  // namespace snakelat
