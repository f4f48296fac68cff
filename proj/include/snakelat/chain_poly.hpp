#pragma once

#include "snakelat/ideal_lattice.hpp"
#include "snakelat/polynomial.hpp"
#include "snakelat/word.hpp"

#include <map>
#include <vector>

namespace snakelat {

/// Chain polynomial convention: coefficient of z^k counts k-element chains of
/// J(P(w)) with its minimum removed; the constant term is the empty chain.

/// DP over the inclusion order of filters.
IntPolynomial chain_polynomial_bruteforce(const IdealLattice& j);

/// C_{i,y}: chain polynomial (empty chain included) of {(x', y') in J : x' >= i, y' >= y}.
IntPolynomial height_chain_polynomial(const IdealLattice& j, int i, int y);

/// Expansion coefficients A_{x,y} with C_{-1,0} = sum_x A_{x,y} C_{x,y} over the points of row y.
std::map<int, IntPolynomial> expansion_coefficients(const IdealLattice& j, int y);

/// C_{-1,0} divided by the (1+z) of the minimum.
IntPolynomial chain_polynomial_heights(const IdealLattice& j);

struct PathStep {
  enum class Kind { E, H };
  Kind kind = Kind::E;
  LatticePoint from;
  int k = 0;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct ValidPath {
  std::vector<PathStep> steps;
  IntPolynomial weight;
};

/// Whether a step may be taken from its start point in J. An e-step needs
/// (i+1, j) in J and (i, j+1) not in J; an h^k step needs (i, j+1),
/// (i+k, j) and (i+k, j+1) in J.
bool step_is_legal(const IdealLattice& j, const PathStep& s);
IntPolynomial step_weight(const PathStep& s);
LatticePoint step_end(const PathStep& s);

/// All maximal valid paths from the minimum to the maximum.
std::vector<ValidPath> valid_paths(const IdealLattice& j);

/// W{(-1,0),(n+1,n+2)} by DP over points in (height, x) order.
IntPolynomial valid_path_weight(const IdealLattice& j);
IntPolynomial chain_polynomial_paths(const SnakeWord& w);

}  // namespace snakelat
