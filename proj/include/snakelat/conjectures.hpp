#pragma once

#include "snakelat/polynomial.hpp"
#include "snakelat/word.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace snakelat {

struct RealRootedResult {
  bool real_rooted = false;
  bool negative = false;
  std::size_t distinct_real_roots = 0;
  std::size_t real_roots_with_multiplicity = 0;
  int degree = 0;
};

/// Exact: Sturm counts on each squarefree factor of h*.
RealRootedResult check_real_rooted(const IntPolynomial& h);
RealRootedResult check_real_rooted(const SnakeWord& w);

struct PositivityResult {
  bool positive = false;
  std::optional<std::size_t> first_negative_coefficient;
};

PositivityResult check_ehrhart_positivity(const RatPolynomial& L);
PositivityResult check_ehrhart_positivity(const SnakeWord& w);

struct NumericRoot {
  std::complex<long double> value;
  int multiplicity = 1;
};

/// Aberth iteration on each squarefree factor. converged is false if any factor
/// fails to settle within max_iter sweeps.
std::vector<NumericRoot> numeric_roots(const RatPolynomial& p, long double tol, int max_iter,
                                       bool& converged);

struct DiskResult {
  bool converged = false;
  /// Exact L(t) = L(-n-4-t), checked before the numeric part.
  bool symmetric = false;
  /// Disk centred at -(l+4)/2 with radius (l+2)/2, l = word length.
  long double center = 0, radius = 0;
  bool all_in_disk = false;
  long double max_violation = 0;
  /// Same with l-1 in place of l.
  long double alt_center = 0, alt_radius = 0;
  bool alt_all_in_disk = false;
  long double alt_max_violation = 0;
  std::vector<NumericRoot> roots;
};

/// HEURISTIC: floating-point root approximation.
DiskResult check_root_disk(const SnakeWord& w, double tolerance = 1e-9);

struct EhrhartSwapCheck {
  std::size_t index = 0;
  SnakeWord swapped;
  /// [t^k] L(swapped) <= [t^k] L(w) for every k >= 1.
  bool holds = false;
  bool equal = false;
  std::optional<std::size_t> first_violation;
};

std::vector<EhrhartSwapCheck> check_ehrhart_swap_monotonicity(const SnakeWord& w);

}  // namespace snakelat
