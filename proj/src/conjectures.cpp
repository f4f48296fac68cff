#include "snakelat/conjectures.hpp"

#include "snakelat/ehrhart.hpp"
#include "snakelat/hstar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace snakelat {

RealRootedResult check_real_rooted(const IntPolynomial& h) {
  RealRootedResult r;
  r.degree = h.degree();
  const RatPolynomial p = to_rational(h);
  for (const auto& [f, mult] : squarefree_decomposition(p)) {
    const std::size_t k = sturm_real_root_count(f, Endpoint::neg_inf(), Endpoint::pos_inf());
    r.distinct_real_roots += k;
    r.real_roots_with_multiplicity += k * static_cast<std::size_t>(mult);
  }
  r.real_rooted = static_cast<int>(r.real_roots_with_multiplicity) == r.degree;
  // No root in [0, inf): h(0) != 0 and none in (0, inf).
  r.negative = h.degree() >= 0 && h[0] != 0 &&
               sturm_real_root_count(p, Endpoint::at(0), Endpoint::pos_inf()) == 0;
  return r;
}

RealRootedResult check_real_rooted(const SnakeWord& w) { return check_real_rooted(hstar_recurrence(w)); }

PositivityResult check_ehrhart_positivity(const RatPolynomial& L) {
  PositivityResult r;
  r.positive = true;
  for (std::size_t k = 0; k < L.size(); ++k) {
    if (L[k] < 0) {
      r.positive = false;
      r.first_negative_coefficient = k;
      break;
    }
  }
  return r;
}

PositivityResult check_ehrhart_positivity(const SnakeWord& w) {
  return check_ehrhart_positivity(ehrhart_polynomial(w).L);
}

namespace {

using Cx = std::complex<long double>;

// Simultaneous Aberth-Ehrlich iteration on a monic polynomial.
std::vector<Cx> aberth(const std::vector<long double>& monic, Cx center, long double radius,
                       long double tol, int max_iter, bool& converged) {
  const std::size_t d = monic.size() - 1;
  std::vector<Cx> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    const long double theta = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                                  static_cast<long double>(d) + 0.4L;
    z[k] = center + std::polar(radius * 1.1L + 0.3L, theta);
  }
  converged = false;
  const long double eps = std::numeric_limits<long double>::epsilon();
  for (int it = 0; it < max_iter; ++it) {
    bool settled = true;
    for (std::size_t k = 0; k < d; ++k) {
      Cx p = monic[d], dp = 0;
      long double scale = 1;
      const long double az = std::abs(z[k]);
      for (std::size_t i = d; i-- > 0;) {
        dp = dp * z[k] + p;
        p = p * z[k] + monic[i];
        scale = scale * az + std::abs(monic[i]);
      }
      // Residual at rounding level: z[k] is a root of a nearby polynomial.
      const bool at_noise = std::abs(p) <= 32 * static_cast<long double>(d) * eps * scale;
      if (p == Cx(0)) continue;
      const Cx ratio = p / dp;
      Cx s = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) s += Cx(1) / (z[k] - z[j]);
      const Cx step = ratio / (Cx(1) - ratio * s);
      z[k] -= step;
      if (!at_noise && std::abs(step) > tol * std::max<long double>(1, std::abs(z[k]))) settled = false;
    }
    if (settled) {
      converged = true;
      break;
    }
  }
  return z;
}

}  // namespace

std::vector<NumericRoot> numeric_roots(const RatPolynomial& p, long double tol, int max_iter,
                                       bool& converged) {
  std::vector<NumericRoot> out;
  converged = true;
  for (const auto& [f, mult] : squarefree_decomposition(p)) {
    RatPolynomial m = make_monic(f);
    // Exact integer roots first; only the remaining factor is approximated.
    for (const auto& [r, k] : integer_roots_with_multiplicity(m)) {
      out.push_back({Cx(r.convert_to<long double>()), mult});
      m = divide_exact(m, RatPolynomial({Rational(-r), Rational(1)}));
    }
    if (m.degree() < 1) continue;
    if (m.degree() == 1) {
      out.push_back({Cx((-m[0]).convert_to<long double>()), mult});
      continue;
    }
    std::vector<long double> c;
    for (const auto& v : m.coefficients()) c.push_back(v.convert_to<long double>());
    // Centre the initial circle on the mean of the roots.
    const long double mean = -c[c.size() - 2] / static_cast<long double>(m.degree());
    long double spread = 1;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      spread = std::max(spread, std::pow(std::abs(c[i]), 1.0L / static_cast<long double>(c.size() - 1 - i)));
    bool ok = false;
    for (const auto& z : aberth(c, Cx(mean), spread, tol, max_iter, ok)) out.push_back({z, mult});
    converged = converged && ok;
  }
  std::sort(out.begin(), out.end(), [](const NumericRoot& a, const NumericRoot& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

DiskResult check_root_disk(const SnakeWord& w, double tolerance) {
  DiskResult r;
  const RatPolynomial L = ehrhart_polynomial(w).L;
  const long n = static_cast<long>(w.length());
  r.symmetric = compose_shift(L, Rational(-1), Rational(-n - 4)) == L;
  r.roots = numeric_roots(L, static_cast<long double>(tolerance), 2000, r.converged);
  auto scan = [&](long ell, long double& center, long double& radius, long double& worst) {
    center = -static_cast<long double>(ell + 4) / 2;
    radius = static_cast<long double>(ell + 2) / 2;
    worst = -radius;
    for (const auto& z : r.roots) worst = std::max(worst, std::abs(z.value - Cx(center)) - radius);
    return worst <= static_cast<long double>(tolerance);
  };
  r.all_in_disk = scan(n, r.center, r.radius, r.max_violation);
  r.alt_all_in_disk = scan(n - 1, r.alt_center, r.alt_radius, r.alt_max_violation);
  return r;
}

std::vector<EhrhartSwapCheck> check_ehrhart_swap_monotonicity(const SnakeWord& w) {
  std::vector<EhrhartSwapCheck> out;
  const RatPolynomial L = ehrhart_polynomial(w).L;
  for (std::size_t i : admissible_swap_indices(w)) {
    EhrhartSwapCheck c;
    c.index = i;
    c.swapped = swap(w, i);
    const RatPolynomial Ls = ehrhart_polynomial(c.swapped).L;
    c.holds = true;
    for (std::size_t k = 1; k < std::max(L.size(), Ls.size()); ++k) {
      if (Ls[k] > L[k]) {
        c.holds = false;
        c.first_violation = k;
        break;
      }
    }
    c.equal = Ls == L;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace snakelat
