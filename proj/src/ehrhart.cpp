#include "snakelat/ehrhart.hpp"

#include "snakelat/hstar.hpp"

#include <algorithm>

namespace snakelat {

namespace mp = boost::multiprecision;

EhrhartRecord ehrhart_polynomial(const SnakeWord& w) {
  EhrhartRecord r;
  r.word = w;
  r.dimension = static_cast<int>(2 * w.length() + 4);
  r.hstar = hstar_recurrence(w);
  r.L = hstar_to_ehrhart(r.hstar, r.dimension);
  r.normalized_volume = r.hstar.evaluate(BigInt(1));
  r.gorenstein_index = static_cast<int>(w.length() + 4);
  return r;
}

BigInt count_monotone_maps(const Poset& p, long lo, long hi, bool strict) {
  if (hi < lo) return 0;
  const auto levels = p.rank_levels();
  for (const auto& lv : levels)
    if (lv.empty() || lv.size() > 2) throw Error("count_monotone_maps needs at most two elements per rank");
  for (auto [a, b] : p.covers())
    if (p.rank(b) != p.rank(a) + 1) throw Error("count_monotone_maps needs a graded poset");

  const std::size_t span = static_cast<std::size_t>(hi - lo + 1);
  auto idx = [&](std::size_t u, std::size_t v) { return u * span + v; };

  // dp over the values of the current level, indexed [u][v] (v = 0 for one-element levels).
  const auto& top = levels.back();
  std::vector<BigInt> dp(span * span);
  if (top.size() == 1) {
    for (std::size_t u = 0; u < span; ++u) dp[idx(u, 0)] = 1;
  } else {
    for (std::size_t u = 0; u < span; ++u)
      for (std::size_t v = 0; v < span; ++v) dp[idx(u, v)] = 1;
  }

  for (std::size_t r = levels.size() - 1; r-- > 0;) {
    const auto& upper = levels[r + 1];
    const auto& cur = levels[r];
    // Aggregate upper states by the resulting bound of each current element.
    std::vector<BigInt> g(span * span);
    bool any = false;
    for (std::size_t u = 0; u < span; ++u) {
      for (std::size_t v = 0; v < (upper.size() == 2 ? span : 1); ++v) {
        const BigInt& c = dp[idx(u, v)];
        if (c == 0) continue;
        long bound[2] = {hi, hi};
        bool ok = true;
        for (std::size_t e = 0; e < cur.size(); ++e) {
          long b = hi;
          for (int up : p.upper_covers(cur[e])) {
            const std::size_t pos = up == upper[0] ? 0 : 1;
            const long val = lo + static_cast<long>(pos == 0 ? u : v);
            b = std::min(b, strict ? val - 1 : val);
          }
          if (b < lo) ok = false;
          bound[e] = b;
        }
        if (!ok) continue;
        any = true;
        g[idx(static_cast<std::size_t>(bound[0] - lo), cur.size() == 2 ? static_cast<std::size_t>(bound[1] - lo) : 0)] += c;
      }
    }
    if (!any) return 0;
    // Suffix sums turn bound-aggregates into counts of admissible values.
    std::vector<BigInt> next(span * span);
    if (cur.size() == 1) {
      BigInt run = 0;
      for (std::size_t u = span; u-- > 0;) {
        run += g[idx(u, 0)];
        next[idx(u, 0)] = run;
      }
    } else {
      for (std::size_t u = span; u-- > 0;) {
        for (std::size_t v = span; v-- > 0;) {
          BigInt s = g[idx(u, v)];
          if (u + 1 < span) s += next[idx(u + 1, v)];
          if (v + 1 < span) s += next[idx(u, v + 1)];
          if (u + 1 < span && v + 1 < span) s -= next[idx(u + 1, v + 1)];
          next[idx(u, v)] = s;
        }
      }
    }
    dp = std::move(next);
  }
  BigInt total = 0;
  for (const auto& c : dp) total += c;
  return total;
}

BigInt lattice_point_oracle(const SnakeWord& w, unsigned t) {
  return count_monotone_maps(build_poset(w), 0, static_cast<long>(t), false);
}

BigInt interior_point_count(const SnakeWord& w, unsigned t) {
  if (t < 2) return 0;
  return count_monotone_maps(build_poset(w), 1, static_cast<long>(t) - 1, true);
}

BigInt volume_recurrence(const SnakeWord& w) {
  const std::size_t n = w.length();
  if (w.is_ladder()) return catalan(static_cast<unsigned>(n + 2));
  const std::size_t k = split_at_tail(w).k;
  const unsigned m = static_cast<unsigned>(n - k);
  return catalan(m + 1) * volume_recurrence(w.subword(0, k)) +
         (catalan(m + 2) - 2 * catalan(m + 1)) * volume_recurrence(w.subword(0, k - 1));
}

namespace {

BigInt ceil_rational(const Rational& r) {
  BigInt q = mp::numerator(r) / mp::denominator(r);
  if (Rational(q) < r) q += 1;
  return q;
}

// Smallest c >= 0 with c^i >= r, for r >= 0.
BigInt ceil_root(const Rational& r, unsigned i) {
  BigInt lo = 0, hi = std::max(BigInt(1), ceil_rational(r));
  while (lo < hi) {
    const BigInt mid = (lo + hi) / 2;
    if (Rational(mp::pow(mid, i)) >= r)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace

BigInt cauchy_root_bound(const RatPolynomial& p) {
  if (p.degree() < 1) return 0;
  Rational m = 0;
  const Rational lead = mp::abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(mp::abs(p[static_cast<std::size_t>(i)]) / lead));
  return ceil_rational(1 + m);
}

BigInt fujiwara_root_bound(const RatPolynomial& p) {
  if (p.degree() < 1) return 0;
  const int d = p.degree();
  const Rational lead = mp::abs(p.leading());
  BigInt best = 0;
  for (int i = 1; i <= d; ++i) {
    const Rational r = mp::abs(p[static_cast<std::size_t>(d - i)]) / lead;
    best = std::max(best, ceil_root(r, static_cast<unsigned>(i)));
  }
  return 2 * best;
}

std::vector<std::pair<BigInt, int>> integer_roots_with_multiplicity(const RatPolynomial& p) {
  std::vector<std::pair<BigInt, int>> out;
  if (p.degree() < 1) return out;
  IntPolynomial q = primitive_part(p);
  const BigInt bound = std::min(cauchy_root_bound(p), fujiwara_root_bound(p));
  for (BigInt j = -bound; j <= bound; ++j) {
    int mult = 0;
    while (q.degree() >= 1 && q.evaluate(j) == 0) {
      q = divide_exact(q, IntPolynomial({BigInt(-j), BigInt(1)}));
      ++mult;
    }
    if (mult > 0) out.emplace_back(j, mult);
  }
  return out;
}

RootsReport check_roots_theorem(const SnakeWord& w) {
  return check_roots_theorem(w, ehrhart_polynomial(w).L);
}

RootsReport check_roots_theorem(const SnakeWord& w, const RatPolynomial& L) {
  RootsReport r;
  const long n = static_cast<long>(w.length());
  const RatPolynomial prod = to_rational(rising_product(1, n + 3));
  const auto qr = divmod(L, prod);
  r.divisible = qr.remainder.is_zero();
  if (r.divisible) r.cofactor = qr.quotient;

  r.symmetric = compose_shift(L, Rational(-1), Rational(-n - 4)) == L;

  r.cauchy_bound = cauchy_root_bound(L);
  r.fujiwara_bound = fujiwara_root_bound(L);
  r.search_bound = std::min(r.cauchy_bound, r.fujiwara_bound);
  const IntPolynomial P = primitive_part(L);
  r.integer_roots_confined = true;
  for (BigInt j = -r.search_bound; j <= r.search_bound; ++j) {
    if (P.evaluate(j) != 0) continue;
    r.integer_roots.push_back(j);
    if (j < -n - 4 || j > 0) r.integer_roots_confined = false;
  }
  return r;
}

GorensteinCheck gorenstein_index(const SnakeWord& w) { return gorenstein_index(w, ehrhart_polynomial(w).L); }

GorensteinCheck gorenstein_index(const SnakeWord& w, const RatPolynomial& L) {
  const long n = static_cast<long>(w.length());
  const long d = 2 * n + 4;
  GorensteinCheck g;
  g.index = static_cast<int>(n + 4);
  const Rational sign = d % 2 == 0 ? 1 : -1;
  g.verified = sign * L.evaluate(Rational(-(n + 4))) == 1;
  for (long j = 1; j <= n + 3 && g.verified; ++j)
    if (L.evaluate(Rational(-j)) != 0) g.verified = false;
  return g;
}

RatPolynomial ladder_ehrhart_closed(std::size_t length) {
  const long n = static_cast<long>(length);
  IntPolynomial p = IntPolynomial::linear(BigInt(1)) * IntPolynomial::linear(BigInt(n + 3));
  for (long s = 2; s <= n + 2; ++s) p *= IntPolynomial::linear(BigInt(s)).pow(2);
  const BigInt den = factorial(static_cast<unsigned>(n + 2)) * factorial(static_cast<unsigned>(n + 3));
  return to_rational(p) * Rational(BigInt(1), den);
}

BigInt macmahon_box(unsigned r, unsigned s, unsigned t) {
  Rational v = 1;
  for (unsigned i = 1; i <= r; ++i)
    for (unsigned j = 1; j <= s; ++j) v *= Rational(BigInt(i + j + t - 1), BigInt(i + j - 1));
  if (mp::denominator(v) != 1) throw Error("MacMahon product is not an integer");
  return mp::numerator(v);
}

}  // namespace snakelat
