#include "snakelat/hstar.hpp"

#include "snakelat/chain_poly.hpp"
#include "snakelat/ideal_lattice.hpp"
#include "snakelat/poset.hpp"

#include <algorithm>

namespace snakelat {

std::string to_string(HStarMethod m) {
  switch (m) {
    case HStarMethod::Ascents: return "ascents";
    case HStarMethod::RedTurns: return "red_turns";
    case HStarMethod::ClosedForm: return "closed_form";
    case HStarMethod::Recurrence: return "recurrence";
    case HStarMethod::ChainTransform: return "chain_transform";
  }
  return "unknown";
}

BigInt narayana(long n, long k) {
  if (n < 1 || k < 1 || k > n) return 0;
  return binomial(n, k) * binomial(n, k - 1) / n;
}

BigInt delannoy(long m, long n) {
  if (m < 0 || n < 0) return 0;
  BigInt s = 0;
  for (long k = 0; k <= std::min(m, n); ++k) s += binomial(m, k) * binomial(n, k) * (BigInt(1) << k);
  return s;
}

IntPolynomial hstar_snake_closed(std::size_t length) {
  const long n = static_cast<long>(length) + 1;
  std::vector<BigInt> c;
  for (long i = 0; i <= n; ++i) c.push_back(delannoy(n - i, i));
  return IntPolynomial(std::move(c));
}

IntPolynomial hstar_ladder_closed(std::size_t length) {
  const long n = static_cast<long>(length);
  std::vector<BigInt> c;
  for (long i = 0; i <= n + 1; ++i) c.push_back(narayana(n + 2, i + 1));
  return IntPolynomial(std::move(c));
}

IntPolynomial hstar_enumerate(const SnakeWord& w, EnumerateVia via, const BigInt& volume_limit) {
  const IdealLattice j = IdealLattice::build(w);
  const BigInt volume = count_maximal_chains(j);
  if (volume > volume_limit)
    throw SizeGuardError("volume " + to_string(volume) + " of " + w.str() +
                         " is too large to enumerate; use the recurrence method");
  std::vector<BigInt> dist = via == EnumerateVia::Ascents
                                 ? ascent_distribution(j.poset())
                                 : red_turn_distribution(j, color_red_turns(j));
  return IntPolynomial(std::move(dist));
}

IntPolynomial HStarTable::get(const SnakeWord& input) {
  const SnakeWord w = canonicalize(input);
  const std::string key = w.letters_str();
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  IntPolynomial h;
  if (w.is_ladder()) {
    h = hstar_ladder_closed(w.length());
  } else {
    const TailSplit s = split_at_tail(w);
    const IntPolynomial a = get(s.prefix_short), b = get(s.tail_long);
    const IntPolynomial c = get(s.prefix_long), d = get(s.tail_short);
    h = a * b + c * d - IntPolynomial({BigInt(1), BigInt(1)}) * a * d;
  }
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(key, std::move(h)).first->second;
}

std::size_t HStarTable::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

void HStarTable::clear() {
  std::lock_guard<std::mutex> lock(mu_);
  memo_.clear();
}

HStarTable& default_hstar_table() {
  static HStarTable table;
  return table;
}

IntPolynomial hstar_recurrence(const SnakeWord& w) { return default_hstar_table().get(w); }

std::optional<IntPolynomial> hstar_recurrence_subsnake(const SnakeWord& w) {
  const std::size_t n = w.length();
  if (n < 2 || w.at(n - 1) == w.at(n) || w.is_snake()) return std::nullopt;
  std::size_t s = 0;
  for (std::size_t i = n - 1; i >= 2; --i) {
    if (w.at(i - 1) == w.at(i)) {
      s = i;
      break;
    }
  }
  const IntPolynomial ws = hstar_recurrence(w.subword(0, s));
  const IntPolynomial ws_short = hstar_recurrence(w.subword(0, s - 1));
  const IntPolynomial q = hstar_recurrence(w.subword(s, n));
  const IntPolynomial q_short = hstar_recurrence(w.subword(s + 1, n));
  return ws_short * q + ws * q_short - IntPolynomial({BigInt(1), BigInt(1)}) * ws_short * q_short;
}

IntPolynomial hstar_chain_transform(const SnakeWord& w) {
  const IdealLattice j = IdealLattice::build(w);
  return chain_to_hstar(chain_polynomial_bruteforce(j), static_cast<int>(2 * w.length() + 4));
}

bool method_applicable(const SnakeWord& w, HStarMethod m) {
  switch (m) {
    case HStarMethod::ClosedForm: return w.is_ladder() || w.is_snake();
    case HStarMethod::Ascents:
    case HStarMethod::RedTurns:
      return count_maximal_chains(IdealLattice::build(w)) <= BigInt(10'000'000);
    case HStarMethod::ChainTransform: return w.length() <= 24;
    case HStarMethod::Recurrence: return true;
  }
  return false;
}

HStarResult compute_hstar(const SnakeWord& w, HStarMethod m) {
  HStarResult r{w, {}, m};
  switch (m) {
    case HStarMethod::ClosedForm:
      if (w.is_ladder())
        r.h = hstar_ladder_closed(w.length());
      else if (w.is_snake())
        r.h = hstar_snake_closed(w.length());
      else
        throw Error("closed form applies only to ladders and alternating words, not " + w.str());
      break;
    case HStarMethod::Ascents: r.h = hstar_enumerate(w, EnumerateVia::Ascents); break;
    case HStarMethod::RedTurns: r.h = hstar_enumerate(w, EnumerateVia::RedTurns); break;
    case HStarMethod::Recurrence: r.h = hstar_recurrence(w); break;
    case HStarMethod::ChainTransform: r.h = hstar_chain_transform(w); break;
  }
  return r;
}

bool coefficientwise_leq(const IntPolynomial& a, const IntPolynomial& b) {
  const std::size_t m = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < m; ++k)
    if (a[k] > b[k]) return false;
  return true;
}

std::vector<SwapCheck> check_swap_monotonicity(const SnakeWord& w) {
  std::vector<SwapCheck> out;
  const IntPolynomial hw = hstar_recurrence(w);
  for (std::size_t i : admissible_swap_indices(w)) {
    SwapCheck c;
    c.index = i;
    c.swapped = swap(w, i);
    const IntPolynomial hs = hstar_recurrence(c.swapped);
    c.holds = coefficientwise_leq(hs, hw);
    c.equal = hs == hw;
    c.strict = c.holds && !c.equal;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace snakelat
