#pragma once

#include "snakelat/numeric.hpp"
#include "snakelat/polynomial.hpp"
#include "snakelat/word.hpp"

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace snakelat {

enum class HStarMethod { Ascents, RedTurns, ClosedForm, Recurrence, ChainTransform };

std::string to_string(HStarMethod m);

struct HStarResult {
  SnakeWord word;
  IntPolynomial h;
  HStarMethod method = HStarMethod::Recurrence;
};

/// N(n,k) = C(n,k) C(n,k-1) / n; zero outside 1 <= k <= n.
BigInt narayana(long n, long k);
/// D(m,n) = sum_k C(m,k) C(n,k) 2^k.
BigInt delannoy(long m, long n);

/// Alternating word of the given length: sum_i D(n-i, i) z^i with n = length+1.
IntPolynomial hstar_snake_closed(std::size_t length);
/// Constant word of the given length: sum_i N(length+2, i+1) z^i.
IntPolynomial hstar_ladder_closed(std::size_t length);

enum class EnumerateVia { Ascents, RedTurns };

/// Throws SizeGuardError when the volume exceeds the limit.
IntPolynomial hstar_enumerate(const SnakeWord& w, EnumerateVia via,
                              const BigInt& volume_limit = BigInt(10'000'000));

/// Memoized three-term recurrence keyed by canonical word; safe for concurrent use.
class HStarTable {
 public:
  IntPolynomial get(const SnakeWord& w);
  std::size_t size() const;
  void clear();

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, IntPolynomial> memo_;
};

/// Process-wide table used by hstar_recurrence.
HStarTable& default_hstar_table();

/// Splits at the largest k with w_k != w_n; ladders use the closed form.
IntPolynomial hstar_recurrence(const SnakeWord& w);

/// Split after the last repeated letter pair (w* up to that pair, q the
/// alternating remainder). Nullopt unless w_{n-1} != w_n and w is not alternating.
std::optional<IntPolynomial> hstar_recurrence_subsnake(const SnakeWord& w);

/// chain_to_hstar of the brute-force chain polynomial.
IntPolynomial hstar_chain_transform(const SnakeWord& w);

bool method_applicable(const SnakeWord& w, HStarMethod m);
/// Throws Error when the method does not apply.
HStarResult compute_hstar(const SnakeWord& w, HStarMethod m);

struct SwapCheck {
  std::size_t index = 0;
  SnakeWord swapped;
  /// [z^k] h*(swapped) <= [z^k] h*(w) for all k.
  bool holds = false;
  /// Some coefficient strictly smaller.
  bool strict = false;
  bool equal = false;
  /// holds, with equality exactly when index == 1.
  bool passed() const { return holds && (index == 1 ? equal : strict); }
};

std::vector<SwapCheck> check_swap_monotonicity(const SnakeWord& w);

/// Coefficient-wise a <= b.
bool coefficientwise_leq(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace snakelat
