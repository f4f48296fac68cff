#pragma once

#include "snakelat/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace snakelat {

/// Dense univariate polynomial, coefficient i at index i, no trailing zeros.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& v, std::size_t k) {
    std::vector<T> c(k + 1);
    c[k] = v;
    return Polynomial(std::move(c));
  }
  /// x + a
  static Polynomial linear(const T& a) { return Polynomial({a, T(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coefficients() const { return c_; }
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  template <class U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(T(1)), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

template <class T>
struct DivMod {
  Polynomial<T> quotient;
  Polynomial<T> remainder;
};

template <class T>
class InexactDivision : public Error {
 public:
  explicit InexactDivision(Polynomial<T> remainder)
      : Error("polynomial division leaves a nonzero remainder"), remainder_(std::move(remainder)) {}
  const Polynomial<T>& remainder() const { return remainder_; }

 private:
  Polynomial<T> remainder_;
};

RatPolynomial to_rational(const IntPolynomial& p);
/// Nullopt unless every coefficient is an integer.
std::optional<IntPolynomial> to_integer(const RatPolynomial& p);
/// Positive multiple of p with coprime integer coefficients.
IntPolynomial primitive_part(const RatPolynomial& p);

/// p(a*t + b).
RatPolynomial compose_shift(const RatPolynomial& p, const Rational& a, const Rational& b);

DivMod<Rational> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial divide_exact(const RatPolynomial& a, const RatPolynomial& b);
/// Exact division over the integers; throws InexactDivision<BigInt> otherwise.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Monic gcd over Q.
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial make_monic(const RatPolynomial& p);
RatPolynomial squarefree_part(const RatPolynomial& p);
/// Yun: p = c * prod f_i^{m_i}, f_i monic squarefree and pairwise coprime.
std::vector<std::pair<RatPolynomial, int>> squarefree_decomposition(const RatPolynomial& p);

bool is_palindromic(const IntPolynomial& p);

/// Endpoint of a half-open interval (lo, hi].
struct Endpoint {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rational value = 0;

  static Endpoint neg_inf() { return {Kind::NegInf, 0}; }
  static Endpoint pos_inf() { return {Kind::PosInf, 0}; }
  static Endpoint at(const Rational& v) { return {Kind::Finite, v}; }
};

/// Distinct real roots in (lo, hi] by Sturm sequences on the squarefree part.
std::size_t sturm_real_root_count(const RatPolynomial& p, const Endpoint& lo, const Endpoint& hi);
std::size_t sturm_real_root_count(const IntPolynomial& p, const Endpoint& lo, const Endpoint& hi);

/// sum_k c_k z^k (1-z)^(d-k).
IntPolynomial chain_to_hstar(const IntPolynomial& c, int d);
/// sum_i h_i binom(t+d-i, d) in the monomial basis.
RatPolynomial hstar_to_ehrhart(const IntPolynomial& h, int d);
/// prod_{s=lo}^{hi} (t+s).
IntPolynomial rising_product(long lo, long hi);

std::vector<std::string> coefficient_strings(const IntPolynomial& p);
std::vector<std::string> coefficient_strings(const RatPolynomial& p);
/// Human-readable form, highest degree first, e.g. "z^2 + 3z + 1".
std::string format(const IntPolynomial& p, char var = 'z');
std::string format(const RatPolynomial& p, char var = 't');

}  // namespace snakelat
