#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace snakelat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class SizeGuardError : public Error {
 public:
  using Error::Error;
};

std::string to_string(const BigInt& v);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& v);

BigInt factorial(unsigned n);
/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);
BigInt catalan(unsigned m);

}  // namespace snakelat
