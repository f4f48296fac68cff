#include "snakelat/polynomial.hpp"

#include <algorithm>

namespace snakelat {

namespace mp = boost::multiprecision;

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

std::optional<IntPolynomial> to_integer(const RatPolynomial& p) {
  std::vector<BigInt> c;
  c.reserve(p.size());
  for (const auto& v : p.coefficients()) {
    if (mp::denominator(v) != 1) return std::nullopt;
    c.push_back(mp::numerator(v));
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  BigInt l = 1;
  for (const auto& v : p.coefficients()) l = mp::lcm(l, BigInt(mp::denominator(v)));
  std::vector<BigInt> c;
  BigInt g = 0;
  for (const auto& v : p.coefficients()) {
    BigInt x = mp::numerator(v) * (l / mp::denominator(v));
    g = mp::gcd(g, x);
    c.push_back(std::move(x));
  }
  if (p.leading() < 0) g = -g;
  for (auto& x : c) x /= g;
  return IntPolynomial(std::move(c));
}

RatPolynomial compose_shift(const RatPolynomial& p, const Rational& a, const Rational& b) {
  const RatPolynomial inner({b, a});
  RatPolynomial acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + RatPolynomial::constant(*it);
  return acc;
}

DivMod<Rational> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational f = r[static_cast<std::size_t>(k + db)] / lb;
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial divide_exact(const RatPolynomial& a, const RatPolynomial& b) {
  auto qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw InexactDivision<Rational>(qr.remainder);
  return qr.quotient;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<BigInt> r = a.coefficients();
  const int db = b.degree();
  const BigInt& lb = b.coefficients().back();
  std::vector<BigInt> q;
  if (a.degree() >= db) q.resize(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    const BigInt& top = r[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (top % lb != 0) break;
    const BigInt f = top / lb;
    q[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  IntPolynomial rem(std::move(r));
  if (!rem.is_zero()) throw InexactDivision<BigInt>(rem);
  return IntPolynomial(std::move(q));
}

RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

RatPolynomial squarefree_part(const RatPolynomial& p) {
  if (p.degree() <= 0) return make_monic(p);
  return make_monic(divide_exact(p, gcd(p, p.derivative())));
}

std::vector<std::pair<RatPolynomial, int>> squarefree_decomposition(const RatPolynomial& p) {
  std::vector<std::pair<RatPolynomial, int>> out;
  if (p.degree() <= 0) return out;
  const RatPolynomial dp = p.derivative();
  RatPolynomial a = gcd(p, dp);
  RatPolynomial b = divide_exact(p, a);
  RatPolynomial c = divide_exact(dp, a);
  RatPolynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(make_monic(a), i);
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

bool is_palindromic(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

namespace {

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int sign_at(const RatPolynomial& p, const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::PosInf: return sign_of(p.leading());
    case Endpoint::Kind::NegInf: return sign_of(p.leading()) * (p.degree() % 2 == 0 ? 1 : -1);
    case Endpoint::Kind::Finite: break;
  }
  return sign_of(p.evaluate(e.value));
}

int variations(const std::vector<RatPolynomial>& seq, const Endpoint& e) {
  int count = 0, prev = 0;
  for (const auto& q : seq) {
    const int s = sign_at(q, e);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

std::size_t sturm_real_root_count(const RatPolynomial& p, const Endpoint& lo, const Endpoint& hi) {
  if (p.is_zero()) throw Error("Sturm count of the zero polynomial");
  const RatPolynomial sf = squarefree_part(p);
  if (sf.degree() <= 0) return 0;
  std::vector<RatPolynomial> seq{sf, sf.derivative()};
  while (seq.back().degree() > 0) {
    RatPolynomial r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  const int v = variations(seq, lo) - variations(seq, hi);
  return v > 0 ? static_cast<std::size_t>(v) : 0;
}

std::size_t sturm_real_root_count(const IntPolynomial& p, const Endpoint& lo, const Endpoint& hi) {
  return sturm_real_root_count(to_rational(p), lo, hi);
}

IntPolynomial chain_to_hstar(const IntPolynomial& c, int d) {
  if (c.degree() > d)
    throw RangeError("chain polynomial degree " + std::to_string(c.degree()) +
                     " exceeds dimension " + std::to_string(d));
  const IntPolynomial one_minus_z({BigInt(1), BigInt(-1)});
  IntPolynomial h;
  for (int k = 0; k <= c.degree(); ++k) {
    const BigInt& ck = c[static_cast<std::size_t>(k)];
    if (ck == 0) continue;
    h += IntPolynomial::monomial(ck, static_cast<std::size_t>(k)) *
         one_minus_z.pow(static_cast<unsigned>(d - k));
  }
  return h;
}

IntPolynomial rising_product(long lo, long hi) {
  IntPolynomial r = IntPolynomial::constant(1);
  for (long s = lo; s <= hi; ++s) r *= IntPolynomial::linear(BigInt(s));
  return r;
}

RatPolynomial hstar_to_ehrhart(const IntPolynomial& h, int d) {
  if (d < 0) throw RangeError("negative dimension");
  if (h.degree() > d)
    throw RangeError("h* degree " + std::to_string(h.degree()) + " exceeds dimension " +
                     std::to_string(d));
  IntPolynomial acc;
  for (int i = 0; i <= h.degree(); ++i) {
    const BigInt& hi = h[static_cast<std::size_t>(i)];
    if (hi == 0) continue;
    acc += rising_product(1 - i, d - i) * hi;
  }
  return to_rational(acc) * Rational(BigInt(1), factorial(static_cast<unsigned>(d)));
}

std::vector<std::string> coefficient_strings(const IntPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& v : p.coefficients()) out.push_back(to_string(v));
  return out;
}

std::vector<std::string> coefficient_strings(const RatPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& v : p.coefficients()) out.push_back(to_string(v));
  return out;
}

namespace {

template <class T>
std::string format_impl(const Polynomial<T>& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    T c = p[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string cs = to_string(c);
    if (cs.find('/') != std::string::npos && k > 0) cs = "(" + cs + ")";
    if (k == 0 || cs != "1") out += cs;
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace

std::string format(const IntPolynomial& p, char var) { return format_impl(p, var); }
std::string format(const RatPolynomial& p, char var) { return format_impl(p, var); }

}  // namespace snakelat
