#include "snakelat/hstar.hpp"

#include "snakelat/ehrhart.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <thread>

using namespace snakelat;

namespace {
SnakeWord W(const char* s) { return SnakeWord::parse(s); }

const HStarMethod kAll[] = {HStarMethod::Ascents, HStarMethod::RedTurns, HStarMethod::ClosedForm,
                            HStarMethod::Recurrence, HStarMethod::ChainTransform};
}  // namespace

TEST_CASE("numbers") {
  for (long n = 1; n <= 12; ++n)
    for (long k = 0; k <= n + 1; ++k) CHECK(narayana(n, k) == oracle::narayana(n, k));
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n) CHECK(delannoy(m, n) == oracle::delannoy(m, n));
  CHECK(narayana(4, 2) == 6);
  CHECK(delannoy(3, 3) == 63);
}

TEST_CASE("golden h*") {
  const std::pair<const char*, IntPolynomial> golden[] = {
      {"", {1, 1}},
      {"R", {1, 3, 1}},
      {"LR", {1, 5, 5, 1}},
      {"RR", {1, 6, 6, 1}},
      {"RRL", {1, 8, 15, 8, 1}},
      {"RLR", {1, 7, 13, 7, 1}},
      {"RRR", {1, 10, 20, 10, 1}},
  };
  for (const auto& [s, h] : golden) {
    for (HStarMethod m : kAll) {
      if (!method_applicable(W(s), m)) {
        CHECK_THROWS_AS((void)compute_hstar(W(s), m), Error);
        continue;
      }
      INFO(s << " via " << to_string(m));
      CHECK(compute_hstar(W(s), m).h == h);
    }
  }
  // non-canonical input is canonicalized
  CHECK(hstar_recurrence(W("LL")) == IntPolynomial{1, 6, 6, 1});
  CHECK(hstar_recurrence(W("RL")) == IntPolynomial{1, 5, 5, 1});
}

TEST_CASE("closed forms") {
  for (std::size_t n = 0; n <= 8; ++n) {
    std::vector<Letter> snake, ladder;
    for (std::size_t i = 0; i < n; ++i) {
      snake.push_back(i % 2 == (n % 2) ? Letter::L : Letter::R);
      ladder.push_back(Letter::R);
    }
    const SnakeWord s{snake}, l{ladder};
    REQUIRE(s.is_snake());
    CHECK(hstar_snake_closed(n) == hstar_recurrence(s));
    CHECK(hstar_ladder_closed(n) == hstar_recurrence(l));
  }
}

TEST_CASE("all methods agree") {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& w : enumerate_words(n, true)) {
      const IntPolynomial h = hstar_recurrence(w);
      CHECK(hstar_enumerate(w, EnumerateVia::Ascents) == h);
      CHECK(hstar_enumerate(w, EnumerateVia::RedTurns) == h);
      CHECK(hstar_chain_transform(w) == h);
      if (auto sub = hstar_recurrence_subsnake(w)) CHECK(*sub == h);
      CHECK(is_palindromic(h));
      CHECK(h.degree() == static_cast<int>(n) + 1);
      CHECK(h.evaluate(BigInt(1)) == volume_recurrence(w));
    }
}

TEST_CASE("h* from lattice-point counts") {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& w : enumerate_words(n, true)) {
      const Poset p = build_poset(w);
      const int d = static_cast<int>(p.size());
      if (n <= 1) {
        const IntPolynomial h = oracle::hstar_from_values(
            [&](int t) { return Rational(oracle::labelings(p, t)); }, d);
        CHECK(h == hstar_recurrence(w));
      }
      const IntPolynomial h = oracle::hstar_from_values(
          [&](int t) { return Rational(count_monotone_maps(p, 0, t, false)); }, d);
      CHECK(h == hstar_recurrence(w));
    }
}

TEST_CASE("enumeration size guard") {
  CHECK_THROWS_AS((void)hstar_enumerate(W("RRLL"), EnumerateVia::Ascents, BigInt(10)), SizeGuardError);
}

TEST_CASE("recurrence table is safe under concurrency") {
  HStarTable table;
  const auto words = enumerate_words(7, true);
  std::vector<std::thread> pool;
  std::vector<IntPolynomial> got(words.size());
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < words.size(); i += 4) got[i] = table.get(words[i]);
    });
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < words.size(); ++i) CHECK(got[i] == hstar_recurrence(words[i]));
  CHECK(table.size() >= words.size());
  table.clear();
  CHECK(table.size() == 0);
}

TEST_CASE("swap monotonicity") {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& w : enumerate_words(n, true))
      for (const auto& c : check_swap_monotonicity(w)) {
        INFO(w.str() << " i=" << c.index);
        CHECK(c.passed());
        CHECK(swap_index_admissible(w, c.index));
      }
  CHECK(coefficientwise_leq(IntPolynomial{1, 2}, IntPolynomial{1, 3, 1}));
  CHECK_FALSE(coefficientwise_leq(IntPolynomial{1, 4}, IntPolynomial{1, 3, 1}));
}

TEST_CASE("snake and ladder sandwich") {
  for (std::size_t n = 0; n <= 6; ++n) {
    const IntPolynomial lo = hstar_snake_closed(n), hi = hstar_ladder_closed(n);
    for (const auto& w : enumerate_words(n, false)) {
      const IntPolynomial h = hstar_recurrence(w);
      CHECK(coefficientwise_leq(lo, h));
      CHECK(coefficientwise_leq(h, hi));
    }
  }
}

TEST_CASE("method names") {
  CHECK(to_string(HStarMethod::RedTurns) == "red_turns");
  CHECK(to_string(HStarMethod::ChainTransform) == "chain_transform");
  CHECK(to_string(HStarMethod::ClosedForm) == "closed_form");
}
