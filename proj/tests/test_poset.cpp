#include "snakelat/poset.hpp"

#include "snakelat/ehrhart.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace snakelat;

namespace {
SnakeWord W(const char* s) { return SnakeWord::parse(s); }
using Covers = std::set<std::pair<int, int>>;
}  // namespace

TEST_CASE("build_poset base cases") {
  CHECK(build_poset(W("")).covers() == Covers{{1, 0}, {2, 0}, {3, 1}, {3, 2}});
  CHECK(build_poset(W("R")).covers() ==
        Covers{{1, 0}, {2, 0}, {3, 1}, {3, 2}, {5, 3}, {5, 4}, {4, 2}});
  CHECK(build_poset(W("L")).covers() ==
        Covers{{1, 0}, {2, 0}, {3, 1}, {3, 2}, {5, 3}, {5, 4}, {4, 1}});
  // εLR: letter 2 differs from letter 1, so 6 covers 2*2-1 = 3.
  CHECK(build_poset(W("LR")).covered_by(6, 3));
  CHECK(build_poset(W("RR")).covered_by(6, 4));
}

TEST_CASE("structural invariants") {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const auto& w : enumerate_words(n, false)) {
      const Poset p = build_poset(w);
      const int top = static_cast<int>(2 * n + 3);
      REQUIRE(p.size() == 2 * n + 4);
      CHECK(p.minimal_elements() == std::vector<int>{top});
      CHECK(p.maximal_elements() == std::vector<int>{0});
      CHECK(p.rank(top) == 0);
      CHECK(p.rank(0) == static_cast<int>(n + 2));
      const auto levels = p.rank_levels();
      CHECK(levels.size() == n + 3);
      for (int r = 1; r <= static_cast<int>(n + 1); ++r)
        CHECK(levels[r] == std::vector<int>{2 * static_cast<int>(n) + 3 - 2 * r, 2 * static_cast<int>(n) + 4 - 2 * r});
      for (auto [a, b] : p.covers()) {
        CHECK(p.rank(b) == p.rank(a) + 1);
        CHECK(p.less(a, b));
        CHECK_FALSE(p.less(b, a));
      }
      // covers as a set agree with per-element adjacency
      Covers from_adj;
      for (int e : p.elements())
        for (int u : p.upper_covers(e)) from_adj.insert({e, u});
      CHECK(from_adj == p.covers());
      for (int e : p.elements())
        for (int d : p.lower_covers(e)) CHECK(p.covers().count({d, e}) == 1);
    }
  }
}

TEST_CASE("width two: no three pairwise incomparable elements") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& w : enumerate_words(n, false)) {
      const Poset p = build_poset(w);
      const auto& el = p.elements();
      bool antichain3 = false;
      auto inc = [&](int a, int b) { return !p.less(a, b) && !p.less(b, a); };
      for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = i + 1; j < el.size(); ++j)
          for (std::size_t k = j + 1; k < el.size(); ++k)
            if (inc(el[i], el[j]) && inc(el[i], el[k]) && inc(el[j], el[k])) antichain3 = true;
      CHECK_FALSE(antichain3);
    }
  }
}

TEST_CASE("every maximal chain of P has n+3 elements") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& w : enumerate_words(n, true)) {
      const Poset p = build_poset(w);
      std::function<void(int, int)> walk = [&](int e, int len) {
        if (p.upper_covers(e).empty()) {
          CHECK(len == static_cast<int>(n + 3));
          return;
        }
        for (int u : p.upper_covers(e)) walk(u, len + 1);
      };
      walk(static_cast<int>(2 * n + 3), 1);
    }
  }
}

TEST_CASE("linear extensions") {
  CHECK(linear_extensions(build_poset(W(""))).size() == 2);
  CHECK(linear_extensions(build_poset(W("R"))).size() == 5);
  CHECK(linear_extensions(build_poset(W("RR"))).size() == 14);
  CHECK(linear_extensions(build_poset(W("LR"))).size() == 12);

  SUBCASE("P(ε) extensions in lexicographic order") {
    const auto ext = linear_extensions(build_poset(W("")));
    CHECK(ext[0].sequence == std::vector<int>{3, 1, 2, 0});
    CHECK(ext[1].sequence == std::vector<int>{3, 2, 1, 0});
  }

  SUBCASE("agree with permutation scan") {
    for (std::size_t n = 0; n <= 2; ++n) {
      for (const auto& w : enumerate_words(n, false)) {
        const Poset p = build_poset(w);
        std::vector<std::vector<int>> ours;
        for (const auto& e : linear_extensions(p)) ours.push_back(e.sequence);
        CHECK(ours == oracle::extensions_by_permutation(p));
      }
    }
  }

  SUBCASE("validity and counts match the volume recurrence") {
    for (std::size_t n = 0; n <= 5; ++n) {
      for (const auto& w : enumerate_words(n, true)) {
        const Poset p = build_poset(w);
        const auto ext = linear_extensions(p);
        for (const auto& e : ext) {
          CHECK(is_linear_extension(p, e.sequence));
          CHECK(e.sequence.front() == static_cast<int>(2 * n + 3));
          CHECK(e.sequence.back() == 0);
        }
        CHECK(BigInt(ext.size()) == volume_recurrence(w));
        CHECK(count_linear_extensions(p) == volume_recurrence(w));
      }
    }
  }

  SUBCASE("invalid sequences are rejected") {
    const Poset p = build_poset(W("R"));
    CHECK_FALSE(is_linear_extension(p, std::vector<int>{5, 3, 2, 4, 1, 0}));
    CHECK_FALSE(is_linear_extension(p, std::vector<int>{5, 4, 3, 2, 1}));
    CHECK_FALSE(is_linear_extension(p, std::vector<int>{5, 4, 4, 2, 1, 0}));
    CHECK(is_linear_extension(p, std::vector<int>{5, 4, 3, 2, 1, 0}));
  }
}

TEST_CASE("ascents") {
  CHECK(ascent_count(std::vector<int>{3, 2, 1, 0}) == 0);
  CHECK(ascent_count(std::vector<int>{3, 1, 2, 0}) == 1);
  CHECK(ascent_count(std::vector<int>{9, 7, 5, 3, 1}) == 0);
  CHECK(ascent_distribution(build_poset(W(""))) == std::vector<BigInt>{1, 1});
  CHECK(ascent_distribution(build_poset(W("R"))) == std::vector<BigInt>{1, 3, 1});
  CHECK(ascent_distribution(build_poset(W("RR"))) == std::vector<BigInt>{1, 6, 6, 1});
  CHECK(ascent_distribution(build_poset(W("LR"))) == std::vector<BigInt>{1, 5, 5, 1});
}

TEST_CASE("segments") {
  SUBCASE("εLRR [1:2] is the union of squares 1 and 2") {
    const Poset s = subposet_segment(W("LRR"), 1, 2);
    CHECK(s.elements() == std::vector<int>{1, 3, 4, 5, 6, 7});
    // Square 1 = {5,3,4,1}, square 2 = {7,5,6,3}
    CHECK(s.covers() == Covers{{3, 1}, {4, 1}, {5, 3}, {5, 4}, {6, 3}, {7, 5}, {7, 6}});
  }
  SUBCASE("full range is P(w)") {
    for (const auto& w : enumerate_words(4, false)) {
      const Poset s = subposet_segment(w, 0, w.length());
      CHECK(s.covers() == build_poset(w).covers());
    }
  }
  SUBCASE("single squares are diamonds") {
    for (const auto& w : enumerate_words(4, false)) {
      for (std::size_t i = 0; i <= 4; ++i) {
        const Poset s = subposet_segment(w, i, i);
        CHECK(s.size() == 4);
        CHECK(s.covers().size() == 4);
        CHECK(s.minimal_elements().size() == 1);
        CHECK(s.maximal_elements().size() == 1);
        CHECK(s.max_rank() == 2);
        CHECK(linear_extensions(s).size() == 2);
      }
    }
  }
  SUBCASE("segment order is the restriction of P's order") {
    for (const auto& w : enumerate_words(4, true)) {
      const Poset p = build_poset(w);
      for (std::size_t i = 0; i <= 4; ++i)
        for (std::size_t j = i; j <= 4; ++j) {
          const Poset s = subposet_segment(w, i, j);
          for (int a : s.elements())
            for (int b : s.elements()) CHECK(s.less(a, b) == p.less(a, b));
        }
    }
  }
  CHECK_THROWS_AS((void)subposet_segment(W("RR"), 2, 1), RangeError);
  CHECK_THROWS_AS((void)subposet_segment(W("RR"), 0, 3), RangeError);
}

TEST_CASE("edge list export") {
  CHECK(to_edge_list(build_poset(W(""))) == "1 0\n2 0\n3 1\n3 2\n");
}

TEST_CASE("cyclic covers are rejected") {
  CHECK_THROWS_AS(Poset(0, {0, 1}, {{0, 1}, {1, 0}}), Error);
}
