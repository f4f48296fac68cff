#include "snakelat/ideal_lattice.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <bit>
#include <map>
#include <set>

using namespace snakelat;

namespace {

SnakeWord W(const char* s) { return SnakeWord::parse(s); }

LatticePoint coord_of(const IdealLattice& j, std::uint64_t members) {
  for (const auto& e : j.elements())
    if (e.members == members) return e.coord;
  FAIL("filter not found");
  return {};
}

std::uint64_t up_closure(const Poset& p, std::initializer_list<int> gens) {
  std::uint64_t m = 0;
  for (int g : gens) m |= p.strictly_above(g) | (std::uint64_t{1} << g);
  return m;
}

}  // namespace

TEST_CASE("base embedding of J(P(ε))") {
  const IdealLattice j = IdealLattice::build(W(""));
  const Poset& p = j.poset();
  REQUIRE(j.size() == 6);
  CHECK(coord_of(j, 0) == LatticePoint{1, 2});
  CHECK(coord_of(j, up_closure(p, {0})) == LatticePoint{1, 1});
  CHECK(coord_of(j, up_closure(p, {1})) == LatticePoint{0, 1});
  CHECK(coord_of(j, up_closure(p, {2})) == LatticePoint{1, 0});
  CHECK(coord_of(j, up_closure(p, {1, 2})) == LatticePoint{0, 0});
  CHECK(coord_of(j, up_closure(p, {3})) == LatticePoint{-1, 0});
}

TEST_CASE("J(P(εR))") {
  const IdealLattice j = IdealLattice::build(W("R"));
  const Poset& p = j.poset();
  CHECK(j.size() == 10);
  CHECK(coord_of(j, up_closure(p, {3})) == LatticePoint{0, 1});
  CHECK(coord_of(j, up_closure(p, {5})) == LatticePoint{-1, 0});
  CHECK(coord_of(j, 0) == LatticePoint{2, 3});
  CHECK(j.elements().front().generators == std::vector<int>{5});
}

TEST_CASE("sizes") {
  CHECK(IdealLattice::build(W("RR")).size() == 15);
  CHECK(IdealLattice::build(W("LR")).size() == 14);
  CHECK(IdealLattice::build(W("LRR")).size() == 19);
  CHECK(IdealLattice::build(W("RRR")).size() == 21);
  CHECK(lattice_size_recursive(W("RR")) == 15);
  CHECK(lattice_size_recursive(W("")) == 6);
}

TEST_CASE("elements agree with brute-force filter enumeration") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& w : enumerate_words(n, false)) {
      const IdealLattice j = IdealLattice::build(w);
      CHECK(j.word() == canonicalize(w));
      std::set<std::uint64_t> ours;
      for (const auto& e : j.elements()) ours.insert(e.members);
      const auto brute = oracle::filters(j.poset());
      CHECK(ours == std::set<std::uint64_t>(brute.begin(), brute.end()));
      CHECK(lattice_size_recursive(w) == brute.size());
      // complement words have isomorphic lattices
      CHECK(oracle::filters(build_poset(w)).size() == brute.size());
    }
  }
}

TEST_CASE("embedding geometry") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& w : enumerate_words(n, true)) {
      const IdealLattice j = IdealLattice::build(w);
      const auto& el = j.elements();
      const int nn = static_cast<int>(n);
      CHECK(j.max_coord() == LatticePoint{nn + 1, nn + 2});
      CHECK(el.front().coord == LatticePoint{-1, 0});
      CHECK(el.front().members == j.poset().element_mask());
      CHECK(el.back().members == 0);
      std::set<LatticePoint> seen;
      for (const auto& e : el) seen.insert(e.coord);
      CHECK(seen.size() == el.size());

      // covers: one element removed, one coordinate up by one
      std::set<std::pair<std::size_t, std::size_t>> inclusion_covers;
      for (std::size_t a = 0; a < el.size(); ++a)
        for (std::size_t b = 0; b < el.size(); ++b)
          if ((el[b].members & el[a].members) == el[b].members &&
              std::popcount(el[a].members) == std::popcount(el[b].members) + 1)
            inclusion_covers.insert({a, b});
      CHECK(std::set<std::pair<std::size_t, std::size_t>>(j.covers().begin(), j.covers().end()) == inclusion_covers);
      for (auto [a, b] : j.covers()) {
        const auto ca = el[a].coord, cb = el[b].coord;
        CHECK(std::abs(cb.x - ca.x) + std::abs(cb.y - ca.y) == 1);
        CHECK(cb.x >= ca.x);
        CHECK(cb.y >= ca.y);
        const int removed = std::countr_zero(el[a].members & ~el[b].members);
        CHECK(removed == (cb.x > ca.x ? j.removed_by_x_step(ca) : j.removed_by_y_step(ca)));
      }
      if (n <= 4) {
        for (const auto& a : el)
          for (const auto& b : el) {
            const bool below = (b.members & a.members) == b.members;
            CHECK(below == (a.coord.x <= b.coord.x && a.coord.y <= b.coord.y));
          }
      }
      // rows are contiguous
      for (int y = 0; y <= nn + 2; ++y) {
        const auto [lo, hi] = j.row_bounds(y);
        for (int x = lo; x <= hi; ++x) CHECK(j.contains({x, y}));
      }
    }
  }
}

TEST_CASE("generators are the minimal elements") {
  for (const auto& w : enumerate_words(4, true)) {
    const IdealLattice j = IdealLattice::build(w);
    for (const auto& e : j.elements()) {
      CHECK(e.generators.size() <= 2);
      std::uint64_t closure = 0;
      for (int g : e.generators) closure |= j.poset().strictly_above(g) | (std::uint64_t{1} << g);
      CHECK(closure == e.members);
    }
  }
}

TEST_CASE("maximal chains") {
  CHECK(maximal_chains(IdealLattice::build(W("R"))).size() == 5);
  CHECK(maximal_chains(IdealLattice::build(W("LR"))).size() == 12);
  CHECK(maximal_chains(IdealLattice::build(W(""))).size() == 2);
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& w : enumerate_words(n, true)) {
      const IdealLattice j = IdealLattice::build(w);
      const auto chains = maximal_chains(j);
      std::set<std::vector<int>> removals;
      for (const auto& c : chains) {
        CHECK(c.path.size() == 2 * n + 5);
        CHECK(is_linear_extension(j.poset(), c.removal_sequence.sequence));
        removals.insert(c.removal_sequence.sequence);
      }
      std::set<std::vector<int>> ext;
      for (const auto& e : linear_extensions(j.poset())) ext.insert(e.sequence);
      CHECK(removals == ext);
      CHECK(removals.size() == chains.size());
      CHECK(count_maximal_chains(j) == BigInt(chains.size()));
    }
  }
}

TEST_CASE("red turns") {
  CHECK(unit_squares(IdealLattice::build(W("LR"))).size() == 5);
  CHECK(unit_squares(IdealLattice::build(W("RR"))).size() == 6);
  CHECK(color_red_turns(IdealLattice::build(W(""))).red_turns.size() == 1);

  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& w : enumerate_words(n, true)) {
      const IdealLattice j = IdealLattice::build(w);
      const auto squares = unit_squares(j);
      const auto col = color_red_turns(j);
      CHECK(col.red_turns.size() == squares.size());
      // brute-force square detection
      std::size_t brute = 0;
      for (const auto& e : j.elements()) {
        const auto c = e.coord;
        brute += j.contains({c.x + 1, c.y}) && j.contains({c.x, c.y + 1}) && j.contains({c.x + 1, c.y + 1});
      }
      CHECK(brute == squares.size());
      for (const auto& c : squares) {
        const LatticePoint hi{c.x + 1, c.y + 1}, via_x{c.x + 1, c.y}, via_y{c.x, c.y + 1};
        CHECK(col.is_red(c, via_x, hi) != col.is_red(c, via_y, hi));
        // the red route removes its two elements in increasing order
        const int a = j.removed_by_x_step(c), b = j.removed_by_y_step(c);
        const int first = col.is_red(c, via_x, hi) ? a : b;
        const int second = col.is_red(c, via_x, hi) ? j.removed_by_y_step(via_x) : j.removed_by_x_step(via_y);
        CHECK(first < second);
      }
    }
  }
}

TEST_CASE("red-turn distribution") {
  auto dist = [](const char* s) {
    const IdealLattice j = IdealLattice::build(W(s));
    return red_turn_distribution(j, color_red_turns(j));
  };
  CHECK(dist("R") == std::vector<BigInt>{1, 3, 1});
  CHECK(dist("RR") == std::vector<BigInt>{1, 6, 6, 1});
  CHECK(dist("LR") == std::vector<BigInt>{1, 5, 5, 1});

  SUBCASE("DP agrees with chain enumeration and with ascents") {
    for (std::size_t n = 0; n <= 5; ++n) {
      for (const auto& w : enumerate_words(n, true)) {
        const IdealLattice j = IdealLattice::build(w);
        const auto col = color_red_turns(j);
        std::vector<BigInt> by_chain;
        for_each_maximal_chain(j, [&](const MaximalChain& c) {
          const std::size_t k = red_turn_count(c, col);
          if (by_chain.size() <= k) by_chain.resize(k + 1);
          by_chain[k] += 1;
          // the bijection: red turns of the chain = ascents of its extension
          CHECK(k == ascent_count(c.removal_sequence));
          return true;
        });
        const auto dp = red_turn_distribution(j, col);
        CHECK(dp == by_chain);
        CHECK(dp == ascent_distribution(j.poset()));
      }
    }
  }
}

TEST_CASE("characteristic vectors") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& w : enumerate_words(n, true)) {
      const IdealLattice j = IdealLattice::build(w);
      std::set<std::vector<int>> images;
      for (const auto& e : j.elements()) {
        const auto v = characteristic_vector(j, e);
        CHECK(v.size() == 2 * n + 4);
        images.insert(v);
      }
      CHECK(images.size() == j.size());
      CHECK(characteristic_vector(j, j.elements().back()) == std::vector<int>(2 * n + 4, 0));
      CHECK(characteristic_vector(j, j.elements().front()) == std::vector<int>(2 * n + 4, 1));
    }
  }
}

TEST_CASE("coordinate export") {
  const std::string text = to_coordinate_text(IdealLattice::build(W("")));
  CHECK(text.find("-1 0 <3>\n") == 0);
  CHECK(text.find("1 2 <>\n") != std::string::npos);
  CHECK(text.find("0 0 <1,2>\n") != std::string::npos);
}
