#include "snakelat/ideal_lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace snakelat {

namespace {

std::uint64_t bit(int e) { return std::uint64_t{1} << e; }

// Splits P(w) into two chains. Each pair {2j+1, 2j+2} has one element per
// chain; 2j+2 follows its unique upper cover.
void decompose(const SnakeWord& w, std::vector<int>& xs, std::vector<int>& ys) {
  const std::size_t n = w.length();
  std::vector<int> x_top_down{1}, y_top_down{0, 2};
  for (std::size_t j = 1; j <= n; ++j) {
    const int jj = static_cast<int>(j);
    const int top = square_top(w, j);
    const bool in_x = std::find(x_top_down.begin(), x_top_down.end(), top) != x_top_down.end();
    (in_x ? x_top_down : y_top_down).push_back(2 * jj + 2);
    (in_x ? y_top_down : x_top_down).push_back(2 * jj + 1);
  }
  x_top_down.push_back(static_cast<int>(2 * n + 3));
  xs.assign(x_top_down.rbegin(), x_top_down.rend());
  ys.assign(y_top_down.rbegin(), y_top_down.rend());
}

}  // namespace

IdealLattice IdealLattice::build(const SnakeWord& input) {
  SnakeWord w = canonicalize(input);
  Poset p = build_poset(w);
  IdealLattice j(w, p);
  decompose(w, j.x_chain_, j.y_chain_);
  const std::uint64_t full = p.element_mask();

  for (std::size_t a = 0; a <= j.x_chain_.size(); ++a) {
    for (std::size_t b = 0; b <= j.y_chain_.size(); ++b) {
      std::uint64_t removed = 0;
      for (std::size_t i = 0; i < a; ++i) removed |= bit(j.x_chain_[i]);
      for (std::size_t i = 0; i < b; ++i) removed |= bit(j.y_chain_[i]);
      bool down_closed = true;
      for (int e : p.elements())
        if ((removed & bit(e)) && (p.strictly_below(e) & ~removed)) down_closed = false;
      if (!down_closed) continue;
      Ideal id;
      id.members = full & ~removed;
      id.coord = {static_cast<int>(a) - 1, static_cast<int>(b)};
      for (int e : p.elements()) {
        if (!(id.members & bit(e))) continue;
        if ((p.strictly_below(e) & id.members) == 0) id.generators.push_back(e);
      }
      j.elements_.push_back(std::move(id));
    }
  }
  std::sort(j.elements_.begin(), j.elements_.end(), [](const Ideal& u, const Ideal& v) {
    return std::pair(u.coord.y, u.coord.x) < std::pair(v.coord.y, v.coord.x);
  });

  const LatticePoint top = j.max_coord();
  j.grid_.assign(static_cast<std::size_t>(top.y) + 1,
                 std::vector<int>(static_cast<std::size_t>(top.x) + 2, -1));
  for (std::size_t i = 0; i < j.elements_.size(); ++i) {
    const auto c = j.elements_[i].coord;
    j.grid_[static_cast<std::size_t>(c.y)][static_cast<std::size_t>(c.x + 1)] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < j.elements_.size(); ++i) {
    const auto c = j.elements_[i].coord;
    if (auto k = j.index_of({c.x + 1, c.y})) j.covers_.emplace_back(i, *k);
    if (auto k = j.index_of({c.x, c.y + 1})) j.covers_.emplace_back(i, *k);
  }
  return j;
}

LatticePoint IdealLattice::max_coord() const {
  return {static_cast<int>(x_chain_.size()) - 1, static_cast<int>(y_chain_.size())};
}

std::optional<std::size_t> IdealLattice::index_of(LatticePoint c) const {
  if (c.y < 0 || c.y >= static_cast<int>(grid_.size())) return std::nullopt;
  const auto& row = grid_[static_cast<std::size_t>(c.y)];
  if (c.x + 1 < 0 || c.x + 1 >= static_cast<int>(row.size())) return std::nullopt;
  const int v = row[static_cast<std::size_t>(c.x + 1)];
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

std::pair<int, int> IdealLattice::row_bounds(int y) const {
  int lo = 1 << 30, hi = -(1 << 30);
  for (const auto& e : elements_) {
    if (e.coord.y != y) continue;
    lo = std::min(lo, e.coord.x);
    hi = std::max(hi, e.coord.x);
  }
  if (lo > hi) throw RangeError("no lattice points at height " + std::to_string(y));
  return {lo, hi};
}

std::size_t lattice_size_recursive(const SnakeWord& w) {
  std::size_t total = 6;
  for (std::size_t m = 1; m <= w.length(); ++m) {
    std::size_t k = 0;
    for (std::size_t i = m - 1; i >= 1; --i) {
      if (w.at(i) != w.at(m)) {
        k = i;
        break;
      }
    }
    total += 3 + (m - k);
  }
  return total;
}

void for_each_maximal_chain(const IdealLattice& j,
                            const std::function<bool(const MaximalChain&)>& visit) {
  const LatticePoint top = j.max_coord();
  MaximalChain chain;
  chain.path.push_back(j.min_coord());
  bool stop = false;
  std::function<void(LatticePoint)> rec = [&](LatticePoint c) {
    if (stop) return;
    if (c == top) {
      if (!visit(chain)) stop = true;
      return;
    }
    const LatticePoint nx{c.x + 1, c.y}, ny{c.x, c.y + 1};
    if (j.contains(nx)) {
      chain.path.push_back(nx);
      chain.removal_sequence.sequence.push_back(j.removed_by_x_step(c));
      rec(nx);
      chain.path.pop_back();
      chain.removal_sequence.sequence.pop_back();
    }
    if (stop) return;
    if (j.contains(ny)) {
      chain.path.push_back(ny);
      chain.removal_sequence.sequence.push_back(j.removed_by_y_step(c));
      rec(ny);
      chain.path.pop_back();
      chain.removal_sequence.sequence.pop_back();
    }
  };
  rec(j.min_coord());
}

std::vector<MaximalChain> maximal_chains(const IdealLattice& j) {
  std::vector<MaximalChain> out;
  for_each_maximal_chain(j, [&](const MaximalChain& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

BigInt count_maximal_chains(const IdealLattice& j) {
  std::vector<BigInt> ways(j.size());
  ways[*j.index_of(j.min_coord())] = 1;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto c = j.elements()[i].coord;
    if (auto k = j.index_of({c.x - 1, c.y})) ways[i] += ways[*k];
    if (auto k = j.index_of({c.x, c.y - 1})) ways[i] += ways[*k];
  }
  return ways[*j.index_of(j.max_coord())];
}

bool RedTurnColoring::is_red(LatticePoint low, LatticePoint mid, LatticePoint high) const {
  return std::binary_search(red_turns.begin(), red_turns.end(), RedTurn{low, mid, high});
}

std::vector<LatticePoint> unit_squares(const IdealLattice& j) {
  std::vector<LatticePoint> out;
  for (const auto& e : j.elements()) {
    const auto c = e.coord;
    if (j.contains({c.x + 1, c.y}) && j.contains({c.x, c.y + 1}) && j.contains({c.x + 1, c.y + 1}))
      out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RedTurnColoring color_red_turns(const IdealLattice& j) {
  RedTurnColoring col;
  for (const auto c : unit_squares(j)) {
    const int a = j.removed_by_x_step(c);
    const int b = j.removed_by_y_step(c);
    const LatticePoint high{c.x + 1, c.y + 1};
    if (a < b)
      col.red_turns.push_back({c, {c.x + 1, c.y}, high});
    else
      col.red_turns.push_back({c, {c.x, c.y + 1}, high});
  }
  std::sort(col.red_turns.begin(), col.red_turns.end());
  return col;
}

std::size_t red_turn_count(const MaximalChain& c, const RedTurnColoring& coloring) {
  std::size_t k = 0;
  for (std::size_t i = 2; i < c.path.size(); ++i)
    if (coloring.is_red(c.path[i - 2], c.path[i - 1], c.path[i])) ++k;
  return k;
}

std::vector<BigInt> red_turn_distribution(const IdealLattice& j, const RedTurnColoring& coloring) {
  // State: (point, direction of the last step); value: distribution over red-turn counts.
  using Dist = std::vector<BigInt>;
  auto add_shifted = [](Dist& into, const Dist& from, std::size_t shift) {
    if (into.size() < from.size() + shift) into.resize(from.size() + shift);
    for (std::size_t k = 0; k < from.size(); ++k) into[k + shift] += from[k];
  };
  const std::size_t m = j.size();
  std::vector<Dist> via_x(m), via_y(m);
  const std::size_t start = *j.index_of(j.min_coord());
  // The first step has no predecessor, so it can never complete a turn.
  for (std::size_t i = 0; i < m; ++i) {
    const auto c = j.elements()[i].coord;
    for (int dir = 0; dir < 2; ++dir) {
      const LatticePoint prev = dir == 0 ? LatticePoint{c.x - 1, c.y} : LatticePoint{c.x, c.y - 1};
      auto pk = j.index_of(prev);
      if (!pk) continue;
      Dist& target = dir == 0 ? via_x[i] : via_y[i];
      if (*pk == start) {
        add_shifted(target, Dist{1}, 0);
        continue;
      }
      for (int pdir = 0; pdir < 2; ++pdir) {
        const Dist& src = pdir == 0 ? via_x[*pk] : via_y[*pk];
        if (src.empty()) continue;
        const LatticePoint low = pdir == 0 ? LatticePoint{prev.x - 1, prev.y} : LatticePoint{prev.x, prev.y - 1};
        const std::size_t red = coloring.is_red(low, prev, c) ? 1 : 0;
        add_shifted(target, src, red);
      }
    }
  }
  const std::size_t top = *j.index_of(j.max_coord());
  Dist out;
  add_shifted(out, via_x[top], 0);
  add_shifted(out, via_y[top], 0);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<int> characteristic_vector(const IdealLattice& j, const Ideal& a) {
  const std::size_t d = j.poset().size();
  std::vector<int> v(d, 0);
  for (std::size_t i = 0; i < d; ++i) v[i] = (a.members >> i) & 1 ? 1 : 0;
  return v;
}

std::string to_coordinate_text(const IdealLattice& j) {
  std::ostringstream os;
  for (const auto& e : j.elements()) {
    os << e.coord.x << ' ' << e.coord.y << " <";
    for (std::size_t i = 0; i < e.generators.size(); ++i) os << (i ? "," : "") << e.generators[i];
    os << ">\n";
  }
  return os.str();
}

}  // namespace snakelat
