#include "snakelat/chain_poly.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace snakelat {

namespace {

const IntPolynomial& one_plus_z() {
  static const IntPolynomial p({BigInt(1), BigInt(1)});
  return p;
}

const IntPolynomial& z_poly() {
  static const IntPolynomial p({BigInt(0), BigInt(1)});
  return p;
}

}  // namespace

IntPolynomial chain_polynomial_bruteforce(const IdealLattice& j) {
  const auto& el = j.elements();
  const std::size_t m = el.size();
  std::vector<std::size_t> order;
  const std::uint64_t full = j.poset().element_mask();
  for (std::size_t i = 0; i < m; ++i)
    if (el[i].members != full) order.push_back(i);
  // Larger filters come first in the lattice order.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(el[a].members) > std::popcount(el[b].members);
  });
  // ends[a][k]: chains with k elements whose largest element is a.
  std::vector<std::vector<BigInt>> ends(m);
  std::vector<BigInt> total{1};
  for (std::size_t ia = 0; ia < order.size(); ++ia) {
    const std::size_t a = order[ia];
    std::vector<BigInt> cur{0, 1};
    for (std::size_t ib = 0; ib < ia; ++ib) {
      const std::size_t b = order[ib];
      const bool below = (el[a].members & el[b].members) == el[a].members && el[a].members != el[b].members;
      if (!below) continue;
      const auto& src = ends[b];
      if (cur.size() < src.size() + 1) cur.resize(src.size() + 1);
      for (std::size_t k = 0; k < src.size(); ++k) cur[k + 1] += src[k];
    }
    if (total.size() < cur.size()) total.resize(cur.size());
    for (std::size_t k = 0; k < cur.size(); ++k) total[k] += cur[k];
    ends[a] = std::move(cur);
  }
  return IntPolynomial(std::move(total));
}

namespace {

// Rows are contiguous and their left ends weakly increase with height, so
// J_{i,y} only depends on max(i, left end of row y).
struct HeightTable {
  const IdealLattice& j;
  int top;
  std::vector<std::pair<int, int>> rows;
  std::map<std::pair<int, int>, IntPolynomial> memo;

  explicit HeightTable(const IdealLattice& lat) : j(lat), top(lat.max_y()) {
    for (int y = 0; y <= top; ++y) rows.push_back(lat.row_bounds(y));
  }

  int normalize(int i, int y) const { return std::max(i, rows[static_cast<std::size_t>(y)].first); }

  IntPolynomial value(int i, int y) {
    if (y > top) return IntPolynomial::constant(1);
    i = normalize(i, y);
    const auto key = std::pair(i, y);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    IntPolynomial r = value(i, y + 1);
    const int right = rows[static_cast<std::size_t>(y)].second;
    IntPolynomial w = z_poly();
    for (int x = i; x <= right; ++x) {
      r += w * value(x, y + 1);
      w *= one_plus_z();
    }
    memo.emplace(key, r);
    return r;
  }
};

}  // namespace

IntPolynomial height_chain_polynomial(const IdealLattice& j, int i, int y) {
  HeightTable t(j);
  return t.value(i, y);
}

std::map<int, IntPolynomial> expansion_coefficients(const IdealLattice& j, int y) {
  HeightTable t(j);
  if (y < 0 || y > t.top) throw RangeError("height out of range");
  std::map<int, IntPolynomial> a{{t.rows[0].first, IntPolynomial::constant(1)}};
  for (int h = 0; h < y; ++h) {
    std::map<int, IntPolynomial> next;
    const int right = t.rows[static_cast<std::size_t>(h)].second;
    for (const auto& [i, coef] : a) {
      next[t.normalize(i, h + 1)] += coef;
      IntPolynomial w = z_poly();
      for (int x = i; x <= right; ++x) {
        next[t.normalize(x, h + 1)] += coef * w;
        w *= one_plus_z();
      }
    }
    a = std::move(next);
  }
  return a;
}

IntPolynomial chain_polynomial_heights(const IdealLattice& j) {
  HeightTable t(j);
  const auto full = t.value(j.min_coord().x, j.min_coord().y);
  return divide_exact(full, one_plus_z());
}

LatticePoint step_end(const PathStep& s) {
  if (s.kind == PathStep::Kind::E) return {s.from.x + 1, s.from.y};
  return {s.from.x + s.k, s.from.y + 1};
}

bool step_is_legal(const IdealLattice& j, const PathStep& s) {
  const auto c = s.from;
  if (!j.contains(c)) return false;
  if (s.kind == PathStep::Kind::E)
    return !j.contains({c.x, c.y + 1}) && j.contains({c.x + 1, c.y});
  if (s.k < 0 || !j.contains({c.x, c.y + 1})) return false;
  return j.contains({c.x + s.k, c.y}) && j.contains({c.x + s.k, c.y + 1});
}

IntPolynomial step_weight(const PathStep& s) {
  if (s.kind == PathStep::Kind::E || s.k == 0) return one_plus_z();
  return z_poly() * one_plus_z().pow(static_cast<unsigned>(s.k));
}

namespace {

std::vector<PathStep> legal_steps(const IdealLattice& j, LatticePoint c) {
  std::vector<PathStep> out;
  PathStep e{PathStep::Kind::E, c, 0};
  if (step_is_legal(j, e)) out.push_back(e);
  for (int k = 0;; ++k) {
    PathStep h{PathStep::Kind::H, c, k};
    if (!step_is_legal(j, h)) break;
    out.push_back(h);
  }
  return out;
}

}  // namespace

std::vector<ValidPath> valid_paths(const IdealLattice& j) {
  std::vector<ValidPath> out;
  const LatticePoint top = j.max_coord();
  ValidPath cur;
  cur.weight = IntPolynomial::constant(1);
  std::function<void(LatticePoint)> rec = [&](LatticePoint c) {
    if (c == top) {
      out.push_back(cur);
      return;
    }
    for (const auto& s : legal_steps(j, c)) {
      const IntPolynomial saved = cur.weight;
      cur.steps.push_back(s);
      cur.weight *= step_weight(s);
      rec(step_end(s));
      cur.steps.pop_back();
      cur.weight = saved;
    }
  };
  rec(j.min_coord());
  return out;
}

IntPolynomial valid_path_weight(const IdealLattice& j) {
  // Elements are stored in (height, x) order, which every step increases.
  std::vector<IntPolynomial> acc(j.size());
  acc[*j.index_of(j.min_coord())] = IntPolynomial::constant(1);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (acc[i].is_zero()) continue;
    const auto c = j.elements()[i].coord;
    for (const auto& s : legal_steps(j, c)) acc[*j.index_of(step_end(s))] += acc[i] * step_weight(s);
  }
  return acc[*j.index_of(j.max_coord())];
}

IntPolynomial chain_polynomial_paths(const SnakeWord& w) {
  return valid_path_weight(IdealLattice::build(w));
}

}  // namespace snakelat
