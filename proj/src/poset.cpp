#include "snakelat/poset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

namespace snakelat {

namespace {

std::uint64_t bit(int e) { return std::uint64_t{1} << e; }

}  // namespace

Poset::Poset(std::size_t word_length, std::vector<int> elements,
             const std::vector<std::pair<int, int>>& covers)
    : n_(word_length), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (int e : elements_) {
    if (e < 0 || e > kMaxLabel) throw RangeError("poset label out of range");
    mask_ |= bit(e);
  }
  const std::size_t slots = elements_.empty() ? 0 : static_cast<std::size_t>(elements_.back()) + 1;
  up_.assign(slots, {});
  down_.assign(slots, {});
  above_.assign(slots, 0);
  below_.assign(slots, 0);
  rank_.assign(slots, 0);
  for (auto [a, b] : covers) {
    if (!contains(a) || !contains(b)) throw RangeError("cover relation on unknown label");
    if (covers_.insert({a, b}).second) {
      up_[static_cast<std::size_t>(a)].push_back(b);
      down_[static_cast<std::size_t>(b)].push_back(a);
    }
  }
  for (auto& v : up_) std::sort(v.begin(), v.end());
  for (auto& v : down_) std::sort(v.begin(), v.end());

  // Kahn order from the minimal elements; ranks and down-sets follow it.
  std::vector<int> indeg(slots, 0), order;
  for (int e : elements_) indeg[static_cast<std::size_t>(e)] = static_cast<int>(down_[static_cast<std::size_t>(e)].size());
  for (int e : elements_)
    if (indeg[static_cast<std::size_t>(e)] == 0) order.push_back(e);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int a = order[head];
    for (int b : up_[static_cast<std::size_t>(a)]) {
      auto& r = rank_[static_cast<std::size_t>(b)];
      r = std::max(r, rank_[static_cast<std::size_t>(a)] + 1);
      below_[static_cast<std::size_t>(b)] |= below_[static_cast<std::size_t>(a)] | bit(a);
      if (--indeg[static_cast<std::size_t>(b)] == 0) order.push_back(b);
    }
  }
  if (order.size() != elements_.size()) throw Error("cover relations contain a cycle");
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (int b : up_[static_cast<std::size_t>(*it)])
      above_[static_cast<std::size_t>(*it)] |= above_[static_cast<std::size_t>(b)] | bit(b);
  for (int e : elements_) max_rank_ = std::max(max_rank_, rank_[static_cast<std::size_t>(e)]);
}

bool Poset::contains(int e) const { return e >= 0 && e <= kMaxLabel && (mask_ & bit(e)); }

std::span<const int> Poset::upper_covers(int e) const {
  if (!contains(e)) throw RangeError("unknown poset element " + std::to_string(e));
  return up_[static_cast<std::size_t>(e)];
}

std::span<const int> Poset::lower_covers(int e) const {
  if (!contains(e)) throw RangeError("unknown poset element " + std::to_string(e));
  return down_[static_cast<std::size_t>(e)];
}

bool Poset::less(int a, int b) const { return contains(a) && contains(b) && (above_[static_cast<std::size_t>(a)] & bit(b)); }

std::uint64_t Poset::strictly_above(int e) const {
  if (!contains(e)) throw RangeError("unknown poset element " + std::to_string(e));
  return above_[static_cast<std::size_t>(e)];
}

std::uint64_t Poset::strictly_below(int e) const {
  if (!contains(e)) throw RangeError("unknown poset element " + std::to_string(e));
  return below_[static_cast<std::size_t>(e)];
}

int Poset::rank(int e) const {
  if (!contains(e)) throw RangeError("unknown poset element " + std::to_string(e));
  return rank_[static_cast<std::size_t>(e)];
}

std::vector<std::vector<int>> Poset::rank_levels() const {
  std::vector<std::vector<int>> levels(static_cast<std::size_t>(max_rank_) + 1);
  for (int e : elements_) levels[static_cast<std::size_t>(rank(e))].push_back(e);
  return levels;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int e : elements_)
    if (down_[static_cast<std::size_t>(e)].empty()) out.push_back(e);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int e : elements_)
    if (up_[static_cast<std::size_t>(e)].empty()) out.push_back(e);
  return out;
}

Poset Poset::induced(const std::vector<int>& subset) const {
  std::uint64_t m = 0;
  for (int e : subset) {
    if (!contains(e)) throw RangeError("subset element not in poset");
    m |= bit(e);
  }
  std::vector<std::pair<int, int>> cov;
  for (int a : subset) {
    const std::uint64_t up = above_[static_cast<std::size_t>(a)] & m;
    for (int b : subset) {
      if (!(up & bit(b))) continue;
      // b covers a in the restriction iff nothing of the subset lies strictly between.
      if ((up & below_[static_cast<std::size_t>(b)]) == 0) cov.emplace_back(a, b);
    }
  }
  return Poset(n_, subset, cov);
}

int square_top(const SnakeWord& w, std::size_t m) {
  if (m < 1 || m > w.length()) throw RangeError("square index out of range");
  const int mm = static_cast<int>(m);
  bool cross;
  if (m == 1)
    cross = w.at(1) == Letter::L;
  else
    cross = w.at(m - 1) != w.at(m);
  return cross ? 2 * mm - 1 : 2 * mm;
}

std::vector<int> square_elements(const SnakeWord& w, std::size_t m) {
  if (m == 0) return {0, 1, 2, 3};
  const int mm = static_cast<int>(m);
  return {2 * mm + 3, 2 * mm + 1, 2 * mm + 2, square_top(w, m)};
}

Poset build_poset(const SnakeWord& w) {
  const std::size_t n = w.length();
  if (2 * n + 3 > static_cast<std::size_t>(Poset::kMaxLabel))
    throw SizeGuardError("word too long for the poset representation");
  std::vector<int> elements;
  for (int e = 0; e <= static_cast<int>(2 * n + 3); ++e) elements.push_back(e);
  std::vector<std::pair<int, int>> covers{{1, 0}, {2, 0}, {3, 1}, {3, 2}};
  for (std::size_t m = 1; m <= n; ++m) {
    const int mm = static_cast<int>(m);
    covers.emplace_back(2 * mm + 3, 2 * mm + 1);
    covers.emplace_back(2 * mm + 3, 2 * mm + 2);
    covers.emplace_back(2 * mm + 2, square_top(w, m));
  }
  return Poset(n, std::move(elements), covers);
}

Poset subposet_segment(const SnakeWord& w, std::size_t i, std::size_t j) {
  if (i > j || j > w.length())
    throw RangeError("segment [" + std::to_string(i) + ":" + std::to_string(j) +
                     "] out of range for length " + std::to_string(w.length()));
  std::vector<int> subset;
  for (std::size_t m = i; m <= j; ++m)
    for (int e : square_elements(w, m)) subset.push_back(e);
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  return build_poset(w).induced(subset);
}

bool is_linear_extension(const Poset& p, std::span<const int> seq) {
  if (seq.size() != p.size()) return false;
  std::uint64_t seen = 0;
  for (int e : seq) {
    if (!p.contains(e) || (seen & bit(e))) return false;
    if ((p.strictly_below(e) & ~seen) != 0) return false;
    seen |= bit(e);
  }
  return true;
}

void for_each_linear_extension(const Poset& p,
                               const std::function<bool(std::span<const int>)>& visit) {
  const auto& elems = p.elements();
  std::vector<int> seq;
  seq.reserve(elems.size());
  bool stop = false;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t placed) {
    if (stop) return;
    if (seq.size() == elems.size()) {
      if (!visit(seq)) stop = true;
      return;
    }
    for (int e : elems) {
      if (placed & bit(e)) continue;
      if ((p.strictly_below(e) & ~placed) != 0) continue;
      seq.push_back(e);
      rec(placed | bit(e));
      seq.pop_back();
      if (stop) return;
    }
  };
  rec(0);
}

std::vector<LinearExtension> linear_extensions(const Poset& p) {
  std::vector<LinearExtension> out;
  for_each_linear_extension(p, [&](std::span<const int> s) {
    out.push_back({std::vector<int>(s.begin(), s.end())});
    return true;
  });
  return out;
}

BigInt count_linear_extensions(const Poset& p) {
  std::unordered_map<std::uint64_t, BigInt> memo;
  const std::uint64_t full = p.element_mask();
  std::function<BigInt(std::uint64_t)> rec = [&](std::uint64_t placed) -> BigInt {
    if (placed == full) return 1;
    if (auto it = memo.find(placed); it != memo.end()) return it->second;
    BigInt total = 0;
    for (int e : p.elements()) {
      if (placed & bit(e)) continue;
      if ((p.strictly_below(e) & ~placed) != 0) continue;
      total += rec(placed | bit(e));
    }
    memo.emplace(placed, total);
    return total;
  };
  return rec(0);
}

std::size_t ascent_count(std::span<const int> seq) {
  std::size_t a = 0;
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] > seq[i - 1]) ++a;
  return a;
}

std::vector<BigInt> ascent_distribution(const Poset& p) {
  std::vector<BigInt> dist;
  for_each_linear_extension(p, [&](std::span<const int> s) {
    const std::size_t a = ascent_count(s);
    if (dist.size() <= a) dist.resize(a + 1);
    dist[a] += 1;
    return true;
  });
  return dist;
}

std::string to_edge_list(const Poset& p) {
  std::ostringstream os;
  for (auto [a, b] : p.covers()) os << a << ' ' << b << '\n';
  return os.str();
}

}  // namespace snakelat
