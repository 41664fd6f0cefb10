#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "element_set.hpp"
#include "error.hpp"

namespace skewhook {

/// Grid coordinate (row i, column j) carried by diagram-shaped posets.
struct Cell {
  int i = 0;
  int j = 0;
  friend bool operator==(const Cell &, const Cell &) = default;
  friend auto operator<=>(const Cell &, const Cell &) = default;
};

inline std::string to_string(const Cell &c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

/// Finite poset on the dense ids 0..N-1.
///
/// Construction computes the reflexive-transitive closure of the given cover
/// pairs and transitively reduces them, so covers() is always the Hasse
/// diagram. Labels are display metadata only; no algorithm reads them.
class Poset {
public:
  Poset() = default;

  static Poset from_covers(int n, const std::vector<std::pair<Element, Element>> &pairs) {
    if (n < 0 || n > kMaxElements)
      throw TooManyElements("poset size " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxElements));
    Poset p;
    p.n_ = n;
    p.up_.assign(n, ElementSet{});
    p.down_.assign(n, ElementSet{});
    p.upper_covers_.assign(n, ElementSet{});
    p.lower_covers_.assign(n, ElementSet{});

    std::vector<ElementSet> succ(n);
    std::vector<int> indeg(n, 0);
    for (auto [lo, hi] : pairs) {
      if (lo < 0 || lo >= n || hi < 0 || hi >= n)
        throw InputError("cover pair (" + std::to_string(lo) + "," + std::to_string(hi) +
                         ") references an id outside 0.." + std::to_string(n - 1));
      if (lo == hi)
        throw CycleDetected("self-loop at element " + std::to_string(lo));
      if (!succ[lo].contains(hi)) {
        succ[lo].insert(hi);
        ++indeg[hi];
      }
    }

    // Kahn's algorithm; leftovers mean a directed cycle.
    std::vector<Element> topo;
    topo.reserve(n);
    for (Element e = 0; e < n; ++e)
      if (indeg[e] == 0)
        topo.push_back(e);
    for (std::size_t k = 0; k < topo.size(); ++k)
      succ[topo[k]].for_each([&](Element s) {
        if (--indeg[s] == 0)
          topo.push_back(s);
      });
    if (static_cast<int>(topo.size()) != n)
      throw CycleDetected("cover relation contains a directed cycle");

    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      Element e = *it;
      ElementSet up{e};
      succ[e].for_each([&](Element s) { up |= p.up_[s]; });
      p.up_[e] = up;
    }
    for (Element a = 0; a < n; ++a)
      p.up_[a].for_each([&](Element b) { p.down_[b].insert(a); });

    for (Element a = 0; a < n; ++a)
      p.up_[a].without(a).for_each([&](Element b) {
        if (p.interval(a, b).size() == 2) {
          p.upper_covers_[a].insert(b);
          p.lower_covers_[b].insert(a);
          p.covers_.emplace_back(a, b);
        }
      });
    std::sort(p.covers_.begin(), p.covers_.end());
    return p;
  }

  int size() const { return n_; }
  ElementSet all() const { return ElementSet::full(n_); }

  bool leq(Element a, Element b) const { return up_[a].contains(b); }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

  /// {y : y >= a}
  ElementSet up(Element a) const { return up_[a]; }
  /// {y : y <= a}
  ElementSet down(Element a) const { return down_[a]; }
  ElementSet upper_covers(Element a) const { return upper_covers_[a]; }
  ElementSet lower_covers(Element a) const { return lower_covers_[a]; }
  bool covers(Element upper, Element lower) const { return upper_covers_[lower].contains(upper); }

  /// Closed interval [bottom, top]; empty unless bottom <= top.
  ElementSet interval(Element bottom, Element top) const { return up_[bottom] & down_[top]; }

  /// Hasse diagram as sorted (lower, upper) pairs.
  const std::vector<std::pair<Element, Element>> &cover_pairs() const { return covers_; }

  /// Number of pairs (a,b) with a <= b, reflexive pairs included.
  int leq_pair_count() const {
    int total = 0;
    for (const auto &u : up_)
      total += u.size();
    return total;
  }

  ElementSet maximal_elements(ElementSet within) const {
    ElementSet out;
    within.for_each([&](Element e) {
      if (!(up_[e].without(e)).intersects(within))
        out.insert(e);
    });
    return out;
  }
  ElementSet minimal_elements(ElementSet within) const {
    ElementSet out;
    within.for_each([&](Element e) {
      if (!(down_[e].without(e)).intersects(within))
        out.insert(e);
    });
    return out;
  }
  ElementSet maximal_elements() const { return maximal_elements(all()); }
  ElementSet minimal_elements() const { return minimal_elements(all()); }

  bool is_connected() const {
    if (n_ == 0)
      return true;
    ElementSet seen{0}, frontier{0};
    while (!frontier.empty()) {
      ElementSet next;
      frontier.for_each([&](Element e) { next |= upper_covers_[e] | lower_covers_[e]; });
      frontier = next - seen;
      seen |= next;
    }
    return seen == all();
  }

  const std::vector<std::string> &labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
      throw InputError("label count does not match poset size");
    labels_ = std::move(labels);
  }
  std::string label(Element e) const {
    return labels_.empty() ? std::to_string(e) : labels_[e];
  }

  const std::vector<Cell> &cells() const { return cells_; }
  bool has_cells() const { return !cells_.empty(); }
  void set_cells(std::vector<Cell> cells) {
    if (!cells.empty() && static_cast<int>(cells.size()) != n_)
      throw InputError("cell count does not match poset size");
    cells_ = std::move(cells);
    if (labels_.empty() && !cells_.empty()) {
      labels_.clear();
      for (const auto &c : cells_)
        labels_.push_back(to_string(c));
    }
  }
  std::optional<Element> find_cell(Cell c) const {
    for (Element e = 0; e < static_cast<int>(cells_.size()); ++e)
      if (cells_[e] == c)
        return e;
    return std::nullopt;
  }

  friend bool operator==(const Poset &a, const Poset &b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_;
  }

private:
  int n_ = 0;
  std::vector<ElementSet> up_, down_, upper_covers_, lower_covers_;
  std::vector<std::pair<Element, Element>> covers_;
  std::vector<std::string> labels_;
  std::vector<Cell> cells_;
};

// ---------------------------------------------------------------------------
// Order-theoretic queries

inline bool is_order_filter(const Poset &p, ElementSet s) {
  bool ok = true;
  s.for_each([&](Element e) { ok = ok && p.upper_covers(e).is_subset_of(s); });
  return ok;
}

inline bool is_order_ideal(const Poset &p, ElementSet s) {
  bool ok = true;
  s.for_each([&](Element e) { ok = ok && p.lower_covers(e).is_subset_of(s); });
  return ok;
}

/// Calls f(filter) for every order filter of p, the empty set and p included.
template <typename F>
void for_each_order_filter(const Poset &p, F &&f) {
  // Top-down order: every element appears after all elements above it.
  std::vector<Element> order;
  {
    ElementSet placed;
    while (placed != p.all()) {
      ElementSet avail = p.maximal_elements(p.all() - placed);
      avail.for_each([&](Element e) { order.push_back(e); });
      placed |= avail;
    }
  }
  std::function<void(std::size_t, ElementSet)> rec = [&](std::size_t k, ElementSet cur) {
    if (k == order.size()) {
      f(cur);
      return;
    }
    Element e = order[k];
    rec(k + 1, cur);
    if (p.upper_covers(e).is_subset_of(cur))
      rec(k + 1, cur.with(e));
  };
  rec(0, ElementSet{});
}

inline std::vector<ElementSet> order_filters(const Poset &p) {
  std::vector<ElementSet> out;
  for_each_order_filter(p, [&](ElementSet f) { out.push_back(f); });
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

inline bool is_antichain(const Poset &p, ElementSet s) {
  bool ok = true;
  s.for_each([&](Element a) {
    if ((p.up(a).without(a)).intersects(s))
      ok = false;
  });
  return ok;
}

/// Number of linear extensions, by dynamic programming over the lattice of
/// order filters: ext(F) = sum over maximal x of P\F of ext(F + x).
inline mpz_class linear_extensions_count(const Poset &p) {
  std::unordered_map<ElementSet, mpz_class> memo;
  std::function<mpz_class(ElementSet)> ext = [&](ElementSet filter) -> mpz_class {
    if (filter == p.all())
      return 1;
    if (auto it = memo.find(filter); it != memo.end())
      return it->second;
    mpz_class total = 0;
    p.maximal_elements(p.all() - filter).for_each([&](Element x) { total += ext(filter.with(x)); });
    memo.emplace(filter, total);
    return total;
  };
  return ext(ElementSet{});
}

/// Calls f(sequence) for each linear extension q_1..q_n (q_i < q_j implies
/// i < j, so minimal elements come first). Stops after `limit` sequences when
/// given; returns the number produced.
template <typename F>
std::size_t linear_extensions_enumerate(const Poset &p, F &&f,
                                        std::optional<std::size_t> limit = std::nullopt) {
  std::vector<Element> seq;
  seq.reserve(p.size());
  std::size_t produced = 0;
  std::function<bool(ElementSet)> rec = [&](ElementSet placed) -> bool {
    if (limit && produced >= *limit)
      return false;
    if (placed == p.all()) {
      f(static_cast<const std::vector<Element> &>(seq));
      ++produced;
      return true;
    }
    bool go_on = true;
    p.minimal_elements(p.all() - placed).for_each([&](Element x) {
      if (!go_on)
        return;
      seq.push_back(x);
      go_on = rec(placed.with(x));
      seq.pop_back();
    });
    return go_on && !(limit && produced >= *limit);
  };
  rec(ElementSet{});
  return produced;
}

inline std::vector<std::vector<Element>>
linear_extensions(const Poset &p, std::optional<std::size_t> limit = std::nullopt) {
  std::vector<std::vector<Element>> out;
  linear_extensions_enumerate(p, [&](const std::vector<Element> &s) { out.push_back(s); }, limit);
  return out;
}

/// A deterministic linear extension, bottom first. With prefer_smallest the
/// smallest available id is taken at each step, otherwise the largest.
inline std::vector<Element> linear_extension(const Poset &p, bool prefer_smallest = true) {
  std::vector<Element> seq;
  ElementSet placed;
  while (placed != p.all()) {
    ElementSet avail = p.minimal_elements(p.all() - placed);
    Element pick = prefer_smallest ? avail.first() : avail.to_vector().back();
    seq.push_back(pick);
    placed.insert(pick);
  }
  return seq;
}

/// Induced subposet on s. Members are renumbered in increasing order of their
/// original ids, i.e. new id k is s.to_vector()[k]. Labels and cells follow.
inline Poset induced_subposet(const Poset &p, ElementSet s) {
  std::vector<Element> members = s.to_vector();
  std::vector<int> index(p.size(), -1);
  for (std::size_t k = 0; k < members.size(); ++k)
    index[members[k]] = static_cast<int>(k);
  std::vector<std::pair<Element, Element>> rel;
  for (Element a : members)
    for (Element b : members)
      if (p.lt(a, b))
        rel.emplace_back(index[a], index[b]);
  Poset q = Poset::from_covers(static_cast<int>(members.size()), rel);
  if (!p.labels().empty()) {
    std::vector<std::string> labels;
    for (Element a : members)
      labels.push_back(p.labels()[a]);
    q.set_labels(std::move(labels));
  }
  if (p.has_cells()) {
    std::vector<Cell> cells;
    for (Element a : members)
      cells.push_back(p.cells()[a]);
    q.set_cells(std::move(cells));
  }
  return q;
}

} // namespace skewhook
