#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "colored_poset.hpp"
#include "error.hpp"
#include "poset.hpp"
#include "weyl.hpp"

namespace skewhook {

/// An interval [bottom, top] isomorphic to the double-tailed diamond d_k(1).
struct DkInterval {
  Element bottom = 0;
  Element top = 0;
  Element side_x = 0;
  Element side_y = 0;
  int k = 0;
  ElementSet members;

  friend bool operator==(const DkInterval &, const DkInterval &) = default;
};

/// A convex set isomorphic to d_k(1) with its top removed.
struct DkMinusSet {
  ElementSet members;
  Element bottom = 0;
  Element side_x = 0;
  Element side_y = 0;
  int k = 0;
};

/// Tests [v,u] against d_k(1): exactly one incomparable pair {x,y}, and the
/// remaining members split into equal chains above and below both sides.
inline std::optional<DkInterval> as_dk_interval(const Poset &p, Element v, Element u) {
  if (!p.lt(v, u))
    return std::nullopt;
  const ElementSet iv = p.interval(v, u);
  const int n = iv.size();
  if (n < 4 || n % 2 != 0)
    return std::nullopt;
  std::vector<Element> sides;
  bool bad = false;
  iv.for_each([&](Element a) {
    ElementSet inc = iv - p.up(a) - p.down(a);
    if (inc.empty())
      return;
    if (inc.size() != 1)
      bad = true;
    sides.push_back(a);
  });
  if (bad || sides.size() != 2)
    return std::nullopt;
  const Element x = sides[0], y = sides[1];
  ElementSet above_x = (iv & p.up(x)).without(x), above_y = (iv & p.up(y)).without(y);
  ElementSet below_x = (iv & p.down(x)).without(x), below_y = (iv & p.down(y)).without(y);
  const int tail = (n - 2) / 2;
  if (above_x != above_y || below_x != below_y || above_x.size() != tail || below_x.size() != tail)
    return std::nullopt;
  return DkInterval{v, u, x, y, tail + 2, iv};
}

/// Every d_k-interval of p, ordered by (bottom, top).
inline std::vector<DkInterval> find_dk_intervals(const Poset &p) {
  std::vector<DkInterval> out;
  for (Element v = 0; v < p.size(); ++v)
    p.up(v).without(v).for_each([&](Element u) {
      if (auto d = as_dk_interval(p, v, u))
        out.push_back(*d);
    });
  return out;
}

/// Anchored search: an incomparable pair {x,y}, a chain of k-3 elements
/// rising from a common upper cover, a chain of k-2 elements falling from a
/// common lower cover, then a convexity check.
inline std::vector<DkMinusSet> find_dk_minus_sets(const Poset &p) {
  std::vector<DkMinusSet> out;
  auto convex = [&](ElementSet s) {
    bool ok = true;
    s.for_each([&](Element a) {
      s.for_each([&](Element b) {
        if (ok && p.lt(a, b) && !p.interval(a, b).is_subset_of(s))
          ok = false;
      });
    });
    return ok;
  };
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y) {
      if (p.comparable(x, y))
        continue;
      const ElementSet pair{x, y};
      // Convex lower tails, grouped by length; a non-convex tail cannot be
      // repaired by extending it further down.
      std::vector<std::vector<std::pair<ElementSet, Element>>> lower; // (tail, bottom) by length
      std::function<void(ElementSet, Element, int)> down = [&](ElementSet tail, Element last, int len) {
        if (!convex(pair | tail))
          return;
        if (static_cast<int>(lower.size()) <= len)
          lower.resize(len + 1);
        lower[len].emplace_back(tail, last);
        p.lower_covers(last).for_each([&](Element t) { down(tail.with(t), t, len + 1); });
      };
      (p.lower_covers(x) & p.lower_covers(y)).for_each([&](Element w) { down(ElementSet{w}, w, 1); });
      if (lower.empty())
        continue;
      std::function<void(ElementSet, std::optional<Element>, int)> up =
          [&](ElementSet head, std::optional<Element> last, int len) {
            if (len + 1 >= static_cast<int>(lower.size()))
              return;
            for (const auto &[tail, bottom] : lower[len + 1]) {
              ElementSet s = pair | head | tail;
              if (convex(s))
                out.push_back(DkMinusSet{s, bottom, x, y, len + 3});
            }
            ElementSet next = last ? p.upper_covers(*last) : (p.upper_covers(x) & p.upper_covers(y));
            next.for_each([&](Element z) { up(head.with(z), z, len + 1); });
          };
      up(ElementSet{}, std::nullopt, 0);
    }
  return out;
}

/// One failed axiom instance.
struct Violation {
  std::string axiom; // "D1", "D2", "D3"
  ElementSet set;
  std::string detail;
};

struct DCompleteVerdict {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

inline std::string set_string(const Poset &p, ElementSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    if (!first)
      out += ",";
    first = false;
    out += p.label(e);
  });
  return out + "}";
}

inline DCompleteVerdict check_dcomplete(const Poset &p) {
  DCompleteVerdict verdict;
  const auto minus_sets = find_dk_minus_sets(p);
  for (const auto &m : minus_sets) {
    ElementSet tops = p.maximal_elements(m.members);
    ElementSet candidates = p.all();
    tops.for_each([&](Element t) { candidates &= p.upper_covers(t); });
    bool found = false;
    candidates.for_each([&](Element u) {
      if (!found && p.interval(m.bottom, u) == m.members.with(u))
        found = true;
    });
    if (!found)
      verdict.violations.push_back(
          {"D1", m.members,
           "d_" + std::to_string(m.k) + "^- convex set " + set_string(p, m.members) + " has no completing top"});
  }
  for (const auto &d : find_dk_intervals(p)) {
    ElementSet outside = p.lower_covers(d.top) - d.members;
    if (!outside.empty())
      verdict.violations.push_back({"D2", d.members,
                                    "top " + p.label(d.top) + " of d_" + std::to_string(d.k) + "-interval " +
                                        set_string(p, d.members) + " covers " + set_string(p, outside)});
  }
  std::map<ElementSet, std::vector<ElementSet>> by_upper;
  for (const auto &m : minus_sets) {
    auto &bucket = by_upper[m.members.without(m.bottom)];
    if (std::find(bucket.begin(), bucket.end(), m.members) == bucket.end())
      bucket.push_back(m.members);
  }
  for (const auto &[upper, sets] : by_upper)
    if (sets.size() > 1)
      verdict.violations.push_back({"D3", sets[0] | sets[1],
                                    "d^- convex sets " + set_string(p, sets[0]) + " and " + set_string(p, sets[1]) +
                                        " differ only in their minimal elements"});
  return verdict;
}

/// Elements x such that every y >= x has at most one upper cover.
inline ElementSet top_forest(const Poset &p) {
  ElementSet single;
  for (Element e = 0; e < p.size(); ++e)
    if (p.upper_covers(e).size() <= 1)
      single.insert(e);
  ElementSet out;
  for (Element e = 0; e < p.size(); ++e)
    if (p.up(e).is_subset_of(single))
      out.insert(e);
  return out;
}

/// Top-forest labels in breadth-first order from the maximal elements:
/// names "0", "1", ...
inline std::vector<std::pair<Element, std::string>> bfs_gamma_labels(const Poset &p) {
  const ElementSet gamma = top_forest(p);
  std::vector<std::pair<Element, std::string>> out;
  ElementSet seen;
  std::vector<Element> queue;
  p.maximal_elements().for_each([&](Element e) {
    if (gamma.contains(e)) {
      queue.push_back(e);
      seen.insert(e);
    }
  });
  for (std::size_t k = 0; k < queue.size(); ++k) {
    Element e = queue[k];
    out.emplace_back(e, std::to_string(out.size()));
    ((p.lower_covers(e) | p.upper_covers(e)) & gamma).for_each([&](Element f) {
      if (!seen.contains(f)) {
        seen.insert(f);
        queue.push_back(f);
      }
    });
  }
  return out;
}

/// Checks (C1)-(C5) exhaustively; returns one message per failure.
inline std::vector<std::string> coloring_failures(const ColoredPoset &cp) {
  const Poset &p = cp.poset;
  const ColorGraph &g = cp.colors();
  std::vector<std::string> fails;
  const int n = p.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (!p.comparable(a, b) && cp.color[a] == cp.color[b])
        fails.push_back("C1: incomparable " + p.label(a) + ", " + p.label(b) + " share a color");
  for (Element v = 0; v < n; ++v)
    p.up(v).for_each([&](Element u) {
      ElementSet iv = p.interval(v, u);
      bool chain = true;
      iv.for_each([&](Element a) {
        if (!iv.is_subset_of(p.up(a) | p.down(a)))
          chain = false;
      });
      if (!chain)
        return;
      std::set<Color> seen;
      iv.for_each([&](Element a) { seen.insert(cp.color[a]); });
      if (static_cast<int>(seen.size()) != iv.size())
        fails.push_back("C2: chain [" + p.label(v) + "," + p.label(u) + "] repeats a color");
    });
  for (const auto &d : find_dk_intervals(p))
    if (cp.color[d.bottom] != cp.color[d.top])
      fails.push_back("C3: d_k-interval [" + p.label(d.bottom) + "," + p.label(d.top) + "] has unequal end colors");
  for (auto [lo, hi] : p.cover_pairs())
    if (!g.adjacent(cp.color[lo], cp.color[hi]))
      fails.push_back("C4: cover " + p.label(lo) + " < " + p.label(hi) + " has non-adjacent colors");
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) {
      Color ca = cp.color[a], cb = cp.color[b];
      if ((ca == cb || g.adjacent(ca, cb)) && !p.comparable(a, b))
        fails.push_back("C5: " + p.label(a) + ", " + p.label(b) + " have related colors but are incomparable");
    }
  return fails;
}

inline void require_coloring(const ColoredPoset &cp) {
  auto fails = coloring_failures(cp);
  if (!fails.empty())
    throw ColoringFailed(fails.front());
}

/// Extends a bijective labeling of the top forest to all of p, top down:
/// an element outside the forest takes the color of the top of a d_k-interval
/// it is the bottom of. The color graph is the top forest itself, with colors
/// in the order the labels are given.
inline ColoredPoset compute_coloring(const Poset &p, const std::vector<std::pair<Element, std::string>> &gamma_labels) {
  const ElementSet gamma = top_forest(p);
  std::vector<std::string> names;
  std::vector<Color> color(p.size(), -1);
  ElementSet labelled;
  for (const auto &[e, name] : gamma_labels) {
    if (e < 0 || e >= p.size() || !gamma.contains(e))
      throw ColoringFailed("label given for element " + std::to_string(e) + ", which is not in the top forest");
    if (labelled.contains(e))
      throw ColoringFailed("element " + p.label(e) + " labelled twice");
    if (std::find(names.begin(), names.end(), name) != names.end())
      throw ColoringFailed("color name " + name + " used twice on the top forest");
    labelled.insert(e);
    color[e] = static_cast<Color>(names.size());
    names.push_back(name);
  }
  if (labelled != gamma)
    throw ColoringFailed("top-forest labeling is not bijective: " + set_string(p, gamma - labelled) + " unlabelled");

  std::vector<std::pair<Color, Color>> edges;
  for (auto [lo, hi] : p.cover_pairs())
    if (gamma.contains(lo) && gamma.contains(hi))
      edges.emplace_back(color[lo], color[hi]);

  const auto intervals = find_dk_intervals(p);
  std::vector<Element> ext = linear_extension(p);
  for (auto it = ext.rbegin(); it != ext.rend(); ++it) {
    Element y = *it;
    if (gamma.contains(y))
      continue;
    std::optional<Color> c;
    for (const auto &d : intervals) {
      if (d.bottom != y)
        continue;
      Color t = color[d.top];
      if (t < 0)
        throw ColoringFailed("top " + p.label(d.top) + " is uncolored when reaching " + p.label(y));
      if (c && *c != t)
        throw ColoringFailed("element " + p.label(y) + " is the bottom of d_k-intervals with different top colors");
      c = t;
    }
    if (!c)
      throw ColoringFailed("element " + p.label(y) + " is outside the top forest and bottoms no d_k-interval");
    color[y] = *c;
  }

  ColoredPoset cp;
  cp.poset = p;
  cp.color = std::move(color);
  cp.graph = std::make_shared<const ColorGraph>(ColorGraph::simply_laced(std::move(names), edges));
  cp.top_forest = gamma;
  cp.kind = "general";
  require_coloring(cp);
  return cp;
}

inline ColoredPoset compute_coloring(const Poset &p) { return compute_coloring(p, bfs_gamma_labels(p)); }

namespace detail {

/// Induced subposet of Z^2 with (i,j) >= (i',j') iff i <= i' and j <= j'.
inline Poset grid_poset(const std::vector<Cell> &cells) {
  std::vector<std::pair<Element, Element>> rel;
  const int n = static_cast<int>(cells.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && cells[b].i <= cells[a].i && cells[b].j <= cells[a].j)
        rel.emplace_back(a, b);
  Poset p = Poset::from_covers(n, rel);
  p.set_cells(cells);
  return p;
}

inline void check_partition(const std::vector<int> &lambda) {
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] <= 0)
      throw InvalidPartition("partition parts must be positive");
    if (k > 0 && lambda[k] > lambda[k - 1])
      throw InvalidPartition("partition parts must be weakly decreasing");
  }
}

inline void check_strict_partition(const std::vector<int> &mu) {
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (mu[k] <= 0)
      throw InvalidStrictPartition("strict partition parts must be positive");
    if (k > 0 && mu[k] >= mu[k - 1])
      throw InvalidStrictPartition("strict partition parts must be strictly decreasing");
  }
}

inline std::vector<Cell> shifted_cells(const std::vector<int> &mu) {
  std::vector<Cell> cells;
  for (int i = 1; i <= static_cast<int>(mu.size()); ++i)
    for (int j = i; j <= mu[i - 1] + i - 1; ++j)
      cells.push_back({i, j});
  return cells;
}

inline ColoredPoset finish(Poset p, std::vector<Color> color, ColorGraph g, std::string kind, std::vector<int> part) {
  ColoredPoset cp;
  cp.top_forest = top_forest(p);
  cp.poset = std::move(p);
  cp.color = std::move(color);
  cp.graph = std::make_shared<const ColorGraph>(std::move(g));
  cp.kind = std::move(kind);
  cp.partition = std::move(part);
  return cp;
}

} // namespace detail

/// Young diagram D(lambda), colored c(i,j) = j - i.
inline ColoredPoset build_shape(const std::vector<int> &lambda) {
  detail::check_partition(lambda);
  std::vector<Cell> cells;
  for (int i = 1; i <= static_cast<int>(lambda.size()); ++i)
    for (int j = 1; j <= lambda[i - 1]; ++j)
      cells.push_back({i, j});
  Poset p = detail::grid_poset(cells);
  const int lo = lambda.empty() ? 0 : 1 - static_cast<int>(lambda.size());
  const int hi = lambda.empty() ? -1 : lambda[0] - 1;
  std::vector<std::string> names;
  std::vector<std::pair<Color, Color>> edges;
  for (int c = lo; c <= hi; ++c) {
    names.push_back(std::to_string(c));
    if (c > lo)
      edges.emplace_back(c - lo - 1, c - lo);
  }
  std::vector<Color> color;
  for (const auto &c : cells)
    color.push_back(c.j - c.i - lo);
  ColoredPoset cp = detail::finish(std::move(p), std::move(color), ColorGraph::simply_laced(std::move(names), edges),
                                   "shape", lambda);
  require_coloring(cp);
  return cp;
}

/// Shifted diagram S(mu): diagonal cells colored 0 (odd row) or 0' (even
/// row), off-diagonal cells j - i. Color order 0, 0', 1, 2, ...
inline ColoredPoset build_shifted(const std::vector<int> &mu) {
  detail::check_strict_partition(mu);
  std::vector<Cell> cells = detail::shifted_cells(mu);
  Poset p = detail::grid_poset(cells);
  const int m = mu.empty() ? 0 : mu[0];
  const bool prime = mu.size() >= 2;
  std::vector<std::string> names;
  std::vector<std::pair<Color, Color>> edges;
  if (m > 0)
    names.push_back("0");
  if (prime)
    names.push_back("0'");
  const int off = prime ? 1 : 0; // color id of j-i = d >= 1 is d + off
  for (int d = 1; d < m; ++d) {
    names.push_back(std::to_string(d));
    if (d == 1) {
      edges.emplace_back(0, 1 + off);
      if (prime)
        edges.emplace_back(1, 1 + off);
    } else {
      edges.emplace_back(d - 1 + off, d + off);
    }
  }
  std::vector<Color> color;
  for (const auto &c : cells)
    color.push_back(c.i == c.j ? (c.i % 2 == 1 ? 0 : 1) : c.j - c.i + off);
  ColoredPoset cp = detail::finish(std::move(p), std::move(color), ColorGraph::simply_laced(std::move(names), edges),
                                   "shifted", mu);
  require_coloring(cp);
  return cp;
}

/// The 16-cell swivel, colored from its E_6 top tree in breadth-first order.
inline ColoredPoset build_swivel() {
  std::vector<Cell> cells;
  for (int j = 1; j <= 5; ++j)
    cells.push_back({1, j});
  for (int j = 3; j <= 5; ++j)
    cells.push_back({2, j});
  for (int j = 4; j <= 6; ++j)
    cells.push_back({3, j});
  for (int j = 4; j <= 8; ++j)
    cells.push_back({4, j});
  ColoredPoset cp = compute_coloring(detail::grid_poset(cells));
  cp.kind = "swivel";
  return cp;
}

/// Rooted tree given by (child, parent) cover pairs; every element is its own color.
inline ColoredPoset build_tree(int n, const std::vector<std::pair<Element, Element>> &covers) {
  if (n < 1)
    throw NotATree("a rooted tree needs at least one element");
  Poset p = Poset::from_covers(n, covers);
  int roots = 0;
  for (Element e = 0; e < n; ++e) {
    int ups = p.upper_covers(e).size();
    if (ups > 1)
      throw NotATree("element " + std::to_string(e) + " has more than one parent");
    roots += ups == 0;
  }
  if (roots != 1 || !p.is_connected())
    throw NotATree("cover relation is not a single rooted tree");
  if (static_cast<int>(p.cover_pairs().size()) != n - 1)
    throw NotATree("cover relation has redundant pairs");
  std::vector<std::string> names;
  std::vector<Color> color(n);
  for (Element e = 0; e < n; ++e) {
    names.push_back(std::to_string(e));
    color[e] = e;
  }
  std::vector<std::pair<Color, Color>> edges(p.cover_pairs().begin(), p.cover_pairs().end());
  ColoredPoset cp =
      detail::finish(std::move(p), std::move(color), ColorGraph::simply_laced(std::move(names), edges), "tree", {});
  require_coloring(cp);
  return cp;
}

/// Type-B Cartan matrix on colors 0..m-1: a_{01} = -2, a_{10} = -1, and
/// a_{i,i+1} = a_{i+1,i} = -1 for i >= 1.
inline ColorGraph type_b_graph(int m) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> a(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) {
    names.push_back(std::to_string(i));
    a[i][i] = 2;
    if (i + 1 < m) {
      a[i][i + 1] = i == 0 ? -2 : -1;
      a[i + 1][i] = -1;
    }
  }
  return ColorGraph(std::move(names), std::move(a));
}

/// Shifted diagram S(mu) as the heap of a dominant minuscule element of type
/// B_m: colors c'(i,j) = j - i, heap mode.
inline ColoredPoset build_shifted_typeB(const std::vector<int> &mu) {
  detail::check_strict_partition(mu);
  std::vector<Cell> cells = detail::shifted_cells(mu);
  Poset p = detail::grid_poset(cells);
  std::vector<Color> color;
  for (const auto &c : cells)
    color.push_back(c.j - c.i);
  ColoredPoset cp = detail::finish(std::move(p), std::move(color), type_b_graph(mu.empty() ? 0 : mu[0]),
                                   "shifted_typeB", mu);
  cp.mode = Mode::Heap;
  return cp;
}

/// Heap of a reduced word: positions are elements (position 0 minimal), and
/// an earlier position lies below a later one when their letters are equal or
/// adjacent.
inline ColoredPoset build_heap(const WeylWord &w) {
  if (!is_reduced(w))
    throw NonReducedInput("heap word " + to_string(w) + " is not reduced");
  const int n = w.length();
  if (n > kMaxElements)
    throw TooManyElements("heap word longer than " + std::to_string(kMaxElements));
  std::vector<std::pair<Element, Element>> rel;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!w.graph->commute(w.letters[a], w.letters[b]))
        rel.emplace_back(a, b);
  Poset p = Poset::from_covers(n, rel);
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a)
    labels.push_back(std::to_string(a) + ":" + w.graph->name(w.letters[a]));
  p.set_labels(labels);
  ColoredPoset cp;
  cp.top_forest = top_forest(p);
  cp.poset = std::move(p);
  cp.color = w.letters;
  cp.graph = w.graph;
  cp.kind = "heap";
  cp.mode = Mode::Heap;
  return cp;
}

/// Per-element hook exponent vectors over the frozen color order, and hook
/// lengths.
struct HookTable {
  std::vector<std::vector<int>> exponents;
  std::vector<int> lengths;

  friend bool operator==(const HookTable &, const HookTable &) = default;
};

/// Hook monomials by the recursion over d_k-intervals, processed from the
/// minimal elements up.
inline HookTable hook_table_dcomplete(const ColoredPoset &cp) {
  const Poset &p = cp.poset;
  const int r = cp.colors().size();
  const auto intervals = find_dk_intervals(p);
  HookTable t{std::vector<std::vector<int>>(p.size(), std::vector<int>(r, 0)), std::vector<int>(p.size(), 0)};
  for (Element u : linear_extension(p)) {
    const DkInterval *top = nullptr;
    for (const auto &d : intervals)
      if (d.top == u) {
        if (top)
          throw MultipleDkTops("element " + p.label(u) + " is the top of more than one d_k-interval");
        top = &d;
      }
    if (!top) {
      p.down(u).for_each([&](Element e) { ++t.exponents[u][cp.color[e]]; });
      t.lengths[u] = p.down(u).size();
      continue;
    }
    for (int i = 0; i < r; ++i) {
      int e = t.exponents[top->side_x][i] + t.exponents[top->side_y][i] - t.exponents[top->bottom][i];
      if (e < 0)
        throw NegativeExponent("hook monomial of " + p.label(u) + " has a negative exponent at color " +
                               cp.colors().name(i));
      t.exponents[u][i] = e;
    }
    t.lengths[u] = t.lengths[top->side_x] + t.lengths[top->side_y] - t.lengths[top->bottom];
  }
  return t;
}

/// Hook exponents as coordinates of the inversion roots beta(p).
inline HookTable hook_table_heap(const ColoredPoset &cp) {
  const auto beta = beta_roots(cp);
  const int r = cp.colors().size();
  HookTable t{std::vector<std::vector<int>>(cp.size(), std::vector<int>(r, 0)), std::vector<int>(cp.size(), 0)};
  for (Element e = 0; e < cp.size(); ++e)
    for (int i = 0; i < r; ++i) {
      if (!beta[e].coeffs[i].fits_sint_p())
        throw InternalError("hook exponent out of range");
      t.exponents[e][i] = static_cast<int>(beta[e].coeffs[i].get_si());
      t.lengths[e] += t.exponents[e][i];
    }
  return t;
}

/// Hook table in the mode cp is configured for.
inline HookTable hook_table(const ColoredPoset &cp) {
  return cp.mode == Mode::Heap ? hook_table_heap(cp) : hook_table_dcomplete(cp);
}

/// Classical hook of a Young-diagram cell: the cell, its arm and its leg.
inline ElementSet shape_hook_cells(const ColoredPoset &cp, Element e) {
  const auto &cells = cp.poset.cells();
  const Cell c = cells.at(e);
  ElementSet out;
  for (Element f = 0; f < cp.size(); ++f) {
    const Cell d = cells[f];
    if ((d.i == c.i && d.j >= c.j) || (d.j == c.j && d.i >= c.i))
      out.insert(f);
  }
  return out;
}

/// Shifted hook of cell (i,j): the cell, the cells right of it in row i,
/// below it in column j, and row j+1 right of column j. With type_b the row
/// j+1 part is dropped and, when i < j and (j,j) is a cell, (i,i) and row j
/// from column j on are added.
inline ElementSet shifted_hook_cells(const ColoredPoset &cp, Element e, bool type_b = false) {
  const auto &cells = cp.poset.cells();
  const Cell c = cells.at(e);
  const bool jj = cp.poset.find_cell({c.j, c.j}).has_value();
  ElementSet out;
  for (Element f = 0; f < cp.size(); ++f) {
    const Cell d = cells[f];
    bool in = (d == c) || (d.i == c.i && d.j > c.j) || (d.j == c.j && d.i > c.i);
    if (!type_b)
      in = in || (d.i == c.j + 1 && d.j > c.j);
    else if (c.i < c.j && jj)
      in = in || (d == Cell{c.i, c.i}) || (d.i == c.j && d.j >= c.j);
    if (in)
      out.insert(f);
  }
  return out;
}

} // namespace skewhook
