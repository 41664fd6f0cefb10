#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "colored_poset.hpp"
#include "dcomplete.hpp"
#include "error.hpp"

namespace skewhook {

/// A diagram D together with its excited peaks B(D).
struct ExcitedState {
  ElementSet diagram;
  ElementSet peaks;

  friend bool operator==(const ExcitedState &, const ExcitedState &) = default;
};

/// A K-theoretical excited diagram E = D + S with S inside B(D).
struct KExcitedDiagram {
  ElementSet diagram;
  ElementSet ordinary; // D
  ElementSet extra;    // S

  friend bool operator==(const KExcitedDiagram &, const KExcitedDiagram &) = default;
};

/// An active element u with the bottom v it would move to.
struct ActiveMove {
  Element u = 0;
  Element v = 0;
  friend bool operator==(const ActiveMove &, const ActiveMove &) = default;
};

inline ElementSet neighbors_N(const ColoredPoset &cp, Color i) { return cp.neighbors_of_color(i); }

/// Precomputed bottoms of the excitation intervals of each element, plus the
/// sets N_i. In d-complete mode the bottom of u is the bottom of the
/// d_k-interval with top u; in heap mode it is the next element of the same
/// color below u.
class Exciter {
public:
  explicit Exciter(const ColoredPoset &cp) : cp_(&cp) {
    const Poset &p = cp.poset;
    bottom_.assign(p.size(), std::nullopt);
    if (cp.mode == Mode::DComplete) {
      for (const auto &d : find_dk_intervals(p)) {
        if (bottom_[d.top])
          throw MultipleDkTops("element " + p.label(d.top) + " is the top of more than one d_k-interval");
        bottom_[d.top] = d.bottom;
      }
    } else {
      for (Element u = 0; u < p.size(); ++u) {
        ElementSet below = cp.with_color(p.down(u).without(u), cp.color[u]);
        ElementSet next = p.maximal_elements(below);
        if (next.size() > 1)
          throw InternalError("same-colored elements below " + p.label(u) + " are incomparable");
        if (!next.empty())
          bottom_[u] = next.first();
      }
    }
    for (Color i = 0; i < cp.colors().size(); ++i)
      n_.push_back(cp.neighbors_of_color(i));
  }

  const ColoredPoset &colored() const { return *cp_; }
  std::optional<Element> bottom(Element u) const { return bottom_[u]; }
  ElementSet neighbors(Color i) const { return n_[i]; }

  /// u in D is active when its bottom v lies outside D and
  /// [v,u] ∩ D ∩ N_{c(u)} is empty.
  std::vector<ActiveMove> active(ElementSet d) const {
    std::vector<ActiveMove> out;
    d.for_each([&](Element u) {
      auto v = bottom_[u];
      if (!v || d.contains(*v))
        return;
      if ((cp_->poset.interval(*v, u) & d & n_[cp_->color[u]]).empty())
        out.push_back({u, *v});
    });
    return out;
  }

  std::optional<Element> active_bottom(ElementSet d, Element u) const {
    for (const auto &m : active(d))
      if (m.u == u)
        return m.v;
    return std::nullopt;
  }

  /// B(alpha_u(D)) = (B(D) minus ([v,u] ∩ N_{c(u)})) plus u.
  ElementSet next_peaks(ElementSet peaks, Element u, Element v) const {
    return (peaks - (cp_->poset.interval(v, u) & n_[cp_->color[u]])).with(u);
  }

  /// Elements x with some y in D of the same color, y < x and
  /// [y,x] ∩ D ∩ N_{c(x)} empty, restricted to `within`.
  ElementSet peak_set(ElementSet d, ElementSet within) const {
    const Poset &p = cp_->poset;
    ElementSet out;
    within.for_each([&](Element x) {
      const Color c = cp_->color[x];
      ElementSet ys = cp_->with_color(d & p.down(x).without(x), c);
      bool hit = false;
      ys.for_each([&](Element y) {
        if (!hit && (p.interval(y, x) & d & n_[c]).empty())
          hit = true;
      });
      if (hit)
        out.insert(x);
    });
    return out;
  }

private:
  const ColoredPoset *cp_;
  std::vector<std::optional<Element>> bottom_;
  std::vector<ElementSet> n_;
};

inline std::vector<ActiveMove> active_elements(const ColoredPoset &cp, ElementSet d) { return Exciter(cp).active(d); }

/// Shifted type-B cell rules: (i,j) in D is active when (i,j+1), (i+1,j),
/// (i+1,j+1) are cells outside D (for i = j: (i,i+1), (i+1,i+1)); it moves
/// to (i+1,j+1).
inline std::vector<ActiveMove> active_elements_typeB_cells(const ColoredPoset &cp, ElementSet d) {
  const Poset &p = cp.poset;
  auto outside = [&](int i, int j) {
    auto e = p.find_cell({i, j});
    return e && !d.contains(*e);
  };
  std::vector<ActiveMove> out;
  d.for_each([&](Element u) {
    const Cell c = p.cells()[u];
    bool ok = outside(c.i, c.j + 1) && outside(c.i + 1, c.j + 1);
    if (c.i < c.j)
      ok = ok && outside(c.i + 1, c.j);
    if (ok)
      out.push_back({u, *p.find_cell({c.i + 1, c.j + 1})});
  });
  return out;
}

/// Type-B peak update: drop (i,j+1) and, off the diagonal, (i+1,j); add (i,j).
inline ElementSet next_peaks_typeB_cells(const ColoredPoset &cp, ElementSet peaks, Element u) {
  const Poset &p = cp.poset;
  const Cell c = p.cells()[u];
  if (auto e = p.find_cell({c.i, c.j + 1}))
    peaks.erase(*e);
  if (c.i < c.j)
    if (auto e = p.find_cell({c.i + 1, c.j}))
      peaks.erase(*e);
  return peaks.with(u);
}

inline ExcitedState excite(const Exciter &ex, const ExcitedState &s, Element u) {
  auto v = ex.active_bottom(s.diagram, u);
  if (!v)
    throw NotActive("element " + ex.colored().poset.label(u) + " is not active");
  return {s.diagram.without(u).with(*v), ex.next_peaks(s.peaks, u, *v)};
}

inline ExcitedState excite(const ColoredPoset &cp, const ExcitedState &s, Element u) {
  return excite(Exciter(cp), s, u);
}

inline void require_filter(const Poset &p, ElementSet f) {
  if (!f.is_subset_of(p.all()) || !is_order_filter(p, f))
    throw NotAFilter(set_string(p, f) + " is not an order filter");
}

namespace detail {

inline bool typeB_cells_apply(const ColoredPoset &cp) { return cp.kind == "shifted_typeB" && cp.poset.has_cells(); }

inline bool same_moves(std::vector<ActiveMove> a, std::vector<ActiveMove> b) {
  auto key = [](const ActiveMove &m) { return std::pair{m.u, m.v}; };
  auto cmp = [&](const ActiveMove &x, const ActiveMove &y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), cmp);
  std::sort(b.begin(), b.end(), cmp);
  return a == b;
}

} // namespace detail

/// All excited diagrams of F with their peaks, sorted by diagram. Reaching
/// the same diagram twice with different peaks raises PeakMismatch. For the
/// shifted type-B heap the cell rules are run alongside and must agree.
inline std::vector<ExcitedState> enumerate_excited(const ColoredPoset &cp, ElementSet f) {
  require_filter(cp.poset, f);
  const Exciter ex(cp);
  const bool cells = detail::typeB_cells_apply(cp);
  std::map<ElementSet, ElementSet> seen{{f, ElementSet{}}};
  std::deque<ExcitedState> queue{{f, ElementSet{}}};
  while (!queue.empty()) {
    ExcitedState s = queue.front();
    queue.pop_front();
    auto moves = ex.active(s.diagram);
    if (cells && !detail::same_moves(moves, active_elements_typeB_cells(cp, s.diagram)))
      throw InternalError("type-B cell rules disagree with the interval rule at " +
                          set_string(cp.poset, s.diagram));
    for (const auto &m : moves) {
      ExcitedState t{s.diagram.without(m.u).with(m.v), ex.next_peaks(s.peaks, m.u, m.v)};
      if (cells && next_peaks_typeB_cells(cp, s.peaks, m.u) != t.peaks)
        throw InternalError("type-B peak rule disagrees with the interval rule at " +
                            set_string(cp.poset, t.diagram));
      auto [it, fresh] = seen.emplace(t.diagram, t.peaks);
      if (fresh)
        queue.push_back(t);
      else if (it->second != t.peaks)
        throw PeakMismatch("diagram " + set_string(cp.poset, t.diagram) + " reached with peaks " +
                           set_string(cp.poset, it->second) + " and " + set_string(cp.poset, t.peaks));
    }
  }
  std::vector<ExcitedState> out;
  for (const auto &[d, b] : seen)
    out.push_back({d, b});
  return out;
}

/// Non-recursive peak set of an excited diagram D.
inline ElementSet peaks_direct(const ColoredPoset &cp, ElementSet d) {
  return Exciter(cp).peak_set(d, cp.poset.all());
}

/// S(E): members x of E with some y in E of the same color, y < x and
/// [y,x] ∩ E ∩ N_{c(x)} empty.
inline ElementSet extra_part(const Exciter &ex, ElementSet e) { return ex.peak_set(e, e); }

/// Splits E into (D, S) with D = E minus S(E); checks D is an excited diagram
/// of F and S lies inside B(D).
inline KExcitedDiagram split_k_excited(const ColoredPoset &cp, ElementSet f, ElementSet e,
                                       const std::vector<ExcitedState> &excited) {
  const Exciter ex(cp);
  ElementSet s = extra_part(ex, e);
  ElementSet d = e - s;
  auto it = std::find_if(excited.begin(), excited.end(), [&](const ExcitedState &x) { return x.diagram == d; });
  if (it == excited.end())
    throw NotKExcited(set_string(cp.poset, e) + " minus S(E) is not an excited diagram of " +
                      set_string(cp.poset, f));
  if (!s.is_subset_of(it->peaks))
    throw NotKExcited("S(E) of " + set_string(cp.poset, e) + " is not inside the peaks of its ordinary part");
  return {e, d, s};
}

inline KExcitedDiagram split_k_excited(const ColoredPoset &cp, ElementSet f, ElementSet e) {
  return split_k_excited(cp, f, e, enumerate_excited(cp, f));
}

/// Closure of F under ordinary moves (replace u by v) and K-theoretical moves
/// (add v, keep u). Each result is split into (D, S); the split must be a
/// bijection onto pairs (D, S inside B(D)).
inline std::vector<KExcitedDiagram> enumerate_k_excited(const ColoredPoset &cp, ElementSet f) {
  require_filter(cp.poset, f);
  const Exciter ex(cp);
  std::set<ElementSet> seen{f};
  std::deque<ElementSet> queue{f};
  while (!queue.empty()) {
    ElementSet e = queue.front();
    queue.pop_front();
    for (const auto &m : ex.active(e))
      for (ElementSet t : {e.without(m.u).with(m.v), e.with(m.v)})
        if (seen.insert(t).second)
          queue.push_back(t);
  }
  const auto excited = enumerate_excited(cp, f);
  std::vector<KExcitedDiagram> out;
  std::set<std::pair<ElementSet, ElementSet>> pairs;
  for (ElementSet e : seen) {
    out.push_back(split_k_excited(cp, f, e, excited));
    pairs.emplace(out.back().ordinary, out.back().extra);
  }
  std::size_t expected = 0;
  for (const auto &s : excited)
    expected += std::size_t{1} << s.peaks.size();
  if (pairs.size() != out.size() || out.size() != expected)
    throw InternalError("K-theoretical excited diagrams do not decompose as D + S with S inside B(D)");
  return out;
}

} // namespace skewhook
