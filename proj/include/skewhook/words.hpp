#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "color_graph.hpp"
#include "error.hpp"
#include "roots.hpp"

namespace skewhook {

/// A word s_{i_1} ... s_{i_l} in simple reflections over a shared ColorGraph.
struct WeylWord {
  std::vector<Color> letters;
  std::shared_ptr<const ColorGraph> graph;

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const WeylWord &a, const WeylWord &b) {
    return a.letters == b.letters && (a.graph == b.graph || *a.graph == *b.graph);
  }
};

inline std::string to_string(const WeylWord &w) {
  if (w.letters.empty())
    return "e";
  std::string out;
  for (Color c : w.letters) {
    if (!out.empty())
      out += " ";
    out += "s_" + w.graph->name(c);
  }
  return out;
}

namespace detail {

/// u^{-1}(alpha_i) for u = s_{l_0} ... s_{l_{m-1}}: apply s_{l_0} first.
inline RootVec inverse_image_of_simple(const ColorGraph &g, const std::vector<Color> &letters, Color i) {
  RootVec r = RootVec::simple(g.size(), i);
  for (Color c : letters)
    reflect_in_place(g, c, r);
  return r;
}

inline bool descent_unchecked(const ColorGraph &g, const std::vector<Color> &letters, Color i) {
  return inverse_image_of_simple(g, letters, i).is_negative();
}

} // namespace detail

/// True iff no letter, read right to left, is a left descent of the suffix
/// that follows it; equivalently l(w) equals the word length.
inline bool is_reduced(const WeylWord &w) {
  const ColorGraph &g = *w.graph;
  std::vector<Color> suffix;
  suffix.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (detail::descent_unchecked(g, suffix, *it))
      return false;
    suffix.insert(suffix.begin(), *it);
  }
  return true;
}

/// l(s_i w) = l(w) - 1, decided by the sign of w^{-1}(alpha_i).
inline bool is_descent_left(const WeylWord &w, Color i) {
  if (!is_reduced(w))
    throw NonReducedInput("descent test needs a reduced word, got " + to_string(w));
  return detail::descent_unchecked(*w.graph, w.letters, i);
}

/// Reduced word of the Demazure product s_{i_1} * ... * s_{i_l}. Letters are
/// folded right to left: a letter that is already a left descent is absorbed.
inline WeylWord demazure_word(const WeylWord &w) {
  const ColorGraph &g = *w.graph;
  std::vector<Color> acc;
  acc.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    if (!detail::descent_unchecked(g, acc, *it))
      acc.insert(acc.begin(), *it);
  return WeylWord{std::move(acc), w.graph};
}

/// Cartier-Foata normal form: repeatedly emit, in color order, every letter
/// with no earlier letter that it fails to commute with. Two words related by
/// commutation moves normalize to the same word.
inline WeylWord normal_form(const WeylWord &w) {
  const ColorGraph &g = *w.graph;
  std::vector<Color> rest = w.letters;
  std::vector<Color> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::vector<bool> take(rest.size(), false);
    std::vector<Color> layer;
    for (std::size_t k = 0; k < rest.size(); ++k) {
      bool free = true;
      for (std::size_t j = 0; j < k && free; ++j)
        if (!g.commute(rest[j], rest[k]))
          free = false;
      if (free) {
        take[k] = true;
        layer.push_back(rest[k]);
      }
    }
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Color> next;
    for (std::size_t k = 0; k < rest.size(); ++k)
      if (!take[k])
        next.push_back(rest[k]);
    rest = std::move(next);
  }
  return WeylWord{std::move(out), w.graph};
}

/// Image of a root under the group element w (rightmost letter acts first).
inline RootVec apply(const WeylWord &w, RootVec r) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    reflect_in_place(*w.graph, *it, r);
  return r;
}

} // namespace skewhook
