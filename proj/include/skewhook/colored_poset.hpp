#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "color_graph.hpp"
#include "poset.hpp"

namespace skewhook {

/// How excitations and hooks are computed on a colored poset.
///  - DComplete: d_k-intervals and hook monomials by the side/bottom recursion.
///  - Heap: same-color consecutive intervals and hooks from inversion roots;
///    the only option for multiply-laced Cartan data.
enum class Mode { DComplete, Heap };

/// A poset together with a coloring c : P -> I and the Cartan data of I.
struct ColoredPoset {
  Poset poset;
  std::vector<Color> color;
  std::shared_ptr<const ColorGraph> graph;
  ElementSet top_forest;
  Mode mode = Mode::DComplete;

  /// Builder that produced this instance ("shape", "shifted", "swivel",
  /// "tree", "shifted_typeB", "general", "heap").
  std::string kind;
  /// The (strict) partition for shape-like builders, empty otherwise.
  std::vector<int> partition;

  int size() const { return poset.size(); }
  const ColorGraph &colors() const { return *graph; }
  Color color_of(Element e) const { return color[e]; }

  /// Color i_P of the maximum element; empty when there is no unique maximum.
  std::optional<Color> max_color() const {
    ElementSet m = poset.maximal_elements();
    if (m.size() != 1)
      return std::nullopt;
    return color[m.first()];
  }

  /// D_i = { x in D : c(x) = i }
  ElementSet with_color(ElementSet d, Color i) const {
    ElementSet out;
    d.for_each([&](Element e) {
      if (color[e] == i)
        out.insert(e);
    });
    return out;
  }

  /// N_i = { x : c(x) adjacent to i }
  ElementSet neighbors_of_color(Color i) const {
    ElementSet out;
    for (Element e = 0; e < size(); ++e)
      if (graph->adjacent(color[e], i))
        out.insert(e);
    return out;
  }
};

/// Same poset and coloring, excitations and hooks computed in heap mode.
inline ColoredPoset as_heap(ColoredPoset cp) {
  cp.mode = Mode::Heap;
  return cp;
}

} // namespace skewhook
