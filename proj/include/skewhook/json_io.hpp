#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dcomplete.hpp"
#include "error.hpp"
#include "excitation.hpp"
#include "poly.hpp"

namespace skewhook {

using json = nlohmann::json;

/// Parses text as JSON, or reads it from a file when it does not start like JSON.
inline json read_json_arg(const std::string &arg) {
  std::string text = arg;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw InputError("empty JSON argument");
  if (text[first] != '{' && text[first] != '[') {
    std::ifstream in(arg);
    if (!in)
      throw InputError("cannot open " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception &e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline json poset_to_json(const Poset &p) {
  json covers = json::array();
  for (auto [lo, hi] : p.cover_pairs())
    covers.push_back({lo, hi});
  json out{{"n", p.size()}, {"covers", covers}};
  if (!p.labels().empty())
    out["labels"] = p.labels();
  return out;
}

inline Poset poset_from_json(const json &j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<std::pair<Element, Element>> covers;
    for (const auto &c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2)
        throw InputError("each cover must be a pair [lower, upper]");
      covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    Poset p = Poset::from_covers(n, covers);
    if (j.contains("labels"))
      p.set_labels(j.at("labels").get<std::vector<std::string>>());
    return p;
  } catch (const json::exception &e) {
    throw InputError(std::string("bad poset JSON: ") + e.what());
  }
}

namespace detail {

inline std::vector<int> parts_from_json(const json &j) {
  if (!j.is_array())
    throw InputError("partition must be an array of integers");
  std::vector<int> out;
  for (const auto &x : j) {
    if (!x.is_number_integer())
      throw InputError("partition must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

/// Cartan matrix given explicitly, or simply-laced from "edges".
inline ColorGraph graph_from_json(const json &j) {
  auto names = j.at("colors").get<std::vector<std::string>>();
  if (j.contains("cartan"))
    return ColorGraph(names, j.at("cartan").get<std::vector<std::vector<int>>>(), true);
  auto index = [&](const json &x) -> Color {
    if (x.is_number_integer())
      return x.get<int>();
    auto it = std::find(names.begin(), names.end(), x.get<std::string>());
    if (it == names.end())
      throw InputError("unknown color " + x.dump() + " in edges");
    return static_cast<Color>(it - names.begin());
  };
  std::vector<std::pair<Color, Color>> edges;
  for (const auto &e : j.value("edges", json::array())) {
    const Color a = index(e.at(0)), b = index(e.at(1));
    if (a < 0 || b < 0 || a >= static_cast<int>(names.size()) || b >= static_cast<int>(names.size()) || a == b)
      throw InputError("bad edge " + e.dump());
    edges.emplace_back(a, b);
  }
  return ColorGraph::simply_laced(names, edges);
}

inline Color color_from_json(const ColorGraph &g, const json &x) {
  if (x.is_number_integer()) {
    int c = x.get<int>();
    if (c < 0 || c >= g.size())
      throw InputError("color index " + std::to_string(c) + " out of range");
    return c;
  }
  if (auto c = g.find(x.get<std::string>()))
    return *c;
  throw InputError("unknown color " + x.dump());
}

} // namespace detail

/// Builds a colored poset from a builder spec: {"shape":[..]}, {"shifted":[..]},
/// {"swivel":true}, {"tree":{"n":..,"covers":[[child,parent],..]}},
/// {"shifted_typeB":[..]}, {"general":{poset, "gamma_labels":{id:name}}},
/// {"heap":{"word":[..], "colors":[..], "cartan" or "edges"}}. A bare poset
/// {"n":..,"covers":..} is treated as "general" with breadth-first labels.
inline ColoredPoset colored_poset_from_json(const json &j) {
  try {
    if (!j.is_object())
      throw InputError("poset spec must be a JSON object");
    if (j.contains("shape"))
      return build_shape(detail::parts_from_json(j.at("shape")));
    if (j.contains("shifted"))
      return build_shifted(detail::parts_from_json(j.at("shifted")));
    if (j.contains("shifted_typeB"))
      return build_shifted_typeB(detail::parts_from_json(j.at("shifted_typeB")));
    if (j.contains("swivel"))
      return build_swivel();
    if (j.contains("tree")) {
      const json &t = j.at("tree");
      std::vector<std::pair<Element, Element>> covers;
      for (const auto &c : t.at("covers"))
        covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
      return build_tree(t.at("n").get<int>(), covers);
    }
    if (j.contains("heap")) {
      const json &h = j.at("heap");
      auto g = std::make_shared<const ColorGraph>(detail::graph_from_json(h));
      WeylWord w{{}, g};
      for (const auto &x : h.at("word"))
        w.letters.push_back(detail::color_from_json(*g, x));
      return build_heap(w);
    }
    const json &gj = j.contains("general") ? j.at("general") : j;
    Poset p = poset_from_json(gj);
    const auto verdict = check_dcomplete(p);
    if (!verdict.ok())
      throw ColoringFailed("poset is not d-complete: " + verdict.violations.front().detail);
    if (!gj.contains("gamma_labels"))
      return compute_coloring(p);
    std::vector<std::pair<Element, std::string>> labels;
    for (const auto &[k, v] : gj.at("gamma_labels").items())
      labels.emplace_back(std::stoi(k), v.get<std::string>());
    std::sort(labels.begin(), labels.end());
    return compute_coloring(p, labels);
  } catch (const json::exception &e) {
    throw InputError(std::string("bad poset spec: ") + e.what());
  } catch (const std::invalid_argument &) {
    throw InputError("gamma_labels keys must be element ids");
  }
}

/// Resolves a filter spec: a sub-partition (shape-like posets only),
/// {"elements":[ids]} or {"cells":[[i,j],..]}. The result must be an order filter.
inline ElementSet filter_from_json(const ColoredPoset &cp, const json &j) {
  const Poset &p = cp.poset;
  ElementSet f;
  try {
    if (j.is_array()) {
      if (cp.partition.empty() || !p.has_cells())
        throw InputError("sub-partition filters need a shape or shifted-shape poset");
      std::vector<int> mu = detail::parts_from_json(j);
      const bool shifted = cp.kind != "shape";
      for (int i = 1; i <= static_cast<int>(mu.size()); ++i)
        for (int k = 1; k <= mu[i - 1]; ++k) {
          Cell c = shifted ? Cell{i, i + k - 1} : Cell{i, k};
          auto e = p.find_cell(c);
          if (!e)
            throw NotAFilter("sub-partition is not contained in the poset's shape");
          f.insert(*e);
        }
    } else if (j.contains("elements")) {
      for (const auto &x : j.at("elements")) {
        int e = x.get<int>();
        if (e < 0 || e >= p.size())
          throw InputError("filter element " + std::to_string(e) + " out of range");
        f.insert(e);
      }
    } else if (j.contains("cells")) {
      for (const auto &c : j.at("cells")) {
        auto e = p.find_cell({c.at(0).get<int>(), c.at(1).get<int>()});
        if (!e)
          throw InputError("filter cell " + c.dump() + " is not in the poset");
        f.insert(*e);
      }
    } else {
      throw InputError("filter spec must be a sub-partition, {\"elements\":..} or {\"cells\":..}");
    }
  } catch (const json::exception &e) {
    throw InputError(std::string("bad filter spec: ") + e.what());
  }
  require_filter(p, f);
  return f;
}

inline json set_to_json(ElementSet s) { return s.to_vector(); }

inline json state_to_json(const ExcitedState &s) {
  return {{"diagram", set_to_json(s.diagram)}, {"peaks", set_to_json(s.peaks)}};
}

inline ExcitedState state_from_json(const json &j) {
  return {ElementSet::of(j.at("diagram").get<std::vector<int>>()),
          ElementSet::of(j.at("peaks").get<std::vector<int>>())};
}

inline json exponent_to_json(const Exponent &e, const std::vector<std::string> &names) {
  json out = json::object();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0)
      out[names[i]] = e[i];
  return out;
}

inline Exponent exponent_from_json(const json &j, const std::vector<std::string> &names) {
  Exponent e(names.size(), 0);
  for (const auto &[k, v] : j.items()) {
    auto it = std::find(names.begin(), names.end(), k);
    if (it == names.end())
      throw InputError("unknown variable " + k);
    e[it - names.begin()] = v.get<int>();
  }
  return e;
}

/// {element: {color: exponent}}
inline json hook_table_to_json(const ColoredPoset &cp, const HookTable &t) {
  json out = json::object();
  for (Element e = 0; e < cp.size(); ++e)
    out[std::to_string(e)] = exponent_to_json(t.exponents[e], cp.colors().names());
  return out;
}

inline json poly_to_json(const SparsePoly &p, const std::vector<std::string> &names) {
  json terms = json::array();
  for (const auto &[e, c] : p.terms())
    terms.push_back({{"exp", exponent_to_json(e, names)}, {"coef", c.get_str()}});
  return {{"terms", terms}};
}

inline SparsePoly poly_from_json(const json &j, const std::vector<std::string> &names) {
  SparsePoly p(static_cast<int>(names.size()));
  for (const auto &t : j.at("terms"))
    p.add_term(exponent_from_json(t.at("exp"), names), mpz_class(t.at("coef").get<std::string>()));
  return p;
}

inline json rational_to_json(const RationalFn &r, const std::vector<std::string> &names) {
  json den = json::array();
  for (const auto &m : r.denominator)
    den.push_back(exponent_to_json(m, names));
  return {{"numerator", poly_to_json(r.numerator, names)}, {"denominator", den}};
}

} // namespace skewhook
