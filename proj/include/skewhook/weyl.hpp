#pragma once

#include <vector>

#include "colored_poset.hpp"
#include "error.hpp"
#include "roots.hpp"
#include "words.hpp"

namespace skewhook {

/// w_D = s(p_{i_1}) ... s(p_{i_r}): colors of D's members in extension order.
inline WeylWord word_for_subset(const ColoredPoset &cp, ElementSet d, const std::vector<Element> &ext) {
  WeylWord w{{}, cp.graph};
  for (Element e : ext)
    if (d.contains(e))
      w.letters.push_back(cp.color[e]);
  return w;
}

inline WeylWord word_for_subset(const ColoredPoset &cp, ElementSet d) {
  return word_for_subset(cp, d, linear_extension(cp.poset));
}

/// w*_D, the Demazure product of the letters of w_D.
inline WeylWord demazure_word_for_subset(const ColoredPoset &cp, ElementSet d) {
  return demazure_word(word_for_subset(cp, d));
}

namespace detail {

inline std::vector<RootVec> beta_roots_along(const ColoredPoset &cp, const std::vector<Element> &ext) {
  const ColorGraph &g = cp.colors();
  std::vector<RootVec> beta(cp.size());
  for (std::size_t k = 0; k < ext.size(); ++k) {
    RootVec r = RootVec::simple(g.size(), cp.color[ext[k]]);
    for (std::size_t j = k; j-- > 0;)
      reflect_in_place(g, cp.color[ext[j]], r);
    beta[ext[k]] = std::move(r);
  }
  return beta;
}

} // namespace detail

/// beta(p_k) = s(p_1) ... s(p_{k-1}) alpha(p_k), indexed by element. The
/// result is recomputed along a second linear extension and must agree.
inline std::vector<RootVec> beta_roots(const ColoredPoset &cp, const std::vector<Element> &ext) {
  std::vector<RootVec> beta = detail::beta_roots_along(cp, ext);
  std::vector<RootVec> other = detail::beta_roots_along(cp, linear_extension(cp.poset, false));
  if (beta != other)
    throw InternalError("inversion roots depend on the linear extension; the word is not fully commutative");
  for (const auto &r : beta)
    if (!r.is_nonnegative())
      throw InternalError("inversion root with a negative coordinate; the word is not reduced");
  return beta;
}

inline std::vector<RootVec> beta_roots(const ColoredPoset &cp) {
  return beta_roots(cp, linear_extension(cp.poset));
}

} // namespace skewhook
