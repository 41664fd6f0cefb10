#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "colored_poset.hpp"
#include "dcomplete.hpp"
#include "error.hpp"
#include "excitation.hpp"
#include "poly.hpp"

namespace skewhook {

/// Outcome of an identity check; `detail` names the first discrepancy.
struct Verdict {
  bool ok = true;
  std::string detail;
};

/// z[D] = product of z_{c(v)} over v in D.
inline Exponent color_content(const ColoredPoset &cp, ElementSet d) {
  Exponent e(cp.colors().size(), 0);
  d.for_each([&](Element v) { ++e[cp.color[v]]; });
  return e;
}

/// Sum of z^sigma over (P minus F)-partitions sigma of total degree <= cap,
/// by depth-first search from the top: each element takes a value at least
/// the largest value above it.
inline TruncSeries lhs_series(const ColoredPoset &cp, ElementSet f, int cap) {
  require_filter(cp.poset, f);
  const Poset &p = cp.poset;
  const ElementSet rest = p.all() - f;
  std::vector<Element> order;
  for (Element e : linear_extension(p))
    if (rest.contains(e))
      order.insert(order.begin(), e); // maximal first
  const int r = cp.colors().size();
  SparsePoly out(r);
  std::vector<int> value(p.size(), 0);
  Exponent mono(r, 0);
  std::function<void(std::size_t, int)> dfs = [&](std::size_t k, int used) {
    if (k == order.size()) {
      out.add_term(mono, 1);
      return;
    }
    const Element x = order[k];
    int lo = 0;
    (p.up(x).without(x) & rest).for_each([&](Element y) { lo = std::max(lo, value[y]); });
    // every element still to come below x needs at least the same value
    const int below = (p.down(x) & rest).size();
    for (int s = lo; used + s * below <= cap; ++s) {
      value[x] = s;
      mono[cp.color[x]] += s;
      dfs(k + 1, used + s);
      mono[cp.color[x]] -= s;
    }
    value[x] = 0;
  };
  dfs(0, 0);
  return {out, cap, {}};
}

/// z^{H(v)} for every v.
inline std::vector<Exponent> hook_exponents(const ColoredPoset &cp) { return hook_table(cp).exponents; }

/// Sum over excited diagrams D of prod_{B(D)} z^H prod_{D} (1 - z^H), over the
/// common denominator prod_{v in P} (1 - z^{H(v)}).
inline RationalFn rhs_rational(const ColoredPoset &cp, const std::vector<ExcitedState> &excited,
                               const std::vector<Exponent> &hooks) {
  const int r = cp.colors().size();
  RationalFn out{SparsePoly(r), {}};
  for (const auto &s : excited) {
    SparsePoly term = SparsePoly::one(r);
    s.peaks.for_each([&](Element v) { term *= SparsePoly::monomial(hooks[v]); });
    s.diagram.for_each([&](Element v) { term *= SparsePoly::one_minus(hooks[v]); });
    out.numerator += term;
  }
  for (Element v = 0; v < cp.size(); ++v)
    out.denominator.push_back(hooks[v]);
  return out;
}

inline RationalFn rhs_rational(const ColoredPoset &cp, ElementSet f) {
  return rhs_rational(cp, enumerate_excited(cp, f), hook_exponents(cp));
}

/// sum over K-theoretical E of (-1)^{#E - #F} prod_{p in E} (1 - z^{H(p)})
inline SparsePoly billey_localization(const ColoredPoset &cp, ElementSet f,
                                      const std::vector<KExcitedDiagram> &kexcited,
                                      const std::vector<Exponent> &hooks) {
  const int r = cp.colors().size();
  SparsePoly out(r);
  for (const auto &e : kexcited) {
    SparsePoly term = SparsePoly::one(r);
    e.diagram.for_each([&](Element v) { term *= SparsePoly::one_minus(hooks[v]); });
    out += (e.diagram.size() - f.size()) % 2 == 0 ? term : -term;
  }
  return out;
}

inline SparsePoly billey_localization(const ColoredPoset &cp, ElementSet f) {
  return billey_localization(cp, f, enumerate_k_excited(cp, f), hook_exponents(cp));
}

/// sum over excited D of prod_{p in D} (1 - z^{H(p)}) prod_{p in B(D)} z^{H(p)}
inline SparsePoly excited_peak_sum(const ColoredPoset &cp, const std::vector<ExcitedState> &excited,
                                   const std::vector<Exponent> &hooks) {
  return rhs_rational(cp, excited, hooks).numerator;
}

inline std::string exponent_string(const ColoredPoset &cp, const Exponent &e) {
  return monomial_string(e, cp.colors().names());
}

/// Expanded right-hand side against the brute-force left-hand side up to cap.
inline Verdict verify_main_theorem(const ColoredPoset &cp, ElementSet f, int cap) {
  const TruncSeries lhs = lhs_series(cp, f, cap);
  const TruncSeries rhs = expand(rhs_rational(cp, f), cap);
  if (auto d = first_difference(lhs.poly, rhs.poly))
    return {false, "coefficient of " + exponent_string(cp, *d) + ": lhs " + lhs.poly.coefficient(*d).get_str() +
                       ", rhs " + rhs.poly.coefficient(*d).get_str()};
  return {true, ""};
}

/// G_{P/F} (1 - z[P minus F]) = sum over F' > F with F' minus F a nonempty
/// antichain of (-1)^{#(F' minus F) - 1} G_{P/F'}, all cut at cap.
inline Verdict chevalley_recurrence_check(const ColoredPoset &cp, ElementSet f, int cap) {
  require_filter(cp.poset, f);
  const ElementSet rest = cp.poset.all() - f;
  if (rest.empty())
    throw InputError("the recurrence needs a filter other than P");
  const SparsePoly g = lhs_series(cp, f, cap).poly;
  const SparsePoly left = SparsePoly::multiply(g, SparsePoly::one_minus(color_content(cp, rest)), cap, {});
  const std::vector<Element> tops = cp.poset.maximal_elements(rest).to_vector();
  SparsePoly right(cp.colors().size());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << tops.size()); ++mask) {
    ElementSet add;
    for (std::size_t k = 0; k < tops.size(); ++k)
      if (mask >> k & 1)
        add.insert(tops[k]);
    const SparsePoly gp = lhs_series(cp, f | add, cap).poly;
    right += add.size() % 2 == 1 ? gp : -gp;
  }
  if (auto d = first_difference(left, right))
    return {false, "coefficient of " + exponent_string(cp, *d) + " differs"};
  return {true, ""};
}

/// z_i -> q for every color.
inline std::vector<Exponent> q_images(int ncolors) { return std::vector<Exponent>(ncolors, Exponent{1}); }

/// z_i -> t q for the given color, q otherwise; variables ordered (t, q).
inline std::vector<Exponent> trace_images(int ncolors, Color t_color) {
  std::vector<Exponent> im(ncolors, Exponent{0, 1});
  im.at(t_color) = {1, 1};
  return im;
}

inline RationalFn q_specialize(const RationalFn &r) { return r.substitute(q_images(r.nvars()), 1); }
inline TruncSeries q_specialize(const TruncSeries &s) {
  return {s.poly.substitute(q_images(s.poly.nvars()), 1), s.cap, {}};
}

inline RationalFn trace_specialize(const RationalFn &r, Color t_color) {
  return r.substitute(trace_images(r.nvars(), t_color), 2);
}
/// Truncation stays in z-degree, which becomes the q-degree.
inline TruncSeries trace_specialize(const TruncSeries &s, Color t_color) {
  return {s.poly.substitute(trace_images(s.poly.nvars(), t_color), 2), s.cap, {0, 1}};
}

/// n! sum over excited D of prod_{v in P minus D} 1/h(v), with n = #(P minus F).
inline mpz_class naruse_count(const ColoredPoset &cp, ElementSet f, const std::vector<ExcitedState> &excited,
                              const std::vector<int> &lengths) {
  mpq_class sum = 0;
  for (const auto &s : excited) {
    mpz_class prod = 1;
    (cp.poset.all() - s.diagram).for_each([&](Element v) { prod *= lengths[v]; });
    sum += mpq_class(1, prod);
  }
  sum.canonicalize();
  mpz_class fact = 1;
  for (int k = 2; k <= cp.size() - f.size(); ++k)
    fact *= k;
  mpq_class total = sum * fact;
  total.canonicalize();
  if (total.get_den() != 1)
    throw NonIntegerResult("n! times the excited-diagram sum is " + total.get_str());
  return total.get_num();
}

inline mpz_class naruse_count(const ColoredPoset &cp, ElementSet f) {
  return naruse_count(cp, f, enumerate_excited(cp, f), hook_table(cp).lengths);
}

/// sum over linear extensions q_1..q_n of P minus F (q_1 minimal) of
/// prod_m 1/(a(q_1) + ... + a(q_m)); computed over the order ideals of P minus F.
inline mpq_class colored_extension_sum(const ColoredPoset &cp, ElementSet f, const std::vector<mpq_class> &a) {
  const Poset &p = cp.poset;
  std::unordered_map<ElementSet, mpq_class> memo;
  std::function<mpq_class(ElementSet)> g = [&](ElementSet ideal) -> mpq_class {
    if (ideal.empty())
      return 1;
    if (auto it = memo.find(ideal); it != memo.end())
      return it->second;
    mpq_class weight = 0, acc = 0;
    ideal.for_each([&](Element e) { weight += a[cp.color[e]]; });
    p.maximal_elements(ideal).for_each([&](Element x) { acc += g(ideal.without(x)); });
    acc /= weight;
    memo.emplace(ideal, acc);
    return acc;
  };
  return g(p.all() - f);
}

/// sum over excited D of prod_{v in P minus D} 1/a<H(v)>
inline mpq_class colored_hook_sum(const ColoredPoset &cp, const std::vector<ExcitedState> &excited,
                                  const std::vector<Exponent> &hooks, const std::vector<mpq_class> &a) {
  std::vector<mpq_class> form(cp.size());
  for (Element v = 0; v < cp.size(); ++v) {
    for (std::size_t i = 0; i < a.size(); ++i)
      form[v] += a[i] * hooks[v][i];
    if (form[v] == 0)
      throw ZeroHookForm("hook form of " + cp.poset.label(v) + " vanishes at the chosen weights");
  }
  mpq_class sum = 0;
  for (const auto &s : excited) {
    mpq_class term = 1;
    (cp.poset.all() - s.diagram).for_each([&](Element v) { term /= form[v]; });
    sum += term;
  }
  return sum;
}

inline Verdict colored_hook_check(const ColoredPoset &cp, ElementSet f, const std::vector<mpq_class> &a) {
  if (static_cast<int>(a.size()) != cp.colors().size())
    throw InputError("weight vector length does not match the number of colors");
  for (const auto &x : a)
    if (x <= 0)
      throw InputError("colored hook weights must be positive");
  const mpq_class lhs = colored_extension_sum(cp, f, a);
  const mpq_class rhs = colored_hook_sum(cp, enumerate_excited(cp, f), hook_exponents(cp), a);
  if (lhs != rhs)
    return {false, "lhs " + lhs.get_str() + " != rhs " + rhs.get_str()};
  return {true, ""};
}

} // namespace skewhook
