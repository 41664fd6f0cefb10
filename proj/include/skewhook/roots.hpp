#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "color_graph.hpp"

namespace skewhook {

/// Root-lattice vector in simple-root coordinates.
struct RootVec {
  std::vector<mpz_class> coeffs;

  RootVec() = default;
  explicit RootVec(int rank) : coeffs(rank, 0) {}

  static RootVec simple(int rank, Color i) {
    RootVec r(rank);
    r.coeffs[i] = 1;
    return r;
  }

  int rank() const { return static_cast<int>(coeffs.size()); }

  bool is_zero() const {
    for (const auto &c : coeffs)
      if (c != 0)
        return false;
    return true;
  }
  bool is_nonnegative() const {
    for (const auto &c : coeffs)
      if (c < 0)
        return false;
    return true;
  }
  /// Real roots have coordinates all of one sign; any negative entry means a
  /// negative root.
  bool is_negative() const {
    for (const auto &c : coeffs)
      if (c < 0)
        return true;
    return false;
  }

  friend bool operator==(const RootVec &, const RootVec &) = default;
};

/// s_i(r) = r - <alpha_i^vee, r> alpha_i, with <alpha_i^vee, alpha_j> = a_ij.
inline RootVec reflect(const ColorGraph &g, Color i, RootVec r) {
  mpz_class pairing = 0;
  for (Color j = 0; j < g.size(); ++j)
    if (g.cartan(i, j) != 0)
      pairing += g.cartan(i, j) * r.coeffs[j];
  r.coeffs[i] -= pairing;
  return r;
}

inline void reflect_in_place(const ColorGraph &g, Color i, RootVec &r) {
  mpz_class pairing = 0;
  for (Color j = 0; j < g.size(); ++j)
    if (g.cartan(i, j) != 0)
      pairing += g.cartan(i, j) * r.coeffs[j];
  r.coeffs[i] -= pairing;
}

inline std::string to_string(const RootVec &r, const ColorGraph &g) {
  std::string out;
  for (Color i = 0; i < r.rank(); ++i) {
    if (r.coeffs[i] == 0)
      continue;
    if (!out.empty())
      out += r.coeffs[i] < 0 ? " - " : " + ";
    else if (r.coeffs[i] < 0)
      out += "-";
    mpz_class a = abs(r.coeffs[i]);
    if (a != 1)
      out += a.get_str();
    out += "a_" + g.name(i);
  }
  return out.empty() ? "0" : out;
}

} // namespace skewhook
