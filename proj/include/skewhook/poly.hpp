#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace skewhook {

/// Exponent vector over a fixed variable order.
using Exponent = std::vector<int>;

inline int weighted_degree(const Exponent &e, const std::vector<int> &weights) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    d += e[i] * (weights.empty() ? 1 : weights[i]);
  return d;
}

inline Exponent add_exponents(const Exponent &a, const Exponent &b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = a[i] + b[i];
  return c;
}

inline bool divides(const Exponent &a, const Exponent &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

/// Sparse polynomial with big-integer coefficients. No zero coefficient is
/// ever stored.
class SparsePoly {
public:
  using Terms = std::map<Exponent, mpz_class>;

  SparsePoly() = default;
  explicit SparsePoly(int nvars) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, const mpz_class &c) {
    SparsePoly p(nvars);
    if (c != 0)
      p.terms_[Exponent(nvars, 0)] = c;
    return p;
  }
  static SparsePoly one(int nvars) { return constant(nvars, 1); }
  static SparsePoly monomial(const Exponent &e, const mpz_class &c = 1) {
    SparsePoly p(static_cast<int>(e.size()));
    if (c != 0)
      p.terms_[e] = c;
    return p;
  }
  /// 1 - z^e
  static SparsePoly one_minus(const Exponent &e) {
    return one(static_cast<int>(e.size())) - monomial(e);
  }

  int nvars() const { return nvars_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  mpz_class coefficient(const Exponent &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
  }

  void add_term(const Exponent &e, const mpz_class &c) {
    if (c == 0)
      return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  int degree(const std::vector<int> &weights = {}) const {
    int d = -1;
    for (const auto &[e, c] : terms_)
      d = std::max(d, weighted_degree(e, weights));
    return d;
  }

  SparsePoly &operator+=(const SparsePoly &o) {
    for (const auto &[e, c] : o.terms_)
      add_term(e, c);
    return *this;
  }
  SparsePoly &operator-=(const SparsePoly &o) {
    for (const auto &[e, c] : o.terms_)
      add_term(e, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly &b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly &b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) {
    for (auto &[e, c] : a.terms_)
      c = -c;
    return a;
  }
  friend SparsePoly operator*(const SparsePoly &a, const SparsePoly &b) { return multiply(a, b, -1, {}); }
  SparsePoly &operator*=(const SparsePoly &o) { return *this = *this * o; }

  /// Product keeping only terms of weighted degree <= cap (cap < 0: no cap).
  static SparsePoly multiply(const SparsePoly &a, const SparsePoly &b, int cap, const std::vector<int> &weights) {
    SparsePoly out(std::max(a.nvars_, b.nvars_));
    for (const auto &[ea, ca] : a.terms_) {
      const int da = cap < 0 ? 0 : weighted_degree(ea, weights);
      if (cap >= 0 && da > cap)
        continue;
      for (const auto &[eb, cb] : b.terms_) {
        if (cap >= 0 && da + weighted_degree(eb, weights) > cap)
          continue;
        out.add_term(add_exponents(ea, eb), ca * cb);
      }
    }
    return out;
  }

  SparsePoly truncated(int cap, const std::vector<int> &weights = {}) const {
    SparsePoly out(nvars_);
    for (const auto &[e, c] : terms_)
      if (weighted_degree(e, weights) <= cap)
        out.terms_.emplace(e, c);
    return out;
  }

  /// Substitutes z_i -> z^{images[i]}, a monomial in new_nvars variables.
  SparsePoly substitute(const std::vector<Exponent> &images, int new_nvars) const {
    SparsePoly out(new_nvars);
    for (const auto &[e, c] : terms_) {
      Exponent f(new_nvars, 0);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int j = 0; j < new_nvars; ++j)
          f[j] += e[i] * images[i][j];
      out.add_term(f, c);
    }
    return out;
  }

  friend bool operator==(const SparsePoly &a, const SparsePoly &b) { return a.terms_ == b.terms_; }

private:
  int nvars_ = 0;
  Terms terms_;
};

inline SparsePoly pow(const SparsePoly &p, int k) {
  SparsePoly out = SparsePoly::one(p.nvars());
  for (int i = 0; i < k; ++i)
    out *= p;
  return out;
}

/// Monomial as "z_0^2 z_0' z_1" over the given variable names.
inline std::string monomial_string(const Exponent &e, const std::vector<std::string> &names,
                                   const std::string &prefix = "z_") {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0)
      continue;
    if (!out.empty())
      out += " ";
    out += prefix + names[i];
    if (e[i] != 1)
      out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

namespace detail {

/// Graded order: total degree, then lexicographic.
inline bool graded_less(const Exponent &a, const Exponent &b) {
  int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db)
    return da < db;
  return a < b;
}

} // namespace detail

/// Terms in increasing degree, e.g. "1 - z_0^2 z_1 + 3 z_2".
inline std::string to_string(const SparsePoly &p, const std::vector<std::string> &names,
                             const std::string &prefix = "z_") {
  if (p.is_zero())
    return "0";
  std::vector<std::pair<Exponent, mpz_class>> ts(p.terms().begin(), p.terms().end());
  std::sort(ts.begin(), ts.end(), [](const auto &a, const auto &b) { return detail::graded_less(a.first, b.first); });
  std::string out;
  for (const auto &[e, c] : ts) {
    mpz_class a = abs(c);
    bool unit = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (unit)
      out += a.get_str();
    else
      out += (a == 1 ? "" : a.get_str() + " ") + monomial_string(e, names, prefix);
  }
  return out;
}

/// Exact quotient p / (1 - z^m), or nothing when (1 - z^m) does not divide p.
inline std::optional<SparsePoly> divide_one_minus(const SparsePoly &p, const Exponent &m) {
  // Leading term of the divisor in the graded order is -z^m.
  SparsePoly rem = p, quo(p.nvars());
  const SparsePoly d = SparsePoly::one_minus(m);
  while (!rem.is_zero()) {
    auto lead = std::max_element(rem.terms().begin(), rem.terms().end(),
                                 [](const auto &a, const auto &b) { return detail::graded_less(a.first, b.first); });
    if (!divides(m, lead->first))
      return std::nullopt;
    Exponent q = lead->first;
    for (std::size_t i = 0; i < q.size(); ++i)
      q[i] -= m[i];
    SparsePoly t = SparsePoly::monomial(q, -lead->second);
    quo += t;
    rem -= t * d;
  }
  return quo;
}

/// Numerator over a product of factors (1 - z^m), kept factored.
struct RationalFn {
  SparsePoly numerator;
  std::vector<Exponent> denominator; // each factor is 1 - z^m

  int nvars() const { return numerator.nvars(); }

  SparsePoly denominator_product() const {
    SparsePoly d = SparsePoly::one(nvars());
    for (const auto &m : denominator)
      d *= SparsePoly::one_minus(m);
    return d;
  }

  RationalFn substitute(const std::vector<Exponent> &images, int new_nvars) const {
    RationalFn r{numerator.substitute(images, new_nvars), {}};
    for (const auto &m : denominator)
      r.denominator.push_back(SparsePoly::monomial(m).substitute(images, new_nvars).terms().begin()->first);
    return r;
  }
};

/// a == b by cross-multiplication.
inline bool equal(const RationalFn &a, const RationalFn &b) {
  return a.numerator * b.denominator_product() == b.numerator * a.denominator_product();
}

/// Cancels every denominator factor that divides the numerator exactly.
inline RationalFn cancel_factors(RationalFn r) {
  std::vector<Exponent> kept;
  for (const auto &m : r.denominator) {
    if (auto q = divide_one_minus(r.numerator, m))
      r.numerator = std::move(*q);
    else
      kept.push_back(m);
  }
  r.denominator = std::move(kept);
  return r;
}

inline std::string to_string(const RationalFn &r, const std::vector<std::string> &names,
                             const std::string &prefix = "z_") {
  std::string out = "(" + to_string(r.numerator, names, prefix) + ")";
  if (r.denominator.empty())
    return out;
  out += " / (";
  bool first = true;
  for (const auto &m : r.denominator) {
    out += (first ? "" : " ") + std::string("(1 - ") + monomial_string(m, names, prefix) + ")";
    first = false;
  }
  return out + ")";
}

/// Power series cut off above a weighted degree.
struct TruncSeries {
  SparsePoly poly;
  int cap = 0;
  std::vector<int> weights; // empty: total degree

  friend bool operator==(const TruncSeries &a, const TruncSeries &b) {
    return a.cap == b.cap && a.weights == b.weights && a.poly == b.poly;
  }
};

/// Numerator times the geometric expansions of 1/(1 - z^m), cut at cap.
inline TruncSeries expand(const RationalFn &r, int cap, const std::vector<int> &weights = {}) {
  SparsePoly s = r.numerator.truncated(cap, weights);
  for (const auto &m : r.denominator) {
    if (weighted_degree(m, weights) <= 0)
      throw NonExpandableFactor("factor (1 - z^m) with m of degree 0 has no power-series expansion");
    const SparsePoly zm = SparsePoly::monomial(m);
    SparsePoly acc = s, cur = s;
    for (;;) {
      cur = SparsePoly::multiply(cur, zm, cap, weights);
      if (cur.is_zero())
        break;
      acc += cur;
    }
    s = std::move(acc);
  }
  return {std::move(s), cap, weights};
}

/// First exponent where two series differ, if any.
inline std::optional<Exponent> first_difference(const SparsePoly &a, const SparsePoly &b) {
  SparsePoly d = a - b;
  if (d.is_zero())
    return std::nullopt;
  auto it = std::min_element(d.terms().begin(), d.terms().end(),
                             [](const auto &x, const auto &y) { return detail::graded_less(x.first, y.first); });
  return it->first;
}

} // namespace skewhook
