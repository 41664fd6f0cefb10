#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace skewhook {

/// Index of a color in a ColorGraph's frozen color order.
using Color = int;

/// Dynkin diagram data: named colors in a fixed order and a generalized
/// Cartan matrix a_ij over them. Colors i != j are adjacent iff a_ij != 0.
class ColorGraph {
public:
  ColorGraph() = default;

  ColorGraph(std::vector<std::string> names, std::vector<std::vector<int>> cartan,
             bool symmetrizable_trusted = false)
      : names_(std::move(names)), cartan_(std::move(cartan)), trusted_(symmetrizable_trusted) {
    const std::size_t r = names_.size();
    if (cartan_.size() != r)
      throw InputError("Cartan matrix size does not match color count");
    for (std::size_t i = 0; i < r; ++i) {
      if (cartan_[i].size() != r)
        throw InputError("Cartan matrix is not square");
      if (cartan_[i][i] != 2)
        throw InputError("Cartan diagonal entry a_" + names_[i] + names_[i] + " must be 2");
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j)
          continue;
        if (cartan_[i][j] > 0)
          throw InputError("off-diagonal Cartan entries must be <= 0");
        if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
          throw InputError("Cartan matrix: a_ij = 0 must imply a_ji = 0");
      }
    }
    simply_laced_ = true;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (i != j && !(cartan_[i][j] == cartan_[j][i] && (cartan_[i][j] == 0 || cartan_[i][j] == -1)))
          simply_laced_ = false;
  }

  /// Simply-laced graph: a_ij = -1 on the given edges, 0 elsewhere.
  static ColorGraph simply_laced(std::vector<std::string> names,
                                 const std::vector<std::pair<Color, Color>> &edges) {
    const std::size_t r = names.size();
    std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      a[i][i] = 2;
    for (auto [i, j] : edges) {
      a[i][j] = -1;
      a[j][i] = -1;
    }
    return ColorGraph(std::move(names), std::move(a));
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string> &names() const { return names_; }
  const std::string &name(Color c) const { return names_.at(c); }
  std::optional<Color> find(const std::string &name) const {
    for (Color c = 0; c < size(); ++c)
      if (names_[c] == name)
        return c;
    return std::nullopt;
  }

  int cartan(Color i, Color j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>> &cartan_matrix() const { return cartan_; }

  bool adjacent(Color i, Color j) const { return i != j && cartan_[i][j] != 0; }
  bool commute(Color i, Color j) const { return i != j && cartan_[i][j] == 0; }
  bool simply_laced() const { return simply_laced_; }
  /// True when symmetrizability was asserted by the caller instead of checked.
  bool symmetrizable_trusted() const { return trusted_; }

  std::vector<Color> neighbors(Color i) const {
    std::vector<Color> out;
    for (Color j = 0; j < size(); ++j)
      if (adjacent(i, j))
        out.push_back(j);
    return out;
  }

  /// Symmetrizability: there are positive d_i with d_i a_ij = d_j a_ji. Checked
  /// by propagating rational ratios along edges of each component.
  bool is_symmetrizable() const {
    const int r = size();
    std::vector<std::optional<std::pair<long long, long long>>> d(r); // num/den
    for (int s = 0; s < r; ++s) {
      if (d[s])
        continue;
      d[s] = {1, 1};
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : neighbors(i)) {
          // d_j = d_i a_ij / a_ji
          long long num = d[i]->first * cartan_[i][j];
          long long den = d[i]->second * cartan_[j][i];
          if (den < 0) {
            num = -num;
            den = -den;
          }
          if (!d[j]) {
            d[j] = {num, den};
            stack.push_back(j);
          } else if (d[j]->first * den != num * d[j]->second) {
            return false;
          }
        }
      }
    }
    return true;
  }

  /// Dynkin type of a simply-laced tree, or "B_m" for the type-B chain;
  /// anything else is described generically.
  std::string dynkin_type() const {
    const int r = size();
    if (r == 0)
      return "empty";
    int edges = 0;
    std::vector<int> deg(r, 0);
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (adjacent(i, j)) {
          ++edges;
          ++deg[i];
          ++deg[j];
        }
    if (!connected() || edges != r - 1)
      return simply_laced_ ? "simply-laced (non-tree)" : "multiply-laced";
    if (!simply_laced_) {
      int branch = 0, doubles = 0;
      for (int i = 0; i < r; ++i) {
        branch += deg[i] > 2;
        for (int j = 0; j < r; ++j)
          if (adjacent(i, j) && cartan_[i][j] * cartan_[j][i] == 2)
            ++doubles;
      }
      if (branch == 0 && doubles == 2)
        return "B_" + std::to_string(r);
      return "multiply-laced tree";
    }
    std::vector<int> branch_nodes;
    for (int i = 0; i < r; ++i)
      if (deg[i] > 2)
        branch_nodes.push_back(i);
    if (branch_nodes.empty())
      return "A_" + std::to_string(r);
    if (branch_nodes.size() == 1 && deg[branch_nodes[0]] == 3) {
      std::vector<int> arms;
      for (int nb : neighbors(branch_nodes[0])) {
        int len = 1, prev = branch_nodes[0], cur = nb;
        for (;;) {
          int next = -1;
          for (int x : neighbors(cur))
            if (x != prev)
              next = x;
          if (next < 0)
            break;
          prev = cur;
          cur = next;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1)
        return "D_" + std::to_string(r);
      if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4)
        return "E_" + std::to_string(r);
      return "T_{" + std::to_string(arms[0] + 1) + "," + std::to_string(arms[1] + 1) + "," +
             std::to_string(arms[2] + 1) + "}";
    }
    return "tree";
  }

  friend bool operator==(const ColorGraph &a, const ColorGraph &b) {
    return a.names_ == b.names_ && a.cartan_ == b.cartan_;
  }

private:
  bool connected() const {
    const int r = size();
    std::vector<bool> seen(r, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j : neighbors(i))
        if (!seen[j]) {
          seen[j] = true;
          ++count;
          stack.push_back(j);
        }
    }
    return count == r;
  }

  std::vector<std::string> names_;
  std::vector<std::vector<int>> cartan_;
  bool simply_laced_ = true;
  bool trusted_ = false;
};

} // namespace skewhook
