#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace skewhook;

namespace {

Exponent exps(const ColoredPoset &cp, std::initializer_list<std::pair<const char *, int>> powers) {
  Exponent e(cp.colors().size(), 0);
  for (auto [name, k] : powers)
    e[*cp.colors().find(name)] = k;
  return e;
}

Exponent hook_at(const ColoredPoset &cp, int i, int j) {
  return hook_table(cp).exponents[*cp.poset.find_cell({i, j})];
}

std::vector<ColoredPoset> simply_laced_fixtures() {
  return {build_shape({5, 4, 2, 1}), build_shape({4, 2}),   build_shape({3, 3, 1}), build_shifted({5, 4, 2, 1}),
          build_shifted({3, 2, 1}),  build_shifted({4, 1}), build_swivel(),         oracle::binary_tree7()};
}

} // namespace

TEST(DkIntervals, DiamondIsD3) {
  Poset p = Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto ds = find_dk_intervals(p);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].k, 3);
  EXPECT_EQ(ds[0].bottom, 0);
  EXPECT_EQ(ds[0].top, 3);
}

TEST(DkIntervals, ChainHasNone) {
  EXPECT_TRUE(find_dk_intervals(Poset::from_covers(4, {{0, 1}, {1, 2}, {2, 3}})).empty());
}

TEST(DkIntervals, TwoByTwo) {
  ColoredPoset cp = build_shape({2, 2});
  auto ds = find_dk_intervals(cp.poset);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(cp.poset.cells()[ds[0].bottom], (Cell{2, 2}));
  EXPECT_EQ(cp.poset.cells()[ds[0].top], (Cell{1, 1}));
  EXPECT_EQ(ElementSet({ds[0].side_x, ds[0].side_y}), oracle::cells(cp, {{1, 2}, {2, 1}}));
}

TEST(DkIntervals, D4InShiftedShape) {
  ColoredPoset cp = build_shifted({5, 4, 2, 1});
  bool found = false;
  for (const auto &d : find_dk_intervals(cp.poset))
    if (cp.poset.cells()[d.bottom] == Cell{4, 4} && cp.poset.cells()[d.top] == Cell{2, 2}) {
      EXPECT_EQ(d.k, 4);
      EXPECT_EQ(d.members.size(), 6);
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(CheckDComplete, Builders) {
  for (const auto &cp : simply_laced_fixtures())
    EXPECT_TRUE(check_dcomplete(cp.poset).ok()) << cp.kind;
}

TEST(CheckDComplete, MissingTopViolatesD1) {
  // d_3(1) without its top: a V over a point.
  Poset p = Poset::from_covers(3, {{0, 1}, {0, 2}});
  auto v = check_dcomplete(p);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violations[0].axiom, "D1");
  EXPECT_EQ(v.violations[0].set, (ElementSet{0, 1, 2}));
}

TEST(CheckDComplete, D4MinusWithoutTop) {
  // d_4(1) minus its top: z over x,y over a chain of two.
  Poset p = Poset::from_covers(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  auto v = check_dcomplete(p);
  ASSERT_FALSE(v.ok());
  bool d1 = false;
  for (const auto &x : v.violations)
    d1 = d1 || (x.axiom == "D1" && x.set == p.all());
  EXPECT_TRUE(d1);
}

TEST(CheckDComplete, ExtraLowerCoverViolatesD2) {
  // diamond 0<1,2<3 plus 4 covered by 3 outside the interval
  Poset p = Poset::from_covers(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {4, 3}});
  auto v = check_dcomplete(p);
  bool d2 = false;
  for (const auto &x : v.violations)
    d2 = d2 || x.axiom == "D2";
  EXPECT_TRUE(d2);
}

TEST(CheckDComplete, TwoBottomsViolateD3) {
  // x,y each cover both w1 and w2; top over x,y.
  Poset p = Poset::from_covers(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  auto v = check_dcomplete(p);
  bool d3 = false;
  for (const auto &x : v.violations)
    d3 = d3 || x.axiom == "D3";
  EXPECT_TRUE(d3);
}

TEST(CheckDComplete, Trees) { EXPECT_TRUE(check_dcomplete(oracle::binary_tree7().poset).ok()); }

TEST(Builders, Shape5421) {
  ColoredPoset cp = build_shape({5, 4, 2, 1});
  EXPECT_EQ(cp.size(), 12);
  EXPECT_EQ(cp.colors().dynkin_type(), "A_8");
  EXPECT_EQ(cp.top_forest, oracle::cells(cp, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 1}, {3, 1}, {4, 1}}));
}

TEST(Builders, ShapeSinglePoint) {
  ColoredPoset cp = build_shape({1});
  EXPECT_EQ(cp.size(), 1);
  EXPECT_EQ(cp.colors().size(), 1);
}

TEST(Builders, Shape22Colors) {
  ColoredPoset cp = build_shape({2, 2});
  EXPECT_EQ(cp.colors().names(), (std::vector<std::string>{"-1", "0", "1"}));
  EXPECT_EQ(cp.colors().name(cp.color[*cp.poset.find_cell({2, 2})]), "0");
  EXPECT_EQ(cp.colors().name(cp.color[*cp.poset.find_cell({2, 1})]), "-1");
}

TEST(Builders, BadPartitions) {
  EXPECT_THROW(build_shape({2, 3}), InvalidPartition);
  EXPECT_THROW(build_shape({2, 0}), InvalidPartition);
  EXPECT_THROW(build_shifted({3, 3}), InvalidStrictPartition);
  EXPECT_THROW(build_shifted_typeB({1, 2}), InvalidStrictPartition);
}

TEST(Builders, Shifted5421) {
  ColoredPoset cp = build_shifted({5, 4, 2, 1});
  EXPECT_EQ(cp.size(), 12);
  EXPECT_EQ(cp.colors().dynkin_type(), "D_6");
  EXPECT_EQ(cp.top_forest.size(), 6);
  EXPECT_EQ(cp.colors().name(cp.color[*cp.poset.find_cell({2, 2})]), "0'");
  EXPECT_EQ(cp.colors().name(cp.color[*cp.poset.find_cell({3, 3})]), "0");
  EXPECT_EQ(cp.colors().name(cp.color[*cp.poset.find_cell({4, 4})]), "0'");
  EXPECT_EQ(cp.colors().name(cp.color[*cp.poset.find_cell({2, 5})]), "3");
}

TEST(Builders, ShiftedTwoIsChain) {
  ColoredPoset cp = build_shifted({2});
  EXPECT_EQ(cp.size(), 2);
  EXPECT_TRUE(cp.poset.lt(1, 0));
}

TEST(Builders, Swivel) {
  ColoredPoset cp = build_swivel();
  EXPECT_EQ(cp.size(), 16);
  EXPECT_EQ(cp.top_forest.size(), 6);
  EXPECT_EQ(cp.colors().dynkin_type(), "E_6");
}

TEST(Builders, Trees) {
  ColoredPoset path = build_tree(3, {{1, 0}, {2, 1}});
  EXPECT_TRUE(path.poset.lt(2, 0));
  ColoredPoset star = build_tree(3, {{1, 0}, {2, 0}});
  EXPECT_EQ(star.colors().size(), 3);
  EXPECT_THROW(build_tree(3, {{0, 1}, {0, 2}}), NotATree);
  EXPECT_THROW(build_tree(4, {{1, 0}, {3, 2}}), NotATree);
}

TEST(Builders, TreeHooksAreSubtreeSizes) {
  ColoredPoset cp = oracle::binary_tree7();
  HookTable t = hook_table(cp);
  EXPECT_EQ(t.lengths, (std::vector<int>{7, 3, 3, 1, 1, 1, 1}));
}

TEST(Builders, TypeB) {
  ColoredPoset cp = build_shifted_typeB({3, 2, 1});
  EXPECT_FALSE(cp.colors().simply_laced());
  EXPECT_EQ(cp.mode, Mode::Heap);
  for (Element e = 0; e < cp.size(); ++e)
    EXPECT_EQ(cp.color[e], cp.poset.cells()[e].j - cp.poset.cells()[e].i);
  ColoredPoset big = build_shifted_typeB({5, 4, 2, 1});
  EXPECT_EQ(big.size(), 12);
  EXPECT_EQ(big.colors().size(), 5);
  EXPECT_EQ(big.colors().dynkin_type(), "B_5");
  ColoredPoset one = build_shifted_typeB({1});
  EXPECT_EQ(one.size(), 1);
  EXPECT_EQ(one.colors().name(one.color[0]), "0");
}

TEST(Coloring, BuildersSatisfyC1toC5) {
  for (const auto &cp : simply_laced_fixtures())
    EXPECT_TRUE(coloring_failures(cp).empty()) << cp.kind;
}

TEST(Coloring, ShapeFromFirstRowAndColumn) {
  ColoredPoset shape = build_shape({5, 4, 2, 1});
  std::vector<std::pair<Element, std::string>> labels;
  // colors in the same order as build_shape: -3, ..., 4
  for (int c = -3; c <= 4; ++c) {
    Cell cell = c >= 0 ? Cell{1, c + 1} : Cell{1 - c, 1};
    labels.emplace_back(*shape.poset.find_cell(cell), std::to_string(c));
  }
  ColoredPoset cp = compute_coloring(shape.poset, labels);
  EXPECT_EQ(cp.color, shape.color);
  EXPECT_EQ(*cp.graph, *shape.graph);
}

TEST(Coloring, TreeIsIdentityExtension) {
  ColoredPoset tree = oracle::binary_tree7();
  ColoredPoset cp = compute_coloring(tree.poset);
  EXPECT_EQ(cp.top_forest, tree.poset.all());
}

TEST(Coloring, ShiftedMatchesDiagonalParityRule) {
  ColoredPoset shifted = build_shifted({5, 4, 2, 1});
  std::vector<std::pair<Element, std::string>> labels;
  labels.emplace_back(*shifted.poset.find_cell({1, 1}), "0");
  labels.emplace_back(*shifted.poset.find_cell({2, 2}), "0'");
  for (int d = 1; d <= 4; ++d)
    labels.emplace_back(*shifted.poset.find_cell({1, d + 1}), std::to_string(d));
  ColoredPoset cp = compute_coloring(shifted.poset, labels);
  EXPECT_EQ(cp.color, shifted.color);
}

TEST(Coloring, RejectsNonForestLabels) {
  ColoredPoset shape = build_shape({2, 2});
  EXPECT_THROW(compute_coloring(shape.poset, {{*shape.poset.find_cell({2, 2}), "x"}}), ColoringFailed);
}

TEST(Coloring, UniqueMaximumWhenConnected) {
  for (const auto &cp : simply_laced_fixtures())
    EXPECT_EQ(cp.poset.maximal_elements().size(), 1) << cp.kind;
}

TEST(Hooks, ShiftedThreeTwoOne) {
  ColoredPoset cp = build_shifted({3, 2, 1});
  EXPECT_EQ(hook_at(cp, 1, 1), exps(cp, {{"0", 1}, {"0'", 1}, {"1", 2}, {"2", 1}}));
  EXPECT_EQ(hook_at(cp, 1, 2), exps(cp, {{"0", 1}, {"0'", 1}, {"1", 1}, {"2", 1}}));
  EXPECT_EQ(hook_at(cp, 1, 3), exps(cp, {{"0", 1}, {"1", 1}, {"2", 1}}));
  EXPECT_EQ(hook_at(cp, 2, 2), exps(cp, {{"0", 1}, {"0'", 1}, {"1", 1}}));
  EXPECT_EQ(hook_at(cp, 2, 3), exps(cp, {{"0", 1}, {"1", 1}}));
  EXPECT_EQ(hook_at(cp, 3, 3), exps(cp, {{"0", 1}}));
}

TEST(Hooks, Shifted5421Cell12) {
  ColoredPoset cp = build_shifted({5, 4, 2, 1});
  EXPECT_EQ(hook_at(cp, 1, 2), exps(cp, {{"0'", 1}, {"0", 1}, {"1", 2}, {"2", 1}, {"3", 1}, {"4", 1}}));
}

TEST(Hooks, TypeBThreeTwoOne) {
  ColoredPoset cp = build_shifted_typeB({3, 2, 1});
  EXPECT_EQ(hook_at(cp, 1, 1), exps(cp, {{"0", 1}, {"1", 1}, {"2", 1}}));
  EXPECT_EQ(hook_at(cp, 1, 2), exps(cp, {{"0", 2}, {"1", 2}, {"2", 1}}));
  EXPECT_EQ(hook_at(cp, 1, 3), exps(cp, {{"0", 2}, {"1", 1}, {"2", 1}}));
  EXPECT_EQ(hook_at(cp, 2, 2), exps(cp, {{"0", 1}, {"1", 1}}));
  EXPECT_EQ(hook_at(cp, 2, 3), exps(cp, {{"0", 2}, {"1", 1}}));
  EXPECT_EQ(hook_at(cp, 3, 3), exps(cp, {{"0", 1}}));
}

TEST(Hooks, ShapeLengthsAreArmPlusLegPlusOne) {
  const std::vector<int> lambda{5, 4, 2, 1};
  ColoredPoset cp = build_shape(lambda);
  HookTable t = hook_table(cp);
  for (Element e = 0; e < cp.size(); ++e) {
    EXPECT_EQ(t.lengths[e], oracle::classical_hook(lambda, cp.poset.cells()[e]));
    EXPECT_EQ(shape_hook_cells(cp, e).size(), t.lengths[e]);
  }
}

TEST(Hooks, ShiftedDegreesAreShiftedHookLengths) {
  for (const auto &mu : std::vector<std::vector<int>>{{5, 4, 2, 1}, {3, 2, 1}, {6, 3, 1}}) {
    ColoredPoset cp = build_shifted(mu);
    HookTable t = hook_table(cp);
    for (Element e = 0; e < cp.size(); ++e) {
      int degree = 0;
      for (int x : t.exponents[e])
        degree += x;
      EXPECT_EQ(degree, shifted_hook_cells(cp, e).size());
      EXPECT_EQ(t.lengths[e], degree);
    }
  }
}

TEST(Hooks, TypeBMonomialsAreHookContents) {
  for (const auto &mu : std::vector<std::vector<int>>{{5, 4, 2, 1}, {3, 2, 1}, {4, 3, 2, 1}}) {
    ColoredPoset cp = build_shifted_typeB(mu);
    HookTable t = hook_table(cp);
    for (Element e = 0; e < cp.size(); ++e) {
      Exponent content(cp.colors().size(), 0);
      shifted_hook_cells(cp, e, true).for_each([&](Element f) { ++content[cp.color[f]]; });
      EXPECT_EQ(t.exponents[e], content) << cp.poset.label(e);
    }
  }
}

TEST(Hooks, HeapAgreesWithRecursion) {
  for (const auto &cp : simply_laced_fixtures())
    EXPECT_EQ(hook_table_dcomplete(cp), hook_table_heap(cp)) << cp.kind;
}

TEST(Hooks, AllExponentsNonnegative) {
  for (const auto &cp : simply_laced_fixtures())
    for (const auto &row : hook_table(cp).exponents)
      for (int x : row)
        EXPECT_GE(x, 0);
}

TEST(Heap, WordHeapMatchesShiftedTypeB) {
  // (3,3) (2,2) (2,3) (1,1) (1,2) (1,3) in heap order: s_0 | s_1 s_0 | s_2 s_1 s_0
  auto g = std::make_shared<const ColorGraph>(type_b_graph(3));
  ColoredPoset heap = build_heap(WeylWord{{0, 1, 0, 2, 1, 0}, g});
  EXPECT_EQ(heap.size(), 6);
  EXPECT_EQ(linear_extensions_count(heap.poset), linear_extensions_count(build_shifted_typeB({3, 2, 1}).poset));
  auto lengths = hook_table(heap).lengths;
  std::sort(lengths.begin(), lengths.end());
  EXPECT_EQ(lengths, (std::vector<int>{1, 2, 3, 3, 4, 5}));
}

TEST(Heap, NonReducedWordRejected) {
  auto g = std::make_shared<const ColorGraph>(type_b_graph(2));
  EXPECT_THROW(build_heap(WeylWord{{0, 0}, g}), NonReducedInput);
}
