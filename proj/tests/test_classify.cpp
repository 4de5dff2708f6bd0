#include <gtest/gtest.h>

#include "hk/classify.hpp"
#include "hk/poset_enum.hpp"
#include "oracles.hpp"

namespace {

using hk::CompositionMatrix;
using hk::Lattice;
using hk::Poset;

Poset antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
  return Poset(labels, {});
}

Poset chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(labels[i], labels[i + 1]);
  return Poset(labels, rel);
}

Poset two_plus_two() {
  return Poset({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
}

Poset crossing_chains6() {
  return Poset({"1", "2", "3", "4", "5", "6"},
               {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"5", "6"}, {"5", "4"}, {"2", "6"}});
}

TEST(Classify, TwoPlusTwoFree) {
  EXPECT_FALSE(hk::is_two_plus_two_free(two_plus_two()));
  EXPECT_TRUE(hk::is_two_plus_two_free(crossing_chains6()));
  EXPECT_TRUE(hk::is_two_plus_two_free(chain(4)));
  EXPECT_TRUE(hk::is_two_plus_two_free(antichain(4)));
}

TEST(Classify, TwoPlusTwoFreeAgreesWithSubposetScan) {
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : hk::enumerate_posets(n))
      EXPECT_EQ(hk::is_two_plus_two_free(p),
                !oracle::brute_contains_two_plus_two(p));
}

TEST(Classify, ThreeAntichainFree) {
  EXPECT_FALSE(hk::is_three_antichain_free(antichain(3)));
  EXPECT_TRUE(hk::is_three_antichain_free(two_plus_two()));
  EXPECT_TRUE(hk::is_three_antichain_free(crossing_chains6()));
}

TEST(Classify, ThreeAntichainFreeMatchesWidth) {
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : hk::enumerate_posets(n))
      EXPECT_EQ(hk::is_three_antichain_free(p), hk::width(p) <= 2);
}

TEST(Classify, DownsetChainOfCrossingChains) {
  Poset p = crossing_chains6();
  hk::DownsetChain c = hk::downset_chain(p);
  ASSERT_EQ(c.downsets.size(), 5u);
  auto mask_of = [&](std::vector<std::string> labs) {
    std::uint64_t m = 0;
    for (const auto& l : labs) m |= std::uint64_t{1} << p.index_of(l);
    return m;
  };
  EXPECT_EQ(c.downsets[0], 0u);
  EXPECT_EQ(c.downsets[1], mask_of({"1"}));
  EXPECT_EQ(c.downsets[2], mask_of({"1", "2"}));
  EXPECT_EQ(c.downsets[3], mask_of({"1", "2", "5"}));
  EXPECT_EQ(c.downsets[4], mask_of({"1", "2", "3", "5"}));
  auto labels_of = [&](const std::vector<int>& idx) {
    std::vector<std::string> out;
    for (int i : idx) out.push_back(p.label(i));
    std::sort(out.begin(), out.end());
    return out;
  };
  EXPECT_EQ(labels_of(c.levels[0]), (std::vector<std::string>{"1", "5"}));
  EXPECT_EQ(labels_of(c.levels[1]), (std::vector<std::string>{"2"}));
  EXPECT_EQ(labels_of(c.levels[4]), (std::vector<std::string>{"4"}));
  EXPECT_EQ(labels_of(c.gaps[0]), (std::vector<std::string>{"1"}));
  EXPECT_EQ(labels_of(c.gaps[2]), (std::vector<std::string>{"5"}));
  EXPECT_EQ(labels_of(c.gaps[4]), (std::vector<std::string>{"4", "6"}));
}

TEST(Classify, DownsetChainTrivialCases) {
  hk::DownsetChain two = hk::downset_chain(chain(2));
  EXPECT_EQ(two.downsets.size(), 2u);
  hk::DownsetChain anti = hk::downset_chain(antichain(2));
  EXPECT_EQ(anti.downsets.size(), 1u);
  EXPECT_EQ(anti.levels[0].size(), 2u);
  EXPECT_THROW(hk::downset_chain(two_plus_two()), hk::PosetError);
}

TEST(Classify, CompositionMatrixGolden) {
  CompositionMatrix m = hk::composition_matrix(crossing_chains6());
  ASSERT_EQ(m.size(), 5);
  using Cell = std::vector<std::string>;
  EXPECT_EQ(m.cells[0][0], Cell{"1"});
  EXPECT_EQ(m.cells[0][2], Cell{"5"});
  EXPECT_EQ(m.cells[1][1], Cell{"2"});
  EXPECT_EQ(m.cells[2][3], Cell{"3"});
  EXPECT_EQ(m.cells[3][4], Cell{"6"});
  EXPECT_EQ(m.cells[4][4], Cell{"4"});
  int nonempty = 0;
  for (const auto& row : m.cells)
    for (const auto& cell : row) nonempty += !cell.empty();
  EXPECT_EQ(nonempty, 6);
}

TEST(Classify, CompositionMatrixTinyCases) {
  CompositionMatrix s = hk::composition_matrix(chain(1));
  ASSERT_EQ(s.size(), 1);
  EXPECT_EQ(s.cells[0][0], std::vector<std::string>{"a"});
  CompositionMatrix a = hk::composition_matrix(antichain(2));
  ASSERT_EQ(a.size(), 1);
  EXPECT_EQ(a.cells[0][0], (std::vector<std::string>{"a", "b"}));
}

TEST(Classify, MatrixInvertsUpToIsomorphism) {
  for (int n = 1; n <= 7; ++n)
    for (const Poset& p : hk::enumerate_posets(n)) {
      if (!hk::is_two_plus_two_free(p)) continue;
      Poset q = hk::poset_from_composition_matrix(hk::composition_matrix(p));
      EXPECT_TRUE(hk::is_isomorphic(p, q));
    }
}

TEST(Classify, MatrixValidationRejectsBadShapes) {
  CompositionMatrix bad;
  bad.cells = {{{}, {}}, {{"a"}, {"b"}}};  // lower-triangular entry
  EXPECT_THROW(bad.validate(), hk::PosetError);
  CompositionMatrix dup;
  dup.cells = {{{"a"}, {"a"}}, {{}, {"b"}}};
  EXPECT_THROW(dup.validate(), hk::PosetError);
  CompositionMatrix empty_row;
  empty_row.cells = {{{"a"}, {"b"}}, {{}, {}}};
  EXPECT_THROW(empty_row.validate(), hk::PosetError);
}

// Shape facts for irreducible width-2 free posets: (n-1)x(n-1) matrix, the
// first row and last column each union to two elements, everything else is
// one singleton per row/column.
TEST(Classify, MatrixShapeForIrreducibleFreePosets) {
  for (int n = 2; n <= 6; ++n)
    for (const Poset& p : hk::enumerate_posets(n)) {
      if (!hk::is_free_pair(p) || !hk::is_ordinal_irreducible(p)) continue;
      CompositionMatrix m = hk::composition_matrix(p);
      ASSERT_EQ(m.size(), n - 1);
      for (int i = 0; i < m.size(); ++i) {
        std::size_t row_union = 0, col_union = 0;
        for (int j = 0; j < m.size(); ++j) {
          row_union += m.cells[i][j].size();
          col_union += m.cells[j][i].size();
        }
        EXPECT_EQ(row_union, i == 0 ? 2u : 1u);
        EXPECT_EQ(col_union, i == m.size() - 1 ? 2u : 1u);
      }
    }
}

TEST(Snake, EmptyWordIsBooleanRankTwo) {
  Lattice l = hk::snake_poset("");
  ASSERT_EQ(l.size(), 4);
  EXPECT_EQ(l.covers(),
            (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  EXPECT_TRUE(l.distributive());
}

TEST(Snake, SingleLetterMatchesIdealLattice) {
  Lattice l = hk::snake_poset("L");
  EXPECT_EQ(l.size(), 6);
  Poset p({"a0", "b0", "a1"}, {{"a0", "a1"}});
  Lattice built = hk::build_lattice(p);
  EXPECT_TRUE(hk::is_isomorphic(l.as_poset(), built.as_poset()));
}

TEST(Snake, WordLLRLGivesTwelveElementLattice) {
  Lattice l = hk::snake_poset("LLRL");
  ASSERT_EQ(l.size(), 12);
  std::vector<std::pair<int, int>> expected = {
      {0, 1}, {0, 2}, {1, 3},  {1, 4},  {2, 3},  {3, 5},  {4, 5},  {4, 6},
      {5, 7}, {5, 8}, {6, 7},  {7, 9},  {7, 10}, {8, 9},  {9, 11}, {10, 11}};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(l.covers(), expected);
  EXPECT_TRUE(l.distributive());
}

TEST(Snake, SizeAndWidth) {
  for (const std::string& w : {std::string(""), std::string("L"), std::string("RRL"),
                               std::string("LRLR"), std::string("RRRRR")}) {
    Lattice l = hk::snake_poset(w);
    EXPECT_EQ(l.size(), 2 * static_cast<int>(w.size()) + 4);
    EXPECT_EQ(hk::width(l.as_poset()), 2);
  }
  EXPECT_THROW(hk::snake_poset("LX"), hk::PosetError);
}

TEST(Snake, RecognizeInvertsConstruction) {
  std::vector<std::string> words{""};
  std::vector<std::string> frontier{""};
  for (int len = 1; len <= 8; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      next.push_back(w + "L");
      next.push_back(w + "R");
    }
    for (const auto& w : next) words.push_back(w);
    frontier = std::move(next);
  }
  for (const auto& w : words) {
    auto got = hk::recognize_snake(hk::snake_poset(w));
    ASSERT_TRUE(got.has_value()) << "word " << w;
    EXPECT_EQ(*got, w);
  }
}

TEST(Snake, RejectsNonSnakeLattices) {
  EXPECT_FALSE(hk::recognize_snake(hk::build_lattice(antichain(3))).has_value());
  EXPECT_FALSE(hk::recognize_snake(hk::build_lattice(two_plus_two())).has_value());
  EXPECT_FALSE(hk::recognize_snake(hk::build_lattice(chain(3))).has_value());
}

TEST(Snake, RecognizeOnCrossingChainsLattice) {
  auto w = hk::recognize_snake(hk::build_lattice(crossing_chains6()));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->size(), 4u);
  EXPECT_TRUE(hk::is_isomorphic(hk::snake_poset(*w).as_poset(),
                                hk::build_lattice(crossing_chains6()).as_poset()));
}

// Snake recognition succeeds exactly on the lattices of irreducible posets
// avoiding both forbidden subposets.
TEST(Snake, RecognitionMatchesFreenessOnSmallPosets) {
  for (int n = 2; n <= 7; ++n)
    for (const Poset& p : hk::enumerate_posets(n)) {
      if (!hk::is_ordinal_irreducible(p)) continue;
      bool snake = hk::recognize_snake(hk::build_lattice(p)).has_value();
      EXPECT_EQ(snake, hk::is_free_pair(p)) << hk::serialize_poset(p);
    }
}

TEST(Classify, PredictKhovanskii) {
  EXPECT_FALSE(hk::predict_khovanskii(two_plus_two()));
  EXPECT_FALSE(hk::predict_khovanskii(antichain(3)));
  EXPECT_TRUE(hk::predict_khovanskii(crossing_chains6()));
  EXPECT_TRUE(hk::predict_khovanskii(chain(1)));
  EXPECT_TRUE(hk::predict_khovanskii(chain(5)));
  EXPECT_TRUE(hk::predict_khovanskii(Poset({}, {})));
  // Freeness of the whole poset is equivalent to freeness of every summand.
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : hk::enumerate_posets(n))
      EXPECT_EQ(hk::predict_khovanskii(p), hk::is_free_pair(p) || p.size() <= 1);
}

}  // namespace
