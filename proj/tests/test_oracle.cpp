#include <gtest/gtest.h>

#include <numeric>

#include "supercluster/oracle.hpp"
#include "support.hpp"

namespace sc = supercluster;
namespace so = supercluster::oracle;
using namespace sc::testing;

TEST(Enumerate, Counts) {
  EXPECT_EQ(so::enumerate_group(2, gf(2)).size(), 2u);
  EXPECT_EQ(so::enumerate_group(3, gf(2)).size(), 8u);
  EXPECT_EQ(so::enumerate_dual(3, gf(9)).size(), 729u);
  EXPECT_THROW(so::enumerate_group(5, gf(2), 512), sc::ResourceLimitError);
  EXPECT_EQ(so::enumerate_group(1, gf(2)).size(), 1u);
}

TEST(Bfs, Examples) {
  const auto F = gf(2);
  EXPECT_EQ(so::bfs_double_orbit(F, fun(F, 3, {{1, 3, 1}})).size(), 4u);
  EXPECT_EQ(so::bfs_double_orbit(F, sc::Functional(3)).size(), 1u);
  EXPECT_EQ(so::bfs_double_orbit(F, nil(F, 3, {{1, 2, 1}, {2, 3, 1}})).size(), 2u);
  EXPECT_EQ(so::bfs_left_orbit(F, fun(F, 3, {{1, 3, 1}})).size(), 2u);
  EXPECT_THROW(so::bfs_double_orbit(F, fun(F, 3, {{1, 3, 1}}), 3), sc::ResourceLimitError);
}

TEST(BruteChar, N3Q2Rows) {
  const auto F = gf(2);
  const auto cols = sc::enumerate_templates(3, F);
  EXPECT_EQ(so::brute_char(F, tmpl(F, 3, "(1,3)=1"), cols),
            (std::vector<sc::Cyclotomic>{cint(2, 2), cint(2, 0), cint(2, 0), cint(2, -2), cint(2, 0)}));
  EXPECT_EQ(so::brute_char(F, tmpl(F, 3, "(1,2)=1;(2,3)=1"), cols),
            (std::vector<sc::Cyclotomic>{cint(2, 1), cint(2, -1), cint(2, -1), cint(2, 1), cint(2, 1)}));
}

TEST(BruteInner, Normalized) {
  const auto F = gf(2);
  const so::BruteTable brute(3, F);
  for (std::size_t r = 0; r < brute.rows().size(); ++r) {
    std::map<sc::Template, sc::Cyclotomic> by_col;
    for (std::size_t c = 0; c < brute.cols().size(); ++c) by_col.emplace(brute.cols()[c], brute.values()[r][c]);
    const auto full = so::expand_to_group(F, brute.adjoint_orbits(), by_col);
    EXPECT_EQ(so::brute_inner(F, 3, full, full), cint(2, 1));
  }
}

TEST(Decomposition, PartitionsSpace) {
  for (int q : {2, 3}) {
    const auto F = gf(q);
    for (int n : {2, 3, 4}) {
      const auto dual = so::decompose_dual(n, F);
      const auto adj = so::decompose_adjoint(n, F);
      const std::uint64_t total = std::accumulate(dual.sizes.begin(), dual.sizes.end(), std::uint64_t{0});
      EXPECT_EQ(total, dual.num_points);
      EXPECT_EQ(std::accumulate(adj.sizes.begin(), adj.sizes.end(), std::uint64_t{0}), adj.num_points);
      EXPECT_EQ(dual.representatives.size(), adj.representatives.size());
      const auto sizes = so::left_orbit_sizes(n, F);
      EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0}), dual.num_points);
    }
  }
  EXPECT_THROW(so::decompose_dual(4, gf(3), so::Caps{100, 100}), sc::ResourceLimitError);
}

TEST(FixedByTemplate, MatchesAction) {
  const auto F = gf(3);
  const auto duals = so::enumerate_dual(3, F);
  for (const auto& x : sc::enumerate_templates(3, F)) {
    const sc::UniMatrix g(x.matrix());
    for (const auto& lam : duals) {
      EXPECT_EQ(so::fixed_by_template(lam, x), sc::coact_left(F, g, lam) == lam);
    }
  }
}

TEST(BruteTable, DecomposesRowsAndRejectsFractions) {
  const auto F = gf(2);
  const so::BruteTable brute(3, F);
  const auto row = brute.values()[3];
  EXPECT_EQ(brute.decompose(row), (std::map<sc::Template, sc::BigInt>{{tmpl(F, 3, "(1,3)=1"), 1}}));
  std::vector<sc::Cyclotomic> half;
  for (const auto& v : row) half.push_back(v * sc::Rational(1, 2));
  EXPECT_THROW(brute.decompose(half), sc::InvariantViolation);
  std::vector<sc::Cyclotomic> neg;
  for (const auto& v : row) neg.push_back(-v);
  EXPECT_THROW(brute.decompose(neg), sc::InvariantViolation);
}

TEST(BruteTable, CharacterTableForm) {
  const auto F = gf(2);
  const so::BruteTable brute(3, F);
  const auto t = so::brute_character_table(brute);
  EXPECT_EQ(t.row_degrees, (std::vector<sc::BigInt>{1, 1, 1, 2, 1}));
  EXPECT_EQ(t.row_selfint, (std::vector<sc::BigInt>{1, 1, 1, 1, 1}));
  EXPECT_EQ(t.col_sizes, (std::vector<sc::BigInt>{1, 2, 2, 1, 2}));
  const auto d = so::brute_delta_decomposition(brute);
  EXPECT_EQ(d.identity_value, 3);
  EXPECT_EQ(d.terms.size(), 2u);
}

TEST(DeltaPoints, Count) {
  // Rows 1 and 2 must both be hit: (q^2 - 1)(q - 1) functionals at n = 3.
  EXPECT_EQ(so::delta_points(3, gf(2)).size(), 3u);
  EXPECT_EQ(so::delta_points(3, gf(3)).size(), 16u);
}
