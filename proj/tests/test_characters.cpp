#include <gtest/gtest.h>

#include "supercluster/characters.hpp"
#include "supercluster/oracle.hpp"
#include "support.hpp"

namespace sc = supercluster;
using namespace sc::testing;
using sc::Cyclotomic;
using sc::Rational;

TEST(Theta, Values) {
  const auto F2 = gf(2);
  EXPECT_EQ(sc::theta_of(F2, F2.zero()), cint(2, 1));
  EXPECT_EQ(sc::theta_of(F2, F2.one()), cint(2, -1));
  const auto F3 = gf(3);
  EXPECT_EQ(sc::theta_of(F3, F3.one()).coeffs(), (std::vector<Rational>{0, 1}));
  const auto F4 = gf(4);
  EXPECT_EQ(sc::theta_of(F4, F4.one()), cint(2, 1));
  EXPECT_EQ(sc::theta_of(F4, F4.from_coeffs({0, 1})), cint(2, -1));
}

TEST(FourierValue, Examples) {
  const auto F = gf(2);
  EXPECT_EQ(sc::fourier_value(F, sc::Functional(3), uni(F, 3, {{1, 2, 1}, {1, 3, 1}})), cint(2, 1));
  EXPECT_EQ(sc::fourier_value(F, fun(F, 3, {{1, 3, 1}}), uni(F, 3, {{1, 3, 1}})), cint(2, -1));
  EXPECT_EQ(sc::fourier_value(F, fun(F, 3, {{1, 2, 1}}), uni(F, 3, {{2, 3, 1}})), cint(2, 1));
}

TEST(CharValueClosed, Examples) {
  const auto F = gf(2);
  const auto e13 = tmpl(F, 3, "(1,3)=1");
  EXPECT_EQ(sc::char_value_closed(F, e13, e13), cint(2, -2));
  EXPECT_EQ(sc::char_value_closed(F, e13, tmpl(F, 3, "(1,2)=1")), cint(2, 0));
  for (int q : {2, 3}) {
    const auto Fq = gf(q);
    for (const auto& t : sc::enumerate_templates(4, Fq)) {
      EXPECT_EQ(sc::char_value_closed(Fq, t, sc::Template(4)), Cyclotomic(Fq.p(), Rational(sc::degree(Fq, t))));
    }
  }
}

TEST(CharValueSum, Examples) {
  const auto F = gf(2);
  const auto e13 = tmpl(F, 3, "(1,3)=1");
  EXPECT_EQ(sc::char_value_sum(F, sc::Template(3), uni(F, 3, {{1, 2, 1}})), cint(2, 1));
  EXPECT_EQ(sc::char_value_sum(F, e13, uni(F, 3, {{1, 3, 1}})), cint(2, -2));
  EXPECT_EQ(sc::char_value_sum(F, e13, uni(F, 3, {{1, 2, 1}, {1, 3, 1}})), cint(2, 0));
  EXPECT_THROW(sc::char_value_sum(F, tmpl(F, 4, "(1,4)=1"), uni(F, 4, {}), 8), sc::ResourceLimitError);
}

TEST(Degree, Examples) {
  const auto F2 = gf(2);
  EXPECT_EQ(sc::degree(F2, sc::Template(3)), 1);
  EXPECT_EQ(sc::self_intertwining(F2, sc::Template(3)), 1);
  EXPECT_EQ(sc::degree(F2, tmpl(F2, 3, "(1,3)=1")), 2);
  EXPECT_EQ(sc::self_intertwining(F2, tmpl(F2, 3, "(1,3)=1")), 1);
  const auto F3 = gf(3);
  EXPECT_EQ(sc::degree(F3, tmpl(F3, 4, "(1,4)=1")), 9);
  EXPECT_EQ(sc::self_intertwining(F3, tmpl(F3, 4, "(1,4)=1")), 1);
}

TEST(BuildTable, N2Q2) {
  const auto F = gf(2);
  const auto t = sc::build_table(2, F);
  ASSERT_EQ(t.values.size(), 2u);
  EXPECT_EQ(t.values[0], (std::vector<Cyclotomic>{cint(2, 1), cint(2, 1)}));
  EXPECT_EQ(t.values[1], (std::vector<Cyclotomic>{cint(2, 1), cint(2, -1)}));
  EXPECT_TRUE(sc::verify_axioms(t).ok());
}

TEST(BuildTable, N3Q2) {
  const auto F = gf(2);
  const auto t = sc::build_table(3, F);
  ASSERT_EQ(t.rows.size(), 5u);
  EXPECT_EQ(t.cols, sc::enumerate_templates(3, F));
  const std::size_t e13 = 3;
  ASSERT_EQ(t.rows[e13], tmpl(F, 3, "(1,3)=1"));
  EXPECT_EQ(t.values[e13], (std::vector<Cyclotomic>{cint(2, 2), cint(2, 0), cint(2, 0), cint(2, -2), cint(2, 0)}));
  EXPECT_EQ(t.identity_col(), 0u);
  EXPECT_EQ(t.group_order(), 8);
  // Regular character at the identity: 1 + 1 + 1 + 2*2 + 1.
  Cyclotomic reg(2);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    reg += t.values[r][0] * Rational(t.row_degrees[r] / t.row_selfint[r]);
  }
  EXPECT_EQ(reg, cint(2, 8));
  EXPECT_TRUE(sc::verify_axioms(t).ok());
}

TEST(BuildTable, FirstRowTrivialAndJobsIndependent) {
  for (int q : {2, 3, 4}) {
    const auto F = gf(q);
    sc::TableOptions one;
    one.jobs = 1;
    sc::TableOptions many;
    many.jobs = 3;
    const auto a = sc::build_table(4, F, one);
    EXPECT_EQ(a, sc::build_table(4, F, many));
    for (const auto& v : a.values[0]) EXPECT_EQ(v, cint(F.p(), 1));
  }
  sc::TableOptions capped;
  capped.template_cap = 10;
  EXPECT_THROW(sc::build_table(4, gf(2), capped), sc::ResourceLimitError);
}

TEST(InnerProduct, Examples) {
  const auto F = gf(2);
  const auto t = sc::build_table(3, F);
  EXPECT_EQ(sc::inner_product(t, t.values[0], t.values[0]), cint(2, 1));
  EXPECT_EQ(sc::inner_product(t, t.values[3], t.values[3]), cint(2, 1));
  EXPECT_EQ(sc::inner_product(t, t.values[1], t.values[3]), cint(2, 0));
}

TEST(VerifyAxioms, PassesAndDetectsCorruption) {
  const auto F = gf(3);
  auto t = sc::build_table(4, F);
  EXPECT_TRUE(sc::verify_axioms(t).ok());
  t.values[5][7] = t.values[5][7] + cint(3, 1);
  EXPECT_FALSE(sc::verify_axioms(t).ok());
  auto u = sc::build_table(3, F);
  u.col_sizes[1] += 1;
  EXPECT_FALSE(sc::verify_axioms(u).ok());
}

namespace {

struct Space {
  int n;
  int q;
  friend std::ostream& operator<<(std::ostream& os, const Space& s) { return os << "n=" << s.n << " q=" << s.q; }
};

class CharacterLaws : public ::testing::TestWithParam<Space> {};

}  // namespace

// Every cell three ways, plus constancy of the Fourier sum on superclasses.
TEST_P(CharacterLaws, AgreeWithOracle) {
  const auto [n, q] = GetParam();
  const auto F = gf(q);
  const sc::oracle::BruteTable brute(n, F);
  const auto table = sc::build_table(n, F);
  ASSERT_EQ(table.rows, brute.rows());
  ASSERT_EQ(table.cols, brute.cols());
  EXPECT_EQ(table.values, brute.values());
  const auto& adj = brute.adjoint_orbits();
  const sc::PointCodec codec(F, n);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& tau = table.rows[r];
    const auto cluster = sc::cluster_elements(F, tau);
    for (std::size_t c = 0; c < table.cols.size(); ++c) {
      EXPECT_EQ(sc::char_value_closed(F, tau, table.cols[c]), brute.values()[r][c]);
      EXPECT_EQ(sc::char_value_sum(F, tau, cluster, sc::UniMatrix(table.cols[c].matrix())), brute.values()[r][c]);
    }
    // Every group element, through its superclass.
    for (std::uint64_t code = 0; code < codec.size(); code += (codec.size() > 100 ? 7 : 1)) {
      const std::size_t c = brute.col_index(adj.representatives[adj.orbit_id[code]]);
      EXPECT_EQ(sc::char_value_sum(F, tau, cluster, sc::UniMatrix(codec.decode_matrix(code))), table.values[r][c]);
    }
    for (std::size_t s = 0; s < table.rows.size(); ++s) {
      const auto ip = sc::inner_product(table, table.values[r], table.values[s]);
      EXPECT_EQ(ip, Cyclotomic(F.p(), r == s ? Rational(table.row_selfint[r]) : Rational(0)));
    }
    EXPECT_EQ(table.row_selfint[r] == 1, sc::invariants_of(tau).i == 0);
    if (sc::invariants_of(tau).i == 0) {
      std::map<sc::Template, Cyclotomic> by_col;
      for (std::size_t c = 0; c < table.cols.size(); ++c) by_col.emplace(table.cols[c], table.values[r][c]);
      const auto full = sc::oracle::expand_to_group(F, adj, by_col);
      EXPECT_EQ(sc::oracle::brute_inner(F, n, full, full), cint(F.p(), 1));
    }
  }
  sc::CycMatrix weighted = table.values;
  for (auto& row : weighted) {
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = row[c] * Rational(table.col_sizes[c]);
  }
  EXPECT_EQ(sc::rank(weighted), static_cast<int>(table.rows.size()));
  EXPECT_TRUE(sc::verify_axioms(table).ok());
}

INSTANTIATE_TEST_SUITE_P(Small, CharacterLaws,
                         ::testing::Values(Space{2, 2}, Space{3, 2}, Space{3, 3}, Space{3, 4}, Space{3, 5},
                                           Space{4, 2}, Space{4, 3}),
                         [](const auto& info) {
                           return "n" + std::to_string(info.param.n) + "_q" + std::to_string(info.param.q);
                         });
