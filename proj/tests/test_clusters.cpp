#include <gtest/gtest.h>

#include <set>

#include "supercluster/clusters.hpp"
#include "supercluster/oracle.hpp"
#include "support.hpp"

namespace sc = supercluster;
using namespace sc::testing;
using sc::BigInt;

TEST(Template, ValidationAndText) {
  const auto F = gf(3);
  EXPECT_THROW(sc::Template(3, {{1, 2, F.one()}, {1, 3, F.one()}}), sc::ArgumentError);
  EXPECT_THROW(sc::Template(3, {{1, 3, F.one()}, {2, 3, F.one()}}), sc::ArgumentError);
  EXPECT_THROW(sc::Template(3, {{1, 3, F.zero()}}), sc::ArgumentError);
  EXPECT_THROW(sc::Template(3, {{2, 2, F.one()}}), sc::ArgumentError);
  const auto t = tmpl(F, 3, "(2,3)=1;(1,2)=2");
  EXPECT_EQ(sc::format_template(F, t), "(1,2)=2;(2,3)=1");
  EXPECT_EQ(sc::format_template(F, sc::Template(3)), "0");
  EXPECT_EQ(tmpl(F, 3, "0"), sc::Template(3));
  EXPECT_THROW(tmpl(F, 3, "(1,2)"), sc::ArgumentError);
  EXPECT_THROW(sc::Template::from_functional(fun(F, 3, {{1, 2, 1}, {1, 3, 1}})), sc::ArgumentError);
  const auto F4 = gf(4);
  const auto t4 = tmpl(F4, 3, "(1,3)=[0,1]");
  EXPECT_EQ(sc::format_template(F4, t4), "(1,3)=[0,1]");
}

TEST(AdjointTemplate, Examples) {
  const auto F = gf(2);
  EXPECT_EQ(sc::adjoint_template_of(F, sc::NilMatrix(3)).tmpl, sc::Template(3));
  // X (I + e23) = e12, and rank(1, 2, .) separates e12 + e13 from e13.
  EXPECT_EQ(sc::adjoint_template_of(F, nil(F, 3, {{1, 3, 1}, {1, 2, 1}})).tmpl, tmpl(F, 3, "(1,2)=1"));
  EXPECT_EQ(sc::adjoint_template_of(F, nil(F, 3, {{1, 3, 1}, {2, 3, 1}})).tmpl, tmpl(F, 3, "(2,3)=1"));
  EXPECT_EQ(sc::adjoint_template_of(F, nil(F, 3, {{1, 2, 1}, {2, 3, 1}})).tmpl, tmpl(F, 3, "(1,2)=1;(2,3)=1"));
}

TEST(CoadjointTemplate, Examples) {
  const auto F = gf(2);
  EXPECT_EQ(sc::coadjoint_template_of(F, sc::Functional(3)).tmpl, sc::Template(3));
  EXPECT_EQ(sc::coadjoint_template_of(F, fun(F, 3, {{1, 3, 1}, {2, 3, 1}})).tmpl, tmpl(F, 3, "(1,3)=1"));
  EXPECT_EQ(sc::coadjoint_template_of(F, fun(F, 3, {{1, 2, 1}, {2, 3, 1}})).tmpl,
            tmpl(F, 3, "(1,2)=1;(2,3)=1"));
}

TEST(RankInvariant, Examples) {
  const auto F = gf(3);
  EXPECT_EQ(sc::rank_invariant(F, 1, 4, sc::NilMatrix(4)), 0);
  EXPECT_EQ(sc::rank_invariant(F, 1, 3, nil(F, 3, {{1, 2, 1}, {2, 3, 1}})), 2);
  EXPECT_EQ(sc::rank_invariant_dual(F, 2, 3, fun(F, 3, {{1, 3, 1}})), 1);
  EXPECT_EQ(sc::rank_invariant_dual(F, 1, 2, fun(F, 3, {{2, 3, 1}})), 0);
}

TEST(Invariants, Examples) {
  const auto F = gf(2);
  const auto a = sc::invariants_of(tmpl(F, 3, "(1,3)=1"));
  EXPECT_EQ(a.d, 1);
  EXPECT_EQ(a.i, 0);
  EXPECT_EQ(a.d_rows, (std::vector<int>{0, 1}));
  const auto b = sc::invariants_of(tmpl(F, 3, "(1,2)=1;(2,3)=1"));
  EXPECT_EQ(b.d, 0);
  EXPECT_EQ(b.i, 0);
  const auto c = sc::invariants_of(tmpl(F, 4, "(1,4)=1;(2,3)=1"));
  EXPECT_EQ(c.d, 2);
  EXPECT_EQ(c.i, 0);
  // One L-hook corner at (2,3): (1,3) above-right... rows 1,2 and columns 3,4.
  const auto h = sc::invariants_of(tmpl(F, 4, "(1,3)=1;(2,4)=1"));
  EXPECT_EQ(h.d, 2);
  EXPECT_EQ(h.i, 1);
}

TEST(OrbitDims, Examples) {
  const auto F = gf(2);
  const auto zero = sc::orbit_dims(F, sc::Functional(3));
  EXPECT_EQ(std::tie(zero.lhat, zero.rhat, zero.intersection), std::make_tuple(0, 0, 0));
  for (const auto& f : {fun(F, 3, {{1, 3, 1}}), fun(F, 3, {{1, 3, 1}, {1, 2, 1}})}) {
    const auto d = sc::orbit_dims(F, f);
    EXPECT_EQ(std::tie(d.lhat, d.rhat, d.intersection), std::make_tuple(1, 1, 0));
  }
  EXPECT_EQ(sc::lhat_basis(F, fun(F, 3, {{1, 3, 1}})), (std::vector<sc::Functional>{fun(F, 3, {{1, 2, 1}})}));
  EXPECT_EQ(sc::rhat_basis(F, fun(F, 3, {{1, 3, 1}})), (std::vector<sc::Functional>{fun(F, 3, {{2, 3, 1}})}));
}

TEST(ClusterSize, Examples) {
  const auto F = gf(2);
  EXPECT_EQ(sc::cluster_size(F, sc::Template(3)), 1);
  EXPECT_EQ(sc::cluster_size(F, tmpl(F, 3, "(1,3)=1")), 4);
  std::vector<BigInt> sizes;
  BigInt total = 0;
  for (const auto& t : sc::enumerate_templates(3, F)) {
    sizes.push_back(sc::cluster_size(F, t));
    total += sizes.back();
  }
  EXPECT_EQ(sizes, (std::vector<BigInt>{1, 1, 1, 4, 1}));
  EXPECT_EQ(total, 8);
}

TEST(PrimaryComponents, Examples) {
  const auto F = gf(3);
  EXPECT_TRUE(sc::primary_components(sc::Template(3)).empty());
  const auto one = sc::primary_components(tmpl(F, 3, "(1,3)=1"));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (sc::Cell{1, 3, F.one()}));
  const auto two = sc::primary_components(tmpl(F, 3, "(1,2)=2;(2,3)=1"));
  EXPECT_EQ(two, (std::vector<sc::Cell>{{1, 2, F.from_int(2)}, {2, 3, F.one()}}));
}

TEST(EnumerateTemplates, Examples) {
  const auto F = gf(2);
  EXPECT_EQ(sc::enumerate_templates(2, F), (std::vector<sc::Template>{sc::Template(2), tmpl(F, 2, "(1,2)=1")}));
  const std::vector<sc::Template> n3{sc::Template(3), tmpl(F, 3, "(1,2)=1"), tmpl(F, 3, "(2,3)=1"),
                                     tmpl(F, 3, "(1,3)=1"), tmpl(F, 3, "(1,2)=1;(2,3)=1")};
  EXPECT_EQ(sc::enumerate_templates(3, F), n3);
  EXPECT_EQ(sc::enumerate_templates(4, F).size(), 15u);
  EXPECT_EQ(sc::enumerate_templates(1, F), (std::vector<sc::Template>{sc::Template(1)}));
  EXPECT_THROW(sc::enumerate_templates(5, F, 40), sc::ResourceLimitError);
}

TEST(BellPoly, ClosedForms) {
  for (long long q = 2; q <= 13; ++q) {
    const BigInt m = q - 1;
    EXPECT_EQ(sc::bell_poly(0, q), 1);
    EXPECT_EQ(sc::bell_poly(1, q), 1);
    EXPECT_EQ(sc::bell_poly(2, q), q);
    EXPECT_EQ(sc::bell_poly(3, q), 1 + 3 * m + m * m);
    EXPECT_EQ(sc::bell_poly(4, q), 1 + 6 * m + 7 * m * m + m * m * m);
  }
  // q = 2 gives the Bell numbers.
  EXPECT_EQ(sc::bell_poly(5, 2), 52);
  EXPECT_EQ(sc::bell_poly(6, 2), 203);
  EXPECT_EQ(sc::bell_poly(4, 2), 15);
}

TEST(BellPoly, MatchesEnumeration) {
  for (int q : {2, 3, 4, 5}) {
    const auto F = gf(q);
    for (int n = 1; n <= (q <= 3 ? 5 : 4); ++n) {
      EXPECT_EQ(BigInt(sc::enumerate_templates(n, F).size()), sc::bell_poly(n, q)) << n << " " << q;
    }
  }
}

// Per-template invariants against rank computations.
TEST(InvariantLaws, TemplatesUpToN4) {
  for (int q : {2, 3}) {
    const auto F = gf(q);
    for (int n = 2; n <= 4; ++n) {
      for (const auto& t : sc::enumerate_templates(n, F)) {
        const auto inv = sc::invariants_of(t);
        const auto dims = sc::orbit_dims(F, t.functional());
        EXPECT_EQ(dims.lhat, inv.d) << sc::format_template(F, t);
        EXPECT_EQ(dims.rhat, inv.d);
        EXPECT_EQ(dims.intersection, inv.i);
        EXPECT_GE(inv.i, 0);
        EXPECT_LE(inv.i, inv.d);
        int sum = 0;
        for (int v : inv.d_rows) sum += v;
        EXPECT_EQ(sum, inv.d);
        EXPECT_EQ(static_cast<int>(sc::lhat_basis(F, t.functional()).size()), dims.lhat);
        EXPECT_EQ(static_cast<int>(sc::rhat_basis(F, t.functional()).size()), dims.rhat);
        EXPECT_EQ(sc::coadjoint_template_of(F, t.functional()).tmpl, t);
        EXPECT_EQ(sc::adjoint_template_of(F, t.matrix()).tmpl, t);
      }
    }
  }
}

namespace {

struct Space {
  int n;
  int q;
  friend std::ostream& operator<<(std::ostream& os, const Space& s) { return os << "n=" << s.n << " q=" << s.q; }
};

class ClassificationLaws : public ::testing::TestWithParam<Space> {};

}  // namespace

// Exhaustive: classifier = oracle orbit template, witnesses reproduce the
// template, rank invariants and orbit dimensions constant on clusters.
TEST_P(ClassificationLaws, AgreeWithOracle) {
  const auto [n, q] = GetParam();
  const auto F = gf(q);
  const sc::PointCodec codec(F, n);
  const auto dual = sc::oracle::decompose_dual(n, F);
  const auto adj = sc::oracle::decompose_adjoint(n, F);
  for (std::uint64_t c = 0; c < codec.size(); ++c) {
    const auto f = codec.decode_functional(c);
    const auto red = sc::coadjoint_template_of(F, f);
    const auto& rep = dual.representatives[dual.orbit_id[c]];
    ASSERT_EQ(red.tmpl, rep);
    EXPECT_EQ(sc::coact_right(F, sc::coact_left(F, red.left, f), red.right), red.tmpl.functional());
    const auto x = codec.decode_matrix(c);
    const auto ared = sc::adjoint_template_of(F, x);
    ASSERT_EQ(ared.tmpl, adj.representatives[adj.orbit_id[c]]);
    EXPECT_EQ(sc::act_right(F, sc::act_left(F, ared.left, x), ared.right), ared.tmpl.matrix());
    const auto& arep = adj.representatives[adj.orbit_id[c]];
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        EXPECT_EQ(sc::rank_invariant_dual(F, i, j, f), sc::rank_invariant_dual(F, i, j, rep.functional()));
        EXPECT_EQ(sc::rank_invariant(F, i, j, x), sc::rank_invariant(F, i, j, arep.matrix()));
      }
    }
    const auto dims = sc::orbit_dims(F, f);
    const auto inv = sc::invariants_of(rep);
    EXPECT_EQ(dims.lhat, inv.d);
    EXPECT_EQ(dims.intersection, inv.i);
  }
  // Orbit sizes and the structural cluster generator.
  std::vector<std::set<std::uint64_t>> members(dual.sizes.size());
  for (std::uint64_t c = 0; c < codec.size(); ++c) members[dual.orbit_id[c]].insert(c);
  BigInt total = 0;
  for (std::size_t o = 0; o < members.size(); ++o) {
    const auto& t = dual.representatives[o];
    EXPECT_EQ(BigInt(dual.sizes[o]), sc::cluster_size(F, t));
    std::set<std::uint64_t> gen;
    for (const auto& f : sc::cluster_elements(F, t)) gen.insert(codec.encode(f));
    EXPECT_EQ(gen, members[o]);
    total += sc::cluster_size(F, t);
  }
  EXPECT_EQ(total, BigInt(codec.size()));
  for (std::size_t o = 0; o < adj.sizes.size(); ++o) {
    EXPECT_EQ(BigInt(adj.sizes[o]), sc::adjoint_cluster_size(F, adj.representatives[o]));
  }
  EXPECT_EQ(BigInt(dual.representatives.size()), sc::bell_poly(n, q));
  EXPECT_EQ(BigInt(adj.representatives.size()), sc::bell_poly(n, q));
}

INSTANTIATE_TEST_SUITE_P(Small, ClassificationLaws,
                         ::testing::Values(Space{2, 2}, Space{3, 2}, Space{3, 3}, Space{3, 4}, Space{4, 2}),
                         [](const auto& info) {
                           return "n" + std::to_string(info.param.n) + "_q" + std::to_string(info.param.q);
                         });

TEST(ClusterElements, Cap) {
  const auto F = gf(3);
  EXPECT_THROW(sc::cluster_elements(F, tmpl(F, 4, "(1,4)=1"), 10), sc::ResourceLimitError);
  EXPECT_EQ(sc::cluster_elements(F, tmpl(F, 4, "(1,4)=1")).size(), 81u);
}

TEST(SpanElements, Counts) {
  const auto F = gf(3);
  const auto pts = sc::span_elements(F, 3, {fun(F, 3, {{1, 2, 1}}), fun(F, 3, {{1, 3, 1}, {2, 3, 1}})});
  EXPECT_EQ(pts.size(), 9u);
  EXPECT_EQ(std::set<sc::Functional>(pts.begin(), pts.end()).size(), 9u);
}
