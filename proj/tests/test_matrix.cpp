#include <gtest/gtest.h>

#include <random>

#include "supercluster/matrix.hpp"
#include "support.hpp"

namespace sc = supercluster;
using namespace sc::testing;

namespace {

std::vector<sc::UniMatrix> all_group(const sc::Field& F, int n) {
  const sc::PointCodec codec(F, n);
  std::vector<sc::UniMatrix> out;
  for (std::uint64_t c = 0; c < codec.size(); ++c) out.emplace_back(codec.decode_matrix(c));
  return out;
}

sc::NilMatrix random_nil(const sc::Field& F, int n, std::mt19937_64& rng) {
  const sc::PointCodec codec(F, n);
  return codec.decode_matrix(std::uniform_int_distribution<std::uint64_t>(0, codec.size() - 1)(rng));
}

}  // namespace

TEST(GroupMul, Examples) {
  const auto F = gf(2);
  EXPECT_EQ(sc::group_mul(F, uni(F, 3, {{1, 2, 1}}), uni(F, 3, {{2, 3, 1}})),
            uni(F, 3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}}));
  const auto g = uni(F, 3, {{1, 2, 1}, {1, 3, 1}});
  EXPECT_EQ(sc::group_mul(F, g, sc::UniMatrix::identity(3)), g);
  EXPECT_EQ(sc::group_mul(F, uni(F, 3, {{1, 2, 1}}), uni(F, 3, {{1, 2, 1}})), sc::UniMatrix::identity(3));
}

TEST(GroupInv, Examples) {
  const auto F = gf(3);
  EXPECT_EQ(sc::group_inv(F, sc::UniMatrix::identity(3)), sc::UniMatrix::identity(3));
  EXPECT_EQ(sc::group_inv(F, uni(F, 3, {{1, 3, 1}})), uni(F, 3, {{1, 3, -1}}));
  EXPECT_EQ(sc::group_inv(F, uni(F, 3, {{1, 2, 1}, {2, 3, 1}})), uni(F, 3, {{1, 2, -1}, {2, 3, -1}, {1, 3, 1}}));
}

TEST(Actions, Examples) {
  const auto F = gf(2);
  const auto e23 = nil(F, 3, {{2, 3, 1}});
  EXPECT_EQ(sc::act_left(F, sc::UniMatrix::identity(3), e23), e23);
  EXPECT_EQ(sc::act_left(F, uni(F, 3, {{1, 2, 1}}), e23), nil(F, 3, {{2, 3, 1}, {1, 3, 1}}));
  EXPECT_EQ(sc::act_adjoint(F, uni(F, 3, {{1, 2, 1}}), e23), nil(F, 3, {{2, 3, 1}, {1, 3, 1}}));
  EXPECT_EQ(sc::act_right(F, nil(F, 3, {{1, 2, 1}}), uni(F, 3, {{2, 3, 1}})), nil(F, 3, {{1, 2, 1}, {1, 3, 1}}));
}

TEST(Coactions, Examples) {
  const auto F = gf(3);
  const auto eps13 = fun(F, 3, {{1, 3, 1}});
  EXPECT_EQ(sc::coact_left(F, sc::UniMatrix::identity(3), eps13), eps13);
  for (int a = 1; a < 3; ++a) {
    EXPECT_EQ(sc::coact_left(F, uni(F, 3, {{1, 2, a}}), eps13), eps13);
    EXPECT_EQ(sc::coact_left(F, uni(F, 3, {{2, 3, a}}), eps13), fun(F, 3, {{1, 3, 1}, {1, 2, a}}));
    EXPECT_EQ(sc::coact_right(F, eps13, uni(F, 3, {{1, 2, a}})), fun(F, 3, {{1, 3, 1}, {2, 3, a}}));
  }
}

TEST(Eval, Examples) {
  const auto F3 = gf(3);
  EXPECT_EQ(sc::eval(F3, fun(F3, 3, {{1, 3, 1}}), nil(F3, 3, {{1, 3, 1}})), F3.one());
  EXPECT_EQ(sc::eval(F3, fun(F3, 3, {{1, 3, 1}}), nil(F3, 3, {{1, 2, 1}})), F3.zero());
  EXPECT_EQ(sc::eval(F3, fun(F3, 3, {{1, 2, 2}, {2, 3, 1}}), nil(F3, 3, {{1, 2, 1}, {2, 3, 1}})), F3.zero());
}

TEST(Rank, Examples) {
  const auto F = gf(2);
  EXPECT_EQ(sc::rank(F, sc::NilMatrix(4)), 0);
  EXPECT_EQ(sc::rank(F, nil(F, 3, {{1, 2, 1}, {2, 3, 1}})), 2);
  EXPECT_EQ(sc::rank(F, nil(F, 3, {{1, 2, 1}, {1, 3, 1}})), 1);
  EXPECT_EQ(sc::rank(F, nil(F, 4, {{1, 3, 1}, {2, 3, 1}, {1, 4, 1}, {2, 4, 1}})), 1);
}

TEST(Sparse, StoresOnlyNonZeroUpperEntries) {
  const auto F = gf(3);
  auto x = nil(F, 3, {{1, 2, 1}});
  x.set(1, 2, F.zero());
  EXPECT_TRUE(x.is_zero());
  EXPECT_THROW(x.set(2, 2, F.one()), sc::ArgumentError);
  EXPECT_THROW(x.at(3, 1), sc::ArgumentError);
  EXPECT_THROW(sc::NilMatrix(0), sc::ArgumentError);
}

TEST(PointCodec, RoundTripAndOrder) {
  const auto F = gf(3);
  const sc::PointCodec codec(F, 3);
  EXPECT_EQ(codec.size(), 27u);
  for (std::uint64_t c = 0; c < codec.size(); ++c) {
    EXPECT_EQ(codec.encode(codec.decode_functional(c)), c);
    EXPECT_EQ(codec.encode(codec.decode_matrix(c)), c);
  }
  EXPECT_EQ(codec.decode_matrix(1), nil(F, 3, {{2, 3, 1}}));
  EXPECT_EQ(codec.decode_matrix(9), nil(F, 3, {{1, 2, 1}}));
}

// Properties over all of U(3, F_2) and u(3, F_2).
TEST(ActionLaws, ExhaustiveN3Q2) {
  const auto F = gf(2);
  const auto group = all_group(F, 3);
  const sc::PointCodec codec(F, 3);
  for (const auto& g : group) {
    const auto ginv = sc::group_inv(F, g);
    EXPECT_TRUE(sc::group_mul(F, g, ginv).is_identity());
    for (const auto& h : group) {
      for (std::uint64_t c = 0; c < codec.size(); ++c) {
        const auto x = codec.decode_matrix(c);
        const auto lam = codec.decode_functional(c);
        EXPECT_EQ(sc::act_left(F, g, sc::act_right(F, x, h)), sc::act_right(F, sc::act_left(F, g, x), h));
        EXPECT_EQ(sc::coact_left(F, g, sc::coact_right(F, lam, h)),
                  sc::coact_right(F, sc::coact_left(F, g, lam), h));
        EXPECT_EQ(sc::eval(F, sc::coact_left(F, g, lam), x), sc::eval(F, lam, sc::act_right(F, x, g)));
        EXPECT_EQ(sc::eval(F, sc::coact_right(F, lam, g), x), sc::eval(F, lam, sc::act_left(F, g, x)));
        EXPECT_EQ(sc::conjugate(F, h, sc::UniMatrix(x)), sc::UniMatrix(sc::act_adjoint(F, h, x)));
      }
      EXPECT_EQ(sc::group_mul(F, sc::group_mul(F, g, h), ginv), sc::conjugate(F, g, h));
    }
    for (std::uint64_t c = 0; c < codec.size(); ++c) {
      const auto lam = codec.decode_functional(c);
      EXPECT_EQ(sc::coact_right(F, sc::coact_left(F, g, lam), ginv), sc::coact_coadjoint(F, lam, g));
    }
  }
}

TEST(ActionLaws, SampledN4Q3) {
  const auto F = gf(3);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const sc::UniMatrix g(random_nil(F, 4, rng));
    const sc::UniMatrix h(random_nil(F, 4, rng));
    const auto x = random_nil(F, 4, rng);
    const auto lam = sc::to_functional(random_nil(F, 4, rng));
    const auto ginv = sc::group_inv(F, g);
    EXPECT_TRUE(sc::group_mul(F, ginv, g).is_identity());
    EXPECT_EQ(sc::coact_right(F, sc::coact_left(F, g, lam), ginv), sc::coact_coadjoint(F, lam, g));
    EXPECT_EQ(sc::act_left(F, g, sc::act_right(F, x, h)), sc::act_right(F, sc::act_left(F, g, x), h));
    EXPECT_EQ(sc::eval(F, sc::coact_left(F, g, lam), x), sc::eval(F, lam, sc::act_right(F, x, g)));
    EXPECT_EQ(sc::rank(F, sc::act_adjoint(F, h, x)), sc::rank(F, x));
  }
}
