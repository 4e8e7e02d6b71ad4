#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "ternions/errors.hpp"
#include "ternions/oracles.hpp"
#include "ternions/tmodule.hpp"

using namespace ternions;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F7 = FieldSpec::prime(7);

TernionPair pair_of(const FieldSpec& f, std::array<std::int64_t, 3> a, std::array<std::int64_t, 3> b) {
  return {Ternion::of(f, a[0], a[1], a[2]), Ternion::of(f, b[0], b[1], b[2])};
}

// |T.(A,B)| by listing every left multiple.
std::size_t orbit_size(const TernionPair& pair) {
  std::set<TernionPair> orbit;
  for (const auto& t : enumerate_ternions(pair.field())) orbit.insert(t * pair);
  return orbit.size();
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST(TModule, EmbeddingOrder) {
  const TernionPair p = pair_of(F7, {1, 2, 3}, {4, 5, 6});
  const Vector6 v = embed_pair(p);
  const std::array<std::int64_t, 6> expected{1, 4, 3, 6, 2, 5};
  for (std::size_t n = 0; n < 6; ++n) EXPECT_EQ(v[n].residue(), expected[n]);
  EXPECT_EQ(unembed_pair(v), p);
}

TEST(TModule, FrozenClassifications) {
  const auto x = classify(TernionPair::x0(F3));
  EXPECT_EQ(x.kind, PairClass::X);
  EXPECT_EQ(x.dim, 3u);
  EXPECT_FALSE(x.y_determinant.has_value());

  const auto y = classify(TernionPair::y0(F3));
  EXPECT_EQ(y.kind, PairClass::Y);
  EXPECT_EQ(y.dim, 3u);
  ASSERT_TRUE(y.y_determinant.has_value());
  EXPECT_EQ(*y.y_determinant, Scalar::one(F3));

  EXPECT_EQ(to_string(classify(TernionPair::zero(F3))), "NonFree(0)");
  EXPECT_EQ(to_string(classify(pair_of(F3, {1, 0, 0}, {0, 0, 0}))), "NonFree(1)");
  EXPECT_EQ(to_string(classify(pair_of(F3, {0, 0, 1}, {0, 0, 0}))), "NonFree(2)");
  EXPECT_EQ(to_string(classify(pair_of(F3, {0, 1, 0}, {0, 0, 0}))), "NonFree(1)");
  EXPECT_EQ(to_string(classify(pair_of(F3, {1, 0, 0}, {0, 0, 1}))), "X");
  // (0, E12 + E22) with B = (0, 1, 1): zero first column, a22 d22 - b22 c22 = -1.
  EXPECT_EQ(to_string(classify(pair_of(F3, {0, 0, 0}, {0, 1, 1}))), "NonFree(2)");
  EXPECT_EQ(to_string(classify(pair_of(F3, {0, 0, 1}, {0, 1, 0}))), "Y");
  EXPECT_EQ(to_string(classify(pair_of(F3, {0, 1, 1}, {0, 1, 2}))), "Y");
}

TEST(TModule, Subspace3RejectsRankFour) {
  Vector6 e[4] = {filled<6>(Scalar::zero(F2)), filled<6>(Scalar::zero(F2)),
                  filled<6>(Scalar::zero(F2)), filled<6>(Scalar::zero(F2))};
  for (std::size_t n = 0; n < 4; ++n) e[n][n] = Scalar::one(F2);
  EXPECT_THROW(Subspace3::span(std::span<const Vector6>(e, 4)), RankError);
  EXPECT_EQ(Subspace3::span(std::span<const Vector6>(e, 3)).dim(), 3u);
}

TEST(TModule, PairIndexDigits) {
  EXPECT_EQ(pair_from_index(F3, 0), TernionPair::zero(F3));
  EXPECT_EQ(pair_from_index(F3, 1), pair_of(F3, {0, 0, 0}, {0, 0, 1}));
  EXPECT_EQ(pair_from_index(F3, 243), pair_of(F3, {1, 0, 0}, {0, 0, 0}));
  EXPECT_EQ(pair_count(F3), 729u);
  EXPECT_THROW(pair_count(FieldSpec::rational()), UnsupportedEnumeration);
}

TEST(TModule, CriteriaMatchOraclesExhaustivelyOverF2AndF3) {
  for (const FieldSpec& f : {F2, F3}) {
    const std::size_t q = static_cast<std::size_t>(f.modulus());
    for (std::uint64_t i = 0; i < pair_count(f); ++i) {
      const TernionPair pair = pair_from_index(f, i);
      const Subspace3 sub = cyclic_submodule(pair);
      ASSERT_EQ(orbit_size(pair), ipow(q, sub.dim())) << pair;
      ASSERT_EQ(is_free(pair), oracle::orbit_map_injective(pair)) << pair;
      ASSERT_EQ(is_unimodular(pair), oracle::has_unimodular_witness(pair)) << pair;
    }
  }
}

TEST(TModule, PairCensus) {
  // (X, Y, NonFree(0), NonFree(1), NonFree(2)) fixed from exhaustive enumeration.
  const std::map<std::int64_t, std::array<std::size_t, 5>> expected = {
      {2, {36, 6, 1, 15, 6}}, {3, {576, 48, 1, 80, 24}}};
  for (const auto& [p, counts] : expected) {
    const FieldSpec f = FieldSpec::prime(p);
    std::array<std::size_t, 5> seen{};
    for (std::uint64_t i = 0; i < pair_count(f); ++i) {
      const auto c = classify(pair_from_index(f, i));
      if (c.kind == PairClass::X) ++seen[0];
      else if (c.kind == PairClass::Y) ++seen[1];
      else ++seen[2 + c.dim];
    }
    EXPECT_EQ(seen, counts) << "p = " << p;
  }
}

TEST(TModule, FreeSubmoduleCounts) {
  const std::map<std::int64_t, std::pair<std::size_t, std::size_t>> expected = {
      {2, {18, 3}}, {3, {48, 4}}, {5, {180, 6}}};
  for (const auto& [p, xy] : expected) {
    const FieldSpec f = FieldSpec::prime(p);
    EXPECT_EQ(enumerate_free_submodules(f, ClassFilter::X).size(), xy.first);
    EXPECT_EQ(enumerate_free_submodules(f, ClassFilter::Y).size(), xy.second);
    EXPECT_EQ(enumerate_free_submodules(f, ClassFilter::Both, 3).size(), xy.first + xy.second);
  }
}

TEST(TModule, InvertibleMatrixCountOverF2) {
  std::size_t invertible = 0;
  for (std::uint64_t i = 0; i < 4096; ++i) {
    const auto s = oracle::matrix_from_index(F2, i);
    const bool crit = mat_is_invertible(s);
    invertible += crit ? 1 : 0;
    ASSERT_EQ(crit, oracle::has_inverse(s)) << i;
    ASSERT_EQ(crit, oracle::right_action_is_bijective(s)) << i;
  }
  EXPECT_EQ(invertible, 576u);
}

TEST(TModule, ActionFrozen) {
  const TernionMatrix2 s{Ternion::of(F7, 1, 2, 3), Ternion::of(F7, 4, 5, 6),
                         Ternion::of(F7, 0, 1, 0), Ternion::of(F7, 2, 0, 2)};
  EXPECT_EQ(act(TernionPair::x0(F7), s), (TernionPair{s.s11, s.s12}));
  EXPECT_EQ(act(TernionPair::x0(F7), TernionMatrix2::identity(F7)), TernionPair::x0(F7));
  // Diagonal (1,1)-projection [[1,4],[0,2]] and (2,2)-projection [[3,6],[0,2]] are invertible.
  EXPECT_TRUE(mat_is_invertible(s));
  const TernionMatrix2 singular{Ternion::e11(F7), Ternion::zero(F7), Ternion::zero(F7),
                                Ternion::e11(F7)};
  EXPECT_FALSE(mat_is_invertible(singular));
}

TEST(TModuleProperties, UnitMultiplesGenerateTheSameSubmodule) {
  gen::Gen g;
  for (const FieldSpec& f : {F7, FieldSpec::prime(101), FieldSpec::rational()}) {
    for (int n = 0; n < 200; ++n) {
      const TernionPair pair = g.pair(f);
      const Ternion u = g.unit(f);
      ASSERT_EQ(cyclic_submodule(u * pair), cyclic_submodule(pair));
      ASSERT_EQ(classify(u * pair).kind, classify(pair).kind);
      ASSERT_EQ(classify(u * pair).dim, classify(pair).dim);
    }
  }
}

TEST(TModuleProperties, SubmoduleContainsEveryLeftMultiple) {
  gen::Gen g;
  for (int n = 0; n < 300; ++n) {
    const TernionPair pair = g.pair(FieldSpec::rational());
    const Subspace3 sub = cyclic_submodule(pair);
    const Ternion t = g.ternion(FieldSpec::rational());
    EXPECT_TRUE(sub.contains(embed_pair(t * pair)));
  }
}

TEST(TModuleProperties, InvertibleActionPreservesClass) {
  gen::Gen g;
  for (const FieldSpec& f : {F7, FieldSpec::prime(101), FieldSpec::rational()}) {
    int tested = 0;
    while (tested < 200) {
      const TernionMatrix2 s = g.matrix(f);
      if (!mat_is_invertible(s)) continue;
      ++tested;
      const TernionPair pair = g.pair(f);
      const auto before = classify(pair), after = classify(act(pair, s));
      ASSERT_EQ(before.kind, after.kind);
      ASSERT_EQ(before.dim, after.dim);
    }
  }
}

TEST(TModuleProperties, ActionComposesAndIsAdditive) {
  gen::Gen g;
  for (int n = 0; n < 300; ++n) {
    const TernionPair p = g.pair(F7), r = g.pair(F7);
    const TernionMatrix2 s = g.matrix(F7), t = g.matrix(F7);
    EXPECT_EQ(act(act(p, s), t), act(p, s * t));
    EXPECT_EQ(act(p + r, s), act(p, s) + act(r, s));
  }
}
