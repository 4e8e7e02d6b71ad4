#include <gtest/gtest.h>

#include "generators.hpp"
#include "ternions/errors.hpp"
#include "ternions/json_io.hpp"
#include "ternions/parallel.hpp"
#include "ternions/point_sets.hpp"

using namespace ternions;
using nlohmann::json;

TEST(JsonIo, FrozenShapes) {
  const FieldSpec f = FieldSpec::prime(5);
  EXPECT_EQ(json_io::to_json(Ternion::of(f, 1, 2, 3)), json({{"a11", "1"}, {"a12", "2"}, {"a22", "3"}}));
  const json p = json_io::to_json(RestrictedPoint::of(f, {1, 0, 0, 0, 0, 0, 0, 4}));
  EXPECT_EQ(p["p135"], "1");
  EXPECT_EQ(p["p456"], "4");
  EXPECT_EQ(p.size(), 8u);
  const json params = json_io::to_json(Params{YParams::of(f, 1, 0, 0, 1)});
  EXPECT_EQ(params["kind"], "Y");
  EXPECT_EQ(json_io::to_json(plucker(cyclic_submodule(TernionPair::x0(f)))).size(), 20u);
  const json sub = json_io::to_json(cyclic_submodule(TernionPair::x0(f)));
  EXPECT_EQ(sub["dim"], 3);
  EXPECT_EQ(sub["basis"].size(), 3u);
}

TEST(JsonIo, ParsersAcceptStringsAndIntegers) {
  const FieldSpec f = FieldSpec::prime(7);
  EXPECT_EQ(json_io::scalar_from_json(f, json(-1)), Scalar(f, 6));
  EXPECT_EQ(json_io::scalar_from_json(f, json("10")), Scalar(f, 3));
  const json pair = {{"A", {{"a11", 1}, {"a12", 0}, {"a22", 1}}},
                     {"B", {{"a11", "0"}, {"a12", "0"}, {"a22", "0"}}}};
  EXPECT_EQ(json_io::pair_from_json(f, pair), TernionPair::x0(f));
  EXPECT_THROW(json_io::ternion_from_json(f, json({{"a11", 1}})), UsageError);
  EXPECT_THROW(json_io::rows_from_json(f, json::array({json::array({1, 2})})), UsageError);
  EXPECT_THROW(json_io::scalar_from_json(f, json(true)), UsageError);
}

TEST(JsonIoProperties, RoundTrips) {
  gen::Gen g;
  for (const FieldSpec& f : {FieldSpec::prime(101), FieldSpec::rational()}) {
    for (int n = 0; n < 200; ++n) {
      const TernionPair pair = g.pair(f);
      ASSERT_EQ(json_io::pair_from_json(f, json_io::to_json(pair)), pair);
      const RestrictedPoint p = param_x(g.unimodular_x(f));
      ASSERT_EQ(json_io::restricted_from_json(f, json_io::to_json(p)), p);
      const Scalar s = g.scalar(f);
      ASSERT_EQ(json_io::scalar_from_json(f, json_io::to_json(s)), s);
    }
  }
}

TEST(Parallel, CollectIsOrderedAndPropagatesErrors) {
  auto squares = [](std::uint64_t i, std::vector<std::uint64_t>& out) { out.push_back(i * i); };
  const auto serial = parallel_collect<std::uint64_t>(1000, 1, squares);
  EXPECT_EQ(parallel_collect<std::uint64_t>(1000, 8, squares), serial);
  EXPECT_EQ(parallel_collect<std::uint64_t>(3, 8, squares).size(), 3u);
  EXPECT_THROW(parallel_collect<int>(100, 4,
                                     [](std::uint64_t i, std::vector<int>&) {
                                       if (i == 77) throw InvalidParameters("boom");
                                     }),
               InvalidParameters);
  std::vector<int> v = {3, 1, 3, 2, 1};
  sort_unique(v);
  EXPECT_EQ(v, (std::vector<int>{1, 2, 3}));
}

TEST(ModelProperties, ActionInducesAProjectivityOnImages) {
  // Right multiplication by an invertible S is linear on F^6, so it maps the
  // variety to itself.
  gen::Gen g;
  const FieldSpec f = FieldSpec::prime(101);
  int tested = 0;
  while (tested < 200) {
    const TernionMatrix2 s = g.matrix(f);
    if (!mat_is_invertible(s)) continue;
    const TernionPair pair = g.pair(f);
    if (!is_free(pair)) continue;
    ++tested;
    const RestrictedPoint moved = restrict_to_ambient(plucker(cyclic_submodule(act(pair, s))));
    ASSERT_TRUE(is_on_variety(moved));
    ASSERT_EQ(moved.segre_block_zero(), !is_unimodular(pair));
  }
}

TEST(ModelProperties, FreeRandomPairsLandOnTheVariety) {
  gen::Gen g;
  for (const FieldSpec& f : {FieldSpec::prime(65537), FieldSpec::rational()}) {
    for (int n = 0; n < 300; ++n) {
      const TernionPair pair = g.pair(f);
      const auto cls = classify(pair);
      if (cls.kind == PairClass::NonFree) {
        ASSERT_THROW(plucker(cyclic_submodule(pair)), RankError);
        continue;
      }
      const RestrictedPoint p = restrict_to_ambient(plucker(cyclic_submodule(pair)));
      ASSERT_TRUE(is_on_variety(p));
      ASSERT_EQ(p.segre_block_zero(), cls.kind == PairClass::Y);
    }
  }
}
