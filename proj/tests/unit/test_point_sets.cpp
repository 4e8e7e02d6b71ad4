#include <gtest/gtest.h>

#include "ternions/errors.hpp"
#include "ternions/point_sets.hpp"

using namespace ternions;

namespace {

struct Golden {
  std::int64_t p;
  std::size_t variety, x, y, segre, cubic, tube, dual;
};

// Fixed from exhaustive enumeration.
const Golden kGolden[] = {
    {2, 21, 18, 3, 21, 3, 9, 6},
    {3, 52, 48, 4, 52, 4, 16, 12},
    {5, 186, 180, 6, 186, 6, 36, 30},
};

}  // namespace

TEST(PointSets, ProjectiveLineOrder) {
  const FieldSpec f = FieldSpec::prime(3);
  const auto line = projective_line(f);
  ASSERT_EQ(line.size(), 4u);
  EXPECT_EQ(line[0], std::make_pair(Scalar::zero(f), Scalar::one(f)));
  EXPECT_EQ(line[3], std::make_pair(Scalar::one(f), Scalar(f, 2)));
  EXPECT_EQ(projective_space_size(f, 8), 3280u);
  EXPECT_THROW(projective_line(FieldSpec::rational()), UnsupportedEnumeration);
}

TEST(PointSets, SpanPoints) {
  const FieldSpec f = FieldSpec::prime(3);
  const std::array<RestrictedPoint, 2> line = {RestrictedPoint::of(f, {1, 0, 0, 0, 0, 0, 0, 0}),
                                               RestrictedPoint::of(f, {0, 0, 0, 0, 0, 0, 0, 1})};
  const auto pts = span_points(line);
  EXPECT_EQ(pts.size(), 4u);
  EXPECT_EQ(span_rank(pts), 2u);
}

TEST(PointSets, GoldenCounts) {
  for (const auto& g : kGolden) {
    const FieldSpec f = FieldSpec::prime(g.p);
    SCOPED_TRACE(f.to_string());
    EXPECT_EQ(enumerate_variety_points(f).size(), g.variety);
    EXPECT_EQ(submodule_images(f, ClassFilter::X).size(), g.x);
    EXPECT_EQ(submodule_images(f, ClassFilter::Y).size(), g.y);
    EXPECT_EQ(y_param_image(f).size(), g.y);
    EXPECT_EQ(gamma_planes(f).size(), g.y);
    EXPECT_EQ(segre_image(f).size(), g.segre);
    EXPECT_EQ(twisted_cubic_points(f).size(), g.cubic);
    EXPECT_EQ(tube_points(f).size(), g.tube);
    EXPECT_EQ(dual_surface_points(f).size(), g.dual);
  }
}

TEST(PointSets, ClosedFormsAgreeWithGoldens) {
  for (const auto& g : kGolden) {
    const std::size_t q = static_cast<std::size_t>(g.p);
    EXPECT_EQ(g.variety, (q + 1) * (q * q + q + 1));
    EXPECT_EQ(g.x, q * (q + 1) * (q + 1));
    EXPECT_EQ(g.y, q + 1);
    EXPECT_EQ(g.tube, (q + 1) * (q + 1));
  }
}

TEST(PointSets, YImageIsTheLineE356E456) {
  const FieldSpec f = FieldSpec::prime(5);
  const auto y = submodule_images(f, ClassFilter::Y);
  EXPECT_EQ(y, y_param_image(f));
  for (const auto& p : y) EXPECT_TRUE(p.segre_block_zero());
}

TEST(PointSets, OutputsAreSortedAndWorkerIndependent) {
  const FieldSpec f = FieldSpec::prime(5);
  const auto one = enumerate_variety_points(f, 1);
  EXPECT_TRUE(std::is_sorted(one.begin(), one.end()));
  EXPECT_EQ(one, enumerate_variety_points(f, 4));
  EXPECT_EQ(one, enumerate_variety_points(f, 7));
  EXPECT_EQ(submodule_images(f, ClassFilter::Both, 1), submodule_images(f, ClassFilter::Both, 5));
  EXPECT_EQ(segre_solutions(f, 1), segre_solutions(f, 3));
  EXPECT_EQ(enumerate_free_submodules(f, ClassFilter::Both, 1),
            enumerate_free_submodules(f, ClassFilter::Both, 6));
}

TEST(PointSets, RationalFieldIsRejected) {
  EXPECT_THROW(enumerate_variety_points(FieldSpec::rational()), UnsupportedEnumeration);
  EXPECT_THROW(submodule_images(FieldSpec::rational(), ClassFilter::X), UnsupportedEnumeration);
}
