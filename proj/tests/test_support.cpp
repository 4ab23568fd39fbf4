#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace polyconj;
using namespace polyconj::testing;

namespace {

/// Brute force over vertex pairs: min over splits is not directly
/// enumerable, but for bounded P1, P2 with nonempty intersection the value
/// must equal the vertex maximum over P1 ∩ P2.
ExtReal oracle_intersection(const Polyhedron& P1, const Polyhedron& P2, const Vec& v) {
  return vertex_support_oracle(intersect(P1, P2), v);
}

}  // namespace

TEST(ExtReal, OrderingAndArithmetic) {
  EXPECT_LT(ExtReal::minus_inf(), ExtReal(-1000));
  EXPECT_LT(ExtReal(1000), ExtReal::plus_inf());
  EXPECT_EQ(ExtReal(2) + ExtReal(3), ExtReal(5));
  EXPECT_EQ(ExtReal(2) + ExtReal::plus_inf(), ExtReal::plus_inf());
  EXPECT_EQ(-ExtReal::minus_inf(), ExtReal::plus_inf());
  EXPECT_THROW(ExtReal::plus_inf() + ExtReal::minus_inf(), std::domain_error);
  EXPECT_EQ(to_string(ExtReal::plus_inf()), "+inf");
  EXPECT_EQ(to_string(ExtReal(Q("-3/2"))), "-3/2");
}

TEST(SupportEval, IntervalFinite) {
  SupportEval s = support_eval(interval(0, 1), make_vec({1}));
  EXPECT_EQ(s.value, ExtReal(1));
  EXPECT_EQ(*s.multipliers, make_vec({1, 0}));
  EXPECT_EQ(*s.maximizer, make_vec({1}));
}

TEST(SupportEval, HalfLineUnbounded) {
  SupportEval s = support_eval(H({{-1}}, {0}), make_vec({1}));
  EXPECT_TRUE(s.value.is_plus_inf());
  ASSERT_TRUE(s.unbounded_ray);
  EXPECT_EQ(*s.unbounded_ray, make_vec({1}));
}

TEST(SupportEval, EmptySetIsMinusInf) {
  SupportEval s = support_eval(H({{1}, {-1}}, {0, -1}), make_vec({7}));
  EXPECT_TRUE(s.value.is_minus_inf());
  ASSERT_TRUE(s.farkas);
}

TEST(SupportEval, HomogeneityAndSubadditivity) {
  Xorshift64Star rng(3);
  Profile prof{3, 6, 3};
  for (int t = 0; t < 40; ++t) {
    const Polyhedron P = random_polyhedron(rng, 3, prof);
    const Vec v = random_int_vec(rng, 3, 3), w = random_int_vec(rng, 3, 3);
    const ExtReal sv = support_value(P, v), sw = support_value(P, w);
    if (sv.finite()) EXPECT_EQ(support_value(P, Q("5/2") * v), ExtReal(Rational(Q("5/2") * sv.value())));
    if (sv.finite() && sw.finite()) EXPECT_LE(support_value(P, v + w), sv + sw);
  }
}

TEST(InfConvolution, EqualIntervals) {
  InfConvolution ic = inf_convolution_support(interval(0, 1), interval(0, 1), make_vec({2}));
  EXPECT_EQ(ic.value, ExtReal(2));
  ASSERT_TRUE(ic.split);
  EXPECT_EQ(support_value(interval(0, 1), ic.split->first) + support_value(interval(0, 1), ic.split->second),
            ExtReal(2));
  EXPECT_EQ(ic.split->first + ic.split->second, make_vec({2}));
}

TEST(InfConvolution, OppositeHalfLines) {
  InfConvolution ic = inf_convolution_support(H({{1}}, {0}), H({{-1}}, {0}), make_vec({0}));
  EXPECT_EQ(ic.value, ExtReal(0));
  EXPECT_EQ(ic.split->first, make_vec({0}));
  EXPECT_EQ(ic.split->second, make_vec({0}));
}

TEST(InfConvolution, NestedHalfLinesNegativeDirection) {
  // {x <= 0} ∩ {x <= 1} = {x <= 0}, unbounded below, so σ(-1) = +∞. Both
  // operands only admit nonnegative directions, so the joint LP is infeasible.
  InfConvolution ic = inf_convolution_support(H({{1}}, {0}), H({{1}}, {1}), make_vec({-1}));
  EXPECT_TRUE(ic.value.is_plus_inf());
  EXPECT_FALSE(ic.split);
  EXPECT_TRUE(support_value(intersect(H({{1}}, {0}), H({{1}}, {1})), make_vec({-1})).is_plus_inf());
}

TEST(IntersectionRule, OverlappingIntervals) {
  IntersectionRuleReport r = intersection_rule_check(interval(0, 2), interval(1, 3), make_vec({1}));
  EXPECT_EQ(r.lhs, ExtReal(2));
  EXPECT_EQ(r.rhs, ExtReal(2));
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.qualification.nonempty);
  EXPECT_TRUE(r.qualification.relative_interior);
  EXPECT_EQ(*r.split_value, ExtReal(2));
  EXPECT_EQ(r.lhs, oracle_intersection(interval(0, 2), interval(1, 3), make_vec({1})));
}

TEST(IntersectionRule, DisjointIntervals) {
  // Both operands are bounded, so every direction is in pos{a_i}; the joint
  // LP is feasible and unbounded below (it is a Farkas ray for P1 ∩ P2).
  IntersectionRuleReport r = intersection_rule_check(interval(0, 1), interval(2, 3), make_vec({1}));
  EXPECT_TRUE(r.lhs.is_minus_inf());
  EXPECT_TRUE(r.rhs.is_minus_inf());
  EXPECT_TRUE(r.inequality_holds);
  EXPECT_FALSE(r.applicable);
  EXPECT_FALSE(r.qualification.nonempty);
  EXPECT_FALSE(r.qualification.relative_interior);
}

TEST(IntersectionRule, DisjointHalfPlanesStrict) {
  const Polyhedron P1 = H({{1, 0}}, {0});
  const Polyhedron P2 = H({{-1, 0}}, {-1});
  IntersectionRuleReport r = intersection_rule_check(P1, P2, make_vec({0, 1}));
  EXPECT_TRUE(r.lhs.is_minus_inf());
  EXPECT_TRUE(r.rhs.is_plus_inf());
  EXPECT_FALSE(r.equal);
  EXPECT_TRUE(r.inequality_holds);
  EXPECT_FALSE(r.applicable);
}

TEST(IntersectionRule, WholeLine) {
  IntersectionRuleReport r =
      intersection_rule_check(Polyhedron::whole_space(1), Polyhedron::whole_space(1), make_vec({0}));
  EXPECT_EQ(r.lhs, ExtReal(0));
  EXPECT_EQ(r.rhs, ExtReal(0));
  EXPECT_TRUE(r.equal);
}

TEST(Qualification, RelativeInteriorTests) {
  EXPECT_FALSE(relative_interiors_meet(interval(0, 1), interval(1, 2)));
  EXPECT_TRUE(relative_interiors_meet(interval(0, 1), H({{1}, {-2}}, {2, -1})));
  EXPECT_FALSE(relative_interiors_meet(interval(0, 1), interval(2, 3)));
  // A point meets ri of an interval only if it lies strictly inside.
  EXPECT_TRUE(meets_relative_interior(interval(1, 1), interval(0, 2)));
  EXPECT_FALSE(meets_relative_interior(interval(0, 0), interval(0, 2)));
  // The point is its own relative interior.
  EXPECT_TRUE(relative_interiors_meet(interval(1, 1), interval(1, 1)));
}

TEST(IntersectionRule, RandomPairsAgreeWithOracle) {
  Xorshift64Star rng(99);
  Profile prof{2, 5, 3};
  int applicable = 0;
  for (int t = 0; t < 40; ++t) {
    const Polyhedron P1 = random_bounded_polyhedron(rng, 2, prof);
    const Polyhedron P2 = random_bounded_polyhedron(rng, 2, prof);
    const Vec v = random_int_vec(rng, 2, 3);
    IntersectionRuleReport r = intersection_rule_check(P1, P2, v);
    EXPECT_TRUE(r.inequality_holds);
    EXPECT_EQ(r.lhs, oracle_intersection(P1, P2, v));
    if (r.applicable) {
      ++applicable;
      EXPECT_TRUE(r.equal);
      ASSERT_TRUE(r.split_value);
      EXPECT_EQ(*r.split_value, r.rhs);
    }
  }
  EXPECT_GT(applicable, 0);
}
