#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace polyconj;
using namespace polyconj::testing;

namespace {

PLFunction zero_on_unit() { return PLFunction({{make_vec({0}), 0}}, interval(0, 1)); }
PLFunction identity_fn() { return PLFunction::max_affine({{make_vec({1}), 0}}); }
PLFunction abs_shifted(long a) { return PLFunction::max_affine({{make_vec({1}), -a}, {make_vec({-1}), a}}); }

}  // namespace

TEST(PLFunction, Construction) {
  EXPECT_THROW(PLFunction({}, interval(0, 1)), InputError);
  EXPECT_THROW(PLFunction({{make_vec({1}), 0}}, interval(1, 0)), InputError);
  EXPECT_EQ(abs_fn()(make_vec({-3})), ExtReal(3));
  EXPECT_TRUE(zero_on_unit()(make_vec({2})).is_plus_inf());
}

TEST(PLFunction, EpiMappings) {
  EXPECT_TRUE(equal(epi_mapping(abs_fn()).graph(), H({{1, -1}, {-1, -1}}, {0, 0})));
  EXPECT_TRUE(equal(epi_mapping(zero_on_unit()).graph(), H({{1, 0}, {-1, 0}, {0, -1}}, {1, 0, 0})));
  EXPECT_TRUE(equal(epi_mapping(identity_fn()).graph(), H({{1, -1}}, {0})));
}

TEST(PLFunction, Conjugates) {
  EXPECT_EQ(conjugate(abs_fn(), V({"1/2"})), ExtReal(0));
  EXPECT_TRUE(conjugate(abs_fn(), make_vec({2})).is_plus_inf());
  EXPECT_EQ(conjugate(zero_on_unit(), make_vec({1})), ExtReal(1));
  EXPECT_EQ(conjugate(zero_on_unit(), make_vec({-1})), ExtReal(0));
  EXPECT_EQ(conjugate(identity_fn(), make_vec({1})), ExtReal(0));
  EXPECT_TRUE(conjugate(identity_fn(), make_vec({0})).is_plus_inf());
}

TEST(PLFunction, MaxOfTwoLines) {
  // f(x) = max(x, -2x + 1): kink at 1/3 with value 1/3; f* is finite on
  // [-2, 1] with f*(s) = sup_x (s x - f(x)) attained at the kink.
  const PLFunction f = PLFunction::max_affine({{make_vec({1}), 0}, {make_vec({-2}), 1}});
  EXPECT_EQ(f(V({"1/3"})), ExtReal(Q("1/3")));
  EXPECT_EQ(conjugate(f, make_vec({0})), ExtReal(Q("-1/3")));
  EXPECT_EQ(conjugate(f, make_vec({1})), ExtReal(0));
  EXPECT_EQ(conjugate(f, make_vec({-2})), ExtReal(-1));
  EXPECT_TRUE(conjugate(f, make_vec({2})).is_plus_inf());
  EXPECT_TRUE(equal(subdifferential(f, V({"1/3"})), interval(-2, 1)));
  EXPECT_TRUE(equal(subdifferential(f, make_vec({5})), interval(1, 1)));
}

TEST(PLFunction, Subdifferentials) {
  EXPECT_TRUE(equal(subdifferential(abs_fn(), make_vec({0})), interval(-1, 1)));
  EXPECT_TRUE(equal(subdifferential(abs_fn(), make_vec({3})), interval(1, 1)));
  EXPECT_TRUE(equal(subdifferential(zero_on_unit(), make_vec({1})), H({{-1}}, {0})));
  EXPECT_THROW(subdifferential(zero_on_unit(), make_vec({2})), PreconditionError);
}

TEST(PLFunction, FenchelYoungOnSamples) {
  Xorshift64Star rng(77);
  Profile prof{2, 4, 3};
  for (int t = 0; t < 20; ++t) {
    const PLFunction f = random_plfunction(rng, 2, prof);
    const Vec x = *relative_interior_point(f.dom());
    const ExtReal fx = f(x);
    ASSERT_TRUE(fx.finite());
    const Polyhedron sd = subdifferential(f, x);
    ASSERT_FALSE(is_empty(sd));
    for (int k = 0; k < 5; ++k) {
      const Vec s = random_int_vec(rng, 2, 3);
      const ExtReal fs = conjugate(f, s);
      EXPECT_LE(ExtReal(dot(s, x)), fs + fx);
      EXPECT_EQ(contains(sd, s), fs.finite() && fs.value() + fx.value() == dot(s, x));
    }
    const Vec member = *relative_interior_point(sd);
    EXPECT_EQ(conjugate(f, member) + fx, ExtReal(dot(member, x)));
  }
}

TEST(PointwiseSum, Pieces) {
  const PLFunction s = pointwise_sum(abs_fn(), abs_fn());
  EXPECT_EQ(s.pieces().size(), 4u);
  EXPECT_EQ(s(make_vec({-2})), ExtReal(4));
  EXPECT_THROW(pointwise_sum(zero_on_unit(), PLFunction({{make_vec({0}), 0}}, interval(2, 3))), PreconditionError);
}

TEST(SumRuleFunction, AbsPlusAbs) {
  FunctionSumReport r = sum_rule_function_check(abs_fn(), abs_fn(), make_vec({1}), make_vec({0}));
  EXPECT_EQ(r.conj_lhs, ExtReal(0));
  EXPECT_EQ(r.conj_rhs, ExtReal(0));
  ASSERT_TRUE(r.split);
  EXPECT_EQ(r.split->first + r.split->second, make_vec({1}));
  EXPECT_EQ(*r.split_value, ExtReal(0));
  EXPECT_TRUE(equal(r.subdiff_lhs, interval(-2, 2)));
  EXPECT_TRUE(r.passed());
}

TEST(SumRuleFunction, AbsPlusIndicatorLike) {
  FunctionSumReport r = sum_rule_function_check(abs_fn(), zero_on_unit(), make_vec({0}), make_vec({0}));
  EXPECT_TRUE(equal(r.subdiff_lhs, H({{1}}, {1})));
  EXPECT_TRUE(equal(r.subdiff_rhs, H({{1}}, {1})));
  EXPECT_TRUE(r.passed());
}

TEST(SumRuleFunction, ShiftedAbs) {
  FunctionSumReport r = sum_rule_function_check(abs_fn(), abs_shifted(2), make_vec({0}), make_vec({1}));
  EXPECT_TRUE(equal(r.subdiff_lhs, interval(0, 0)));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.conj_lhs, ExtReal(-2));  // (|x| + |x-2|)*(0) = -min = -2
}

TEST(LinearChain, ScaledAbs) {
  LinearChainReport r = linear_chain_check(abs_fn(), Mat::from_ints({{2}}), make_vec({1}), make_vec({0}));
  EXPECT_TRUE(equal(r.subdiff_lhs, interval(-2, 2)));
  EXPECT_EQ(r.conj_lhs, ExtReal(0));
  EXPECT_EQ(r.conj_rhs, ExtReal(0));
  ASSERT_TRUE(r.ystar);
  EXPECT_EQ(*r.ystar, V({"1/2"}));
  EXPECT_TRUE(r.passed());
}

TEST(LinearChain, ZeroMap) {
  LinearChainReport r = linear_chain_check(abs_fn(), Mat::from_ints({{0}}), make_vec({0}), make_vec({5}));
  EXPECT_EQ(r.conj_lhs, ExtReal(0));
  EXPECT_EQ(r.conj_rhs, ExtReal(0));
  // Every y* in [-1, 1] attains; the LP may return any of them.
  ASSERT_TRUE(r.ystar);
  EXPECT_EQ(conjugate(abs_fn(), *r.ystar), ExtReal(0));
  EXPECT_EQ(*r.witness_value, ExtReal(0));
  EXPECT_TRUE(equal(r.subdiff_lhs, interval(0, 0)));
  EXPECT_TRUE(r.passed());
}

TEST(LinearChain, RangeMissesDomain) {
  EXPECT_THROW(linear_chain_check(PLFunction({{make_vec({0}), 0}}, interval(1, 2)), Mat::from_ints({{0}}),
                                  make_vec({0}), make_vec({0})),
               PreconditionError);
}

TEST(Biconjugate, LowerBoundReachesValue) {
  const PLFunction f = PLFunction::max_affine({{make_vec({1}), 0}, {make_vec({-2}), 1}});
  std::vector<Vec> grid;
  for (long s = -3; s <= 3; ++s) grid.push_back(make_vec({s}));
  for (long x = -2; x <= 2; ++x) EXPECT_EQ(biconjugate_lower_bound(f, make_vec({x}), grid), f(make_vec({x})));
}
