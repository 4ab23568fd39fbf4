#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace polyconj;
using namespace polyconj::testing;

namespace {

PolyMap lin(long a) { return from_linear(Mat::from_ints({{a}})); }
PolyMap upper_ray(long slope) { return PolyMap(1, 1, H({{slope, -1}}, {0})); }  // F(x) = [slope x, ∞)
PolyMap box_map() { return PolyMap(1, 1, Polyhedron::box(2, Rational(0), Rational(1))); }
PolyMap box2(long lo, long hi) { return PolyMap(1, 1, Polyhedron::box(2, Rational(lo), Rational(hi))); }

}  // namespace

TEST(SumMap, RaysAddToHalfLine) {
  const PolyMap S = sum_map(upper_ray(1), upper_ray(-1));
  EXPECT_TRUE(equal(S.graph(), H({{0, -1}}, {0})));
}

TEST(SumMap, LinearPlusLinear) {
  EXPECT_TRUE(equal(sum_map(lin(1), lin(1)).graph(), lin(2).graph()));
  EXPECT_TRUE(is_empty(sum_map(PolyMap(1, 1, Polyhedron::empty(2)), lin(1)).graph()));
  EXPECT_THROW(sum_map(lin(1), from_linear(Mat::identity(2))), InputError);
}

TEST(ComposeMap, Examples) {
  EXPECT_TRUE(equal(compose_map(lin(2), lin(3)).graph(), lin(6).graph()));
  EXPECT_TRUE(equal(compose_map(box_map(), from_linear(Mat::identity(1))).graph(), box_map().graph()));
  EXPECT_TRUE(is_empty(compose_map(box_map(), PolyMap(1, 1, H({{-1, 0}}, {-5}))).graph()));
}

TEST(ComposeMap, Associative) {
  Xorshift64Star rng(8);
  Profile prof{2, 5, 3};
  for (int t = 0; t < 10; ++t) {
    const PolyMap F = random_polymap(rng, 1, 2, prof);
    const PolyMap G = random_polymap(rng, 2, 1, prof);
    const PolyMap K = random_polymap(rng, 1, 1, prof);
    EXPECT_TRUE(equal(compose_map(compose_map(F, G), K).graph(), compose_map(F, compose_map(G, K)).graph()));
  }
}

TEST(IntersectMap, Examples) {
  EXPECT_TRUE(equal(intersect_map(box_map(), box_map()).graph(), box_map().graph()));
  EXPECT_TRUE(is_empty(intersect_map(box2(0, 1), box2(2, 3)).graph()));
  EXPECT_TRUE(equal(intersect_map(box_map(), PolyMap(1, 1, Polyhedron::whole_space(2))).graph(), box_map().graph()));
}

TEST(SumRule, RaysAtMinusOne) {
  RuleReport r = sum_rule_check(upper_ray(1), upper_ray(-1), make_vec({0}), make_vec({-1}));
  EXPECT_EQ(r.lhs, ExtReal(0));
  EXPECT_EQ(r.rhs, ExtReal(0));
  EXPECT_TRUE(r.equal);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ((*r.witness)[0], make_vec({1}));
  EXPECT_EQ((*r.witness)[1], make_vec({-1}));
  EXPECT_TRUE(r.witness_attains());
  EXPECT_TRUE(r.passed());
}

TEST(SumRule, DisjointDomainsStrict) {
  const PolyMap F1(1, 1, H({{1, 0}}, {0}));
  const PolyMap F2(1, 1, H({{-1, 0}}, {-1}));
  RuleReport r = sum_rule_check(F1, F2, make_vec({0}), make_vec({1}));
  EXPECT_TRUE(r.lhs.is_minus_inf());
  EXPECT_TRUE(r.rhs.is_plus_inf());
  EXPECT_FALSE(r.equal);
  EXPECT_TRUE(r.inequality_holds);
  EXPECT_FALSE(r.applicable);
  EXPECT_FALSE(r.qualification.nonempty);
  EXPECT_TRUE(r.passed());
}

TEST(SumRule, LinearPair) {
  RuleReport r = sum_rule_check(lin(1), lin(1), make_vec({-2}), make_vec({1}));
  EXPECT_EQ(r.lhs, ExtReal(0));
  EXPECT_EQ(r.rhs, ExtReal(0));
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.witness_attains());
}

TEST(ChainRule, LinearPair) {
  RuleReport r = chain_rule_check(lin(2), lin(3), make_vec({-6}), make_vec({1}));
  EXPECT_EQ(r.lhs, ExtReal(0));
  EXPECT_EQ(r.rhs, ExtReal(0));
  ASSERT_TRUE(r.witness);
  // F*(-6, v) is finite only for 2v = 6; G*(-v, 1) needs 3 = v.
  EXPECT_EQ((*r.witness)[0], make_vec({3}));
  EXPECT_TRUE(r.passed());
}

TEST(ChainRule, BoxIntoAbsEpigraph) {
  const PolyMap E = epi_mapping(abs_fn());
  RuleReport r = chain_rule_check(box_map(), E, make_vec({1}), make_vec({-1}));
  const Polyhedron composite = compose_map(box_map(), E).graph();
  EXPECT_FALSE(is_bounded(composite));
  EXPECT_EQ(r.lhs, r.rhs);
  EXPECT_TRUE(r.witness_attains());
  // (G∘F)(x) = [|y|, ∞) for y ∈ [0,1], so the composite is [0,1] x [0,∞).
  EXPECT_TRUE(equal(composite, H({{1, 0}, {-1, 0}, {0, -1}}, {1, 0, 0})));
  EXPECT_EQ(r.lhs, ExtReal(1));
}

TEST(ChainRule, EmptyComposite) {
  const PolyMap G(1, 1, H({{-1, 0}}, {-5}));
  RuleReport r = chain_rule_check(box_map(), G, make_vec({1}), make_vec({1}));
  EXPECT_TRUE(r.lhs.is_minus_inf());
  EXPECT_FALSE(r.applicable);
  EXPECT_TRUE(r.inequality_holds);
}

TEST(IntersectionMapRule, Examples) {
  RuleReport r = intersection_rule_map_check(box2(0, 2), box2(1, 3), make_vec({1}), make_vec({1}));
  EXPECT_EQ(r.lhs, ExtReal(4));
  EXPECT_EQ(r.rhs, ExtReal(4));
  EXPECT_TRUE(r.passed());

  RuleReport d = intersection_rule_map_check(box2(0, 1), box2(2, 3), make_vec({1}), make_vec({1}));
  EXPECT_TRUE(d.lhs.is_minus_inf());
  EXPECT_FALSE(d.applicable);

  RuleReport w =
      intersection_rule_map_check(box_map(), PolyMap(1, 1, Polyhedron::whole_space(2)), make_vec({1}), make_vec({1}));
  EXPECT_EQ(w.lhs, conjugate_value(box_map(), make_vec({1}), make_vec({1})));
  ASSERT_TRUE(w.witness);
  EXPECT_EQ((*w.witness)[0], make_vec({1, 1}));
  EXPECT_TRUE(w.passed());
}

TEST(QualificationReport, Domains) {
  auto with_dom = [](long lo, long hi) { return PolyMap(1, 1, embed(interval(lo, hi), 2, 0)); };
  Qualification q = qualification_report(RuleKind::Sum, with_dom(0, 1), with_dom(1, 2));
  EXPECT_TRUE(q.nonempty);
  EXPECT_FALSE(q.relative_interior);
  EXPECT_FALSE(q.mixed);

  const PolyMap half(1, 1, embed(H({{1}, {-2}}, {2, -1}), 2, 0));  // dom [1/2, 2]
  q = qualification_report(RuleKind::Sum, with_dom(0, 1), half);
  EXPECT_TRUE(q.nonempty);
  EXPECT_TRUE(q.relative_interior);

  q = qualification_report(RuleKind::Sum, with_dom(0, 1), with_dom(2, 3));
  EXPECT_FALSE(q.nonempty);
  EXPECT_FALSE(q.relative_interior);
}

TEST(SumRule, RandomMappingsSatisfyTheorem) {
  Xorshift64Star rng(1234);
  Profile prof{2, 6, 3};
  for (int t = 0; t < 15; ++t) {
    const PolyMap F1 = random_polymap(rng, 1, 2, prof);
    const PolyMap F2 = random_polymap(rng, 1, 2, prof);
    std::vector<std::pair<Vec, Vec>> pts;
    for (int k = 0; k < 5; ++k) pts.emplace_back(random_int_vec(rng, 1, 3), random_int_vec(rng, 2, 3));
    for (const RuleReport& r : sum_rule_check(F1, F2, pts)) {
      EXPECT_TRUE(r.passed());
      EXPECT_EQ(r.reduction, r.lhs);
    }
  }
}

TEST(CoderivativeSumRule, AbsPlusAbs) {
  const PolyMap E = epi_mapping(abs_fn());
  CoderivativeRuleReport r =
      coderivative_sum_rule_check(E, E, make_vec({0}), make_vec({0}), make_vec({0}), make_vec({1}));
  EXPECT_TRUE(equal(r.lhs, interval(-2, 2)));
  EXPECT_TRUE(r.equal);
}

TEST(CoderivativeSumRule, LinearMaps) {
  for (long ys : {-2L, 1L}) {
    CoderivativeRuleReport r =
        coderivative_sum_rule_check(lin(1), lin(2), make_vec({1}), make_vec({1}), make_vec({2}), make_vec({ys}));
    EXPECT_TRUE(equal(r.lhs, interval(3 * ys, 3 * ys)));
    EXPECT_TRUE(r.equal);
  }
}

TEST(CoderivativeSumRule, InteriorPointZeroDual) {
  CoderivativeRuleReport r = coderivative_sum_rule_check(box2(0, 2), box2(0, 2), make_vec({1}), make_vec({1}),
                                                         make_vec({1}), make_vec({0}));
  EXPECT_TRUE(equal(r.lhs, interval(0, 0)));
  EXPECT_TRUE(r.equal);
}

TEST(CoderivativeSumRule, RequiresGraphPoints) {
  EXPECT_THROW(coderivative_sum_rule_check(lin(1), lin(2), make_vec({1}), make_vec({0}), make_vec({2}), make_vec({1})),
               PreconditionError);
}

TEST(CoderivativeChainRule, LinearMaps) {
  CoderivativeRuleReport r =
      coderivative_chain_rule_check(lin(2), lin(3), make_vec({1}), make_vec({2}), make_vec({6}), make_vec({1}));
  EXPECT_TRUE(equal(r.lhs, interval(6, 6)));
  EXPECT_TRUE(r.equal);
}

TEST(CoderivativeChainRule, AbsThenIdentityAtKink) {
  const PolyMap E = epi_mapping(abs_fn());
  for (long zs : {0L, 1L, 3L}) {
    CoderivativeRuleReport r =
        coderivative_chain_rule_check(E, lin(1), make_vec({0}), make_vec({0}), make_vec({0}), make_vec({zs}));
    EXPECT_TRUE(equal(r.lhs, interval(-zs, zs)));
    EXPECT_TRUE(r.equal);
  }
}

TEST(CoderivativeChainRule, InteriorZeroDual) {
  CoderivativeRuleReport r = coderivative_chain_rule_check(box2(0, 2), box2(0, 2), make_vec({1}), make_vec({1}),
                                                           make_vec({1}), make_vec({0}));
  EXPECT_TRUE(equal(r.lhs, interval(0, 0)));
  EXPECT_TRUE(r.equal);
}
