#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "polyconj/io.hpp"
#include "test_util.hpp"

using namespace polyconj;
using namespace polyconj::testing;

namespace {

constexpr std::uint64_t kGoldenSeed = 42;
const Profile kGoldenProfile{3, 8, 4};

std::string golden_path() { return std::string(POLYCONJ_FIXTURES) + "/random_polymap_seed42.json"; }

}  // namespace

TEST(Prng, MatchesReferenceStream) {
  // Reference values from an independent implementation of the documented
  // algorithm (splitmix64 seeding, xorshift64* shifts 12/25/27).
  Xorshift64Star zero(0);
  EXPECT_EQ(zero.next(), 0x7bbcb40d550682d0ULL);
  EXPECT_EQ(zero.next(), 0xde7fe413d00cc9fdULL);
  EXPECT_EQ(zero.next(), 0xb3c638353c668c91ULL);
  EXPECT_EQ(zero.next(), 0xe073afc0949195fcULL);
  Xorshift64Star g(42);
  EXPECT_EQ(g.next(), 0x31b0ece7c4f697a2ULL);
  EXPECT_EQ(g.next(), 0x9008a3b1cb686f03ULL);
  EXPECT_EQ(g.next(), 0x7c7173abd97be16fULL);
  EXPECT_EQ(g.next(), 0x45672c8c8d6b8c4fULL);
}

TEST(VertexOracle, Examples) {
  EXPECT_EQ(vertex_support_oracle(Polyhedron::box(2, Rational(0), Rational(1)), make_vec({1, 1})), ExtReal(2));
  EXPECT_TRUE(vertex_support_oracle(Polyhedron::empty(2), make_vec({1, 1})).is_minus_inf());
  const Polyhedron simplex = H({{-1, 0}, {0, -1}, {1, 1}}, {0, 0, 1});
  EXPECT_EQ(vertex_support_oracle(simplex, make_vec({1, 0})), ExtReal(1));
  EXPECT_THROW(vertex_support_oracle(H({{-1}}, {0}), make_vec({1})), PreconditionError);
}

TEST(RandomPolymap, DeterministicAndShaped) {
  const InstanceSeed s{987654321, Profile{1, 2, 4}};
  const PolyMap a = random_polymap(s, 1, 1);
  const PolyMap b = random_polymap(s, 1, 1);
  EXPECT_EQ(a.graph().A(), b.graph().A());
  EXPECT_EQ(a.graph().b(), b.graph().b());
  EXPECT_EQ(a.graph().dim(), 2u);
  EXPECT_LE(a.graph().rows(), 2u);
  EXPECT_FALSE(is_empty(a.graph()));
  EXPECT_THROW(random_polymap(s, 2, 1), InputError);
}

TEST(RandomPolymap, CoefficientsWithinBound) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const PolyMap F = random_polymap(InstanceSeed{seed, Profile{3, 8, 4}}, 2, 3);
    EXPECT_LE(F.graph().rows(), 8u);
    for (std::size_t i = 0; i < F.graph().rows(); ++i) {
      for (const Rational& x : F.graph().A().row(i)) EXPECT_LE(abs(x), 4);
      EXPECT_LE(abs(F.graph().b()[i]), 4);
    }
  }
}

TEST(RandomPolymap, MatchesGoldenFile) {
  const PolyMap F = random_polymap(InstanceSeed{kGoldenSeed, kGoldenProfile}, 2, 1);
  std::ifstream in(golden_path());
  ASSERT_TRUE(in) << golden_path();
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(io::to_json(F).dump(2) + "\n", ss.str());
}

TEST(SampleGraphPoints, BoxGraph) {
  const PolyMap F(1, 1, Polyhedron::box(2, Rational(0), Rational(1)));
  const std::vector<Vec> pts = sample_graph_points(F, 3, 1);
  ASSERT_EQ(pts.size(), 3u);
  for (const Vec& z : pts) EXPECT_TRUE(contains(F.graph(), z));
}

TEST(SampleGraphPoints, SinglePoint) {
  const PolyMap F(1, 1, Polyhedron::box(2, Rational(2), Rational(2)));
  for (const Vec& z : sample_graph_points(F, 5, 9)) EXPECT_EQ(z, make_vec({2, 2}));
}

TEST(SampleGraphPoints, UnboundedGraph) {
  const PolyMap F(1, 1, H({{1, -1}}, {0}));
  const std::vector<Vec> pts = sample_graph_points(F, 12, 4);
  ASSERT_EQ(pts.size(), 12u);
  for (const Vec& z : pts) EXPECT_TRUE(contains(F.graph(), z));
  EXPECT_THROW(sample_graph_points(PolyMap(1, 1, Polyhedron::empty(2)), 1, 1), PreconditionError);
}

TEST(RandomPLFunction, ProperAndDeterministic) {
  Xorshift64Star r1(5), r2(5);
  for (int t = 0; t < 10; ++t) {
    const PLFunction f = random_plfunction(r1, 2, Profile{});
    const PLFunction g = random_plfunction(r2, 2, Profile{});
    EXPECT_EQ(io::to_json(f), io::to_json(g));
    EXPECT_FALSE(is_empty(f.dom()));
  }
}
