#include <gtest/gtest.h>

#include "lpa/element_parser.hpp"
#include "lpa/frobenius.hpp"
#include "lpa/sampling.hpp"
#include "support/brute_force.hpp"
#include "test_graphs.hpp"

namespace lpa {
namespace {

using ZAlg = LeavittAlgebra<Integers>;
using El = Element<Integers>;
using Triple = std::tuple<El, El, El>;

struct Graded {
  Graded(Graph g, GroupSpec group, std::size_t bound = 4)
      : alg(std::move(g)), d(DegreeMap::canonical(alg.graph(), group)), bound(bound) {}
  El el(const char* text) const { return parse_element(alg, text); }
  ZAlg alg;
  DegreeMap d;
  std::size_t bound;
};

std::pair<std::vector<El>, std::vector<Triple>> draw(const Graded& s, std::uint64_t seed,
                                                     int samples, int triples) {
  ElementSampler<Integers> sampler(s.alg, s.d, s.bound, seed);
  std::vector<El> xs;
  for (int i = 0; i < samples; ++i) xs.push_back(sampler.any(6));
  std::vector<Triple> ts;
  const auto e = s.d.group().identity();
  for (int i = 0; i < triples; ++i) {
    auto t = sampler.homogeneous_of_degree(e, 3);
    auto a = sampler.any(4);
    auto t2 = sampler.homogeneous_of_degree(e, 3);
    ts.emplace_back(std::move(t), std::move(a), std::move(t2));
  }
  return {xs, ts};
}

TEST(Projection, Examples) {
  Graded z2(testing_graphs::line5(), GroupSpec::cyclic(2));
  EXPECT_EQ(projection_e(z2.el("v1 + f1"), z2.d), z2.el("v1"));
  const auto homogeneous = z2.el("v3 + f2.f2* - 2*f1.f1*");
  EXPECT_EQ(projection_e(homogeneous, z2.d), homogeneous);
  Graded z3(testing_graphs::line5(), GroupSpec::cyclic(3));
  EXPECT_TRUE(projection_e(z3.el("f2.(f4.f3)*"), z3.d).is_zero());
  EXPECT_EQ(projection_e(z3.el("f2.(f4.f3.f2)* + 3*v4"), z3.d), z3.el("3*v4"));
}

TEST(Projection, IdempotentAndBilinear) {
  for (auto group : {GroupSpec::cyclic(2), GroupSpec::cyclic(3), GroupSpec::integers()}) {
    Graded s(testing_graphs::loop_out(), group);
    ElementSampler<Integers> sampler(s.alg, s.d, 4, 99);
    const auto e = group.identity();
    for (int i = 0; i < 40; ++i) {
      const auto a = sampler.any(6);
      const auto b = sampler.any(6);
      const auto t = sampler.homogeneous_of_degree(e, 3);
      const auto t2 = sampler.homogeneous_of_degree(e, 3);
      const auto pa = projection_e(a, s.d);
      EXPECT_EQ(projection_e(pa, s.d), pa);
      EXPECT_EQ(projection_e(s.alg.add(a, b), s.d), s.alg.add(pa, projection_e(b, s.d)));
      EXPECT_EQ(projection_e(s.alg.mul(s.alg.mul(t, a), t2), s.d),
                s.alg.mul(s.alg.mul(t, pa), t2));
      EXPECT_EQ(s.alg.add(pa, projection_e(s.alg.sub(a, pa), s.d)), pa);
    }
  }
}

TEST(FrobeniusSystem, SingleVertexTrivialGroup) {
  Graded s(testing_graphs::single_vertex(), GroupSpec::cyclic(1), 1);
  const auto sys = build_frobenius_system(s.alg, s.d, 1);
  ASSERT_EQ(sys.pairs.size(), 1u);
  EXPECT_EQ(s.alg.render(sys.pairs[0].x), "v");
  EXPECT_EQ(s.alg.render(sys.pairs[0].y), "v");
  EXPECT_TRUE(verify_frobenius(s.alg, sys, {s.alg.identity()}).passed());
}

TEST(FrobeniusSystem, LoopOutUnderZ2) {
  Graded s(testing_graphs::loop_out(), GroupSpec::cyclic(2));
  const auto sys = build_frobenius_system(s.alg, s.d, s.bound);
  auto [samples, triples] = draw(s, 7, 100, 50);
  const auto rep = verify_frobenius(s.alg, sys, samples, triples);
  EXPECT_TRUE(rep.passed()) << rep.witness;
  El sum;
  for (const auto& p : sys.pairs) sum = s.alg.add(sum, s.alg.mul(p.x, p.y));
  EXPECT_EQ(sum, sys.epsilon_sum);
}

TEST(FrobeniusSystem, LineGraphUnderZ5) {
  Graded s(testing_graphs::line5(), GroupSpec::cyclic(5));
  const auto sys = build_frobenius_system(s.alg, s.d, s.bound);

  // Pair count per degree against brute-force minimal alphas.
  const std::vector<std::int64_t> deg(s.alg.graph().edge_count(), 1);
  std::size_t expected = 0;
  std::map<std::int64_t, std::size_t> per_degree;
  for (std::int64_t g = 0; g < 5; ++g) {
    per_degree[g] = brute::minimal_alphas(s.alg.graph(),
                                          brute::alphas_of_degree(s.alg.graph(), deg, g, 4, 5))
                        .size();
    expected += per_degree[g];
  }
  EXPECT_EQ(per_degree, (std::map<std::int64_t, std::size_t>{{0, 5}, {1, 4}, {2, 1}, {3, 1}, {4, 4}}));
  EXPECT_EQ(expected, 15u);
  EXPECT_EQ(sys.pairs.size(), expected);
  for (const auto& p : sys.pairs) {
    EXPECT_EQ(p.y, s.alg.involution(p.x));
    for (const auto& [m, c] : p.x.terms()) EXPECT_EQ(degree_of(m, s.d), p.degree);
  }

  auto [samples, triples] = draw(s, 11, 100, 50);
  const auto rep = verify_frobenius(s.alg, sys, samples, triples);
  EXPECT_TRUE(rep.passed()) << rep.witness;
  EXPECT_EQ(rep.certificate.front().second, "15");
}

TEST(FrobeniusSystem, DroppedPairIsCaught) {
  Graded s(testing_graphs::loop_out(), GroupSpec::cyclic(2));
  auto sys = build_frobenius_system(s.alg, s.d, s.bound);
  ASSERT_GT(sys.pairs.size(), 1u);
  sys.pairs.back().y = El{};
  std::vector<El> samples;
  for (const auto& m : MonomialEnumerator<Integers>(s.alg, s.d, 3).all_monomials())
    samples.push_back(s.alg.from_monomial(m));
  const auto rep = verify_frobenius(s.alg, sys, samples);
  EXPECT_EQ(rep.verdict, "FAIL");
  EXPECT_EQ(rep.status, Status::fail);
  EXPECT_FALSE(rep.witness.empty());
}

TEST(FrobeniusSystem, Preconditions) {
  Graded z(testing_graphs::line5(), GroupSpec::integers());
  EXPECT_THROW(build_frobenius_system(z.alg, z.d, 4), FrobeniusError);
  Graded c(testing_graphs::infinite_emitter(), GroupSpec::cyclic(2));
  EXPECT_THROW(build_frobenius_system(c.alg, c.d, 3), FrobeniusError);
  Graded line(testing_graphs::line5(), GroupSpec::cyclic(5));
  EXPECT_THROW(build_frobenius_system(line.alg, line.d, 0), FrobeniusError);
  // Bound 1 cannot certify degree 2 on the line graph.
  try {
    build_frobenius_system(line.alg, line.d, 1);
    ADD_FAILURE() << "expected FrobeniusError";
  } catch (const FrobeniusError& err) {
    EXPECT_NE(std::string(err.what()).find("absent"), std::string::npos);
  }
}

}  // namespace
}  // namespace lpa
