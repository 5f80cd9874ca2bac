#include <catch2/catch_amalgamated.hpp>

#include "ofs/generate.hpp"
#include "ofs/nets.hpp"
#include "support/oracles.hpp"

using namespace ofs;

namespace {

DQCategory homogeneous_half() {
  DQCategory c;
  c.tnorm = TNorm::godel();
  c.objects = {"u", "v"};
  c.types = {0.5, 0.5};
  c.hom = {{0.5, 0.5}, {0.5, 0.5}};
  require_valid(c);
  return c;
}

} // namespace

TEST_CASE("net classification", "[nets]") {
  SECTION("constant cycles are forward Cauchy with the object's type") {
    const DQCategory c = min_category(TNorm::godel(), {0.2, 0.6});
    const EPSequence s{{}, {1}};
    const NetClass nc = classify_net(c, s);
    CHECK(nc.forward_cauchy);
    CHECK(nc.bicauchy);
    REQUIRE(nc.net_type);
    CHECK(eq(*nc.net_type, 0.6));
  }

  SECTION("alternating cycle in the min category is not Cauchy") {
    const DQCategory c = min_category(TNorm::godel(), {0.2, 0.6});
    const EPSequence s{{}, {0, 1}};
    const NetClass nc = classify_net(c, s);
    CHECK_FALSE(nc.forward_cauchy);
    CHECK_FALSE(nc.bicauchy);
    CHECK_FALSE(nc.net_type.has_value()); // self-homs 0.2 and 0.6 disagree
  }

  SECTION("homogeneous block is Cauchy at its level") {
    const DQCategory c = homogeneous_half();
    const NetClass nc = classify_net(c, EPSequence{{}, {0, 1}});
    CHECK(nc.forward_cauchy);
    REQUIRE(nc.net_type);
    CHECK(eq(*nc.net_type, 0.5));
  }

  CHECK_THROWS_AS(classify_net(min_category(TNorm::godel(), {0.5}), EPSequence{{}, {}}),
                  std::invalid_argument);
}

TEST_CASE("generated weights and coweights", "[nets]") {
  SECTION("constant cycle generates the representables") {
    const DQCategory c = min_category(TNorm::godel(), {0.2, 0.6});
    const EPSequence s{{0}, {1}};
    const Weight w = generated_weight(c, s);
    const Weight y1 = yoneda(c, 1);
    CHECK(eq(w.wtype, y1.wtype));
    CHECK(w.values == y1.values);
    const Coweight cw = generated_coweight(c, s);
    const Coweight cy1 = co_yoneda(c, 1);
    CHECK(eq(cw.wtype, cy1.wtype));
    CHECK(cw.values == cy1.values);
  }

  SECTION("cycle minima over the homogeneous block") {
    const DQCategory c = homogeneous_half();
    const Weight w = generated_weight(c, EPSequence{{}, {0, 1}});
    CHECK(eq(w.wtype, 0.5));
    CHECK(w.values == std::vector<truth>{0.5, 0.5});
  }

  SECTION("prefixes are irrelevant") {
    const DQCategory c = min_category(TNorm::godel(), {0.2, 0.6, 0.4});
    const EPSequence s1{{}, {2, 1}};
    const EPSequence s2{{0, 0, 1}, {1, 2}};
    // same cycle set, same type data
    const NetClass n1 = classify_net(c, s1), n2 = classify_net(c, s2);
    CHECK(n1.forward_cauchy == n2.forward_cauchy);
    CHECK(n1.net_type.has_value() == n2.net_type.has_value());
  }

  SECTION("sequences without a type are rejected") {
    const DQCategory c = min_category(TNorm::godel(), {0.2, 0.6});
    CHECK_THROWS_AS(generated_weight(c, EPSequence{{}, {0, 1}}), std::invalid_argument);
  }

  SECTION("generated pairs always validate") {
    for (const TNorm& t : standard_tnorms())
      for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const DQCategory c = random_category(t, 2 + seed % 5, seed + 42);
        const EPSequence s = random_sequence(c, seed);
        const NetClass nc = classify_net(c, s);
        if (!nc.net_type) continue;
        CHECK(validate(c, generated_weight(c, s)).ok());
        CHECK(validate(c, generated_coweight(c, s)).ok());
      }
  }
}

TEST_CASE("cycle criterion agrees with the literal window simulation", "[nets][oracle]") {
  for (const TNorm& t : standard_tnorms())
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const DQCategory c = random_category(t, 2 + seed % 5, seed * 3 + 2);
      const EPSequence s = random_sequence(c, seed);
      const NetClass fast = classify_net(c, s);
      const testing::SimulatedClass slow = testing::simulate_classification(c, s, 2000);
      CHECK(fast.forward_cauchy == slow.forward_cauchy);
      CHECK(fast.bicauchy == slow.bicauchy);
      REQUIRE(fast.net_type.has_value() == slow.net_type.has_value());
      if (fast.net_type) CHECK(eq(*fast.net_type, *slow.net_type));
    }
}

TEST_CASE("forward Cauchy equals biCauchy on finite carriers", "[nets][property]") {
  for (const TNorm& t : standard_tnorms())
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const DQCategory c = random_category(t, 2 + seed % 6, seed + 7);
      const EPSequence s = random_sequence(c, seed ^ 0xffULL);
      const NetClass nc = classify_net(c, s);
      CHECK(nc.forward_cauchy == nc.bicauchy);
    }
}

TEST_CASE("generated pair composite stays below hom for forward Cauchy sequences",
          "[nets][property]") {
  for (const TNorm& t : standard_tnorms())
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const DQCategory c = random_category(t, 2 + seed % 5, seed + 5000);
      const EPSequence s = random_sequence(c, seed);
      if (!classify_net(c, s).forward_cauchy) continue;
      const Distributor d = compose_cw(c, generated_coweight(c, s), generated_weight(c, s));
      CHECK(distributor_below_hom(c, d));
    }
}

TEST_CASE("Yoneda limits and bilimits", "[nets]") {
  SECTION("constant cycle converges to its object") {
    const DQCategory c = min_category(TNorm::godel(), {0.2, 0.6});
    const EPSequence s{{}, {1}};
    CHECK(is_yoneda_limit(c, s, 1));
    CHECK(is_bilimit(c, s, 1));
    CHECK_FALSE(is_yoneda_limit(c, s, 0));
  }

  SECTION("supremum equivalence and bilimit equivalence on random instances") {
    for (const TNorm& t : standard_tnorms())
      for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const DQCategory c = random_category(t, 2 + seed % 5, seed * 11 + 3);
        const EPSequence s = random_sequence(c, seed);
        if (!classify_net(c, s).forward_cauchy) continue;
        const Weight w = generated_weight(c, s);
        const auto sup = supremum(c, w);
        for (std::size_t x = 0; x < c.size(); ++x) {
          const bool lim = is_yoneda_limit(c, s, x);
          const bool in_sup = std::find(sup.begin(), sup.end(), x) != sup.end();
          CHECK(lim == in_sup);
          CHECK(lim == is_bilimit(c, s, x)); // biCauchy case
        }
      }
  }

  SECTION("sequences without a type are rejected") {
    const DQCategory c = min_category(TNorm::godel(), {0.2, 0.6});
    CHECK_THROWS_AS(is_yoneda_limit(c, EPSequence{{}, {0, 1}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(is_bilimit(c, EPSequence{{}, {0, 1}}, 0), std::invalid_argument);
  }
}

TEST_CASE("weak forward-Cauchy hypothesis on partial metric spaces", "[nets][pms]") {
  SECTION("constant cycles always satisfy it") {
    PartialMetricSpace x;
    x.objects = {"a", "b"};
    x.p = {{0.1, 0.5}, {0.5, 0.3}};
    REQUIRE(validate(x).ok());
    CHECK(weak_fc_criterion(x, EPSequence{{}, {0}}));
  }

  SECTION("a cluster reached after a prefix of different self-distance") {
    PartialMetricSpace x;
    x.objects = {"w", "u", "v"};
    x.p = {{0.1, 0.4, 0.4}, {0.4, 0.3, 0.3}, {0.4, 0.3, 0.3}};
    REQUIRE(validate(x).ok());
    const EPSequence s{{0}, {1, 2}};
    CHECK(weak_fc_criterion(x, s));
    // and the encoded category agrees that the sequence is forward Cauchy
    const DQCategory c = from_pms(x);
    CHECK(classify_net(c, s).forward_cauchy);
  }

  SECTION("a generic two-cycle violates the hypothesis") {
    PartialMetricSpace x;
    x.objects = {"a", "b"};
    x.p = {{0.1, 0.5}, {0.5, 0.3}};
    CHECK_FALSE(weak_fc_criterion(x, EPSequence{{}, {0, 1}}));
  }

  SECTION("the hypothesis implies forward Cauchy on random bounded spaces") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const DQCategory c = random_category(TNorm::lukasiewicz(), 2 + seed % 5, seed + 77);
      const PartialMetricSpace x = to_pms(c);
      const EPSequence s = random_sequence(c, seed);
      if (weak_fc_criterion(x, s)) CHECK(classify_net(c, s).forward_cauchy);
    }
  }
}
