#include <catch2/catch_amalgamated.hpp>

#include "ofs/diagonal.hpp"
#include "ofs/generate.hpp"
#include "support/oracles.hpp"

using namespace ofs;

TEST_CASE("diagonal composition", "[diagonal]") {
  const TNorm luk = TNorm::lukasiewicz();
  const DiagArrow alpha = make_arrow(0.6, 0.8, 0.5);
  const DiagArrow beta = make_arrow(0.8, 0.9, 0.7);
  const DiagArrow comp = compose(luk, beta, alpha);
  CHECK(comp.src == 0.6);
  CHECK(comp.dst == 0.9);
  CHECK_THAT(comp.value, Catch::Matchers::WithinAbs(0.4, kEps)); // 0.7 & (0.8 -> 0.5)
  CHECK(leq(comp.value, std::min(comp.src, comp.dst)));

  SECTION("unit law") {
    for (const TNorm& t : standard_tnorms()) {
      const DiagArrow a = make_arrow(0.6, 0.8, 0.5);
      const DiagArrow composed = compose(t, unit_arrow(0.8), a);
      CHECK(eq(composed.value, a.value));
      const DiagArrow composed2 = compose(t, a, unit_arrow(0.6));
      CHECK(eq(composed2.value, a.value));
    }
  }

  SECTION("bottom absorbs") {
    const DiagArrow zero = make_arrow(0.6, 0.8, 0.0);
    CHECK(eq(compose(luk, beta, zero).value, 0.0));
  }

  CHECK_THROWS_AS(compose(luk, make_arrow(0.5, 0.9, 0.2), alpha), std::invalid_argument);
  CHECK_THROWS_AS(make_arrow(0.5, 0.4, 0.45), std::invalid_argument);
}

TEST_CASE("diagonal residuals against the grid oracle", "[diagonal][property]") {
  for (const TNorm& t : standard_tnorms()) {
    // grids of admissible arrow data over a handful of object triples
    const truth objs[] = {0.25, 0.5, 0.75, 1.0};
    for (truth a : objs)
      for (truth b : objs)
        for (truth c : objs)
          for (int i = 0; i <= 4; ++i)
            for (int j = 0; j <= 4; ++j) {
              const truth alpha_v = std::min(a, b) * i / 4;
              const truth gamma_v = std::min(a, c) * j / 4;
              const DiagArrow alpha = make_arrow(a, b, alpha_v);
              const DiagArrow gamma = make_arrow(a, c, gamma_v);
              const DiagArrow lr = left_residual(t, gamma, alpha);
              CHECK_THAT(lr.value,
                         Catch::Matchers::WithinAbs(testing::left_residual_grid_oracle(t, gamma, alpha),
                                                    1.0 / 256 + kEps));
              // universal property: the residual itself is admissible...
              CHECK(compose(t, lr, alpha).value <= gamma.value + kEps);

              const truth beta_v = std::min(b, c) * i / 4;
              const DiagArrow beta = make_arrow(b, c, beta_v);
              const DiagArrow rr = right_residual(t, beta, gamma);
              CHECK_THAT(rr.value,
                         Catch::Matchers::WithinAbs(testing::right_residual_grid_oracle(t, beta, gamma),
                                                    1.0 / 256 + kEps));
              CHECK(compose(t, beta, rr).value <= gamma.value + kEps);
            }
  }
}

TEST_CASE("residual special cases", "[diagonal]") {
  const TNorm godel = TNorm::godel();
  const DiagArrow gamma = make_arrow(0.6, 0.5, 0.3);
  const DiagArrow alpha = make_arrow(0.6, 0.7, 0.4);
  CHECK_THAT(left_residual(godel, gamma, alpha).value, Catch::Matchers::WithinAbs(0.3, kEps));

  SECTION("unit beta recovers gamma") {
    for (const TNorm& t : standard_tnorms()) {
      const DiagArrow g = make_arrow(0.6, 0.8, 0.55);
      CHECK(eq(right_residual(t, unit_arrow(0.8), g).value, g.value));
    }
  }

  SECTION("residuating an arrow by itself reaches the unit") {
    for (const TNorm& t : standard_tnorms())
      for (truth v : {0.0, 0.2, 0.45}) {
        const DiagArrow g = make_arrow(0.5, 0.9, v);
        // compose(unit, g) = g, so the largest admissible beta is the hom top
        CHECK(eq(left_residual(t, g, g).value, 0.9));
      }
  }

  SECTION("zero beta poses no constraint") {
    for (const TNorm& t : standard_tnorms()) {
      const DiagArrow beta0 = make_arrow(0.7, 0.9, 0.0);
      const DiagArrow g = make_arrow(0.5, 0.9, 0.0);
      CHECK(eq(right_residual(t, beta0, g).value, std::min(0.5, 0.7)));
    }
  }
}

TEST_CASE("composition is associative on sampled triples", "[diagonal][property]") {
  for (const TNorm& t : standard_tnorms()) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<truth> u(0.0, 1.0);
    for (int k = 0; k < 500; ++k) {
      const truth a = u(rng), b = u(rng), c = u(rng), d = u(rng);
      const DiagArrow f = make_arrow(a, b, std::min(a, b) * u(rng));
      const DiagArrow g = make_arrow(b, c, std::min(b, c) * u(rng));
      const DiagArrow h = make_arrow(c, d, std::min(c, d) * u(rng));
      const truth left = compose(t, h, compose(t, g, f)).value;
      const truth right = compose(t, compose(t, h, g), f).value;
      CHECK(eq(left, right));
    }
  }
}

TEST_CASE("composition distributes over binary max in each argument", "[diagonal][property]") {
  for (const TNorm& t : standard_tnorms()) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<truth> u(0.0, 1.0);
    for (int k = 0; k < 500; ++k) {
      const truth a = u(rng), b = u(rng), c = u(rng);
      const truth cap_ab = std::min(a, b), cap_bc = std::min(b, c);
      const DiagArrow a1 = make_arrow(a, b, cap_ab * u(rng));
      const DiagArrow a2 = make_arrow(a, b, cap_ab * u(rng));
      const DiagArrow b1 = make_arrow(b, c, cap_bc * u(rng));
      const DiagArrow b2 = make_arrow(b, c, cap_bc * u(rng));
      const DiagArrow ajoin = make_arrow(a, b, std::max(a1.value, a2.value));
      const DiagArrow bjoin = make_arrow(b, c, std::max(b1.value, b2.value));
      CHECK(eq(compose(t, b1, ajoin).value,
               std::max(compose(t, b1, a1).value, compose(t, b1, a2).value)));
      CHECK(eq(compose(t, bjoin, a1).value,
               std::max(compose(t, b1, a1).value, compose(t, b2, a1).value)));
    }
  }
}

TEST_CASE("adjunction between composition and residuals", "[diagonal][property]") {
  for (const TNorm& t : standard_tnorms()) {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<truth> u(0.0, 1.0);
    for (int k = 0; k < 500; ++k) {
      const truth a = u(rng), b = u(rng), c = u(rng);
      const DiagArrow alpha = make_arrow(a, b, std::min(a, b) * u(rng));
      const DiagArrow beta = make_arrow(b, c, std::min(b, c) * u(rng));
      const DiagArrow gamma = make_arrow(a, c, std::min(a, c) * u(rng));
      const bool composed_below = compose(t, beta, alpha).value <= gamma.value + kEps;
      const bool beta_below = beta.value <= left_residual(t, gamma, alpha).value + kEps;
      const bool alpha_below = alpha.value <= right_residual(t, beta, gamma).value + kEps;
      CHECK(composed_below == beta_below);
      CHECK(composed_below == alpha_below);
    }
  }
}
