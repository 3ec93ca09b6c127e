#include "doctest.h"
#include "support.hpp"

#include "lcmalg/regular_rep.hpp"

using namespace lcmalg;
using namespace lcmalg::testing;

TEST_CASE("as_partial_map examples") {
  const auto& z = *builtin("z[2,3]");
  const PartialInjection s2_star = as_partial_map(raw(z, 0, 1, 2, 0));
  CHECK(apply(z, s2_star, sd(z, 4, 6)) == sd(z, 2, 3));
  CHECK_FALSE(apply(z, s2_star, sd(z, 1, 3)));
  const PartialInjection id = as_partial_map(identity_monomial(z));
  for (const SdElement& s : make_window(z, SampleSpec{})) CHECK(apply(z, id, s) == s);
  CHECK(as_partial_map(Monomial::zero()).is_empty());
}

TEST_CASE("compose examples") {
  const auto& z = *builtin("z[2,3]");
  const auto e = [&](std::int64_t g, std::int64_t p) { return as_partial_map(projection(z, Zg(g), Pv(z, p))); };
  CHECK(same_map(z, compose(z, e(1, 2), e(0, 3)), e(3, 6)));
  CHECK(compose(z, e(1, 2), PartialInjection::empty()).is_empty());
  CHECK(compose(z, PartialInjection::empty(), e(1, 2)).is_empty());
  CHECK(compose(z, e(0, 2), e(1, 2)).is_empty());
}

TEST_CASE("equal_on_window") {
  const auto& z = *builtin("z[2,3]");
  SampleSpec spec;
  const auto window = make_window(z, spec);
  const PartialInjection e02 = as_partial_map(projection(z, Zg(0), Pv(z, 2)));
  const PartialInjection e12 = as_partial_map(projection(z, Zg(1), Pv(z, 2)));
  const auto w = equal_on_window(z, e02, e12, {sd(z, 0, 2)});
  REQUIRE(w);
  CHECK(*w == sd(z, 0, 2));
  CHECK(equal_on_window(z, e02, e12, window).has_value());

  // Twisting the pair ((g,p),(h,q)) by a unit of S does not change the map.
  const auto& zs = *builtin("z[-1,2,3]");
  const PartialInjection a = as_partial_map(raw(zs, 3, 2, 3, 1));
  const SdElement u = sd(zs, 5, -1);
  const SdElement gp = sd_compose(zs, sd(zs, 3, 2), u);
  const SdElement hq = sd_compose(zs, sd(zs, 1, 3), u);
  const PartialInjection b = as_partial_map(Monomial{Quad{gp.g, gp.p, hq.p, hq.g}});
  CHECK_FALSE(equal_on_window(zs, a, b, make_window(zs, spec)));
  CHECK(same_map(zs, a, b));
}

// Property: the map of m = (g,p,q,h) sends (h,q)x to (g,p)x and is undefined
// outside (h,q)S, checked against the family arithmetic.
TEST_CASE("property: partial map matches direct evaluation") {
  for (const std::string name : {"z[2,3]", "z[-1,2,3]", "zi[i,1+i,3]", "toeplitz2", "shift2-free2", "trivial-free2"}) {
    const DynamicalSystem& sys = *builtin(name);
    const auto ball = sys.P().enumerate_ball(2);
    const auto gs = sys.sample_group(20, 2);
    const auto cover = sys.P().enumerate_ball(6 + sys.P().unit_order() - 1);
    SampleSpec spec;
    spec.p_radius = 2;
    spec.g_samples = 20;
    const auto window = make_window(sys, spec);
    Rng rng(6);
    for (int i = 0; i < 150; ++i) {
      const Monomial m = random_monomial(sys, rng, ball, gs);
      const Quad& x = *m.quad;
      const PartialInjection f = as_partial_map(m);
      for (int j = 0; j < 5; ++j) {
        const SdElement y{gs[uniform_below(rng, gs.size())], ball[uniform_below(rng, ball.size())]};
        CHECK(apply(sys, f, sd_compose(sys, {x.h, x.q}, y)) == sd_compose(sys, {x.g, x.p}, y));
      }
      for (int j = 0; j < 10; ++j) {
        const SdElement s = window[uniform_below(rng, window.size())];
        if (!in_ideal_oracle(sys, {x.h, x.q}, s, cover)) CHECK_FALSE(apply(sys, f, s));
      }
    }
  }
}

TEST_CASE("property: Li relations and homomorphism") {
  for (const std::string name : {"z[2,3]", "z[-1,2,3]", "zi[i,1+i,3]", "toeplitz2", "shift2-free2", "shiftz-n2",
                                 "trivial-free2", "z[-1]"}) {
    const DynamicalSystem& sys = *builtin(name);
    SampleSpec spec;
    spec.p_radius = 2;
    spec.g_samples = 30;
    spec.pairs = 200;
    const Report li = check_li_relations(sys, spec);
    CHECK_MESSAGE(li.passed(), name << ": " << li.to_json()["failures"].dump());
    const Report hom = check_homomorphism(sys, spec, 300);
    CHECK_MESSAGE(hom.passed(), name << ": " << hom.to_json()["failures"].dump());
  }
}
