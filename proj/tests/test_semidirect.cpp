#include "doctest.h"
#include "support.hpp"

using namespace lcmalg;
using namespace lcmalg::testing;

TEST_CASE("sd_compose examples") {
  const auto& z = *builtin("z[2,3]");
  CHECK(sd_compose(z, sd(z, 1, 2), sd(z, 1, 3)) == sd(z, 3, 6));
  CHECK(sd_compose(z, sd(z, 0, 1), sd(z, 4, 6)) == sd(z, 4, 6));
  CHECK(sd_compose(z, sd(z, 5, 1), sd(z, -5, 1)) == sd(z, 0, 1));
}

TEST_CASE("ideal_intersect examples") {
  const auto& z = *builtin("z[2,3]");
  CHECK(ideal_intersect(z, sd(z, 1, 2), sd(z, 0, 3)) == IdealOutcome(sd(z, 3, 6)));
  CHECK_FALSE(ideal_intersect(z, sd(z, 0, 2), sd(z, 1, 2)));
  for (const SdElement& a : make_window(z, SampleSpec{})) {
    const IdealOutcome self = ideal_intersect(z, a, a);
    REQUIRE(self);
    CHECK(sd_same_ideal(z, *self, a));
  }
}

TEST_CASE("units of the semidirect product") {
  const auto& z = *builtin("z[2,3]");
  CHECK(sd_is_unit(z, sd(z, 5, 1)));
  CHECK_FALSE(sd_is_unit(z, sd(z, 0, 2)));
  CHECK(sd_unit_inverse(z, sd(z, 5, 1)) == sd(z, -5, 1));
  CHECK(sd_unit_description(z) == "ℤ ⋊ {1}");
  const auto& zs = *builtin("z[-1,2,3]");
  CHECK(sd_unit_description(zs) == "ℤ ⋊ {±1}");
  const SdElement u = sd(zs, 4, -1);
  CHECK(sd_is_unit(zs, u));
  CHECK(sd_compose(zs, u, sd_unit_inverse(zs, u)) == sd_identity(zs));
}

TEST_CASE("left Ore witnesses") {
  const auto& z = *builtin("z[2,3]");
  const SdElement a = sd(z, 0, 2), b = sd(z, 1, 3);
  const auto w = sd_ore_witness(z, a, b, 4);
  REQUIRE(w);
  CHECK(sd_compose(z, w->first, a) == sd_compose(z, w->second, b));
  const auto same = sd_ore_witness(z, a, a, 0);
  REQUIRE(same);
  CHECK(same->first == sd_identity(z));
  CHECK(same->second == sd_identity(z));

  const auto& s = *builtin("shift2-free2");
  const SdElement x{s.G().identity(), s.P().parse("a")};
  const SdElement y{s.G().identity(), s.P().parse("b")};
  CHECK_FALSE(sd_ore_witness(s, x, y, 6));
  SampleSpec spec;
  spec.pairs = 200;
  CHECK(sd_left_ore_sample(z, spec).passed());
  const Report free = sd_left_ore_sample(s, spec);
  CHECK_FALSE(free.passed());
  CHECK(free.failures("left_cancellative") == 0);
  CHECK(free.failures("right_cancellative") == 0);
}

TEST_CASE("parse and serialize") {
  const auto& z = *builtin("z[2,3]");
  CHECK(sd_parse(z, "1,2") == sd(z, 1, 2));
  CHECK(sd_parse(z, " -4 , 6 ") == sd(z, -4, 6));
  CHECK(sd_from_json(z, sd_to_json(z, sd(z, 3, 6))) == sd(z, 3, 6));
  CHECK(ideal_to_json(z, IdealOutcome(sd(z, 3, 6))) == json{{"kind", "principal"}, {"g", 3}, {"p", 6}});
  CHECK(ideal_to_json(z, std::nullopt) == json{{"kind", "empty"}});
  const auto& zi = *builtin("zi[i,1+i,3]");
  const SdElement a = sd_parse(zi, "1+2i,1+i");
  CHECK(sd_parse(zi, sd_to_string(zi, a)) == a);
}

// Property: ideal_intersect against a window intersection decided by the
// group arithmetic of each family.
TEST_CASE("property: ideal_intersect window oracle") {
  for (const std::string name : {"z[2,3]", "z[-1,2,3]", "zi[i,1+i,3]", "toeplitz2", "shift2-free2", "shiftz-n2"}) {
    const DynamicalSystem& sys = *builtin(name);
    SampleSpec spec;
    spec.p_radius = 2;
    spec.g_samples = 20;
    const auto window = make_window(sys, spec);
    const auto cover = sys.P().enumerate_ball(6 + sys.P().unit_order() - 1);
    const auto ball = sys.P().enumerate_ball(1);
    const auto small = sys.G().small_elements(5);
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
      const SdElement a = window[uniform_below(rng, window.size())];
      const SdElement b = window[uniform_below(rng, window.size())];
      const IdealOutcome c = ideal_intersect(sys, a, b);
      std::vector<SdElement> pts;
      for (const SdElement& x : {a, b, c.value_or(a)}) {
        for (const SgElem& p : ball) {
          for (const GroupElem& k : small) pts.push_back(sd_compose(sys, x, {k, p}));
        }
      }
      for (const SdElement& s : pts) {
        const bool lhs = in_ideal_oracle(sys, a, s, cover) && in_ideal_oracle(sys, b, s, cover);
        const bool rhs = c && in_ideal_oracle(sys, *c, s, cover);
        CHECK_MESSAGE(lhs == rhs, name << " " << sd_to_string(sys, a) << " n " << sd_to_string(sys, b));
      }
    }
  }
}

// Property: both arguments divide the intersection generator.
TEST_CASE("property: intersection lies in both ideals") {
  for (const std::string name : {"z[-1,2,3]", "zi[i,1+i,3]", "shift2-free2"}) {
    const DynamicalSystem& sys = *builtin(name);
    const auto window = make_window(sys, SampleSpec{});
    Rng rng(8);
    for (int i = 0; i < 300; ++i) {
      const SdElement a = window[uniform_below(rng, window.size())];
      const SdElement b = window[uniform_below(rng, window.size())];
      const IdealOutcome c = ideal_intersect(sys, a, b);
      if (!c) continue;
      const auto da = sd_divides(sys, a, *c);
      const auto db = sd_divides(sys, b, *c);
      REQUIRE(da);
      REQUIRE(db);
      CHECK(sd_compose(sys, a, *da) == *c);
      CHECK(sd_compose(sys, b, *db) == *c);
    }
  }
}
