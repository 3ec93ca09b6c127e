#include "doctest.h"
#include "support.hpp"

using namespace lcmalg;
using namespace lcmalg::testing;

TEST_CASE("TOML parsing") {
  const json j = parse_toml(R"(
[system]
kind = "int-mult"
generators = [2, 3]

[verify]
p_ball = 2
seed = 9
)");
  CHECK(j.at("system").at("kind") == "int-mult");
  CHECK(j.at("system").at("generators") == json{2, 3});
  const LoadedConfig cfg = load_config_json(j);
  CHECK(cfg.spec.p_radius == 2);
  CHECK(cfg.spec.seed == 9);
  CHECK(cfg.spec.g_samples == SampleSpec{}.g_samples);
  CHECK(cfg.system->P().name() == builtin("z[2,3]")->P().name());

  CHECK_THROWS_AS((void)parse_toml("[system\nkind ="), ConfigError);
  CHECK_THROWS_AS((void)read_toml("/nonexistent/file.toml"), ConfigError);
  CHECK_THROWS_AS((void)load_config_json(parse_toml("[verify]\nseed = 1")), ConfigError);
  CHECK_THROWS_AS((void)sample_spec_from(json{{"pairs", -1}}), ConfigError);
}

TEST_CASE("built-in systems load and register") {
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    CHECK_NOTHROW((void)builtin(name));
  }
  CHECK_THROWS_AS((void)builtin_spec("z[5,7]"), ConfigError);
  CHECK_NOTHROW((void)load_system(json{{"builtin", "toeplitz2"}}));
}

TEST_CASE("system specs") {
  CHECK_THROWS_AS((void)system_from_spec(json{{"kind", "affine"}}), ConfigError);
  CHECK_THROWS_AS((void)system_from_spec(json{{"generators", {2}}}), ConfigError);
  CHECK_THROWS_AS(
      (void)system_from_spec(json{{"kind", "shift"},
                                  {"base_group", {{"kind", "cyclic"}, {"order", 1}}},
                                  {"semigroup", {{"kind", "free-abelian"}, {"rank", 1}}}}),
      ConfigError);
  // 4 and 6 are not coprime: registration fails on the order condition.
  try {
    (void)load_system(json{{"kind", "int-mult"}, {"generators", {4, 6}}});
    FAIL("expected RegistrationError");
  } catch (const RegistrationError& e) {
    CHECK(e.witness().dump().find("order_respecting") != std::string::npos);
  }
  const DynamicalSystem mod = load_system(json{{"kind", "int-mult"}, {"generators", {3}}, {"modulus", 4}});
  CHECK(mod.G().modulus() == 4);
  const DynamicalSystem g = load_system(json{{"kind", "gauss-mult"}, {"generators", {json{0, 1}, "1+i"}}});
  CHECK(g.P().unit_order() == 4);
}

TEST_CASE("morphism specs") {
  const json spec = parse_toml(R"(
source = "z[2,3]"
target = "z[-1,2,3]"
phi_p = [[2, 2], [3, 3]]
)");
  const AdsMorphism m = morphism_from_spec(spec);
  CHECK(m.group_map().kind == GroupMap::Kind::Identity);
  CHECK(m.map_semigroup(Pv(m.source(), 6)) == Pv(m.target(), 6));

  const AdsMorphism collapse = morphism_from_spec(json{{"source", "z[2]"},
                                                       {"target", "z[]"},
                                                       {"phi_g", "zero"},
                                                       {"phi_p", {{"2", 1}}}});
  CHECK(collapse.map_group(Zg(5)) == Zg(0));

  CHECK_THROWS_AS((void)morphism_from_spec(json{{"source", "z[2]"}, {"target", "z[]"}}), ConfigError);
  CHECK_THROWS_AS((void)morphism_from_spec(json{{"source", "z[2]"}, {"target", "z[]"}, {"phi_p", 3}}), ConfigError);
  CHECK_THROWS_AS((void)morphism_from_spec(
                      json{{"source", "z[2]"}, {"target", "z[]"}, {"phi_g", "rotate"}, {"phi_p", {{2, 1}}}}),
                  ConfigError);
}
