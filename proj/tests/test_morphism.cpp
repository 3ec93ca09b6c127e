#include "doctest.h"
#include "support.hpp"

#include <algorithm>

using namespace lcmalg;
using namespace lcmalg::testing;

namespace {

AdsMorphism morphism(const std::string& src, const std::string& dst, GroupMap phi_g,
                     std::vector<std::pair<std::int64_t, std::int64_t>> phi_p) {
  auto s = builtin(src);
  auto t = builtin(dst);
  std::map<SgElem, SgElem> images;
  for (const auto& [k, v] : phi_p) images[Pv(*s, k)] = Pv(*t, v);
  return AdsMorphism(s, t, phi_g, std::move(images));
}

SampleSpec small_spec() {
  SampleSpec spec;
  spec.p_radius = 2;
  spec.g_samples = 20;
  spec.pairs = 200;
  return spec;
}

}  // namespace

TEST_CASE("identity and inclusion morphisms") {
  const SampleSpec spec = small_spec();
  for (const AdsMorphism& m : {morphism("z[2,3]", "z[2,3]", GroupMap::identity(), {{2, 2}, {3, 3}}),
                               morphism("z[2,3]", "z[-1,2,3]", GroupMap::identity(), {{2, 2}, {3, 3}})}) {
    CHECK(check_morphism(m, spec).passed());
    CHECK(check_admissible(m, spec).passed());
    CHECK(ideal_equation_check(m, spec).passed());
  }
  const AdsMorphism inc = morphism("z[2,3]", "z[-1,2,3]", GroupMap::identity(), {{2, 2}, {3, 3}});
  const SdElement a = sd(inc.source(), 5, 6);
  CHECK(inc.map_sd(a) == sd(inc.target(), 5, 6));
  CHECK(inc.map_semigroup(Pv(inc.source(), 12)) == Pv(inc.target(), 12));
}

TEST_CASE("equivariance failure") {
  const Report rep = check_morphism(morphism("z[2]", "z[3]", GroupMap::identity(), {{2, 3}}), small_spec());
  CHECK_FALSE(rep.passed());
  CHECK(rep.failures("equivariance") > 0);
  CHECK(rep.failures("group_homomorphism") == 0);
  CHECK(rep.failures("semigroup_homomorphism") == 0);
}

TEST_CASE("collapse to the trivial semigroup") {
  const SampleSpec spec = small_spec();
  const AdsMorphism m = morphism("z[2]", "z[]", GroupMap::zero(), {{2, 1}});
  CHECK(check_morphism(m, spec).passed());
  const Report adm = check_admissible(m, spec);
  CHECK(adm.failures("iv") == 0);
  CHECK(adm.failures("v") > 0);
  CHECK(adm.failures("v_containment") == 0);
  // Free source: (v) is checked with p = q, and g = 1 is the first odd sample.
  const json w = adm.first_witness("v");
  CHECK(w.at("g") == json(1));
  CHECK(w.at("p") == w.at("q"));
  CHECK(w.at("in_source_double_coset") == false);
  CHECK(w.at("image_in_target_double_coset") == true);
  CHECK_FALSE(ideal_equation_check(m, spec).passed());

  const Report bounded = hom_surjectivity_injectivity(m, spec);
  const Semigroup& P = m.source().P();
  const json pair{P.to_json(Pv(m.source(), 2)), P.to_json(Pv(m.source(), 4))};
  const json collisions = bounded.to_json().at("notes").at("p_collisions");
  CHECK_MESSAGE(std::find(collisions.begin(), collisions.end(), pair) != collisions.end(), collisions.dump());
  CHECK(bounded.failures("p_surjective") == 0);
}

TEST_CASE("sign action source is auto-admissible") {
  const SampleSpec spec = small_spec();
  const AdsMorphism m = morphism("z[-1]", "z[-1,2,3]", GroupMap::identity(), {{-1, -1}});
  CHECK(check_morphism(m, spec).passed());
  const Report adm = check_admissible(m, spec);
  CHECK(adm.passed());
  CHECK(adm.cases("source_is_group") == 1);
  CHECK(adm.cases("iv") == 0);
  CHECK(check_admissible(m, spec, true).passed());
  CHECK(ideal_equation_check(m, spec).passed());
}

TEST_CASE("bounded surjectivity and injectivity") {
  const SampleSpec spec = small_spec();
  const Report id = hom_surjectivity_injectivity(morphism("z[2,3]", "z[2,3]", GroupMap::identity(), {{2, 2}, {3, 3}}),
                                                 spec);
  CHECK(id.passed());
  const Report inc = hom_surjectivity_injectivity(
      morphism("z[2,3]", "z[-1,2,3]", GroupMap::identity(), {{2, 2}, {3, 3}}), spec);
  CHECK(inc.failures("p_surjective") > 0);
  CHECK(inc.failures("p_injective") == 0);
  const json missing = inc.to_json().at("notes").at("p_missing_from_image");
  const auto& tgt = *builtin("z[-1,2,3]");
  CHECK(std::find(missing.begin(), missing.end(), tgt.P().to_json(Pv(tgt, -1))) != missing.end());
}

TEST_CASE("morphism construction errors") {
  auto s = builtin("z[2,3]");
  auto t = builtin("z[2,3]");
  std::map<SgElem, SgElem> partial{{Pv(*s, 2), Pv(*t, 2)}};
  CHECK_THROWS_AS(AdsMorphism(s, t, GroupMap::identity(), partial), RegistrationError);
  std::map<SgElem, SgElem> extra{{Pv(*s, 2), Pv(*t, 2)}, {Pv(*s, 3), Pv(*t, 3)}, {Pv(*s, 6), Pv(*t, 6)}};
  CHECK_THROWS_AS(AdsMorphism(s, t, GroupMap::identity(), extra), RegistrationError);
  CHECK_THROWS_AS(AdsMorphism(builtin("toeplitz2"), t, GroupMap::identity(),
                              {{builtin("toeplitz2")->P().generator(0), Pv(*t, 2)}}),
                  RegistrationError);
}

// Property: admissibility and the ideal equation agree, and the containment
// halves of (iv) and (v) never fail.
TEST_CASE("property: admissibility matches the ideal equation") {
  const SampleSpec spec = small_spec();
  const std::vector<AdsMorphism> sample{
      morphism("z[2,3]", "z[-1,2,3]", GroupMap::identity(), {{2, 2}, {3, 3}}),
      morphism("z[2]", "z[]", GroupMap::zero(), {{2, 1}}),
      morphism("z[2]", "z[2,3]", GroupMap::identity(), {{2, 2}}),
      morphism("z[2]", "z[2,3]", GroupMap::scale({3, 0}), {{2, 2}}),
      morphism("z[2,3]", "z[2,3]", GroupMap::identity(), {{2, 4}, {3, 9}}),
      morphism("z[3]", "z[2,3]", GroupMap::scale({2, 0}), {{3, 3}}),
      morphism("z[-1]", "z[-1,2,3]", GroupMap::identity(), {{-1, -1}}),
  };
  for (const AdsMorphism& m : sample) {
    if (!check_morphism(m, spec).passed()) continue;
    const Report adm = check_admissible(m, spec, true);
    CHECK_MESSAGE(adm.passed() == ideal_equation_check(m, spec).passed(), m.describe().dump());
    CHECK(adm.failures("iv_containment") == 0);
    CHECK(adm.failures("v_containment") == 0);
  }
}
