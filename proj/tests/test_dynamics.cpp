#include "doctest.h"
#include "support.hpp"

using namespace lcmalg;
using namespace lcmalg::testing;

TEST_CASE("apply_endo and preimage") {
  const auto& z = *builtin("z[2,3]");
  CHECK(z.apply_endo(Pv(z, 2), Zg(5)) == Zg(10));
  CHECK(z.preimage(Pv(z, 2), Zg(10)) == Zg(5));
  CHECK_FALSE(z.preimage(Pv(z, 2), Zg(5)));
  CHECK(z.preimage(Pv(z, 6), Zg(12)) == Zg(2));

  const auto& zi = *builtin("zi[i,1+i,3]");
  const SgElem one_plus_i = zi.P().parse("1+i");
  CHECK(zi.apply_endo(one_plus_i, GroupElem::gauss({1, 0})) == GroupElem::gauss({1, 1}));

  const auto& t = *builtin("toeplitz2");
  const Group& G = t.G();
  const SgElem one = t.P().generator(0);
  const SgElem two = t.P().compose(one, one);
  const GroupElem d0 = G.make_shift({{t.P().identity(), 1}});
  CHECK(t.apply_endo(one, d0) == G.make_shift({{one, 1}}));
  CHECK(t.preimage(one, G.make_shift({{two, 1}})) == G.make_shift({{one, 1}}));
  CHECK_FALSE(t.preimage(one, d0));
}

TEST_CASE("transversals and canon_rep") {
  const auto& z = *builtin("z[2,3]");
  CHECK(z.transversal(Pv(z, 2)).materialize() == std::vector<GroupElem>{Zg(0), Zg(1)});
  CHECK(z.canon_rep(Pv(z, 2), Zg(7)) == std::make_pair(Zg(1), Zg(3)));
  CHECK(z.canon_rep(Pv(z, 6), Zg(-1)) == std::make_pair(Zg(5), Zg(-1)));
  CHECK(z.index(Pv(z, 6)) == 6u);

  const auto& t = *builtin("toeplitz2");
  const Group& G = t.G();
  const SgElem one = t.P().generator(0);
  const SgElem two = t.P().compose(one, one);
  const GroupElem zero = G.identity();
  const GroupElem d0 = G.make_shift({{t.P().identity(), 1}});
  const auto T1 = t.transversal(one).materialize();
  CHECK(T1.size() == 2);
  CHECK(std::find(T1.begin(), T1.end(), zero) != T1.end());
  CHECK(std::find(T1.begin(), T1.end(), d0) != T1.end());
  const GroupElem d0_d2 = G.make_shift({{t.P().identity(), 1}, {two, 1}});
  CHECK(t.canon_rep(one, d0_d2) == std::make_pair(d0, G.make_shift({{one, 1}})));

  // The free monoid shift has infinite index and refuses to materialize.
  const auto& s = *builtin("shift2-free2");
  CHECK_FALSE(s.index(s.P().parse("a")));
  CHECK_THROWS_AS((void)s.transversal(s.P().parse("a")).materialize(), TruncationRequired);
  CHECK(s.transversal(s.P().parse("a")).prefix(20).size() == 20);
}

TEST_CASE("solve_double examples") {
  const auto& z = *builtin("z[2,3]");
  CHECK(z.solve_double(Pv(z, 2), Pv(z, 3), Zg(3)) == std::make_pair(Zg(3), Zg(1)));
  CHECK(z.solve_double(Pv(z, 6), Pv(z, 9), Zg(0)) == std::make_pair(Zg(0), Zg(0)));
  const auto& z2 = *builtin("z[2]");
  CHECK_FALSE(z2.solve_double(Pv(z2, 2), Pv(z2, 4), Zg(1)));
}

// Property: any returned solution satisfies x = theta_p(k) theta_q(l)^-1, and
// solvability matches a direct search over small k, l.
TEST_CASE("property: solve_double solutions verify") {
  for (const std::string name : {"z[2,3]", "z[-1,2,3]", "zi[i,1+i,3]", "toeplitz2", "shift2-free2", "shiftz-n2"}) {
    const DynamicalSystem& sys = *builtin(name);
    const Group& G = sys.G();
    const auto ball = sys.P().enumerate_ball(2);
    const auto gs = sys.sample_group(40, 5);
    for (const SgElem& p : ball) {
      for (const SgElem& q : ball) {
        for (const GroupElem& x : gs) {
          const auto sol = sys.solve_double(p, q, x);
          if (!sol) continue;
          CHECK(G.op(sys.apply_endo(p, sol->first), G.inverse(sys.apply_endo(q, sol->second))) == x);
        }
      }
    }
  }
  // Integers: solvable iff gcd(p, q) divides x.
  const DynamicalSystem& z = *builtin("z[2,3]");
  for (const SgElem& p : z.P().enumerate_ball(3)) {
    for (const SgElem& q : z.P().enumerate_ball(3)) {
      for (std::int64_t x = -20; x <= 20; ++x) {
        const std::int64_t g = std::gcd(z.P().int_value(p), z.P().int_value(q));
        CHECK(z.solve_double(p, q, Zg(x)).has_value() == (x % g == 0));
      }
    }
  }
}

// Property: canon_rep returns a transversal element and reconstructs g.
TEST_CASE("property: canon_rep reconstructs") {
  for (const std::string name : {"z[-1,2,3]", "zi[i,1+i,3]", "toeplitz2", "shift2-free2", "shiftz-n2"}) {
    const DynamicalSystem& sys = *builtin(name);
    const Group& G = sys.G();
    for (const SgElem& p : sys.P().enumerate_ball(2)) {
      for (const GroupElem& g : sys.sample_group(40, 9)) {
        auto [t, k] = sys.canon_rep(p, g);
        CHECK(G.op(t, sys.apply_endo(p, k)) == g);
        CHECK(sys.canon_rep(p, t).first == t);
      }
    }
  }
}

TEST_CASE("verify_axioms") {
  SampleSpec spec;
  CHECK(builtin("z[2,3]")->verify_axioms(spec).passed());
  CHECK(builtin("toeplitz2")->verify_axioms(spec).passed());

  const auto mod4 = DynamicalSystem::int_mult(Semigroup::integers({2}), 4);
  const Report rep = mod4.verify_axioms(spec);
  CHECK_FALSE(rep.passed());
  CHECK(rep.first_witness("injectivity") == json{{"g", 2}, {"image", 0}, {"p", 2}});

  try {
    (void)register_system(DynamicalSystem::int_mult(Semigroup::integers({4, 6})));
    FAIL("|4,6> registered");
  } catch (const RegistrationError& e) {
    const json& w = e.witness();
    bool found = false;
    for (const json& f : w["failures"]) {
      if (f["check"] == "order_respecting") {
        found = true;
        CHECK(f["witness"]["g"] == 12);
        CHECK(f["witness"]["r"] == 24);
        break;
      }
    }
    CHECK(found);
  }
}
