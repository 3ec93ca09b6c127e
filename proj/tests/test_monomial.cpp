#include "doctest.h"
#include "support.hpp"

using namespace lcmalg;
using namespace lcmalg::testing;

TEST_CASE("canonicalize examples") {
  const auto& z = *builtin("z[2,3]");
  CHECK(mono(z, 3, 3, 2, 3) == raw(z, 0, 3, 2, 1));
  CHECK(mono(z, 0, 1, 1, 0) == raw(z, 0, 1, 1, 0));
  CHECK(is_canonical(z, raw(z, 0, 3, 2, 1)));
  CHECK_FALSE(is_canonical(z, raw(z, 3, 3, 2, 3)));
  const auto& zs = *builtin("z[-1,2,3]");
  CHECK(mono(zs, 0, -2, 3, 0) == raw(zs, 0, 2, -3, 0));
}

TEST_CASE("mult examples") {
  const auto& z = *builtin("z[2,3]");
  CHECK(mult(z, raw(z, 0, 1, 2, 0), raw(z, 3, 3, 1, 0)) == raw(z, 3, 3, 2, 1));
  CHECK(mult(z, mono(z, 1, 2, 2, 1), mono(z, 0, 3, 3, 0)) == raw(z, 3, 6, 6, 3));
  CHECK(mult(z, mono(z, 0, 2, 2, 0), mono(z, 1, 2, 2, 1)).is_zero());
  const Monomial m = mono(z, 5, 6, 4, 3);
  CHECK(mult(z, identity_monomial(z), m) == m);
  CHECK(mult(z, m, identity_monomial(z)) == m);
  CHECK(mult(z, m, Monomial::zero()).is_zero());
}

TEST_CASE("adjoint examples") {
  const auto& z = *builtin("z[2,3]");
  CHECK(adjoint(z, raw(z, 3, 3, 2, 1)) == raw(z, -1, 2, 3, 0));
  const Monomial e = projection(z, Zg(1), Pv(z, 2));
  CHECK(adjoint(z, e) == e);
  CHECK(adjoint(z, Monomial::zero()).is_zero());
}

TEST_CASE("projection_product examples") {
  const auto& z = *builtin("z[2,3]");
  const auto e = [&](std::int64_t g, std::int64_t p) { return projection(z, Zg(g), Pv(z, p)); };
  CHECK(projection_product(z, e(1, 2), e(0, 3)) == e(3, 6));
  CHECK(projection_product(z, e(5, 6), e(5, 6)) == e(5, 6));
  CHECK(projection_product(z, e(0, 2), e(1, 4)).is_zero());
  CHECK_THROWS_AS((void)projection_product(z, raw(z, 0, 1, 2, 0), e(0, 2)), std::invalid_argument);
}

TEST_CASE("algebra elements") {
  const auto& z = *builtin("z[2,3]");
  const Monomial m1 = mono(z, 0, 1, 2, 0), m2 = mono(z, 1, 2, 2, 1), m3 = mono(z, 3, 3, 1, 0);
  const AlgebraElement a = algebra_add(AlgebraElement(m1, Coef(1)), AlgebraElement(m2, Coef(2)));
  const AlgebraElement lhs = algebra_mult(z, a, AlgebraElement(m3, Coef(1)));
  const AlgebraElement rhs =
      algebra_add(AlgebraElement(mult(z, m1, m3), Coef(1)), AlgebraElement(mult(z, m2, m3), Coef(2)));
  CHECK(lhs == rhs);

  const auto e = [&](std::int64_t g, std::int64_t p) { return AlgebraElement(projection(z, Zg(g), Pv(z, p)), Coef(1)); };
  CHECK(algebra_mult(z, e(0, 2), e(1, 2)).terms().empty());
  CHECK(algebra_add(a, algebra_scale(a, Coef(-1))).terms().empty());

  // The adjoint conjugates coefficients.
  const AlgebraElement c(m1, Coef::i());
  const AlgebraElement cs = algebra_adjoint(z, c);
  REQUIRE(cs.terms().size() == 1);
  CHECK(cs.terms().begin()->second == Coef(0, -1));
  CHECK(Monomial{cs.terms().begin()->first} == adjoint(z, m1));
}

TEST_CASE("serialization") {
  const auto& z = *builtin("z[2,3]");
  CHECK(monomial_to_json(z, raw(z, 3, 3, 2, 1)) == json{{"g", 3}, {"p", 3}, {"q", 2}, {"h", 1}});
  CHECK(monomial_to_json(z, Monomial::zero()) == "0");
  CHECK(monomial_from_json(z, json::parse("[3,3,2,3]")) == raw(z, 0, 3, 2, 1));
  CHECK(monomial_from_json(z, "0").is_zero());
}

// Property: the algebra laws on random monomials and two-term sums.
TEST_CASE("property: monomial calculus") {
  for (const std::string name : {"z[2,3]", "z[-1,2,3]", "zi[i,1+i,3]", "toeplitz2", "shift2-free2", "trivial-n2"}) {
    const DynamicalSystem& sys = *builtin(name);
    SampleSpec spec;
    spec.p_radius = 2;
    const Report rep = check_monomial_calculus(sys, spec, 1500);
    CHECK_MESSAGE(rep.passed(), name << ": " << rep.to_json()["failures"].dump());
  }
}

TEST_CASE("property: associativity of two-term sums") {
  const DynamicalSystem& sys = *builtin("z[-1,2,3]");
  const auto ball = sys.P().enumerate_ball(2);
  const auto gs = sys.sample_group(20, 4);
  Rng rng(4);
  auto sum = [&] {
    AlgebraElement a(random_monomial(sys, rng, ball, gs), Coef(1 + static_cast<long>(rng() % 3)));
    return algebra_add(a, AlgebraElement(random_monomial(sys, rng, ball, gs), Coef(0, 1)));
  };
  for (int i = 0; i < 300; ++i) {
    const AlgebraElement a = sum(), b = sum(), c = sum();
    CHECK(algebra_mult(sys, algebra_mult(sys, a, b), c) == algebra_mult(sys, a, algebra_mult(sys, b, c)));
    CHECK(algebra_adjoint(sys, algebra_mult(sys, a, b)) ==
          algebra_mult(sys, algebra_adjoint(sys, b), algebra_adjoint(sys, a)));
  }
}
