#include "doctest.h"
#include "support.hpp"

#include "lcmalg/product_system.hpp"

using namespace lcmalg;
using namespace lcmalg::testing;

namespace {

const DynamicalSystem& Z() { return *builtin("z[2,3]"); }
FibreVector pi(std::int64_t p, std::int64_t g) { return FibreVector::basis(Pv(Z(), p), Zg(g)); }
GroupAlgebraElement delta(std::int64_t g) { return GroupAlgebraElement::delta(Zg(g)); }
RankOne theta(std::int64_t p, std::int64_t g1, std::int64_t g2) { return RankOne{pi(p, g1), pi(p, g2)}; }
FockVector fock(std::int64_t w, std::int64_t x) { return FockVector::basis(Pv(Z(), w), Zg(x)); }

}  // namespace

TEST_CASE("inner products") {
  CHECK(inner_product(Z(), pi(2, 1), pi(2, 3)) == delta(1));
  CHECK(inner_product(Z(), pi(2, 0), pi(2, 1)).is_zero());
  CHECK(inner_product(Z(), pi(6, 5), pi(6, 5)) == delta(0));
  // Conjugate-linear in the first argument.
  const FibreVector ixi = FibreVector::basis(Pv(Z(), 2), Zg(1), Coef::i());
  CHECK(inner_product(Z(), ixi, pi(2, 1)) == GroupAlgebraElement::delta(Zg(0), Coef(0, -1)));
}

TEST_CASE("fibre multiplication and actions") {
  CHECK(fibre_mult(Z(), pi(2, 1), pi(3, 2)) == pi(6, 5));
  CHECK(fibre_mult(Z(), pi(2, 0), pi(3, 0)) == pi(6, 0));
  CHECK(left_action(Z(), delta(4), pi(3, 2)) == pi(3, 6));
  CHECK(fibre_mult(Z(), pi(1, 4), pi(3, 2)) == pi(3, 6));
  CHECK(right_action(Z(), pi(2, 1), delta(3)) == pi(2, 7));
}

TEST_CASE("transversal composition") {
  const auto m23 = transversal_compose(Z(), Pv(Z(), 2), Pv(Z(), 3)).materialize();
  CHECK(m23 == std::vector<GroupElem>{Zg(0), Zg(2), Zg(4), Zg(1), Zg(3), Zg(5)});
  const auto m22 = transversal_compose(Z(), Pv(Z(), 2), Pv(Z(), 2)).materialize();
  CHECK(m22 == std::vector<GroupElem>{Zg(0), Zg(2), Zg(1), Zg(3)});
  CHECK(transversal_compose(Z(), Pv(Z(), 3), Pv(Z(), 1)).materialize() == Z().transversal(Pv(Z(), 3)).materialize());
}

TEST_CASE("rank-one operators and iota") {
  CHECK(rank_one_apply(Z(), theta(2, 1, 1), pi(2, 3)) == pi(2, 3));
  CHECK(rank_one_apply(Z(), basis_projection(Pv(Z(), 2), Zg(0)), pi(2, 1)).is_zero());
  CHECK(iota_apply(Z(), Pv(Z(), 2), Pv(Z(), 6), theta(2, 1, 1), pi(6, 3)) == pi(6, 3));
  CHECK(iota_apply(Z(), Pv(Z(), 2), Pv(Z(), 6), theta(2, 0, 0), pi(6, 3)).is_zero());
  // iota_p^p is the identity embedding.
  CHECK(iota_apply(Z(), Pv(Z(), 2), Pv(Z(), 2), theta(2, 0, 1), pi(2, 3)) ==
        rank_one_apply(Z(), theta(2, 0, 1), pi(2, 3)));
}

TEST_CASE("compact alignment") {
  const auto e36 = compact_align_product(Z(), Pv(Z(), 2), Pv(Z(), 3), theta(2, 1, 1), theta(3, 0, 0));
  REQUIRE(e36);
  CHECK(e36->xi == pi(6, 3));
  CHECK(e36->eta == pi(6, 3));
  const auto t = compact_align_product(Z(), Pv(Z(), 2), Pv(Z(), 3), theta(2, 0, 1), theta(3, 0, 0));
  REQUIRE(t);
  CHECK(t->xi == pi(6, 2));
  CHECK(t->eta == pi(6, 3));

  const auto& s = *builtin("shift2-free2");
  const SgElem a = s.P().parse("a"), b = s.P().parse("b");
  const GroupElem e = s.G().identity();
  const RankOne ta{FibreVector::basis(a, e), FibreVector::basis(a, e)};
  const RankOne tb{FibreVector::basis(b, e), FibreVector::basis(b, e)};
  CHECK_FALSE(compact_align_product(s, a, b, ta, tb));
}

TEST_CASE("Fock creation and annihilation") {
  CHECK(fock_create(Z(), pi(2, 0), fock(3, 1)) == fock(6, 2));
  CHECK(fock_create(Z(), pi(2, 0), fock(1, 0)) == fock(2, 0));
  CHECK(fock_annihilate(Z(), pi(2, 1), fock(6, 3)) == fock(3, 1));
  CHECK(fock_annihilate(Z(), pi(2, 1), fock(3, 1)).is_zero());
  CHECK(fock_annihilate(Z(), pi(2, 1), fock(6, 4)).is_zero());
}

TEST_CASE("Nica covariance examples") {
  // (1,2) and (0,3): both sides project onto pi_w(delta_x) with w in 6P and x = 3 mod 6.
  const SgElem two = Pv(Z(), 2), three = Pv(Z(), 3), six = Pv(Z(), 6);
  const auto lhs = [&](const FockVector& v) {
    return fock_compact(Z(), two, theta(2, 1, 1), fock_compact(Z(), three, theta(3, 0, 0), v));
  };
  for (std::int64_t w : {1, 2, 3, 6, 12, 18, 36}) {
    for (std::int64_t x = -7; x <= 7; ++x) {
      const FockVector v = fock(w, x);
      const bool kept = w % 6 == 0 && ((x % 6) + 6) % 6 == 3;
      CHECK(lhs(v) == (kept ? v : FockVector{}));
      CHECK(fock_compact(Z(), six, theta(6, 3, 3), v) == (kept ? v : FockVector{}));
    }
  }
}

TEST_CASE("property: product system suites") {
  for (const std::string name : {"z[2,3]", "z[-1,2,3]", "zi[i,1+i,3]", "toeplitz2", "shift2-free2", "shiftz-n2",
                                 "trivial-free2"}) {
    const DynamicalSystem& sys = *builtin(name);
    SampleSpec spec;
    spec.p_radius = 2;
    spec.pairs = 100;
    spec.vectors = 10;
    for (const Report& rep : {check_product_system(sys, spec), check_nica_covariance(sys, spec),
                              check_generator_relations(sys, spec)}) {
      CHECK_MESSAGE(rep.passed(), name << " " << rep.suite() << ": " << rep.to_json()["failures"].dump());
    }
  }
}
