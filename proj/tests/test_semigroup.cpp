#include <set>

#include "doctest.h"
#include "lcmalg/semigroup.hpp"

using namespace lcmalg;

namespace {

std::vector<std::int64_t> values(const Semigroup& P, const std::vector<SgElem>& xs) {
  std::vector<std::int64_t> out;
  for (const SgElem& x : xs) out.push_back(P.int_value(x));
  std::sort(out.begin(), out.end());
  return out;
}

SgElem iv(const Semigroup& P, std::int64_t v) { return P.from_int(v).value(); }

}  // namespace

TEST_CASE("compose examples") {
  const Semigroup z23 = Semigroup::integers({2, 3});
  CHECK(z23.int_value(z23.compose(iv(z23, 2), iv(z23, 3))) == 6);
  const Semigroup F = Semigroup::free_monoid(2);
  CHECK(F.to_string(F.compose(F.parse("ab"), F.parse("ba"))) == "abba");
  const Semigroup zs = Semigroup::integers({-1, 2, 3});
  CHECK(zs.int_value(zs.compose(iv(zs, -1), iv(zs, -2))) == 2);
}

TEST_CASE("compose rejects elements of another semigroup") {
  const Semigroup z23 = Semigroup::integers({2, 3});
  const Semigroup F = Semigroup::free_monoid(2);
  // Elements carry no owner tag, so only shape mismatches are detectable.
  CHECK_THROWS_AS((void)z23.compose(iv(z23, 2), F.parse("aab")), StructuralError);
}

TEST_CASE("right_lcm examples") {
  const Semigroup z23 = Semigroup::integers({2, 3});
  auto m = z23.right_lcm(iv(z23, 2), iv(z23, 3));
  REQUIRE(m);
  CHECK(z23.int_value(m->r) == 6);
  CHECK(z23.int_value(m->p_comp) == 3);
  CHECK(z23.int_value(m->q_comp) == 2);
  m = z23.right_lcm(iv(z23, 4), iv(z23, 6));
  REQUIRE(m);
  CHECK(z23.int_value(m->r) == 12);
  CHECK(z23.int_value(m->p_comp) == 3);
  CHECK(z23.int_value(m->q_comp) == 2);

  const Semigroup F = Semigroup::free_monoid(2);
  CHECK_FALSE(F.right_lcm(F.parse("a"), F.parse("b")));
  m = F.right_lcm(F.parse("a"), F.parse("ab"));
  REQUIRE(m);
  CHECK(F.to_string(m->r) == "ab");
  CHECK(F.to_string(m->p_comp) == "b");
  CHECK(m->q_comp == F.identity());
}

TEST_CASE("divides examples") {
  const Semigroup z23 = Semigroup::integers({2, 3});
  auto d = z23.divides(iv(z23, 2), iv(z23, 6));
  REQUIRE(d);
  CHECK(z23.int_value(*d) == 3);
  CHECK_FALSE(z23.divides(iv(z23, 4), iv(z23, 6)));
  const Semigroup F = Semigroup::free_monoid(2);
  CHECK_FALSE(F.divides(F.parse("ab"), F.parse("a")));
}

TEST_CASE("units") {
  const Semigroup z23 = Semigroup::integers({2, 3});
  CHECK(values(z23, z23.units()) == std::vector<std::int64_t>{1});
  const Semigroup zs = Semigroup::integers({-1, 2, 3});
  CHECK(values(zs, zs.units()) == std::vector<std::int64_t>{-1, 1});
  CHECK(zs.is_unit(iv(zs, -1)));
  CHECK_FALSE(zs.is_unit(iv(zs, -2)));
  const Semigroup F = Semigroup::free_monoid(2);
  REQUIRE(F.units().size() == 1);
  CHECK(F.units()[0] == F.identity());
  CHECK_FALSE(F.is_unit(F.parse("a")));
  const Semigroup Zi = Semigroup::gaussian({{0, 1}, {1, 1}});
  CHECK(Zi.units().size() == 4);
}

TEST_CASE("enumerate_ball examples") {
  const Semigroup z23 = Semigroup::integers({2, 3});
  CHECK(values(z23, z23.enumerate_ball(2)) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 9});
  const Semigroup zs = Semigroup::integers({-1, 2, 3});
  CHECK(values(zs, zs.enumerate_ball(1)) == std::vector<std::int64_t>{-1, 1, 2, 3});
  const Semigroup F = Semigroup::free_monoid(2);
  std::set<std::string> words;
  for (const SgElem& w : F.enumerate_ball(1)) words.insert(F.to_string(w));
  CHECK(words == std::set<std::string>{"ε", "a", "b"});
}

TEST_CASE("right reversibility") {
  const Semigroup z23 = Semigroup::integers({2, 3});
  auto w = z23.right_reversibility_witness(iv(z23, 2), iv(z23, 3), 3);
  REQUIRE(w);
  CHECK(z23.compose(w->first, iv(z23, 2)) == z23.compose(w->second, iv(z23, 3)));
  CHECK(z23.int_value(w->first) == 3);
  CHECK(z23.int_value(w->second) == 2);

  const Semigroup F = Semigroup::free_monoid(2);
  for (int bound = 0; bound <= 5; ++bound) {
    CHECK_FALSE(F.right_reversibility_witness(F.parse("a"), F.parse("b"), bound));
  }
  for (const SgElem& p : F.enumerate_ball(2)) {
    auto same = F.right_reversibility_witness(p, p, 0);
    REQUIRE(same);
    CHECK(same->first == F.identity());
    CHECK(same->second == F.identity());
  }
}

TEST_CASE("registration rejects non-free or non-coprime generators") {
  CHECK_THROWS_AS(Semigroup::integers({2, 4}), RegistrationError);
  CHECK_THROWS_AS(Semigroup::integers({6, 2, 3}), RegistrationError);
  CHECK_THROWS_AS(Semigroup::gaussian({{1, 1}, {2, 0}}), RegistrationError);
  CHECK_NOTHROW(Semigroup::gaussian({{0, 1}, {1, 1}, {3, 0}}));
}

TEST_CASE("parse and to_string round trip") {
  for (const Semigroup& P : {Semigroup::integers({-1, 2, 3}), Semigroup::free_monoid(2), Semigroup::free_abelian(2),
                             Semigroup::gaussian({{0, 1}, {1, 1}, {3, 0}})}) {
    for (const SgElem& p : P.enumerate_ball(3)) {
      CHECK(P.parse(P.to_string(p)) == p);
      CHECK(P.from_json(P.to_json(p)) == p);
    }
  }
}

// Property: right_lcm is the least common upper bound, checked against the
// product ball for integer families with signed generators.
TEST_CASE("property: right_lcm via integer arithmetic") {
  for (const Semigroup& P : {Semigroup::integers({2, 3}), Semigroup::integers({-2, 3}), Semigroup::integers({2, -3}),
                             Semigroup::integers({-2, -3}), Semigroup::integers({-1, 2, 3})}) {
    const auto ball = P.enumerate_ball(3);
    std::set<std::int64_t> all;
    for (const SgElem& x : P.enumerate_ball(9)) all.insert(P.int_value(x));
    for (const SgElem& p : ball) {
      for (const SgElem& q : ball) {
        const auto m = P.right_lcm(p, q);
        REQUIRE(m);
        const std::int64_t a = P.int_value(p), b = P.int_value(q), r = P.int_value(m->r);
        CHECK(r % a == 0);
        CHECK(r % b == 0);
        CHECK(all.count(r / a));
        CHECK(all.count(r / b));
        // Every common multiple inside P is a P-multiple of r.
        for (std::int64_t z : all) {
          if (z % a == 0 && z % b == 0 && all.count(z / a) && all.count(z / b) && std::abs(z) <= 216) {
            CHECK((z % r == 0 && all.count(z / r)));
          }
        }
      }
    }
  }
}
