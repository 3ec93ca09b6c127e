#pragma once

// Shared fixtures for the unit, property and acceptance tests.

#include <map>
#include <numeric>
#include <memory>
#include <string>

#include "lcmalg/config.hpp"
#include "lcmalg/monomial.hpp"

namespace lcmalg::testing {

/// A registered built-in system, constructed once per process.
inline std::shared_ptr<const DynamicalSystem> builtin(const std::string& name) {
  static std::map<std::string, std::shared_ptr<const DynamicalSystem>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    it = cache.emplace(name, std::make_shared<const DynamicalSystem>(load_system(json(name)))).first;
  }
  return it->second;
}

inline GroupElem Zg(std::int64_t n) { return GroupElem::integer(n); }

/// The element of an integer semigroup with the given value.
inline SgElem Pv(const DynamicalSystem& sys, std::int64_t v) {
  auto p = sys.P().from_int(v);
  if (!p) throw std::invalid_argument("no semigroup element with value " + std::to_string(v));
  return *p;
}

inline SdElement sd(const DynamicalSystem& sys, std::int64_t g, std::int64_t p) { return {Zg(g), Pv(sys, p)}; }

inline Monomial mono(const DynamicalSystem& sys, std::int64_t g, std::int64_t p, std::int64_t q, std::int64_t h) {
  return canonicalize(sys, Zg(g), Pv(sys, p), Pv(sys, q), Zg(h));
}

/// Raw (not canonicalized) quadruple, for comparing against expected canonical forms.
inline Monomial raw(const DynamicalSystem& sys, std::int64_t g, std::int64_t p, std::int64_t q, std::int64_t h) {
  return Monomial{Quad{Zg(g), Pv(sys, p), Pv(sys, q), Zg(h)}};
}

/// Membership of (h, q) in the principal right ideal (g, p) S, decided from
/// the concrete group and semigroup data without the dynamics layer:
/// q must be p x for some x in `ball` and g^-1 h must lie in theta_p(G).
inline bool in_ideal_oracle(const DynamicalSystem& sys, const SdElement& a, const SdElement& s,
                            const std::vector<SgElem>& ball) {
  const Semigroup& P = sys.P();
  bool q_ok = false;
  for (const SgElem& x : ball) {
    if (P.compose(a.p, x) == s.p) {
      q_ok = true;
      break;
    }
  }
  if (!q_ok) return false;
  const Group& G = sys.G();
  const GroupElem d = G.left_quotient(a.g, s.g);
  switch (sys.kind()) {
    case ActionKind::IntMult: {
      const std::int64_t p = P.int_value(a.p);
      if (G.modulus() == 0) return d.as_int() % p == 0;
      // theta_p(Z/n) = gcd(p, n) Z/n
      return d.as_int() % std::gcd(p, G.modulus()) == 0;
    }
    case ActionKind::GaussMult:
      return exact_div(d.as_gauss(), P.gauss_value(a.p)).has_value();
    case ActionKind::Shift: {
      // theta_p(G) consists of the functions supported on pP.
      for (const auto& [pos, value] : d.as_shift().terms) {
        bool in_pP = false;
        for (const SgElem& x : ball) {
          if (P.compose(a.p, x) == pos) {
            in_pP = true;
            break;
          }
        }
        if (!in_pP) return false;
      }
      return true;
    }
    case ActionKind::Trivial:
      return true;
  }
  return false;
}

}  // namespace lcmalg::testing
