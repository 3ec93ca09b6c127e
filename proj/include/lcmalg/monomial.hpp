#pragma once

// Canonical monomials u_g s_p s_q* u_h* and their finite linear combinations.
//
// Canonical form: the unit part of p is trivial and h lies in the fixed
// transversal T_q.  Both are reached by right multiplication of the pair
// ((g,p),(h,q)) by a unit of S, which does not change v_(g,p) v_(h,q)*.

#include <map>
#include <optional>
#include <vector>

#include "lcmalg/coef.hpp"
#include "lcmalg/semidirect.hpp"

namespace lcmalg {

struct Quad {
  GroupElem g;
  SgElem p;
  SgElem q;
  GroupElem h;
  friend auto operator<=>(const Quad&, const Quad&) = default;
};

/// Either Zero or a canonical quadruple.
struct Monomial {
  std::optional<Quad> quad;

  static Monomial zero() { return {}; }
  [[nodiscard]] bool is_zero() const { return !quad.has_value(); }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

[[nodiscard]] Monomial canonicalize(const DynamicalSystem& sys, const GroupElem& g, const SgElem& p, const SgElem& q,
                                    const GroupElem& h);
[[nodiscard]] Monomial canonicalize(const DynamicalSystem& sys, const Quad& x);
[[nodiscard]] bool is_canonical(const DynamicalSystem& sys, const Monomial& m);
[[nodiscard]] Monomial identity_monomial(const DynamicalSystem& sys);
/// e_(g,p) = u_g s_p s_p* u_g*
[[nodiscard]] Monomial projection(const DynamicalSystem& sys, const GroupElem& g, const SgElem& p);
/// u_g s_p
[[nodiscard]] Monomial isometry(const DynamicalSystem& sys, const SdElement& a);

[[nodiscard]] Monomial mult(const DynamicalSystem& sys, const Monomial& m1, const Monomial& m2);
/// The product formula evaluated with a caller-supplied solution (k, l) of
/// h1^-1 g2 = theta_q1(k) theta_p2(l)^-1; used to test solver independence.
[[nodiscard]] Monomial mult_with_solution(const DynamicalSystem& sys, const Monomial& m1, const Monomial& m2,
                                          const GroupElem& k, const GroupElem& l);
[[nodiscard]] Monomial adjoint(const DynamicalSystem& sys, const Monomial& m);
/// e_(g,p) e_(h,q) = e_(g theta_p(k), r) or 0; throws std::invalid_argument on
/// inputs that are not of the form (g,p,p,g).
[[nodiscard]] Monomial projection_product(const DynamicalSystem& sys, const Monomial& e1, const Monomial& e2);

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(const Monomial& m, const Coef& c = Coef(1));

  [[nodiscard]] const std::map<Quad, Coef>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  void add_term(const Quad& x, const Coef& c);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Quad, Coef> terms_;
};

[[nodiscard]] AlgebraElement algebra_add(const AlgebraElement& a, const AlgebraElement& b);
[[nodiscard]] AlgebraElement algebra_scale(const AlgebraElement& a, const Coef& c);
[[nodiscard]] AlgebraElement algebra_mult(const DynamicalSystem& sys, const AlgebraElement& a, const AlgebraElement& b);
[[nodiscard]] AlgebraElement algebra_adjoint(const DynamicalSystem& sys, const AlgebraElement& a);

/// A canonical monomial with components drawn from the given pools.
[[nodiscard]] Monomial random_monomial(const DynamicalSystem& sys, Rng& rng, const std::vector<SgElem>& ball,
                                       const std::vector<GroupElem>& gs);

/// Associativity, adjoint laws and canonical outputs on `triples` random
/// triples; solver independence on up to `triples` nonzero products, using the
/// alternative solutions (k theta_a(z), l theta_b(z)) where q a = p' b is the
/// right LCM; projection products against mult and ideal_intersect.
[[nodiscard]] Report check_monomial_calculus(const DynamicalSystem& sys, const SampleSpec& spec, std::size_t triples);

[[nodiscard]] json monomial_to_json(const DynamicalSystem& sys, const Monomial& m);
/// Accepts {"g","p","q","h"}, [g,p,q,h] or "0"; the result is canonicalized.
[[nodiscard]] Monomial monomial_from_json(const DynamicalSystem& sys, const json& j);
[[nodiscard]] std::string monomial_to_string(const DynamicalSystem& sys, const Monomial& m);
[[nodiscard]] json algebra_to_json(const DynamicalSystem& sys, const AlgebraElement& a);

}  // namespace lcmalg
