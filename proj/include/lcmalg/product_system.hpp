#pragma once

// The product system over P built from the transfer operators L_p: fibres M_p
// with orthonormal bases {pi_p(delta_t) : t in T_p}, rank-one operators, the
// maps iota_p^r, and the Fock representation with its Nica covariance check.
//
// A FibreVector stores coefficients of pi_p(delta_g) for arbitrary g.  These
// vectors are linearly independent over C, so the map itself is the normal
// form; the right-module relation pi_p(delta_(t theta_p(k))) = pi_p(delta_t).delta_k
// only matters for inner products and is handled there.

#include <map>
#include <optional>
#include <vector>

#include "lcmalg/coef.hpp"
#include "lcmalg/semidirect.hpp"

namespace lcmalg {

class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  static GroupAlgebraElement delta(const GroupElem& g, const Coef& c = Coef(1));

  [[nodiscard]] const std::map<GroupElem, Coef>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  void add_term(const GroupElem& g, const Coef& c);
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  std::map<GroupElem, Coef> terms_;
};

class FibreVector {
 public:
  explicit FibreVector(SgElem p) : p_(std::move(p)) {}
  static FibreVector basis(const SgElem& p, const GroupElem& g, const Coef& c = Coef(1));

  [[nodiscard]] const SgElem& fibre() const { return p_; }
  [[nodiscard]] const std::map<GroupElem, Coef>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  void add_term(const GroupElem& g, const Coef& c);
  void add(const FibreVector& other);
  friend bool operator==(const FibreVector&, const FibreVector&) = default;

 private:
  SgElem p_;
  std::map<GroupElem, Coef> terms_;
};

/// Theta_(xi,eta): mu -> xi . <eta, mu>
struct RankOne {
  FibreVector xi;
  FibreVector eta;
};

/// E_(g,p) = Theta_(pi_p(delta_g), pi_p(delta_g))
[[nodiscard]] RankOne basis_projection(const SgElem& p, const GroupElem& g);

class FockVector {
 public:
  FockVector() = default;
  static FockVector basis(const SgElem& w, const GroupElem& x, const Coef& c = Coef(1));

  [[nodiscard]] const std::map<SgElem, FibreVector>& parts() const { return parts_; }
  [[nodiscard]] bool is_zero() const { return parts_.empty(); }
  void add(const FibreVector& v);
  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  std::map<SgElem, FibreVector> parts_;
};

[[nodiscard]] GroupAlgebraElement inner_product(const DynamicalSystem& sys, const FibreVector& xi,
                                                const FibreVector& eta);
[[nodiscard]] FibreVector fibre_mult(const DynamicalSystem& sys, const FibreVector& xi, const FibreVector& eta);
/// a . xi with delta_k . pi_p(delta_g) = pi_p(delta_(kg)).
[[nodiscard]] FibreVector left_action(const DynamicalSystem& sys, const GroupAlgebraElement& a, const FibreVector& xi);
/// xi . a with pi_p(delta_g) . delta_k = pi_p(delta_(g theta_p(k))).
[[nodiscard]] FibreVector right_action(const DynamicalSystem& sys, const FibreVector& xi, const GroupAlgebraElement& a);

/// {t theta_p(t') : t in T_p, t' in T_q}; row-major when both factors are
/// finite, diagonal order otherwise.
[[nodiscard]] Transversal transversal_compose(const DynamicalSystem& sys, const SgElem& p, const SgElem& q);

[[nodiscard]] FibreVector rank_one_apply(const DynamicalSystem& sys, const RankOne& t, const FibreVector& mu);
[[nodiscard]] RankOne rank_one_adjoint(const RankOne& t);
/// iota_p^r(T) applied to mu in M_r, from the closed form
/// Theta_(g1,g2): pi_r(delta_s) -> [s in g2 theta_p(G)] pi_r(delta_(g1 g2^-1 s)).
/// Zero when r is not in pP.
[[nodiscard]] FibreVector iota_apply(const DynamicalSystem& sys, const SgElem& p, const SgElem& r, const RankOne& t,
                                     const FibreVector& mu);
/// iota_p^r(Theta_(g1,g2)) iota_q^r(Theta_(h1,h2)) for basis rank-ones, where r
/// is the right LCM of p and q; absent when the product is zero.
[[nodiscard]] std::optional<RankOne> compact_align_product(const DynamicalSystem& sys, const SgElem& p,
                                                           const SgElem& q, const RankOne& tp, const RankOne& tq);
/// As above with a caller-supplied solution (k, l) of g2^-1 h1 = theta_p(k) theta_q(l)^-1.
[[nodiscard]] std::optional<RankOne> compact_align_with_solution(const DynamicalSystem& sys, const SgElem& p,
                                                                 const SgElem& q, const RankOne& tp,
                                                                 const RankOne& tq, const GroupElem& k,
                                                                 const GroupElem& l);

/// psi_p(xi) on the Fock module: eta at w goes to xi eta at pw.
[[nodiscard]] FockVector fock_create(const DynamicalSystem& sys, const FibreVector& xi, const FockVector& v);
/// psi_p(xi)*.
[[nodiscard]] FockVector fock_annihilate(const DynamicalSystem& sys, const FibreVector& xi, const FockVector& v);
/// The left action of C*(G) on every fibre.
[[nodiscard]] FockVector fock_left(const DynamicalSystem& sys, const GroupAlgebraElement& a, const FockVector& v);
/// psi^(p)(T): iota_p^w(T) on the fibre over w, zero off pP.
[[nodiscard]] FockVector fock_compact(const DynamicalSystem& sys, const SgElem& p, const RankOne& t,
                                      const FockVector& v);

/// Nica covariance of the Fock representation on sampled
/// projection pairs and basis vectors.
[[nodiscard]] Report check_nica_covariance(const DynamicalSystem& sys, const SampleSpec& spec);
/// S_p U_g = U_theta_p(g) S_p, S_p* S_p = 1 and the projection product rule for U_g, S_p realized on
/// the Fock module.
[[nodiscard]] Report check_generator_relations(const DynamicalSystem& sys, const SampleSpec& spec);
/// Orthonormality, transversal composition, module and iota identities, the
/// compact alignment formula and the Fock representation property.
[[nodiscard]] Report check_product_system(const DynamicalSystem& sys, const SampleSpec& spec);

[[nodiscard]] json group_algebra_to_json(const DynamicalSystem& sys, const GroupAlgebraElement& a);
[[nodiscard]] json fibre_to_json(const DynamicalSystem& sys, const FibreVector& v);
[[nodiscard]] json fock_to_json(const DynamicalSystem& sys, const FockVector& v);

}  // namespace lcmalg
