#pragma once

// Morphisms (phi_G, phi_P) of algebraic dynamical systems, admissibility and
// the induced homomorphism phi_G x phi_P of semidirect products.

#include <map>
#include <memory>

#include "lcmalg/semidirect.hpp"

namespace lcmalg {

struct GroupMap {
  enum class Kind { Identity, Scale, Zero, ShiftPushforward };
  Kind kind = Kind::Identity;
  /// Multiplier for Scale; a Gaussian integer so that Z[i] targets can use i.
  Gauss factor{1, 0};

  static GroupMap identity() { return {}; }
  static GroupMap scale(Gauss c) { return {Kind::Scale, c}; }
  static GroupMap zero() { return {Kind::Zero, {0, 0}}; }
  static GroupMap shift_pushforward() { return {Kind::ShiftPushforward, {1, 0}}; }

  [[nodiscard]] json to_json() const;
  static GroupMap from_json(const json& j);
};

class AdsMorphism {
 public:
  /// `images` maps each declared generator of the source semigroup (including
  /// its unit generator, if any) to an element of the target semigroup.
  AdsMorphism(std::shared_ptr<const DynamicalSystem> source, std::shared_ptr<const DynamicalSystem> target,
              GroupMap phi_g, std::map<SgElem, SgElem> images);

  [[nodiscard]] const DynamicalSystem& source() const { return *source_; }
  [[nodiscard]] const DynamicalSystem& target() const { return *target_; }
  [[nodiscard]] const GroupMap& group_map() const { return phi_g_; }

  [[nodiscard]] GroupElem map_group(const GroupElem& g) const;
  [[nodiscard]] SgElem map_semigroup(const SgElem& p) const;
  /// The induced map phi_G x phi_P: (g,p) -> (phi_G(g), phi_P(p)).
  [[nodiscard]] SdElement map_sd(const SdElement& a) const;

  [[nodiscard]] json describe() const;

 private:
  std::shared_ptr<const DynamicalSystem> source_;
  std::shared_ptr<const DynamicalSystem> target_;
  GroupMap phi_g_;
  std::map<SgElem, SgElem> images_;
};

/// (i) phi_G is a homomorphism, (ii) phi_P is a unital homomorphism,
/// (iii) phi_G theta_1,p = theta_2,phi_P(p) phi_G.
[[nodiscard]] Report check_morphism(const AdsMorphism& m, const SampleSpec& spec);
/// (iv) and (v).  When P1 is a group the conditions hold automatically and are
/// skipped unless `force_full`; when P1 is free, (v) is tested in its
/// single-p form.
[[nodiscard]] Report check_admissible(const AdsMorphism& m, const SampleSpec& spec, bool force_full = false);
/// phi(aS1 n bS1) S2 = phi(a) S2 n phi(b) S2 on sampled pairs, plus the
/// homomorphism property of phi_G x phi_P.
[[nodiscard]] Report ideal_equation_check(const AdsMorphism& m, const SampleSpec& spec);
/// Ball-bounded surjectivity and injectivity of phi_P and phi_G.
[[nodiscard]] Report hom_surjectivity_injectivity(const AdsMorphism& m, const SampleSpec& spec);

}  // namespace lcmalg
