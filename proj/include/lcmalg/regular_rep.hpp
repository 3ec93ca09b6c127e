#pragma once

// The left regular representation of S = G x_theta P, modelled by injective
// partial maps of S.  A non-empty map sends dom * x to img * x; its domain is
// the principal right ideal dom S.

#include <optional>
#include <vector>

#include "lcmalg/monomial.hpp"

namespace lcmalg {

struct PartialInjection {
  struct Data {
    SdElement dom;
    SdElement img;
    friend auto operator<=>(const Data&, const Data&) = default;
  };
  std::optional<Data> data;

  static PartialInjection empty() { return {}; }
  static PartialInjection translation(const SdElement& dom, const SdElement& img) { return {Data{dom, img}}; }
  [[nodiscard]] bool is_empty() const { return !data.has_value(); }
};

[[nodiscard]] PartialInjection as_partial_map(const Monomial& m);
/// V_a: x -> a x.
[[nodiscard]] PartialInjection isometry_map(const DynamicalSystem& sys, const SdElement& a);
/// V_a*: a x -> x.
[[nodiscard]] PartialInjection coisometry_map(const DynamicalSystem& sys, const SdElement& a);
/// e_X for X = aS (the identity on X); the empty ideal gives the empty map.
[[nodiscard]] PartialInjection ideal_projection(const DynamicalSystem& sys, const IdealOutcome& x);

[[nodiscard]] std::optional<SdElement> apply(const DynamicalSystem& sys, const PartialInjection& f, const SdElement& s);
/// f after g, computed symbolically from the ideal intersection.
[[nodiscard]] PartialInjection compose(const DynamicalSystem& sys, const PartialInjection& f,
                                       const PartialInjection& g);
/// Exact equality of the maps on all of S: same domain ideal and the same
/// action on its generator, after absorbing a unit of S.
[[nodiscard]] bool same_map(const DynamicalSystem& sys, const PartialInjection& f, const PartialInjection& g);

/// First window point where the two maps differ, if any.
[[nodiscard]] std::optional<SdElement> equal_on_window(const DynamicalSystem& sys, const PartialInjection& f,
                                                       const PartialInjection& g, const std::vector<SdElement>& window);
/// First window point where g followed by f differs from h, evaluated pointwise.
[[nodiscard]] std::optional<SdElement> composite_differs(const DynamicalSystem& sys, const PartialInjection& f,
                                                         const PartialInjection& g, const PartialInjection& h,
                                                         const std::vector<SdElement>& window);

/// The isometry, conjugation, unit and intersection relations and V_a* V_a = 1,
/// checked pointwise on a window.
[[nodiscard]] Report check_li_relations(const DynamicalSystem& sys, const SampleSpec& spec);
/// lambda(m1 m2) = lambda(m1) lambda(m2) and Zero detection on random monomial pairs.
[[nodiscard]] Report check_homomorphism(const DynamicalSystem& sys, const SampleSpec& spec, std::size_t pairs);

[[nodiscard]] json partial_map_to_json(const DynamicalSystem& sys, const PartialInjection& f);

}  // namespace lcmalg
