#pragma once

// The semidirect product S = G x_theta P with (g,p)(h,q) = (g theta_p(h), pq),
// its principal right ideals X_(g,p) = (g,p)S and their intersections.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcmalg/dynamics.hpp"

namespace lcmalg {

struct SdElement {
  GroupElem g;
  SgElem p;
  friend auto operator<=>(const SdElement&, const SdElement&) = default;
};

/// Empty is std::nullopt; otherwise the generator of the principal ideal.
using IdealOutcome = std::optional<SdElement>;

[[nodiscard]] SdElement sd_identity(const DynamicalSystem& sys);
[[nodiscard]] SdElement sd_compose(const DynamicalSystem& sys, const SdElement& a, const SdElement& b);
/// x with a x = b, when b lies in aS.
[[nodiscard]] std::optional<SdElement> sd_divides(const DynamicalSystem& sys, const SdElement& a, const SdElement& b);
/// aS = bS, decided by divisibility both ways.
[[nodiscard]] bool sd_same_ideal(const DynamicalSystem& sys, const SdElement& a, const SdElement& b);
[[nodiscard]] IdealOutcome ideal_intersect(const DynamicalSystem& sys, const SdElement& a, const SdElement& b);

[[nodiscard]] bool sd_is_unit(const DynamicalSystem& sys, const SdElement& a);
[[nodiscard]] SdElement sd_unit_inverse(const DynamicalSystem& sys, const SdElement& a);
/// The unit group G x P*, e.g. "ℤ ⋊ {±1}".
[[nodiscard]] std::string sd_unit_description(const DynamicalSystem& sys);

/// x, y with x a = y b, built from a reversibility witness in P: if
/// p' p = q' q then (theta_q'(h) theta_p'(g)^-1, p')(g,p) = (1,q')(h,q).
[[nodiscard]] std::optional<std::pair<SdElement, SdElement>> sd_ore_witness(const DynamicalSystem& sys,
                                                                            const SdElement& a, const SdElement& b,
                                                                            int bound);
/// Sampled left Ore condition and cancellativity.
[[nodiscard]] Report sd_left_ore_sample(const DynamicalSystem& sys, const SampleSpec& spec);
/// Ore witnesses for explicit pairs.
[[nodiscard]] Report sd_left_ore_pairs(const DynamicalSystem& sys, const std::vector<std::pair<SdElement, SdElement>>& pairs,
                                       int bound);

/// (g,1)(1,p) and (1,p)(g,1) for g in the group sample and p in the P-ball, deduplicated.
[[nodiscard]] std::vector<SdElement> make_window(const DynamicalSystem& sys, const SampleSpec& spec);

[[nodiscard]] json sd_to_json(const DynamicalSystem& sys, const SdElement& a);
[[nodiscard]] SdElement sd_from_json(const DynamicalSystem& sys, const json& j);
[[nodiscard]] std::string sd_to_string(const DynamicalSystem& sys, const SdElement& a);
/// "g,p" with the split at the first comma outside brackets or parentheses.
[[nodiscard]] SdElement sd_parse(const DynamicalSystem& sys, const std::string& text);
[[nodiscard]] json ideal_to_json(const DynamicalSystem& sys, const IdealOutcome& x);

}  // namespace lcmalg
