#include "lcmalg/semidirect.hpp"

#include <set>

namespace lcmalg {

SdElement sd_identity(const DynamicalSystem& sys) { return {sys.G().identity(), sys.P().identity()}; }

SdElement sd_compose(const DynamicalSystem& sys, const SdElement& a, const SdElement& b) {
  return {sys.G().op(a.g, sys.apply_endo(a.p, b.g)), sys.P().compose(a.p, b.p)};
}

std::optional<SdElement> sd_divides(const DynamicalSystem& sys, const SdElement& a, const SdElement& b) {
  // (h,q) = (g,p)(k,y) iff q = py and g^-1 h = theta_p(k).
  auto y = sys.P().divides(a.p, b.p);
  if (!y) return std::nullopt;
  auto k = sys.preimage(a.p, sys.G().left_quotient(a.g, b.g));
  if (!k) return std::nullopt;
  return SdElement{std::move(*k), std::move(*y)};
}

bool sd_same_ideal(const DynamicalSystem& sys, const SdElement& a, const SdElement& b) {
  return sd_divides(sys, a, b).has_value() && sd_divides(sys, b, a).has_value();
}

IdealOutcome ideal_intersect(const DynamicalSystem& sys, const SdElement& a, const SdElement& b) {
  const RightLcmOutcome m = sys.P().right_lcm(a.p, b.p);
  if (!m) return std::nullopt;
  auto sol = sys.solve_double(a.p, b.p, sys.G().left_quotient(a.g, b.g));
  if (!sol) return std::nullopt;
  return SdElement{sys.G().op(a.g, sys.apply_endo(a.p, sol->first)), m->r};
}

bool sd_is_unit(const DynamicalSystem& sys, const SdElement& a) { return sys.P().is_unit(a.p); }

SdElement sd_unit_inverse(const DynamicalSystem& sys, const SdElement& a) {
  // (g,u)^-1 = (theta_u^-1(g^-1), u^-1)
  const SgElem inv = sys.P().unit_inverse(a.p);
  return {sys.apply_endo(inv, sys.G().inverse(a.g)), inv};
}

std::string sd_unit_description(const DynamicalSystem& sys) {
  std::string units;
  switch (sys.P().unit_order()) {
    case 1:
      units = "{1}";
      break;
    case 2:
      units = "{±1}";
      break;
    default:
      units = "{±1,±i}";
      break;
  }
  return sys.G().name() + " ⋊ " + units;
}

std::optional<std::pair<SdElement, SdElement>> sd_ore_witness(const DynamicalSystem& sys, const SdElement& a,
                                                               const SdElement& b, int bound) {
  auto w = sys.P().right_reversibility_witness(a.p, b.p, bound);
  if (!w) return std::nullopt;
  const auto& [p1, q1] = *w;
  const Group& G = sys.G();
  SdElement x{G.op(sys.apply_endo(q1, b.g), G.inverse(sys.apply_endo(p1, a.g))), p1};
  SdElement y{G.identity(), q1};
  return std::make_pair(std::move(x), std::move(y));
}

Report sd_left_ore_pairs(const DynamicalSystem& sys, const std::vector<std::pair<SdElement, SdElement>>& pairs,
                         int bound) {
  Report rep("left-ore", json{{"search_radius", bound}});
  rep.note("system", sys.describe());
  for (const auto& [a, b] : pairs) {
    auto w = sd_ore_witness(sys, a, b, bound);
    const bool ok = w && sd_compose(sys, w->first, a) == sd_compose(sys, w->second, b);
    rep.record("ore_witness", ok, [&] {
      json j{{"a", sd_to_json(sys, a)}, {"b", sd_to_json(sys, b)}};
      j["reason"] = w ? "witness does not verify" : "no witness within bound";
      return j;
    });
  }
  return rep;
}

Report sd_left_ore_sample(const DynamicalSystem& sys, const SampleSpec& spec) {
  const std::vector<SdElement> window = make_window(sys, spec);
  Rng rng(spec.seed);
  std::vector<std::pair<SdElement, SdElement>> pairs;
  for (std::size_t i = 0; i < spec.pairs; ++i) {
    pairs.emplace_back(window[uniform_below(rng, window.size())], window[uniform_below(rng, window.size())]);
  }
  Report rep = sd_left_ore_pairs(sys, pairs, spec.search_radius);
  for (std::size_t i = 0; i < spec.pairs; ++i) {
    const SdElement& a = window[uniform_below(rng, window.size())];
    const SdElement& b = window[uniform_below(rng, window.size())];
    const SdElement& c = window[uniform_below(rng, window.size())];
    const bool right_ok = !(sd_compose(sys, a, c) == sd_compose(sys, b, c)) || a == b;
    rep.record("right_cancellative", right_ok, [&] {
      return json{{"a", sd_to_json(sys, a)}, {"b", sd_to_json(sys, b)}, {"c", sd_to_json(sys, c)}};
    });
    const bool left_ok = !(sd_compose(sys, c, a) == sd_compose(sys, c, b)) || a == b;
    rep.record("left_cancellative", left_ok, [&] {
      return json{{"a", sd_to_json(sys, a)}, {"b", sd_to_json(sys, b)}, {"c", sd_to_json(sys, c)}};
    });
  }
  return rep;
}

std::vector<SdElement> make_window(const DynamicalSystem& sys, const SampleSpec& spec) {
  const std::vector<SgElem> ball = sys.P().enumerate_ball(spec.p_radius);
  const std::vector<GroupElem> gs = sys.sample_group(spec.g_samples, spec.seed);
  std::vector<SdElement> out;
  std::set<SdElement> seen;
  const SgElem one = sys.P().identity();
  const GroupElem e = sys.G().identity();
  for (const GroupElem& g : gs) {
    for (const SgElem& p : ball) {
      for (SdElement s : {sd_compose(sys, {g, one}, {e, p}), sd_compose(sys, {e, p}, {g, one})}) {
        if (seen.insert(s).second) out.push_back(std::move(s));
      }
    }
  }
  return out;
}

json sd_to_json(const DynamicalSystem& sys, const SdElement& a) {
  return json{{"g", sys.G().to_json(a.g)}, {"p", sys.P().to_json(a.p)}};
}

SdElement sd_from_json(const DynamicalSystem& sys, const json& j) {
  if (j.is_string()) return sd_parse(sys, j.get<std::string>());
  if (j.is_array()) return {sys.G().from_json(j.at(0)), sys.P().from_json(j.at(1))};
  return {sys.G().from_json(j.at("g")), sys.P().from_json(j.at("p"))};
}

std::string sd_to_string(const DynamicalSystem& sys, const SdElement& a) {
  return "(" + sys.G().to_string(a.g) + "," + sys.P().to_string(a.p) + ")";
}

SdElement sd_parse(const DynamicalSystem& sys, const std::string& text) {
  std::string s = text;
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      return {sys.G().parse(s.substr(0, i)), sys.P().parse(s.substr(i + 1))};
    }
  }
  throw std::invalid_argument("expected \"g,p\": " + text);
}

json ideal_to_json(const DynamicalSystem& sys, const IdealOutcome& x) {
  if (!x) return json{{"kind", "empty"}};
  return json{{"kind", "principal"}, {"g", sys.G().to_json(x->g)}, {"p", sys.P().to_json(x->p)}};
}

}  // namespace lcmalg
