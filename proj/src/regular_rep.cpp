#include "lcmalg/regular_rep.hpp"

namespace lcmalg {

PartialInjection as_partial_map(const Monomial& m) {
  if (m.is_zero()) return PartialInjection::empty();
  const Quad& a = *m.quad;
  return PartialInjection::translation({a.h, a.q}, {a.g, a.p});
}

PartialInjection isometry_map(const DynamicalSystem& sys, const SdElement& a) {
  return PartialInjection::translation(sd_identity(sys), a);
}

PartialInjection coisometry_map(const DynamicalSystem& sys, const SdElement& a) {
  return PartialInjection::translation(a, sd_identity(sys));
}

PartialInjection ideal_projection(const DynamicalSystem&, const IdealOutcome& x) {
  if (!x) return PartialInjection::empty();
  return PartialInjection::translation(*x, *x);
}

std::optional<SdElement> apply(const DynamicalSystem& sys, const PartialInjection& f, const SdElement& s) {
  if (f.is_empty()) return std::nullopt;
  auto x = sd_divides(sys, f.data->dom, s);
  if (!x) return std::nullopt;
  return sd_compose(sys, f.data->img, *x);
}

PartialInjection compose(const DynamicalSystem& sys, const PartialInjection& f, const PartialInjection& g) {
  if (f.is_empty() || g.is_empty()) return PartialInjection::empty();
  // g: d2 x -> i2 x, f: d1 y -> i1 y.  i2 S n d1 S = i2 (k,a) S = d1 (l,b) S.
  const SdElement& d1 = f.data->dom;
  const SdElement& i1 = f.data->img;
  const SdElement& d2 = g.data->dom;
  const SdElement& i2 = g.data->img;
  const RightLcmOutcome meet = sys.P().right_lcm(i2.p, d1.p);
  if (!meet) return PartialInjection::empty();
  auto sol = sys.solve_double(i2.p, d1.p, sys.G().left_quotient(i2.g, d1.g));
  if (!sol) return PartialInjection::empty();
  const SdElement x{sol->first, meet->p_comp};
  const SdElement y{sol->second, meet->q_comp};
  return PartialInjection::translation(sd_compose(sys, d2, x), sd_compose(sys, i1, y));
}

bool same_map(const DynamicalSystem& sys, const PartialInjection& f, const PartialInjection& g) {
  if (f.is_empty() || g.is_empty()) return f.is_empty() && g.is_empty();
  auto u = sd_divides(sys, f.data->dom, g.data->dom);
  if (!u || !sd_is_unit(sys, *u)) return false;
  return sd_compose(sys, f.data->img, *u) == g.data->img;
}

std::optional<SdElement> equal_on_window(const DynamicalSystem& sys, const PartialInjection& f,
                                         const PartialInjection& g, const std::vector<SdElement>& window) {
  for (const SdElement& s : window) {
    if (apply(sys, f, s) != apply(sys, g, s)) return s;
  }
  return std::nullopt;
}

std::optional<SdElement> composite_differs(const DynamicalSystem& sys, const PartialInjection& f,
                                           const PartialInjection& g, const PartialInjection& h,
                                           const std::vector<SdElement>& window) {
  for (const SdElement& s : window) {
    auto mid = apply(sys, g, s);
    auto lhs = mid ? apply(sys, f, *mid) : std::nullopt;
    if (lhs != apply(sys, h, s)) return s;
  }
  return std::nullopt;
}

namespace {

// The base window plus translates of a few window points by each anchor, so
// that every map under test is exercised inside its domain.
std::vector<SdElement> probe_points(const DynamicalSystem& sys, const std::vector<SdElement>& window,
                                    const std::vector<SdElement>& anchors, std::size_t per_anchor = 12) {
  std::vector<SdElement> out = window;
  for (const SdElement& a : anchors) {
    for (std::size_t i = 0; i < per_anchor && i < window.size(); ++i) out.push_back(sd_compose(sys, a, window[i]));
  }
  return out;
}

json point_witness(const DynamicalSystem& sys, const SdElement& s) { return json{{"point", sd_to_json(sys, s)}}; }

}  // namespace

Report check_li_relations(const DynamicalSystem& sys, const SampleSpec& spec) {
  Report rep("li-relations", spec.to_json());
  rep.note("system", sys.describe());
  const std::vector<SdElement> window = make_window(sys, spec);
  rep.note("window_size", window.size());
  Rng rng(spec.seed);
  auto pick = [&] { return window[uniform_below(rng, window.size())]; };
  const SdElement one = sd_identity(sys);

  // e_empty = 0 and e_S = 1.
  const PartialInjection top = ideal_projection(sys, one);
  for (const SdElement& s : window) {
    rep.record("empty_projection", !apply(sys, ideal_projection(sys, std::nullopt), s).has_value(),
               [&] { return point_witness(sys, s); });
    rep.record("whole_projection", apply(sys, top, s) == s, [&] { return point_witness(sys, s); });
  }

  for (std::size_t i = 0; i < spec.pairs; ++i) {
    const SdElement a = pick();
    const SdElement b = pick();
    const auto pts = probe_points(sys, window, {a, b, sd_compose(sys, a, b)});
    auto pair_witness = [&](const std::optional<SdElement>& s) {
      json j{{"a", sd_to_json(sys, a)}, {"b", sd_to_json(sys, b)}};
      if (s) j["point"] = sd_to_json(sys, *s);
      return j;
    };

    // V_a V_b = V_ab
    const PartialInjection va = isometry_map(sys, a);
    const PartialInjection vb = isometry_map(sys, b);
    const PartialInjection vab = isometry_map(sys, sd_compose(sys, a, b));
    auto w1 = composite_differs(sys, va, vb, vab, pts);
    rep.record("isometry_product", !w1, [&] { return pair_witness(w1); });
    rep.record("isometry_product_symbolic", same_map(sys, compose(sys, va, vb), vab), [&] { return pair_witness(std::nullopt); });

    // V_a e_X V_a* = e_aX with X = bS
    const PartialInjection ex = ideal_projection(sys, b);
    const PartialInjection lhs_inner = compose(sys, ex, coisometry_map(sys, a));
    const PartialInjection eax = ideal_projection(sys, sd_compose(sys, a, b));
    std::optional<SdElement> w2;
    for (const SdElement& s : pts) {
      auto t = apply(sys, coisometry_map(sys, a), s);
      if (t) t = apply(sys, ex, *t);
      if (t) t = apply(sys, va, *t);
      if (t != apply(sys, eax, s)) {
        w2 = s;
        break;
      }
    }
    rep.record("conjugation", !w2, [&] { return pair_witness(w2); });
    rep.record("conjugation_symbolic", same_map(sys, compose(sys, va, lhs_inner), eax),
               [&] { return pair_witness(std::nullopt); });

    // e_X e_Y = e_(X n Y) with X = aS, Y = bS
    const IdealOutcome meet = ideal_intersect(sys, a, b);
    const PartialInjection ea = ideal_projection(sys, a);
    auto w4 = composite_differs(sys, ea, ex, ideal_projection(sys, meet), pts);
    rep.record("projection_intersection", !w4, [&] { return pair_witness(w4); });

    // V_a* V_a = 1
    auto wi = composite_differs(sys, coisometry_map(sys, a), va, top, pts);
    rep.record("isometry", !wi, [&] { return pair_witness(wi); });
  }
  return rep;
}

Report check_homomorphism(const DynamicalSystem& sys, const SampleSpec& spec, std::size_t pairs) {
  Report rep("regular-representation", spec.to_json());
  rep.note("system", sys.describe());
  rep.note("pairs", pairs);
  const std::vector<SdElement> window = make_window(sys, spec);
  rep.note("window_size", window.size());
  const std::vector<SgElem> ball = sys.P().enumerate_ball(spec.p_radius);
  const std::vector<GroupElem> gs = sys.sample_group(spec.g_samples, spec.seed);
  Rng rng(spec.seed);
  // A fixed sub-window keeps the pointwise comparison affordable for many pairs.
  std::vector<SdElement> base;
  for (std::size_t i = 0; i < window.size(); i += std::max<std::size_t>(1, window.size() / 200)) {
    base.push_back(window[i]);
  }
  for (std::size_t i = 0; i < pairs; ++i) {
    const Monomial m1 = random_monomial(sys, rng, ball, gs);
    const Monomial m2 = random_monomial(sys, rng, ball, gs);
    const Monomial prod = mult(sys, m1, m2);
    const PartialInjection f = as_partial_map(m1);
    const PartialInjection g = as_partial_map(m2);
    const PartialInjection h = as_partial_map(prod);
    const PartialInjection fg = compose(sys, f, g);
    auto witness = [&](const std::optional<SdElement>& s) {
      json j{{"m1", monomial_to_json(sys, m1)}, {"m2", monomial_to_json(sys, m2)}, {"product", monomial_to_json(sys, prod)}};
      if (s) j["point"] = sd_to_json(sys, *s);
      return j;
    };
    std::vector<SdElement> anchors{g.data->dom};
    if (!h.is_empty()) anchors.push_back(h.data->dom);
    const auto pts = probe_points(sys, base, anchors, 6);
    auto w = composite_differs(sys, f, g, h, pts);
    rep.record("homomorphism", !w, [&] { return witness(w); });
    rep.record("homomorphism_symbolic", same_map(sys, fg, h), [&] { return witness(std::nullopt); });
    rep.record("zero_iff_empty", prod.is_zero() == fg.is_empty(), [&] { return witness(std::nullopt); });
    // Distinct canonical monomials have distinct maps; their domain generators separate them.
    if (!(m1 == m2)) {
      const std::vector<SdElement> sep{f.data->dom, g.data->dom};
      rep.record("distinct_separated", equal_on_window(sys, f, g, sep).has_value(), [&] { return witness(std::nullopt); });
    }
  }
  return rep;
}

json partial_map_to_json(const DynamicalSystem& sys, const PartialInjection& f) {
  if (f.is_empty()) return json{{"kind", "empty"}};
  return json{{"kind", "translation"}, {"dom", sd_to_json(sys, f.data->dom)}, {"img", sd_to_json(sys, f.data->img)}};
}

}  // namespace lcmalg
