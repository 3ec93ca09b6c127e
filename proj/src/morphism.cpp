#include "lcmalg/morphism.hpp"

#include <set>

namespace lcmalg {

json GroupMap::to_json() const {
  switch (kind) {
    case Kind::Identity:
      return json{{"kind", "identity"}};
    case Kind::Scale:
      return json{{"kind", "scale"}, {"factor", lcmalg::to_string(factor)}};
    case Kind::Zero:
      return json{{"kind", "zero"}};
    case Kind::ShiftPushforward:
      return json{{"kind", "shift-pushforward"}};
  }
  return nullptr;
}

GroupMap GroupMap::from_json(const json& j) {
  const std::string kind = j.is_string() ? j.get<std::string>() : j.at("kind").get<std::string>();
  if (kind == "identity" || kind == "embedding") return identity();
  if (kind == "zero" || kind == "trivial") return zero();
  if (kind == "shift-pushforward") return shift_pushforward();
  if (kind == "scale") {
    const json& f = j.at("factor");
    if (f.is_number_integer()) return scale(Gauss{f.get<std::int64_t>(), 0});
    if (f.is_array() && f.size() == 2) return scale(Gauss{f[0].get<std::int64_t>(), f[1].get<std::int64_t>()});
    return scale(parse_gauss(f.get<std::string>()));
  }
  throw std::invalid_argument("unknown group map kind: " + kind);
}

AdsMorphism::AdsMorphism(std::shared_ptr<const DynamicalSystem> source, std::shared_ptr<const DynamicalSystem> target,
                         GroupMap phi_g, std::map<SgElem, SgElem> images)
    : source_(std::move(source)), target_(std::move(target)), phi_g_(phi_g), images_(std::move(images)) {
  const Semigroup& P1 = source_->P();
  std::set<SgElem> needed;
  if (P1.unit_order() > 1) needed.insert(P1.unit_generator());
  for (int i = 0; i < P1.rank(); ++i) needed.insert(P1.generator(i));
  for (const SgElem& g : needed) {
    if (!images_.count(g)) {
      throw RegistrationError("no image for generator " + P1.to_string(g), json{{"generator", P1.to_json(g)}});
    }
  }
  for (const auto& [g, img] : images_) {
    if (!needed.count(g)) {
      throw RegistrationError(P1.to_string(g) + " is not a generator of " + P1.name(), json{{"key", P1.to_json(g)}});
    }
    target_->P().check(img);
  }
  const GroupFamily f1 = source_->G().family();
  const GroupFamily f2 = target_->G().family();
  const bool shift_pair = f1 == GroupFamily::Shift && f2 == GroupFamily::Shift;
  if (phi_g_.kind == GroupMap::Kind::ShiftPushforward && !shift_pair) {
    throw RegistrationError("shift pushforward needs shift groups on both sides", json{{"phi_g", phi_g_.to_json()}});
  }
  if (phi_g_.kind == GroupMap::Kind::Identity || phi_g_.kind == GroupMap::Kind::Scale) {
    const bool ok = f1 == GroupFamily::Trivial || (f1 == GroupFamily::Integers && f2 != GroupFamily::Shift &&
                                                   f2 != GroupFamily::Trivial) ||
                    (f1 == GroupFamily::Gaussian && f2 == GroupFamily::Gaussian) ||
                    (f1 == GroupFamily::Cyclic && f2 == GroupFamily::Cyclic &&
                     source_->G().modulus() == target_->G().modulus());
    if (!ok) {
      throw RegistrationError("identity/scale map from " + source_->G().name() + " to " + target_->G().name() +
                                  " is not supported",
                              json{{"phi_g", phi_g_.to_json()}});
    }
    if (phi_g_.kind == GroupMap::Kind::Scale && phi_g_.factor.im != 0 && f2 != GroupFamily::Gaussian) {
      throw RegistrationError("a non-real factor needs a Gaussian target", json{{"phi_g", phi_g_.to_json()}});
    }
  }
}

GroupElem AdsMorphism::map_group(const GroupElem& g) const {
  const Group& G1 = source_->G();
  const Group& G2 = target_->G();
  G1.check(g);
  auto embed = [&]() -> GroupElem {
    switch (G1.family()) {
      case GroupFamily::Trivial:
        return G2.identity();
      case GroupFamily::Integers:
      case GroupFamily::Cyclic:
        if (G2.family() == GroupFamily::Gaussian) return GroupElem::gauss(Gauss{g.as_int(), 0});
        if (G2.family() == GroupFamily::Cyclic) return GroupElem::integer(floor_mod(g.as_int(), G2.modulus()));
        return g;
      default:
        return g;
    }
  };
  switch (phi_g_.kind) {
    case GroupMap::Kind::Zero:
      return G2.identity();
    case GroupMap::Kind::Identity:
      return embed();
    case GroupMap::Kind::Scale: {
      const GroupElem x = embed();
      switch (G2.family()) {
        case GroupFamily::Trivial:
          return x;
        case GroupFamily::Gaussian:
          return GroupElem::gauss(x.as_gauss() * phi_g_.factor);
        case GroupFamily::Cyclic:
          return GroupElem::integer(floor_mod(checked_mul(x.as_int(), phi_g_.factor.re), G2.modulus()));
        default:
          return GroupElem::integer(checked_mul(x.as_int(), phi_g_.factor.re));
      }
    }
    case GroupMap::Kind::ShiftPushforward: {
      std::vector<std::pair<SgElem, std::int64_t>> terms;
      for (const auto& [pos, val] : g.as_shift().terms) terms.emplace_back(map_semigroup(pos), val);
      return G2.make_shift(std::move(terms));
    }
  }
  throw StructuralError("unknown group map");
}

SgElem AdsMorphism::map_semigroup(const SgElem& p) const {
  const Semigroup& P1 = source_->P();
  const Semigroup& P2 = target_->P();
  P1.check(p);
  SgElem out = P2.identity();
  if (P1.family() == SemigroupFamily::FreeMonoid) {
    for (std::int32_t letter : p.data) out = P2.compose(out, images_.at(P1.generator(letter)));
    return out;
  }
  if (p.unit != 0) {
    const SgElem& z = images_.at(P1.unit_generator());
    for (int k = 0; k < p.unit; ++k) out = P2.compose(out, z);
  }
  for (int i = 0; i < P1.rank(); ++i) {
    const SgElem& img = images_.at(P1.generator(i));
    for (std::int32_t k = 0; k < p.data[static_cast<std::size_t>(i)]; ++k) out = P2.compose(out, img);
  }
  return out;
}

SdElement AdsMorphism::map_sd(const SdElement& a) const { return {map_group(a.g), map_semigroup(a.p)}; }

json AdsMorphism::describe() const {
  json table = json::array();
  for (const auto& [g, img] : images_) table.push_back(json{source_->P().to_json(g), target_->P().to_json(img)});
  return json{{"source", source_->describe()},
              {"target", target_->describe()},
              {"phi_g", phi_g_.to_json()},
              {"phi_p", table}};
}

namespace {

struct MorphismSamples {
  std::vector<SgElem> ball;
  std::vector<GroupElem> gs;
};

MorphismSamples samples_for(const AdsMorphism& m, const SampleSpec& spec) {
  return {m.source().P().enumerate_ball(spec.p_radius), m.source().sample_group(spec.g_samples, spec.seed)};
}

Report new_report(const std::string& suite, const AdsMorphism& m, const SampleSpec& spec) {
  Report rep(suite, spec.to_json());
  rep.note("morphism", m.describe());
  return rep;
}

bool same_principal(const Semigroup& P, const SgElem& a, const SgElem& b) {
  return P.divides(a, b).has_value() && P.divides(b, a).has_value();
}

}  // namespace

Report check_morphism(const AdsMorphism& m, const SampleSpec& spec) {
  Report rep = new_report("morphism", m, spec);
  const auto [ball, gs] = samples_for(m, spec);
  const DynamicalSystem& s1 = m.source();
  const DynamicalSystem& s2 = m.target();
  const Group& G1 = s1.G();
  const Group& G2 = s2.G();
  const Semigroup& P1 = s1.P();
  const Semigroup& P2 = s2.P();

  for (const GroupElem& g : gs) {
    for (const GroupElem& h : gs) {
      const bool ok = m.map_group(G1.op(g, h)) == G2.op(m.map_group(g), m.map_group(h));
      rep.record("group_homomorphism", ok, [&] { return json{{"g", G1.to_json(g)}, {"h", G1.to_json(h)}}; });
    }
  }
  rep.record("semigroup_unital", m.map_semigroup(P1.identity()) == P2.identity());
  for (const SgElem& p : ball) {
    for (const SgElem& q : ball) {
      const bool ok = m.map_semigroup(P1.compose(p, q)) == P2.compose(m.map_semigroup(p), m.map_semigroup(q));
      rep.record("semigroup_homomorphism", ok, [&] { return json{{"p", P1.to_json(p)}, {"q", P1.to_json(q)}}; });
    }
  }
  for (const SgElem& p : ball) {
    for (const GroupElem& g : gs) {
      const GroupElem lhs = m.map_group(s1.apply_endo(p, g));
      const GroupElem rhs = s2.apply_endo(m.map_semigroup(p), m.map_group(g));
      rep.record("equivariance", lhs == rhs, [&] {
        return json{{"g", G1.to_json(g)}, {"p", P1.to_json(p)}, {"lhs", G2.to_json(lhs)}, {"rhs", G2.to_json(rhs)}};
      });
    }
  }
  // Subset checks for the induced map: phi(G1 x 1) lies in G2 x 1 and phi(1 x P1) in 1 x P2.
  for (const GroupElem& g : gs) {
    rep.record("induced_preserves_group_part", m.map_sd({g, P1.identity()}).p == P2.identity());
  }
  for (const SgElem& p : ball) {
    rep.record("induced_preserves_semigroup_part", m.map_sd({G1.identity(), p}).g == G2.identity());
  }
  return rep;
}

Report check_admissible(const AdsMorphism& m, const SampleSpec& spec, bool force_full) {
  Report rep = new_report("admissible", m, spec);
  const DynamicalSystem& s1 = m.source();
  const DynamicalSystem& s2 = m.target();
  const Semigroup& P1 = s1.P();
  const Semigroup& P2 = s2.P();
  const Group& G1 = s1.G();
  if (P1.is_group()) {
    rep.note("shortcut", "source semigroup is a group: every morphism is admissible");
    rep.record("source_is_group", true);
    if (!force_full) return rep;
  }
  const bool free_source = P1.is_free_monoid();
  if (free_source) rep.note("shortcut", "source semigroup is free: (v) reduces to single elements");
  const auto [ball, gs] = samples_for(m, spec);

  // (iv)
  for (const SgElem& p : ball) {
    for (const SgElem& q : ball) {
      const SgElem fp = m.map_semigroup(p);
      const SgElem fq = m.map_semigroup(q);
      const RightLcmOutcome src = P1.right_lcm(p, q);
      const RightLcmOutcome dst = P2.right_lcm(fp, fq);
      auto witness = [&] {
        json j{{"p", P1.to_json(p)}, {"q", P1.to_json(q)}};
        j["source_lcm"] = src ? P1.to_json(src->r) : json("disjoint");
        j["target_lcm"] = dst ? P2.to_json(dst->r) : json("disjoint");
        return j;
      };
      bool ok = false;
      if (!src) {
        ok = !dst;
      } else {
        const SgElem img = m.map_semigroup(src->r);
        ok = dst && same_principal(P2, img, dst->r);
        // The inclusion phi(pP n qP) P2 in phi(p)P2 n phi(q)P2 always holds.
        rep.record("iv_containment", P2.divides(fp, img).has_value() && P2.divides(fq, img).has_value(), witness);
      }
      rep.record("iv", ok, witness);
    }
  }

  // (v)
  for (const SgElem& p : ball) {
    for (const SgElem& q : ball) {
      if (!P1.right_lcm(p, q)) continue;
      if (free_source && !(p == q)) continue;
      const SgElem fp = m.map_semigroup(p);
      const SgElem fq = m.map_semigroup(q);
      for (const GroupElem& g : gs) {
        const GroupElem fg = m.map_group(g);
        bool in_source = false;
        bool in_target = false;
        if (free_source) {
          in_source = s1.preimage(p, g).has_value();
          in_target = s2.preimage(fp, fg).has_value();
        } else {
          in_source = s1.solve_double(p, q, g).has_value();
          in_target = s2.solve_double(fp, fq, fg).has_value();
        }
        auto witness = [&] {
          return json{{"g", G1.to_json(g)},
                      {"p", P1.to_json(p)},
                      {"q", P1.to_json(q)},
                      {"in_source_double_coset", in_source},
                      {"image_in_target_double_coset", in_target}};
        };
        rep.record("v", in_source == in_target, witness);
        rep.record("v_containment", !in_source || in_target, witness);
      }
    }
  }
  return rep;
}

Report ideal_equation_check(const AdsMorphism& m, const SampleSpec& spec) {
  Report rep = new_report("ideal_equation", m, spec);
  const DynamicalSystem& s1 = m.source();
  const DynamicalSystem& s2 = m.target();
  const std::vector<SdElement> window = make_window(s1, spec);
  rep.note("window_size", window.size());
  Rng rng(spec.seed);
  for (std::size_t i = 0; i < spec.pairs; ++i) {
    const SdElement a = window[uniform_below(rng, window.size())];
    const SdElement b = window[uniform_below(rng, window.size())];
    const SdElement fa = m.map_sd(a);
    const SdElement fb = m.map_sd(b);
    const IdealOutcome src = ideal_intersect(s1, a, b);
    const IdealOutcome dst = ideal_intersect(s2, fa, fb);
    auto witness = [&] {
      return json{{"a", sd_to_json(s1, a)},
                  {"b", sd_to_json(s1, b)},
                  {"source_intersection", ideal_to_json(s1, src)},
                  {"target_intersection", ideal_to_json(s2, dst)}};
    };
    bool ok = false;
    if (!src) {
      ok = !dst;
    } else {
      const SdElement img = m.map_sd(*src);
      ok = dst && sd_same_ideal(s2, img, *dst);
      rep.record("containment", sd_divides(s2, fa, img).has_value() && sd_divides(s2, fb, img).has_value(), witness);
    }
    rep.record("ideal_equation", ok, witness);
    const bool hom = m.map_sd(sd_compose(s1, a, b)) == sd_compose(s2, fa, fb);
    rep.record("induced_homomorphism", hom, witness);
  }
  return rep;
}

Report hom_surjectivity_injectivity(const AdsMorphism& m, const SampleSpec& spec) {
  Report rep = new_report("surjectivity-injectivity", m, spec);
  const DynamicalSystem& s1 = m.source();
  const DynamicalSystem& s2 = m.target();
  const Semigroup& P1 = s1.P();
  const Semigroup& P2 = s2.P();

  // Preimages are searched in a larger source ball than the target ball.
  const std::vector<SgElem> src_ball = P1.enumerate_ball(spec.p_radius + 2);
  std::map<SgElem, std::vector<SgElem>> fibres;
  for (const SgElem& x : src_ball) fibres[m.map_semigroup(x)].push_back(x);

  json missing = json::array();
  for (const SgElem& y : P2.enumerate_ball(spec.p_radius)) {
    const bool hit = fibres.count(y) > 0;
    if (!hit) missing.push_back(P2.to_json(y));
    rep.record("p_surjective", hit, [&] { return json{{"missing", P2.to_json(y)}}; });
  }
  json collisions = json::array();
  const std::vector<SgElem> inj_ball = P1.enumerate_ball(spec.p_radius);
  std::map<SgElem, std::vector<SgElem>> inj_fibres;
  for (const SgElem& x : inj_ball) inj_fibres[m.map_semigroup(x)].push_back(x);
  for (const SgElem& x : inj_ball) {
    bool clean = true;
    for (const SgElem& y : inj_fibres[m.map_semigroup(x)]) {
      if (!(x < y)) continue;
      const json pair{P1.to_json(x), P1.to_json(y)};
      collisions.push_back(pair);
      clean = false;
      rep.record("p_injective", false, [&] { return json{{"collision", pair}}; });
    }
    if (clean) rep.record("p_injective", true);
  }

  const Group& G1 = s1.G();
  const Group& G2 = s2.G();
  const std::vector<GroupElem> src_gs = G1.small_elements(spec.g_samples * 4);
  std::set<GroupElem> image;
  for (const GroupElem& g : src_gs) image.insert(m.map_group(g));
  for (const GroupElem& y : G2.small_elements(spec.g_samples)) {
    rep.record("g_surjective", image.count(y) > 0, [&] { return json{{"missing", G2.to_json(y)}}; });
  }
  std::map<GroupElem, GroupElem> first;
  for (const GroupElem& g : s1.sample_group(spec.g_samples, spec.seed)) {
    const GroupElem y = m.map_group(g);
    auto [it, fresh] = first.emplace(y, g);
    rep.record("g_injective", fresh || it->second == g,
               [&] { return json{{"collision", json{G1.to_json(it->second), G1.to_json(g)}}}; });
  }

  rep.note("p_missing_from_image", missing);
  rep.note("p_collisions", collisions);
  // Surjectivity of C*(S1) -> C*(S2) follows the semigroup map; injectivity needs more (not decided here).
  rep.note("p_surjective_on_ball", missing.empty());
  rep.note("p_injective_on_ball", collisions.empty());
  return rep;
}

}  // namespace lcmalg
