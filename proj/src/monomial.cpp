#include "lcmalg/monomial.hpp"

namespace lcmalg {

Monomial canonicalize(const DynamicalSystem& sys, const GroupElem& g, const SgElem& p, const SgElem& q,
                      const GroupElem& h) {
  const Semigroup& P = sys.P();
  const Group& G = sys.G();
  // Twist by (1, x) with x the inverse of the unit part of p.
  SgElem u = P.identity();
  u.unit = p.unit;
  const SgElem x = P.unit_inverse(u);
  const SgElem p1 = P.compose(p, x);
  const SgElem q1 = P.compose(q, x);
  // Twist by (l^-1, 1) where h = t theta_q(l).
  auto [t, l] = sys.canon_rep(q1, h);
  GroupElem g1 = G.op(g, sys.apply_endo(p1, G.inverse(l)));
  return Monomial{Quad{std::move(g1), p1, q1, std::move(t)}};
}

Monomial canonicalize(const DynamicalSystem& sys, const Quad& x) { return canonicalize(sys, x.g, x.p, x.q, x.h); }

bool is_canonical(const DynamicalSystem& sys, const Monomial& m) {
  if (m.is_zero()) return true;
  return canonicalize(sys, *m.quad) == m;
}

Monomial identity_monomial(const DynamicalSystem& sys) {
  const GroupElem e = sys.G().identity();
  return Monomial{Quad{e, sys.P().identity(), sys.P().identity(), e}};
}

Monomial projection(const DynamicalSystem& sys, const GroupElem& g, const SgElem& p) {
  return canonicalize(sys, g, p, p, g);
}

Monomial isometry(const DynamicalSystem& sys, const SdElement& a) {
  return canonicalize(sys, a.g, a.p, sys.P().identity(), sys.G().identity());
}

Monomial mult_with_solution(const DynamicalSystem& sys, const Monomial& m1, const Monomial& m2, const GroupElem& k,
                            const GroupElem& l) {
  if (m1.is_zero() || m2.is_zero()) return Monomial::zero();
  const Quad& a = *m1.quad;
  const Quad& b = *m2.quad;
  const RightLcmOutcome meet = sys.P().right_lcm(a.q, b.p);
  if (!meet) return Monomial::zero();
  const Group& G = sys.G();
  return canonicalize(sys, G.op(a.g, sys.apply_endo(a.p, k)), sys.P().compose(a.p, meet->p_comp),
                      sys.P().compose(b.q, meet->q_comp), G.op(b.h, sys.apply_endo(b.q, l)));
}

Monomial mult(const DynamicalSystem& sys, const Monomial& m1, const Monomial& m2) {
  if (m1.is_zero() || m2.is_zero()) return Monomial::zero();
  const Quad& a = *m1.quad;
  const Quad& b = *m2.quad;
  // s_q1* u_x s_p2 with x = h1^-1 g2 rewrites through the right LCM of q1 and p2.
  if (!sys.P().right_lcm(a.q, b.p)) return Monomial::zero();
  auto sol = sys.solve_double(a.q, b.p, sys.G().left_quotient(a.h, b.g));
  if (!sol) return Monomial::zero();
  return mult_with_solution(sys, m1, m2, sol->first, sol->second);
}

Monomial adjoint(const DynamicalSystem& sys, const Monomial& m) {
  if (m.is_zero()) return m;
  const Quad& a = *m.quad;
  return canonicalize(sys, a.h, a.q, a.p, a.g);
}

Monomial projection_product(const DynamicalSystem& sys, const Monomial& e1, const Monomial& e2) {
  auto check = [](const Monomial& e) {
    if (e.is_zero()) return;
    if (!(e.quad->p == e.quad->q && e.quad->g == e.quad->h)) {
      throw std::invalid_argument("projection_product expects monomials of the form (g,p,p,g)");
    }
  };
  check(e1);
  check(e2);
  if (e1.is_zero() || e2.is_zero()) return Monomial::zero();
  const Quad& a = *e1.quad;
  const Quad& b = *e2.quad;
  const RightLcmOutcome meet = sys.P().right_lcm(a.p, b.p);
  if (!meet) return Monomial::zero();
  auto sol = sys.solve_double(a.p, b.p, sys.G().left_quotient(a.g, b.g));
  if (!sol) return Monomial::zero();
  return projection(sys, sys.G().op(a.g, sys.apply_endo(a.p, sol->first)), meet->r);
}

AlgebraElement::AlgebraElement(const Monomial& m, const Coef& c) {
  if (!m.is_zero()) add_term(*m.quad, c);
}

void AlgebraElement::add_term(const Quad& x, const Coef& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(x, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement algebra_add(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r = a;
  for (const auto& [x, c] : b.terms()) r.add_term(x, c);
  return r;
}

AlgebraElement algebra_scale(const AlgebraElement& a, const Coef& c) {
  AlgebraElement r;
  for (const auto& [x, d] : a.terms()) r.add_term(x, d * c);
  return r;
}

AlgebraElement algebra_mult(const DynamicalSystem& sys, const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r;
  for (const auto& [x, c] : a.terms()) {
    for (const auto& [y, d] : b.terms()) {
      const Monomial m = mult(sys, Monomial{x}, Monomial{y});
      if (!m.is_zero()) r.add_term(*m.quad, c * d);
    }
  }
  return r;
}

AlgebraElement algebra_adjoint(const DynamicalSystem& sys, const AlgebraElement& a) {
  AlgebraElement r;
  for (const auto& [x, c] : a.terms()) {
    const Monomial m = adjoint(sys, Monomial{x});
    r.add_term(*m.quad, c.conj());
  }
  return r;
}

Monomial random_monomial(const DynamicalSystem& sys, Rng& rng, const std::vector<SgElem>& ball,
                         const std::vector<GroupElem>& gs) {
  const GroupElem& g = gs[uniform_below(rng, gs.size())];
  const SgElem& p = ball[uniform_below(rng, ball.size())];
  const SgElem& q = ball[uniform_below(rng, ball.size())];
  const GroupElem& h = gs[uniform_below(rng, gs.size())];
  return canonicalize(sys, g, p, q, h);
}

json monomial_to_json(const DynamicalSystem& sys, const Monomial& m) {
  if (m.is_zero()) return "0";
  const Quad& a = *m.quad;
  return json{{"g", sys.G().to_json(a.g)},
              {"p", sys.P().to_json(a.p)},
              {"q", sys.P().to_json(a.q)},
              {"h", sys.G().to_json(a.h)}};
}

Monomial monomial_from_json(const DynamicalSystem& sys, const json& j) {
  if ((j.is_string() && j.get<std::string>() == "0") || (j.is_number_integer() && j.get<int>() == 0)) {
    return Monomial::zero();
  }
  if (j.is_array()) {
    if (j.size() != 4) throw std::invalid_argument("a monomial needs four components: " + j.dump());
    return canonicalize(sys, sys.G().from_json(j[0]), sys.P().from_json(j[1]), sys.P().from_json(j[2]),
                        sys.G().from_json(j[3]));
  }
  return canonicalize(sys, sys.G().from_json(j.at("g")), sys.P().from_json(j.at("p")), sys.P().from_json(j.at("q")),
                      sys.G().from_json(j.at("h")));
}

std::string monomial_to_string(const DynamicalSystem& sys, const Monomial& m) {
  if (m.is_zero()) return "0";
  const Quad& a = *m.quad;
  return "(" + sys.G().to_string(a.g) + "," + sys.P().to_string(a.p) + "," + sys.P().to_string(a.q) + "," +
         sys.G().to_string(a.h) + ")";
}

json algebra_to_json(const DynamicalSystem& sys, const AlgebraElement& a) {
  json arr = json::array();
  for (const auto& [x, c] : a.terms()) {
    arr.push_back(json{{"coef", c}, {"monomial", monomial_to_json(sys, Monomial{x})}});
  }
  return arr;
}

Report check_monomial_calculus(const DynamicalSystem& sys, const SampleSpec& spec, std::size_t triples) {
  Report rep("monomial-calculus", spec.to_json());
  const Group& G = sys.G();
  const std::vector<SgElem> ball = sys.P().enumerate_ball(spec.p_radius);
  const std::vector<GroupElem> gs = sys.sample_group(spec.g_samples, spec.seed);
  Rng rng(spec.seed);
  auto mj = [&](const Monomial& m) { return monomial_to_json(sys, m); };

  for (std::size_t i = 0; i < triples; ++i) {
    const Monomial a = random_monomial(sys, rng, ball, gs);
    const Monomial b = random_monomial(sys, rng, ball, gs);
    const Monomial c = random_monomial(sys, rng, ball, gs);
    const Monomial ab = mult(sys, a, b);
    const Monomial left = mult(sys, ab, c);
    const Monomial right = mult(sys, a, mult(sys, b, c));
    rep.record("associativity", left == right, [&] {
      return json{{"a", mj(a)}, {"b", mj(b)}, {"c", mj(c)}, {"(ab)c", mj(left)}, {"a(bc)", mj(right)}};
    });
    const Monomial lhs = adjoint(sys, ab);
    const Monomial rhs = mult(sys, adjoint(sys, b), adjoint(sys, a));
    rep.record("adjoint_antimultiplicative", lhs == rhs, [&] {
      return json{{"a", mj(a)}, {"b", mj(b)}, {"(ab)*", mj(lhs)}, {"b*a*", mj(rhs)}};
    });
    rep.record("adjoint_involutive", adjoint(sys, adjoint(sys, a)) == a, [&] { return json{{"a", mj(a)}}; });
    rep.record("canonical_output", is_canonical(sys, ab), [&] { return json{{"a", mj(a)}, {"b", mj(b)}}; });
  }

  std::size_t distinct = 0;
  for (std::size_t attempt = 0; distinct < triples && attempt < 20 * triples; ++attempt) {
    const Monomial a = random_monomial(sys, rng, ball, gs);
    const Monomial b = random_monomial(sys, rng, ball, gs);
    const Quad& x = *a.quad;
    const Quad& y = *b.quad;
    const RightLcmOutcome meet = sys.P().right_lcm(x.q, y.p);
    if (!meet) continue;
    const GroupElem target = G.left_quotient(x.h, y.g);
    const auto sol = sys.solve_double(x.q, y.p, target);
    if (!sol) continue;
    GroupElem z = gs[uniform_below(rng, gs.size())];
    if (G.is_identity(z)) continue;
    const GroupElem k2 = G.op(sol->first, sys.apply_endo(meet->p_comp, z));
    const GroupElem l2 = G.op(sol->second, sys.apply_endo(meet->q_comp, z));
    const bool valid =
        G.op(sys.apply_endo(x.q, k2), G.inverse(sys.apply_endo(y.p, l2))) == target;
    rep.record("alternative_solution_valid", valid, [&] {
      return json{{"a", mj(a)}, {"b", mj(b)}, {"z", G.to_json(z)}};
    });
    if (!valid || (k2 == sol->first && l2 == sol->second)) continue;
    ++distinct;
    const Monomial one = mult(sys, a, b);
    const Monomial two = mult_with_solution(sys, a, b, k2, l2);
    rep.record("solver_independence", one == two, [&] {
      return json{{"a", mj(a)}, {"b", mj(b)}, {"k", G.to_json(k2)}, {"l", G.to_json(l2)},
                  {"solver", mj(one)}, {"alternative", mj(two)}};
    });
  }
  rep.note("solver_independence_instances", distinct);

  for (std::size_t i = 0; i < triples; ++i) {
    const SdElement s{gs[uniform_below(rng, gs.size())], ball[uniform_below(rng, ball.size())]};
    const SdElement t{gs[uniform_below(rng, gs.size())], ball[uniform_below(rng, ball.size())]};
    const Monomial e1 = projection(sys, s.g, s.p);
    const Monomial e2 = projection(sys, t.g, t.p);
    const Monomial pp = projection_product(sys, e1, e2);
    const Monomial m = mult(sys, e1, e2);
    const IdealOutcome meet = ideal_intersect(sys, s, t);
    const Monomial transport = meet ? projection(sys, meet->g, meet->p) : Monomial::zero();
    rep.record("projection_product_matches_mult", pp == m, [&] {
      return json{{"e1", mj(e1)}, {"e2", mj(e2)}, {"projection_product", mj(pp)}, {"mult", mj(m)}};
    });
    rep.record("projection_product_matches_ideal", pp == transport, [&] {
      return json{{"e1", mj(e1)}, {"e2", mj(e2)}, {"projection_product", mj(pp)},
                  {"ideal", ideal_to_json(sys, meet)}};
    });
  }
  return rep;
}

}  // namespace lcmalg
