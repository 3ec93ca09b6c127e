#include "lcmalg/product_system.hpp"

#include <set>

namespace lcmalg {

GroupAlgebraElement GroupAlgebraElement::delta(const GroupElem& g, const Coef& c) {
  GroupAlgebraElement a;
  a.add_term(g, c);
  return a;
}

void GroupAlgebraElement::add_term(const GroupElem& g, const Coef& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(g, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FibreVector FibreVector::basis(const SgElem& p, const GroupElem& g, const Coef& c) {
  FibreVector v(p);
  v.add_term(g, c);
  return v;
}

void FibreVector::add_term(const GroupElem& g, const Coef& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(g, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void FibreVector::add(const FibreVector& other) {
  if (!(other.p_ == p_)) throw std::invalid_argument("adding vectors from different fibres");
  for (const auto& [g, c] : other.terms_) add_term(g, c);
}

RankOne basis_projection(const SgElem& p, const GroupElem& g) {
  return {FibreVector::basis(p, g), FibreVector::basis(p, g)};
}

FockVector FockVector::basis(const SgElem& w, const GroupElem& x, const Coef& c) {
  FockVector v;
  v.add(FibreVector::basis(w, x, c));
  return v;
}

void FockVector::add(const FibreVector& v) {
  if (v.is_zero()) return;
  auto it = parts_.find(v.fibre());
  if (it == parts_.end()) {
    parts_.emplace(v.fibre(), v);
    return;
  }
  it->second.add(v);
  if (it->second.is_zero()) parts_.erase(it);
}

namespace {

void require_same_fibre(const FibreVector& a, const FibreVector& b) {
  if (!(a.fibre() == b.fibre())) throw std::invalid_argument("fibre mismatch");
}

}  // namespace

GroupAlgebraElement inner_product(const DynamicalSystem& sys, const FibreVector& xi, const FibreVector& eta) {
  require_same_fibre(xi, eta);
  GroupAlgebraElement out;
  for (const auto& [g, c] : xi.terms()) {
    for (const auto& [h, d] : eta.terms()) {
      // <pi_p(delta_g), pi_p(delta_h)> = L_p(delta_(g^-1 h))
      auto k = sys.preimage(xi.fibre(), sys.G().left_quotient(g, h));
      if (k) out.add_term(*k, c.conj() * d);
    }
  }
  return out;
}

FibreVector fibre_mult(const DynamicalSystem& sys, const FibreVector& xi, const FibreVector& eta) {
  FibreVector out(sys.P().compose(xi.fibre(), eta.fibre()));
  for (const auto& [g, c] : xi.terms()) {
    for (const auto& [h, d] : eta.terms()) out.add_term(sys.G().op(g, sys.apply_endo(xi.fibre(), h)), c * d);
  }
  return out;
}

FibreVector left_action(const DynamicalSystem& sys, const GroupAlgebraElement& a, const FibreVector& xi) {
  FibreVector out(xi.fibre());
  for (const auto& [k, c] : a.terms()) {
    for (const auto& [g, d] : xi.terms()) out.add_term(sys.G().op(k, g), c * d);
  }
  return out;
}

FibreVector right_action(const DynamicalSystem& sys, const FibreVector& xi, const GroupAlgebraElement& a) {
  FibreVector out(xi.fibre());
  for (const auto& [g, d] : xi.terms()) {
    for (const auto& [k, c] : a.terms()) out.add_term(sys.G().op(g, sys.apply_endo(xi.fibre(), k)), d * c);
  }
  return out;
}

Transversal transversal_compose(const DynamicalSystem& sys, const SgElem& p, const SgElem& q) {
  const Transversal tp = sys.transversal(p);
  const Transversal tq = sys.transversal(q);
  std::optional<std::size_t> size;
  if (tp.finite() && tq.finite()) size = *tp.size() * *tq.size();
  // The system is copied into the closure so the transversal can outlive the caller's reference.
  return Transversal(size, [sys, p, tp, tq](std::size_t n) {
    std::vector<GroupElem> out;
    auto combine = [&](const GroupElem& t, const GroupElem& u) { return sys.G().op(t, sys.apply_endo(p, u)); };
    if (tp.finite() && tq.finite()) {
      const auto a = tp.materialize();
      const auto b = tq.materialize();
      for (const GroupElem& t : a) {
        for (const GroupElem& u : b) {
          if (out.size() == n) return out;
          out.push_back(combine(t, u));
        }
      }
      return out;
    }
    const auto a = tp.prefix(n);
    const auto b = tq.prefix(n);
    for (std::size_t d = 0; out.size() < n && d + 1 < a.size() + b.size(); ++d) {
      for (std::size_t i = 0; i <= d && out.size() < n; ++i) {
        const std::size_t j = d - i;
        if (i < a.size() && j < b.size()) out.push_back(combine(a[i], b[j]));
      }
    }
    return out;
  });
}

FibreVector rank_one_apply(const DynamicalSystem& sys, const RankOne& t, const FibreVector& mu) {
  require_same_fibre(t.eta, mu);
  return right_action(sys, t.xi, inner_product(sys, t.eta, mu));
}

RankOne rank_one_adjoint(const RankOne& t) { return {t.eta, t.xi}; }

FibreVector iota_apply(const DynamicalSystem& sys, const SgElem& p, const SgElem& r, const RankOne& t,
                       const FibreVector& mu) {
  FibreVector out(r);
  if (!(mu.fibre() == r) || !sys.P().divides(p, r)) return out;
  const Group& G = sys.G();
  for (const auto& [g1, a] : t.xi.terms()) {
    for (const auto& [g2, b] : t.eta.terms()) {
      for (const auto& [s, c] : mu.terms()) {
        const GroupElem y = G.left_quotient(g2, s);
        if (!sys.preimage(p, y)) continue;
        out.add_term(G.op(g1, y), a * b.conj() * c);
      }
    }
  }
  return out;
}

namespace {

struct BasisRankOne {
  GroupElem g1;
  GroupElem g2;
};

BasisRankOne basis_of(const RankOne& t) {
  if (t.xi.terms().size() != 1 || t.eta.terms().size() != 1 || !(t.xi.terms().begin()->second == Coef(1)) ||
      !(t.eta.terms().begin()->second == Coef(1))) {
    throw std::invalid_argument("expected a basis rank-one operator");
  }
  return {t.xi.terms().begin()->first, t.eta.terms().begin()->first};
}

}  // namespace

std::optional<RankOne> compact_align_with_solution(const DynamicalSystem& sys, const SgElem& p, const SgElem& q,
                                                   const RankOne& tp, const RankOne& tq, const GroupElem& k,
                                                   const GroupElem& l) {
  const BasisRankOne a = basis_of(tp);
  const BasisRankOne b = basis_of(tq);
  const RightLcmOutcome meet = sys.P().right_lcm(p, q);
  if (!meet) return std::nullopt;
  const Group& G = sys.G();
  return RankOne{FibreVector::basis(meet->r, G.op(a.g1, sys.apply_endo(p, k))),
                 FibreVector::basis(meet->r, G.op(b.g2, sys.apply_endo(q, l)))};
}

std::optional<RankOne> compact_align_product(const DynamicalSystem& sys, const SgElem& p, const SgElem& q,
                                             const RankOne& tp, const RankOne& tq) {
  const BasisRankOne a = basis_of(tp);
  const BasisRankOne b = basis_of(tq);
  if (!sys.P().right_lcm(p, q)) return std::nullopt;
  auto sol = sys.solve_double(p, q, sys.G().left_quotient(a.g2, b.g1));
  if (!sol) return std::nullopt;
  return compact_align_with_solution(sys, p, q, tp, tq, sol->first, sol->second);
}

FockVector fock_create(const DynamicalSystem& sys, const FibreVector& xi, const FockVector& v) {
  FockVector out;
  for (const auto& [w, eta] : v.parts()) out.add(fibre_mult(sys, xi, eta));
  return out;
}

FockVector fock_annihilate(const DynamicalSystem& sys, const FibreVector& xi, const FockVector& v) {
  FockVector out;
  const SgElem& p = xi.fibre();
  const Group& G = sys.G();
  for (const auto& [w, eta] : v.parts()) {
    auto rest = sys.P().divides(p, w);
    if (!rest) continue;
    FibreVector part(*rest);
    for (const auto& [g, c] : xi.terms()) {
      for (const auto& [x, d] : eta.terms()) {
        auto y = sys.preimage(p, G.left_quotient(g, x));
        if (y) part.add_term(*y, c.conj() * d);
      }
    }
    out.add(part);
  }
  return out;
}

FockVector fock_left(const DynamicalSystem& sys, const GroupAlgebraElement& a, const FockVector& v) {
  FockVector out;
  for (const auto& [w, eta] : v.parts()) out.add(left_action(sys, a, eta));
  return out;
}

FockVector fock_compact(const DynamicalSystem& sys, const SgElem& p, const RankOne& t, const FockVector& v) {
  FockVector out;
  for (const auto& [w, eta] : v.parts()) {
    if (sys.P().divides(p, w)) out.add(iota_apply(sys, p, w, t, eta));
  }
  return out;
}

namespace {

// Shared sampling state for the Fock-level verifiers.
struct Sampler {
  const DynamicalSystem& sys;
  std::vector<SgElem> ball;
  std::vector<GroupElem> gs;
  Rng rng;

  Sampler(const DynamicalSystem& s, const SampleSpec& spec)
      : sys(s), ball(s.P().enumerate_ball(spec.p_radius)), gs(s.sample_group(spec.g_samples, spec.seed)),
        rng(spec.seed) {}

  const SgElem& p() { return ball[uniform_below(rng, ball.size())]; }
  const GroupElem& g() { return gs[uniform_below(rng, gs.size())]; }
  bool coin() { return (rng() & 1U) != 0; }
  Coef coef() {
    const long re = static_cast<long>(uniform_below(rng, 7)) - 3;
    const long im = static_cast<long>(uniform_below(rng, 7)) - 3;
    Coef c = Coef(re) + Coef(im) * Coef::i();
    return c.is_zero() ? Coef(1) : c;
  }
  /// pi_w(delta_x), biased half the time into w in rP with x in a theta_r(G).
  FockVector fock_basis(const SgElem& r, const GroupElem& a) {
    if (coin()) return FockVector::basis(sys.P().compose(r, p()), sys.G().op(a, sys.apply_endo(r, g())));
    return FockVector::basis(p(), g());
  }
  FibreVector random_vector(const SgElem& fibre, std::size_t terms) {
    FibreVector v(fibre);
    for (std::size_t i = 0; i < terms; ++i) v.add_term(g(), coef());
    return v;
  }
};

json fock_basis_json(const DynamicalSystem& sys, const FockVector& v) { return fock_to_json(sys, v); }

}  // namespace

Report check_nica_covariance(const DynamicalSystem& sys, const SampleSpec& spec) {
  Report rep("nica-covariance", spec.to_json());
  rep.note("system", sys.describe());
  Sampler s(sys, spec);
  const Group& G = sys.G();
  std::size_t nonzero_pairs = 0;
  for (std::size_t i = 0; i < spec.pairs; ++i) {
    const SgElem p = s.p();
    const SgElem q = s.p();
    const GroupElem g = s.g();
    GroupElem h = s.g();
    // Bias half the pairs towards non-orthogonal projections.
    if (s.coin()) h = G.op(g, G.op(sys.apply_endo(p, s.g()), G.inverse(sys.apply_endo(q, s.g()))));
    const FibreVector xg = FibreVector::basis(p, g);
    const FibreVector xh = FibreVector::basis(q, h);
    const RightLcmOutcome meet = sys.P().right_lcm(p, q);
    std::optional<std::pair<GroupElem, GroupElem>> sol;
    if (meet) sol = sys.solve_double(p, q, G.left_quotient(g, h));
    const bool nonzero = meet && sol;
    const SgElem r = meet ? meet->r : p;
    const GroupElem gr = nonzero ? G.op(g, sys.apply_endo(p, sol->first)) : g;
    if (nonzero) ++nonzero_pairs;
    for (std::size_t j = 0; j < spec.vectors; ++j) {
      const FockVector v = s.fock_basis(r, gr);
      // psi_p(xi) psi_p(xi)* realizes psi^(p)(E_(g,p)) on the Fock module.
      const FockVector lhs = fock_create(sys, xg, fock_annihilate(sys, xg, fock_create(sys, xh, fock_annihilate(sys, xh, v))));
      const FockVector rhs = nonzero ? fock_compact(sys, r, basis_projection(r, gr), v) : FockVector{};
      rep.record("nica", lhs == rhs, [&] {
        return json{{"g", G.to_json(g)}, {"p", sys.P().to_json(p)}, {"h", G.to_json(h)},
                    {"q", sys.P().to_json(q)}, {"vector", fock_basis_json(sys, v)},
                    {"lhs", fock_to_json(sys, lhs)}, {"rhs", fock_to_json(sys, rhs)}};
      });
    }
  }
  rep.note("nonzero_pairs", nonzero_pairs);
  return rep;
}

Report check_generator_relations(const DynamicalSystem& sys, const SampleSpec& spec) {
  Report rep("generator-relations", spec.to_json());
  rep.note("system", sys.describe());
  Sampler s(sys, spec);
  const Group& G = sys.G();
  const GroupElem e = G.identity();
  auto U = [&](const GroupElem& g, const FockVector& v) { return fock_left(sys, GroupAlgebraElement::delta(g), v); };
  auto S = [&](const SgElem& p, const FockVector& v) { return fock_create(sys, FibreVector::basis(p, e), v); };
  auto Sstar = [&](const SgElem& p, const FockVector& v) { return fock_annihilate(sys, FibreVector::basis(p, e), v); };
  auto E = [&](const GroupElem& g, const SgElem& p, const FockVector& v) {
    return U(g, S(p, Sstar(p, U(G.inverse(g), v))));
  };
  for (std::size_t i = 0; i < spec.pairs; ++i) {
    const SgElem p = s.p();
    const SgElem q = s.p();
    const GroupElem g = s.g();
    GroupElem h = s.g();
    if (s.coin()) h = G.op(g, G.op(sys.apply_endo(p, s.g()), G.inverse(sys.apply_endo(q, s.g()))));
    const RightLcmOutcome meet = sys.P().right_lcm(p, q);
    std::optional<std::pair<GroupElem, GroupElem>> sol;
    if (meet) sol = sys.solve_double(p, q, G.left_quotient(g, h));
    const SgElem r = meet ? meet->r : p;
    const GroupElem gr = (meet && sol) ? G.op(g, sys.apply_endo(p, sol->first)) : g;
    const FockVector v = s.fock_basis(r, gr);
    auto witness = [&] {
      return json{{"g", G.to_json(g)}, {"p", sys.P().to_json(p)}, {"h", G.to_json(h)}, {"q", sys.P().to_json(q)},
                  {"vector", fock_to_json(sys, v)}};
    };
    rep.record("covariance", S(p, U(g, v)) == U(sys.apply_endo(p, g), S(p, v)), witness);
    rep.record("isometry", Sstar(p, S(p, v)) == v, witness);
    const FockVector lhs = E(g, p, E(h, q, v));
    const FockVector rhs = (meet && sol) ? E(gr, r, v) : FockVector{};
    rep.record("projection_product", lhs == rhs, witness);
  }
  return rep;
}

namespace {

// Theta_(pi_r(delta_a), pi_r(delta_b)) with b moved into T_r by the unitary
// right action, so equal operators get equal descriptions.
std::pair<GroupElem, GroupElem> reduce_basis_rank_one(const DynamicalSystem& sys, const RankOne& t) {
  const BasisRankOne b = basis_of(t);
  auto [rep, m] = sys.canon_rep(t.eta.fibre(), b.g2);
  return {sys.G().op(b.g1, sys.apply_endo(t.xi.fibre(), sys.G().inverse(m))), rep};
}

// iota_p^r(T) evaluated through a factorization pi_r(delta_x) = pi_p(delta_t) pi_(p')(delta_y).
FibreVector iota_factored(const DynamicalSystem& sys, const SgElem& p, const SgElem& r, const RankOne& t,
                          const FibreVector& mu) {
  FibreVector out(r);
  auto rest = sys.P().divides(p, r);
  if (!rest) return out;
  for (const auto& [x, c] : mu.terms()) {
    auto [tp, y] = sys.canon_rep(p, x);
    const FibreVector head = rank_one_apply(sys, t, FibreVector::basis(p, tp, c));
    out.add(fibre_mult(sys, head, FibreVector::basis(*rest, y)));
  }
  return out;
}

}  // namespace

Report check_product_system(const DynamicalSystem& sys, const SampleSpec& spec) {
  Report rep("product-system", spec.to_json());
  rep.note("system", sys.describe());
  Sampler s(sys, spec);
  const Group& G = sys.G();
  const std::vector<SgElem> small_ball = sys.P().enumerate_ball(std::min(spec.p_radius, 2));

  // Orthonormal basis on transversal prefixes.
  for (const SgElem& p : small_ball) {
    const auto ts = sys.transversal(p).prefix(spec.prefix);
    for (const GroupElem& a : ts) {
      for (const GroupElem& b : ts) {
        const GroupAlgebraElement ip = inner_product(sys, FibreVector::basis(p, a), FibreVector::basis(p, b));
        const GroupAlgebraElement want = a == b ? GroupAlgebraElement::delta(G.identity()) : GroupAlgebraElement{};
        rep.record("orthonormal", ip == want, [&] {
          return json{{"p", sys.P().to_json(p)}, {"t", G.to_json(a)}, {"t2", G.to_json(b)}};
        });
      }
    }
  }

  // The composed transversal is a transversal for G / theta_pq(G).
  for (const SgElem& p : small_ball) {
    for (const SgElem& q : small_ball) {
      const SgElem pq = sys.P().compose(p, q);
      const Transversal m = transversal_compose(sys, p, q);
      const auto idx = sys.index(pq);
      const std::vector<GroupElem> elems = idx ? m.materialize() : m.prefix(spec.prefix);
      std::set<GroupElem> reps;
      for (const GroupElem& x : elems) reps.insert(sys.canon_rep(pq, x).first);
      auto witness = [&] { return json{{"p", sys.P().to_json(p)}, {"q", sys.P().to_json(q)}}; };
      rep.record("compose_injective", reps.size() == elems.size(), witness);
      if (idx) {
        rep.record("compose_complete", elems.size() == *idx, witness);
        for (const GroupElem& g : s.gs) {
          rep.record("compose_complete", reps.count(sys.canon_rep(pq, g).first) == 1,
                     [&] { return json{{"p", sys.P().to_json(p)}, {"q", sys.P().to_json(q)}, {"g", G.to_json(g)}}; });
        }
      } else {
        // g = t theta_p(t') theta_pq(k) with t in T_p, t' in T_q.
        for (const GroupElem& g : s.gs) {
          auto [t, k] = sys.canon_rep(p, g);
          auto [t2, k2] = sys.canon_rep(q, k);
          const GroupElem rebuilt = G.op(G.op(t, sys.apply_endo(p, t2)), sys.apply_endo(pq, k2));
          const bool ok = rebuilt == g && sys.canon_rep(pq, g).first == sys.canon_rep(pq, G.op(t, sys.apply_endo(p, t2))).first;
          rep.record("compose_complete", ok,
                     [&] { return json{{"p", sys.P().to_json(p)}, {"q", sys.P().to_json(q)}, {"g", G.to_json(g)}}; });
        }
      }
    }
  }

  for (std::size_t i = 0; i < spec.pairs; ++i) {
    const SgElem p = s.p();
    const SgElem q = s.p();
    const GroupElem g1 = s.g();
    const GroupElem g2 = s.g();
    GroupElem h1 = s.g();
    const GroupElem h2 = s.g();
    if (s.coin()) h1 = G.op(g2, G.op(sys.apply_endo(p, s.g()), G.inverse(sys.apply_endo(q, s.g()))));
    const RankOne tp{FibreVector::basis(p, g1), FibreVector::basis(p, g2)};
    const RankOne tq{FibreVector::basis(q, h1), FibreVector::basis(q, h2)};
    const std::optional<RankOne> prod = compact_align_product(sys, p, q, tp, tq);
    const RightLcmOutcome meet = sys.P().right_lcm(p, q);
    auto witness = [&](const FockVector& v) {
      return json{{"p", sys.P().to_json(p)}, {"q", sys.P().to_json(q)}, {"g1", G.to_json(g1)},
                  {"g2", G.to_json(g2)}, {"h1", G.to_json(h1)}, {"h2", G.to_json(h2)}, {"vector", fock_to_json(sys, v)}};
    };
    const SgElem r = meet ? meet->r : p;
    const GroupElem target = prod ? prod->eta.terms().begin()->first : h2;
    for (std::size_t j = 0; j < spec.vectors; ++j) {
      const FockVector v = s.fock_basis(r, target);
      const FockVector lhs = fock_compact(sys, p, tp, fock_compact(sys, q, tq, v));
      const FockVector rhs = prod ? fock_compact(sys, r, *prod, v) : FockVector{};
      rep.record("compact_alignment", lhs == rhs, [&] { return witness(v); });
      if (meet) {
        const FibreVector mu = FibreVector::basis(r, v.parts().begin()->second.terms().begin()->first);
        const FibreVector a = iota_apply(sys, p, r, tp, iota_apply(sys, q, r, tq, mu));
        const FibreVector b = prod ? rank_one_apply(sys, *prod, mu) : FibreVector(r);
        rep.record("compact_alignment_fibre", a == b, [&] { return witness(v); });
      }
    }
    // Any solution of the double coset equation yields the same operator.
    if (prod) {
      auto sol = *sys.solve_double(p, q, G.left_quotient(g2, h1));
      const GroupElem z = s.g();
      const GroupElem k2 = G.op(sol.first, sys.apply_endo(meet->p_comp, z));
      const GroupElem l2 = G.op(sol.second, sys.apply_endo(meet->q_comp, z));
      auto alt = compact_align_with_solution(sys, p, q, tp, tq, k2, l2);
      rep.record("compact_alignment_solution_independent",
                 alt && reduce_basis_rank_one(sys, *alt) == reduce_basis_rank_one(sys, *prod),
                 [&] { return witness(FockVector{}); });
    }

    // iota respects composition: iota_r^(rb) iota_p^r = iota_p^(rb) with r = pa.
    const SgElem r1 = sys.P().compose(p, s.p());
    const SgElem r2 = sys.P().compose(r1, s.p());
    const FibreVector mu2 = s.random_vector(r2, 2);
    rep.record("iota_closed_form", iota_apply(sys, p, r2, tp, mu2) == iota_factored(sys, p, r2, tp, mu2),
               [&] { return json{{"p", sys.P().to_json(p)}, {"r", sys.P().to_json(r2)}}; });
    {
      FibreVector composed(r2);
      auto rest = sys.P().divides(r1, r2);
      for (const auto& [x, c] : mu2.terms()) {
        auto [t, y] = sys.canon_rep(r1, x);
        const FibreVector head = iota_apply(sys, p, r1, tp, FibreVector::basis(r1, t, c));
        composed.add(fibre_mult(sys, head, FibreVector::basis(*rest, y)));
      }
      rep.record("iota_composition", composed == iota_apply(sys, p, r2, tp, mu2),
                 [&] { return json{{"p", sys.P().to_json(p)}, {"r", sys.P().to_json(r1)}, {"s", sys.P().to_json(r2)}}; });
    }

    // Module identities on random two-term vectors.
    const FibreVector xi = s.random_vector(p, 2);
    const FibreVector xi2 = s.random_vector(p, 2);
    const FibreVector eta = s.random_vector(q, 2);
    const FibreVector eta2 = s.random_vector(q, 2);
    const FibreVector zeta = s.random_vector(s.p(), 2);
    rep.record("fibre_mult_associative",
               fibre_mult(sys, fibre_mult(sys, xi, eta), zeta) == fibre_mult(sys, xi, fibre_mult(sys, eta, zeta)));
    rep.record("inner_product_compatible",
               inner_product(sys, fibre_mult(sys, xi, eta), fibre_mult(sys, xi2, eta2)) ==
                   inner_product(sys, eta, left_action(sys, inner_product(sys, xi, xi2), eta2)));
    {
      const FockVector v = s.fock_basis(p, g1);
      rep.record("representation",
                 fock_annihilate(sys, xi, fock_create(sys, xi2, v)) == fock_left(sys, inner_product(sys, xi, xi2), v),
                 [&] { return witness(v); });
    }
    {
      const RankOne t{xi, xi2};
      const FibreVector nu = s.random_vector(p, 2);
      const FibreVector mu = s.random_vector(p, 2);
      rep.record("rank_one_adjoint",
                 inner_product(sys, rank_one_apply(sys, t, nu), mu) ==
                     inner_product(sys, nu, rank_one_apply(sys, rank_one_adjoint(t), mu)));
    }
    {
      // Reconstruction over a transversal prefix F for mu supported on F theta_p(G).
      const auto F = sys.transversal(p).prefix(std::min<std::size_t>(spec.prefix, 8));
      FibreVector mu(p);
      for (int t = 0; t < 3; ++t) mu.add_term(G.op(F[uniform_below(s.rng, F.size())], sys.apply_endo(p, s.g())), s.coef());
      FibreVector sum(p);
      for (const GroupElem& t : F) sum.add(rank_one_apply(sys, basis_projection(p, t), mu));
      rep.record("reconstruction", sum == mu, [&] { return json{{"p", sys.P().to_json(p)}, {"mu", fibre_to_json(sys, mu)}}; });
    }
  }
  return rep;
}

json group_algebra_to_json(const DynamicalSystem& sys, const GroupAlgebraElement& a) {
  json arr = json::array();
  for (const auto& [g, c] : a.terms()) arr.push_back(json{{"g", sys.G().to_json(g)}, {"coef", c}});
  return arr;
}

json fibre_to_json(const DynamicalSystem& sys, const FibreVector& v) {
  json arr = json::array();
  for (const auto& [g, c] : v.terms()) arr.push_back(json{{"g", sys.G().to_json(g)}, {"coef", c}});
  return json{{"fibre", sys.P().to_json(v.fibre())}, {"terms", arr}};
}

json fock_to_json(const DynamicalSystem& sys, const FockVector& v) {
  json arr = json::array();
  for (const auto& [w, part] : v.parts()) arr.push_back(fibre_to_json(sys, part));
  return arr;
}

}  // namespace lcmalg
