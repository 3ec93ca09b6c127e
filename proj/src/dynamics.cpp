#include "lcmalg/dynamics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace lcmalg {

std::vector<GroupElem> Transversal::prefix(std::size_t n) const {
  if (size_ && n > *size_) n = *size_;
  return prefix_(n);
}

std::vector<GroupElem> Transversal::materialize() const {
  if (!size_) throw TruncationRequired("transversal is infinite; request a finite prefix instead");
  return prefix_(*size_);
}

std::pair<std::int64_t, std::int64_t> gauss_residue_key(Gauss z, Gauss m) {
  const std::int64_t a = m.re < 0 ? -m.re : m.re;
  const std::int64_t b = m.im < 0 ? -m.im : m.im;
  const std::int64_t c = std::gcd(a, b);
  const std::int64_t big_a = m.norm() / c;
  // (B, C) is the lattice vector s m + t (i m) with second coordinate C = gcd.
  const IntXgcd x = xgcd(m.im, m.re);
  const std::int64_t s = x.x, t = x.y;
  const std::int64_t big_b = floor_mod(checked_sub(checked_mul(s, m.re), checked_mul(t, m.im)), big_a);
  const std::int64_t q = floor_div(z.im, c);
  const std::int64_t y = z.im - q * c;
  const std::int64_t xr = floor_mod(checked_sub(z.re, checked_mul(q, big_b)), big_a);
  return {xr, y};
}

struct GaussTransversalCache {
  struct Entry {
    std::vector<Gauss> reps;
    std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> by_key;
  };
  std::mutex mu;
  std::map<Gauss, std::shared_ptr<const Entry>> entries;

  std::shared_ptr<const Entry> get(Gauss m) {
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = entries.find(m);
      if (it != entries.end()) return it->second;
    }
    auto e = std::make_shared<Entry>();
    const auto n = static_cast<std::size_t>(m.norm());
    // Lattice points by growing L1 distance, each ring in reading order
    // (top row first, left to right); the first point of each class wins.
    for (std::int64_t d = 0; e->reps.size() < n; ++d) {
      for (std::int64_t y = d; y >= -d && e->reps.size() < n; --y) {
        const std::int64_t rest = d - (y < 0 ? -y : y);
        std::vector<Gauss> row;
        if (rest == 0) {
          row.push_back(Gauss{0, y});
        } else {
          row.push_back(Gauss{-rest, y});
          row.push_back(Gauss{rest, y});
        }
        for (const Gauss& z : row) {
          auto key = gauss_residue_key(z, m);
          if (e->by_key.emplace(key, e->reps.size()).second) e->reps.push_back(z);
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    return entries.emplace(m, std::move(e)).first->second;
  }
};

DynamicalSystem::DynamicalSystem(std::shared_ptr<const Semigroup> P, Group G, ActionKind kind)
    : P_(std::move(P)), G_(std::move(G)), kind_(kind), gauss_cache_(std::make_shared<GaussTransversalCache>()) {}

DynamicalSystem DynamicalSystem::int_mult(Semigroup P, std::int64_t modulus) {
  if (P.family() != SemigroupFamily::Integer) {
    throw RegistrationError("int-mult needs a semigroup of integers", json{{"semigroup", P.name()}});
  }
  auto sp = std::make_shared<const Semigroup>(std::move(P));
  return DynamicalSystem(sp, modulus == 0 ? Group::integers() : Group::cyclic(modulus), ActionKind::IntMult);
}

DynamicalSystem DynamicalSystem::gauss_mult(Semigroup P) {
  if (P.family() != SemigroupFamily::Integer && P.family() != SemigroupFamily::Gaussian) {
    throw RegistrationError("gauss-mult needs a semigroup of (Gaussian) integers", json{{"semigroup", P.name()}});
  }
  auto sp = std::make_shared<const Semigroup>(std::move(P));
  return DynamicalSystem(sp, Group::gaussian(), ActionKind::GaussMult);
}

DynamicalSystem DynamicalSystem::shift(Semigroup P, std::int64_t base_order) {
  auto sp = std::make_shared<const Semigroup>(std::move(P));
  return DynamicalSystem(sp, Group::shift(sp, base_order), ActionKind::Shift);
}

DynamicalSystem DynamicalSystem::trivial(Semigroup P) {
  auto sp = std::make_shared<const Semigroup>(std::move(P));
  return DynamicalSystem(sp, Group::trivial(), ActionKind::Trivial);
}

std::string DynamicalSystem::name() const {
  switch (kind_) {
    case ActionKind::IntMult:
    case ActionKind::GaussMult:
      return "(" + G_.name() + ", " + P_->name() + ", ·)";
    case ActionKind::Shift:
      return "(" + G_.name() + ", " + P_->name() + ", shift)";
    case ActionKind::Trivial:
      return "({1}, " + P_->name() + ", id)";
  }
  return {};
}

json DynamicalSystem::describe() const {
  static const char* kinds[] = {"int-mult", "gauss-mult", "shift", "trivial-group"};
  return json{{"kind", kinds[static_cast<int>(kind_)]},
              {"name", name()},
              {"group", G_.describe()},
              {"semigroup", P_->describe()}};
}

GroupElem DynamicalSystem::apply_endo(const SgElem& p, const GroupElem& g) const {
  P_->check(p);
  switch (kind_) {
    case ActionKind::IntMult: {
      const std::int64_t v = P_->int_value(p);
      if (G_.family() == GroupFamily::Cyclic) {
        const std::int64_t n = G_.modulus();
        return GroupElem::integer(floor_mod(checked_mul(floor_mod(v, n), g.as_int()), n));
      }
      return GroupElem::integer(checked_mul(v, g.as_int()));
    }
    case ActionKind::GaussMult:
      return GroupElem::gauss(gauss_scalar(p) * g.as_gauss());
    case ActionKind::Shift: {
      std::vector<std::pair<SgElem, std::int64_t>> terms;
      for (const auto& [pos, val] : g.as_shift().terms) terms.emplace_back(P_->compose(p, pos), val);
      return G_.make_shift(std::move(terms));
    }
    case ActionKind::Trivial:
      return g;
  }
  return g;
}

std::optional<GroupElem> DynamicalSystem::preimage(const SgElem& p, const GroupElem& g) const {
  P_->check(p);
  switch (kind_) {
    case ActionKind::IntMult: {
      const std::int64_t v = P_->int_value(p);
      if (G_.family() == GroupFamily::Cyclic) {
        const std::int64_t n = G_.modulus();
        const std::int64_t vm = floor_mod(v, n);
        for (std::int64_t k = 0; k < n; ++k) {
          if (floor_mod(checked_mul(vm, k), n) == g.as_int()) return GroupElem::integer(k);
        }
        return std::nullopt;
      }
      if (g.as_int() % v != 0) return std::nullopt;
      return GroupElem::integer(g.as_int() / v);
    }
    case ActionKind::GaussMult: {
      auto q = exact_div(g.as_gauss(), gauss_scalar(p));
      if (!q) return std::nullopt;
      return GroupElem::gauss(*q);
    }
    case ActionKind::Shift: {
      std::vector<std::pair<SgElem, std::int64_t>> terms;
      for (const auto& [pos, val] : g.as_shift().terms) {
        auto x = P_->divides(p, pos);
        if (!x) return std::nullopt;
        terms.emplace_back(std::move(*x), val);
      }
      return G_.make_shift(std::move(terms));
    }
    case ActionKind::Trivial:
      return g;
  }
  return std::nullopt;
}

std::vector<SgElem> DynamicalSystem::complement_positions(const SgElem& p, std::size_t m) const {
  const std::optional<std::size_t> total = P_->complement_size(p);
  if (total && m > *total) m = *total;
  std::vector<SgElem> out;
  if (m == 0) return out;
  std::size_t last_ball = 0;
  for (int radius = 0;; ++radius) {
    const std::vector<SgElem> ball = P_->enumerate_ball(radius);
    out.clear();
    for (const SgElem& x : ball) {
      if (!P_->divides(p, x)) {
        out.push_back(x);
        if (out.size() == m) return out;
      }
    }
    if (radius > 0 && ball.size() == last_ball) return out;
    last_ball = ball.size();
  }
}

std::optional<std::size_t> DynamicalSystem::index(const SgElem& p) const {
  switch (kind_) {
    case ActionKind::IntMult: {
      const std::int64_t v = P_->int_value(p);
      if (G_.family() == GroupFamily::Cyclic) {
        const std::int64_t n = G_.modulus();
        const std::int64_t d = std::gcd(floor_mod(v, n), n);
        return static_cast<std::size_t>(d == 0 ? n : d);
      }
      return static_cast<std::size_t>(v < 0 ? -v : v);
    }
    case ActionKind::GaussMult:
      return static_cast<std::size_t>(gauss_scalar(p).norm());
    case ActionKind::Shift: {
      const auto m = P_->complement_size(p);
      if (!m) return std::nullopt;
      if (*m == 0) return 1;
      if (G_.base_order() == 0) return std::nullopt;
      std::size_t total = 1;
      for (std::size_t k = 0; k < *m; ++k) {
        total = static_cast<std::size_t>(checked_mul(static_cast<std::int64_t>(total), G_.base_order()));
      }
      return total;
    }
    case ActionKind::Trivial:
      return 1;
  }
  return std::nullopt;
}

Transversal DynamicalSystem::transversal(const SgElem& p) const {
  P_->check(p);
  const std::optional<std::size_t> size = index(p);
  switch (kind_) {
    case ActionKind::IntMult:
    case ActionKind::Trivial: {
      const std::size_t m = *size;
      const bool trivial = kind_ == ActionKind::Trivial;
      return Transversal(size, [trivial, m](std::size_t n) {
        std::vector<GroupElem> out;
        if (trivial) {
          if (n > 0) out.push_back(GroupElem::trivial());
          return out;
        }
        for (std::size_t t = 0; t < std::min(n, m); ++t) out.push_back(GroupElem::integer(static_cast<std::int64_t>(t)));
        return out;
      });
    }
    case ActionKind::GaussMult: {
      const Gauss m = gauss_scalar(p);
      auto cache = gauss_cache_;
      return Transversal(size, [cache, m](std::size_t n) {
        auto entry = cache->get(m);
        std::vector<GroupElem> out;
        for (std::size_t i = 0; i < std::min(n, entry->reps.size()); ++i) out.push_back(GroupElem::gauss(entry->reps[i]));
        return out;
      });
    }
    case ActionKind::Shift: {
      return Transversal(size, [self = *this, p](std::size_t n) {
        auto positions = [&self, &p](std::size_t m) { return self.complement_positions(p, m); };
        const auto fns = enumerate_finitely_supported(positions, self.G().base_order(), n);
        std::size_t need = 0;
        for (const auto& f : fns) {
          for (const auto& t : f) need = std::max(need, t.first + 1);
        }
        const std::vector<SgElem> pos = self.complement_positions(p, need);
        std::vector<GroupElem> out;
        for (const auto& f : fns) {
          std::vector<std::pair<SgElem, std::int64_t>> terms;
          for (const auto& [i, v] : f) terms.emplace_back(pos[i], v);
          out.push_back(self.G().make_shift(std::move(terms)));
        }
        return out;
      });
    }
  }
  throw StructuralError("unknown action");
}

std::pair<GroupElem, GroupElem> DynamicalSystem::canon_rep(const SgElem& p, const GroupElem& g) const {
  P_->check(p);
  switch (kind_) {
    case ActionKind::IntMult: {
      const std::int64_t v = P_->int_value(p);
      if (G_.family() == GroupFamily::Cyclic) {
        const auto d = static_cast<std::int64_t>(*index(p));
        const std::int64_t t = floor_mod(g.as_int(), d);
        const GroupElem rest = GroupElem::integer(floor_mod(g.as_int() - t, G_.modulus()));
        auto k = preimage(p, rest);
        return {GroupElem::integer(t), *k};
      }
      const std::int64_t m = v < 0 ? -v : v;
      const std::int64_t t = floor_mod(g.as_int(), m);
      return {GroupElem::integer(t), GroupElem::integer((g.as_int() - t) / v)};
    }
    case ActionKind::GaussMult: {
      const Gauss m = gauss_scalar(p);
      auto entry = gauss_cache_->get(m);
      const Gauss t = entry->reps.at(entry->by_key.at(gauss_residue_key(g.as_gauss(), m)));
      const auto k = exact_div(g.as_gauss() - t, m);
      return {GroupElem::gauss(t), GroupElem::gauss(*k)};
    }
    case ActionKind::Shift: {
      std::vector<std::pair<SgElem, std::int64_t>> outside, inside;
      for (const auto& [pos, val] : g.as_shift().terms) {
        if (auto x = P_->divides(p, pos)) {
          inside.emplace_back(std::move(*x), val);
        } else {
          outside.emplace_back(pos, val);
        }
      }
      return {G_.make_shift(std::move(outside)), G_.make_shift(std::move(inside))};
    }
    case ActionKind::Trivial:
      return {g, g};
  }
  throw StructuralError("unknown action");
}

std::optional<std::pair<GroupElem, GroupElem>> DynamicalSystem::solve_raw(const SgElem& p, const SgElem& q,
                                                                        const GroupElem& x) const {
  switch (kind_) {
    case ActionKind::IntMult: {
      const std::int64_t a = P_->int_value(p);
      const std::int64_t b = P_->int_value(q);
      if (G_.family() == GroupFamily::Cyclic) {
        const std::int64_t n = G_.modulus();
        for (std::int64_t k = 0; k < n; ++k) {
          const std::int64_t need = floor_mod(checked_mul(floor_mod(a, n), k) - x.as_int(), n);
          if (auto l = preimage(q, GroupElem::integer(need))) return std::make_pair(GroupElem::integer(k), *l);
        }
        return std::nullopt;
      }
      // a k - b l = x
      const IntXgcd e = xgcd(a, b);
      if (x.as_int() % e.d != 0) return std::nullopt;
      const std::int64_t f = x.as_int() / e.d;
      return std::make_pair(GroupElem::integer(checked_mul(e.x, f)), GroupElem::integer(checked_neg(checked_mul(e.y, f))));
    }
    case ActionKind::GaussMult: {
      const Gauss a = gauss_scalar(p);
      const Gauss b = gauss_scalar(q);
      const GaussXgcd e = gauss_xgcd(a, b);
      auto f = exact_div(x.as_gauss(), e.d);
      if (!f) return std::nullopt;
      return std::make_pair(GroupElem::gauss(e.x * *f), GroupElem::gauss(-(e.y * *f)));
    }
    case ActionKind::Shift: {
      // k carries x on pP; l^-1 carries x on qP outside pP.
      std::vector<std::pair<SgElem, std::int64_t>> k_terms, l_terms;
      for (const auto& [pos, val] : x.as_shift().terms) {
        if (auto y = P_->divides(p, pos)) {
          k_terms.emplace_back(std::move(*y), val);
        } else if (auto z = P_->divides(q, pos)) {
          l_terms.emplace_back(std::move(*z), checked_neg(val));
        } else {
          return std::nullopt;
        }
      }
      return std::make_pair(G_.make_shift(std::move(k_terms)), G_.make_shift(std::move(l_terms)));
    }
    case ActionKind::Trivial:
      return std::make_pair(G_.identity(), G_.identity());
  }
  return std::nullopt;
}

std::optional<std::pair<GroupElem, GroupElem>> DynamicalSystem::solve_double(const SgElem& p, const SgElem& q,
                                                                           const GroupElem& x) const {
  P_->check(p);
  P_->check(q);
  auto sol = solve_raw(p, q, x);
  if (!sol) return std::nullopt;
  const RightLcmOutcome lcm = P_->right_lcm(p, q);
  if (!lcm) return sol;
  // Move l into T_{q'}: l = t theta_{q'}(m) and k absorbs theta_{p'}(m)^-1,
  // which leaves theta_p(k) theta_q(l)^-1 unchanged since pp' = qq'.
  auto [t, m] = canon_rep(lcm->q_comp, sol->second);
  GroupElem k = G_.op(sol->first, G_.inverse(apply_endo(lcm->p_comp, m)));
  return std::make_pair(std::move(k), std::move(t));
}

std::vector<GroupElem> DynamicalSystem::sample_group(std::size_t n, std::uint64_t seed) const {
  std::vector<GroupElem> out = G_.small_elements((n + 1) / 2);
  Rng rng(seed);
  std::set<GroupElem> seen(out.begin(), out.end());
  for (std::size_t attempts = 0; out.size() < n && attempts < 20 * n; ++attempts) {
    GroupElem g = G_.random(rng);
    if (seen.insert(g).second) out.push_back(std::move(g));
  }
  return out;
}

Report DynamicalSystem::verify_axioms(const SampleSpec& spec) const {
  Report rep("dynamics-axioms", spec.to_json());
  rep.note("system", describe());
  const std::vector<SgElem> ball = P_->enumerate_ball(spec.p_radius);
  const std::vector<GroupElem> gs = sample_group(spec.g_samples, spec.seed);
  const Semigroup& P = *P_;
  auto pj = [&](const SgElem& p) { return P.to_json(p); };
  auto gj = [&](const GroupElem& g) { return G_.to_json(g); };

  for (const GroupElem& g : gs) {
    rep.record("identity_acts_trivially", apply_endo(P.identity(), g) == g,
               [&] { return json{{"g", gj(g)}}; });
  }
  for (const SgElem& p : ball) {
    for (const SgElem& q : ball) {
      const SgElem pq = P.compose(p, q);
      for (const GroupElem& g : gs) {
        const GroupElem lhs = apply_endo(p, apply_endo(q, g));
        const GroupElem rhs = apply_endo(pq, g);
        rep.record("action_law", lhs == rhs, [&] {
          return json{{"p", pj(p)}, {"q", pj(q)}, {"g", gj(g)}, {"theta_p_theta_q", gj(lhs)}, {"theta_pq", gj(rhs)}};
        });
      }
    }
  }
  const std::size_t pair_limit = std::min<std::size_t>(gs.size(), 12);
  for (const SgElem& p : ball) {
    for (const GroupElem& g : gs) {
      const GroupElem img = apply_endo(p, g);
      rep.record("injectivity", !(G_.is_identity(img) && !G_.is_identity(g)),
                 [&] { return json{{"p", pj(p)}, {"g", gj(g)}, {"image", gj(img)}}; });
    }
    for (std::size_t i = 0; i < pair_limit; ++i) {
      for (std::size_t j = 0; j < pair_limit; ++j) {
        const GroupElem lhs = apply_endo(p, G_.op(gs[i], gs[j]));
        const GroupElem rhs = G_.op(apply_endo(p, gs[i]), apply_endo(p, gs[j]));
        rep.record("endomorphism", lhs == rhs,
                   [&] { return json{{"p", pj(p)}, {"g", gj(gs[i])}, {"h", gj(gs[j])}}; });
      }
    }
  }
  for (const SgElem& p : ball) {
    for (const SgElem& q : ball) {
      const RightLcmOutcome m = P.right_lcm(p, q);
      if (!m) continue;
      for (const GroupElem& g : gs) {
        for (const GroupElem& c : {g, apply_endo(p, g), apply_endo(q, g)}) {
          const bool in_both = preimage(p, c).has_value() && preimage(q, c).has_value();
          const bool in_r = preimage(m->r, c).has_value();
          rep.record("order_respecting", !in_both || in_r, [&] {
            return json{{"p", pj(p)}, {"q", pj(q)}, {"r", pj(m->r)}, {"g", gj(c)}};
          });
        }
        const GroupElem c = apply_endo(m->r, g);
        rep.record("order_respecting_converse", preimage(p, c).has_value() && preimage(q, c).has_value(),
                   [&] { return json{{"p", pj(p)}, {"q", pj(q)}, {"r", pj(m->r)}, {"g", gj(c)}}; });
      }
    }
  }
  return rep;
}

DynamicalSystem register_system(DynamicalSystem sys, const SampleSpec& spec) {
  const Report rep = sys.verify_axioms(spec);
  if (!rep.passed()) {
    std::string failed;
    const json body = rep.to_json();
    for (const json& c : body.at("checks")) {
      if (!c["passed"].get<bool>()) failed += (failed.empty() ? "" : ", ") + c["name"].get<std::string>();
    }
    throw RegistrationError(sys.name() + " fails " + failed, rep.to_json());
  }
  return sys;
}

}  // namespace lcmalg
