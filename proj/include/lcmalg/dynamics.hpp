#pragma once

// Algebraic dynamical systems (G, P, theta): a right LCM semigroup P acting
// on a group G by injective endomorphisms that respect the order on P.

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcmalg/group.hpp"
#include "lcmalg/report.hpp"
#include "lcmalg/semigroup.hpp"

namespace lcmalg {

/// Raised when an infinite transversal is asked to materialize completely.
class TruncationRequired : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A fixed transversal of G / theta_p(G), enumerated on demand.
class Transversal {
 public:
  using PrefixFn = std::function<std::vector<GroupElem>(std::size_t)>;
  Transversal(std::optional<std::size_t> size, PrefixFn prefix) : size_(size), prefix_(std::move(prefix)) {}

  /// Number of cosets, absent when infinite.
  [[nodiscard]] std::optional<std::size_t> size() const { return size_; }
  [[nodiscard]] bool finite() const { return size_.has_value(); }
  /// The first n representatives (all of them if there are fewer).
  [[nodiscard]] std::vector<GroupElem> prefix(std::size_t n) const;
  [[nodiscard]] std::vector<GroupElem> materialize() const;

 private:
  std::optional<std::size_t> size_;
  PrefixFn prefix_;
};

enum class ActionKind { IntMult, GaussMult, Shift, Trivial };

struct GaussTransversalCache;

class DynamicalSystem {
 public:
  /// theta_p(g) = p g on Z (modulus 0) or Z/modulus; P must be a semigroup of integers.
  static DynamicalSystem int_mult(Semigroup P, std::int64_t modulus = 0);
  /// theta_p(g) = p g on Z[i]; P a semigroup of integers or Gaussian integers.
  static DynamicalSystem gauss_mult(Semigroup P);
  /// G = direct sum over P of G0 (Z/base_order, or Z when base_order = 0),
  /// (theta_p f)(r) = f(p^-1 r) on pP and 0 elsewhere.
  static DynamicalSystem shift(Semigroup P, std::int64_t base_order);
  /// G trivial; the system carries only the semigroup.
  static DynamicalSystem trivial(Semigroup P);

  [[nodiscard]] const Semigroup& P() const { return *P_; }
  [[nodiscard]] const Group& G() const { return G_; }
  [[nodiscard]] ActionKind kind() const { return kind_; }
  [[nodiscard]] std::string name() const;
  [[nodiscard]] json describe() const;

  [[nodiscard]] GroupElem apply_endo(const SgElem& p, const GroupElem& g) const;
  /// g0 with theta_p(g0) = g, when g lies in theta_p(G).
  [[nodiscard]] std::optional<GroupElem> preimage(const SgElem& p, const GroupElem& g) const;
  [[nodiscard]] Transversal transversal(const SgElem& p) const;
  /// (t, k) with t in T_p and g = t theta_p(k).
  [[nodiscard]] std::pair<GroupElem, GroupElem> canon_rep(const SgElem& p, const GroupElem& g) const;
  /// (k, l) with x = theta_p(k) theta_q(l)^-1, when x lies in theta_p(G) theta_q(G).
  [[nodiscard]] std::optional<std::pair<GroupElem, GroupElem>> solve_double(const SgElem& p, const SgElem& q,
                                                                          const GroupElem& x) const;
  /// Index [G : theta_p(G)], absent when infinite.
  [[nodiscard]] std::optional<std::size_t> index(const SgElem& p) const;
  /// Whether C*(G) acts by compact operators on the fibre over p.
  [[nodiscard]] bool left_action_compact(const SgElem& p) const { return index(p).has_value(); }

  /// Samples the action law, injectivity, the endomorphism property and the
  /// order condition theta_p(G) n theta_q(G) = theta_r(G).
  [[nodiscard]] Report verify_axioms(const SampleSpec& spec) const;

  /// Group samples used by verifiers: small elements followed by seeded random ones.
  [[nodiscard]] std::vector<GroupElem> sample_group(std::size_t n, std::uint64_t seed) const;

  /// Positions of P \ pP in ball order (shift systems); at most m of them.
  [[nodiscard]] std::vector<SgElem> complement_positions(const SgElem& p, std::size_t m) const;

 private:
  DynamicalSystem(std::shared_ptr<const Semigroup> P, Group G, ActionKind kind);

  [[nodiscard]] std::optional<std::pair<GroupElem, GroupElem>> solve_raw(const SgElem& p, const SgElem& q,
                                                                       const GroupElem& x) const;
  [[nodiscard]] Gauss gauss_scalar(const SgElem& p) const { return P_->gauss_value(p); }

  std::shared_ptr<const Semigroup> P_;
  Group G_;
  ActionKind kind_;
  std::shared_ptr<GaussTransversalCache> gauss_cache_;
};

/// Verifies the axioms and returns the system, or throws RegistrationError
/// carrying the failing report.
DynamicalSystem register_system(DynamicalSystem sys, const SampleSpec& spec = {});

/// Residue-class key of z modulo the ideal (m) in Z[i] (Hermite normal form reduction).
std::pair<std::int64_t, std::int64_t> gauss_residue_key(Gauss z, Gauss m);

}  // namespace lcmalg
