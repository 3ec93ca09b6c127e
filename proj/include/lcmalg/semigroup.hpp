#pragma once

// Right LCM semigroups: free abelian monoids, free monoids, multiplicative
// semigroups of integers and of Gaussian integers.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcmalg/arith.hpp"

namespace lcmalg {

using json = nlohmann::json;

/// Raised when elements of different semigroups (or malformed payloads) meet.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a semigroup or dynamical system fails registration checks.
class RegistrationError : public std::runtime_error {
 public:
  RegistrationError(const std::string& what, json witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  [[nodiscard]] const json& witness() const { return witness_; }

 private:
  json witness_;
};

enum class SemigroupFamily { FreeAbelian, FreeMonoid, Integer, Gaussian };

/// Normal form of a semigroup element.
///
/// Abelian families store the exponent of the unit-group generator in `unit`
/// and one exponent per non-unit generator in `data`.  Free monoids store the
/// word as letter indices in `data` and keep `unit` at zero.
struct SgElem {
  std::uint8_t unit = 0;
  std::vector<std::int32_t> data;

  friend auto operator<=>(const SgElem&, const SgElem&) = default;
};

struct Meet {
  SgElem r;
  SgElem p_comp;
  SgElem q_comp;
  friend bool operator==(const Meet&, const Meet&) = default;
};

/// Disjoint is represented by std::nullopt.
using RightLcmOutcome = std::optional<Meet>;

class Semigroup {
 public:
  /// N^rank under addition; rank 0 is the trivial semigroup.
  static Semigroup free_abelian(int rank);
  /// Free monoid on `letters` letters named a, b, c, ...
  static Semigroup free_monoid(int letters);
  /// Multiplicative semigroup of Z generated by the given integers; -1 is
  /// the only admissible unit.  Non-unit generators must be free, which is
  /// checked on all normal forms of total degree <= relation_search_length.
  static Semigroup integers(const std::vector<std::int64_t>& generators,
                            int relation_search_length = 6);
  /// Multiplicative semigroup of Z[i]; non-unit generators must be pairwise coprime.
  static Semigroup gaussian(const std::vector<Gauss>& generators);

  [[nodiscard]] SemigroupFamily family() const { return family_; }
  /// Number of non-unit generators (letters for free monoids).
  [[nodiscard]] int rank() const { return rank_; }
  /// Order of the (cyclic) unit group.
  [[nodiscard]] int unit_order() const { return unit_order_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] bool is_group() const { return rank_ == 0; }
  /// Free monoid on one or more letters, possibly presented as N or |p>.
  [[nodiscard]] bool is_free_monoid() const;
  [[nodiscard]] bool is_abelian() const { return family_ != SemigroupFamily::FreeMonoid || rank_ <= 1; }

  [[nodiscard]] SgElem identity() const;
  /// The i-th non-unit generator (letter i for free monoids).
  [[nodiscard]] SgElem generator(int i) const;
  /// Generator of the unit group (identity when the unit group is trivial).
  [[nodiscard]] SgElem unit_generator() const;
  /// Declared generators in declaration order, units included.
  [[nodiscard]] const std::vector<SgElem>& declared_generators() const { return declared_; }

  void check(const SgElem& p) const;

  [[nodiscard]] SgElem compose(const SgElem& p, const SgElem& q) const;
  [[nodiscard]] RightLcmOutcome right_lcm(const SgElem& p, const SgElem& q) const;
  /// x with p x = q, when q lies in pP.
  [[nodiscard]] std::optional<SgElem> divides(const SgElem& p, const SgElem& q) const;
  [[nodiscard]] std::vector<SgElem> units() const;
  [[nodiscard]] bool is_unit(const SgElem& p) const;
  [[nodiscard]] SgElem unit_inverse(const SgElem& u) const;
  /// p with its unit part removed (a generator of pP).
  [[nodiscard]] SgElem strip_unit(const SgElem& p) const;
  /// Word length over the declared non-unit generators.
  [[nodiscard]] std::int64_t degree(const SgElem& p) const;

  /// Products of at most `radius` declared generators, ordered by the radius at
  /// which they first appear and then by normal form.
  [[nodiscard]] std::vector<SgElem> enumerate_ball(int radius) const;

  /// a, b in the ball of radius `bound` with a p = b q.
  [[nodiscard]] std::optional<std::pair<SgElem, SgElem>> right_reversibility_witness(
      const SgElem& p, const SgElem& q, int bound) const;

  /// Size of P \ pP when finite.
  [[nodiscard]] std::optional<std::size_t> complement_size(const SgElem& p) const;

  /// The integer (Integer family) or Gaussian integer (both numeric families) denoted by p.
  [[nodiscard]] std::int64_t int_value(const SgElem& p) const;
  [[nodiscard]] Gauss gauss_value(const SgElem& p) const;
  /// Inverse of int_value / gauss_value.
  [[nodiscard]] std::optional<SgElem> from_int(std::int64_t v) const;
  [[nodiscard]] std::optional<SgElem> from_gauss(Gauss v) const;

  [[nodiscard]] std::string to_string(const SgElem& p) const;
  [[nodiscard]] json to_json(const SgElem& p) const;
  [[nodiscard]] SgElem from_json(const json& j) const;
  /// Accepts the same spellings as to_string plus JSON-style arrays.
  [[nodiscard]] SgElem parse(const std::string& text) const;

  [[nodiscard]] json describe() const;

  friend bool operator==(const Semigroup& a, const Semigroup& b) {
    return a.family_ == b.family_ && a.int_gens_ == b.int_gens_ && a.gauss_gens_ == b.gauss_gens_ &&
           a.rank_ == b.rank_ && a.unit_order_ == b.unit_order_;
  }

 private:
  Semigroup() = default;
  void finish_declared();

  SemigroupFamily family_ = SemigroupFamily::FreeAbelian;
  int rank_ = 0;
  int unit_order_ = 1;
  std::vector<std::int64_t> int_gens_;   // non-unit generators, Integer family
  std::vector<Gauss> gauss_gens_;        // non-unit generators, Gaussian family
  std::vector<SgElem> declared_;
  std::string name_;
};

}  // namespace lcmalg
