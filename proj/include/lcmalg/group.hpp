#pragma once

// Countable abelian groups acted on by the built-in dynamical systems:
// the trivial group, Z, Z[i], Z/n and the shift groups (direct sums of
// copies of Z/n or Z indexed by a semigroup).

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lcmalg/arith.hpp"
#include "lcmalg/semigroup.hpp"

namespace lcmalg {

/// Finitely supported function P -> G0, sorted by position, no zero values.
struct ShiftFn {
  std::vector<std::pair<SgElem, std::int64_t>> terms;
  friend auto operator<=>(const ShiftFn&, const ShiftFn&) = default;
};

struct GroupElem {
  std::variant<std::monostate, std::int64_t, Gauss, ShiftFn> v;

  static GroupElem trivial() { return GroupElem{}; }
  static GroupElem integer(std::int64_t n) { return GroupElem{n}; }
  static GroupElem gauss(Gauss z) { return GroupElem{z}; }
  static GroupElem shift(ShiftFn f) { return GroupElem{std::move(f)}; }

  [[nodiscard]] std::int64_t as_int() const { return std::get<std::int64_t>(v); }
  [[nodiscard]] const Gauss& as_gauss() const { return std::get<Gauss>(v); }
  [[nodiscard]] const ShiftFn& as_shift() const { return std::get<ShiftFn>(v); }

  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
};

enum class GroupFamily { Trivial, Integers, Gaussian, Cyclic, Shift };

using Rng = std::mt19937_64;

class Group {
 public:
  static Group trivial();
  static Group integers();
  static Group gaussian();
  static Group cyclic(std::int64_t order);
  /// Direct sum of copies of G0 indexed by `positions`; base_order 0 means G0 = Z.
  static Group shift(std::shared_ptr<const Semigroup> positions, std::int64_t base_order);

  [[nodiscard]] GroupFamily family() const { return family_; }
  [[nodiscard]] std::int64_t modulus() const { return modulus_; }
  [[nodiscard]] std::int64_t base_order() const { return modulus_; }
  [[nodiscard]] const Semigroup& positions() const { return *positions_; }
  [[nodiscard]] std::optional<std::int64_t> order() const;
  [[nodiscard]] const std::string& name() const { return name_; }

  [[nodiscard]] GroupElem identity() const;
  [[nodiscard]] bool is_identity(const GroupElem& g) const { return g == identity(); }
  [[nodiscard]] GroupElem op(const GroupElem& a, const GroupElem& b) const;
  [[nodiscard]] GroupElem inverse(const GroupElem& a) const;
  /// a^-1 b
  [[nodiscard]] GroupElem left_quotient(const GroupElem& a, const GroupElem& b) const {
    return op(inverse(a), b);
  }
  /// g^n for an integer n (the group is abelian, written additively inside).
  [[nodiscard]] GroupElem power(const GroupElem& g, std::int64_t n) const;
  void check(const GroupElem& g) const;

  /// The first n elements of a fixed enumeration of G (fewer if G is smaller).
  [[nodiscard]] std::vector<GroupElem> small_elements(std::size_t n) const;
  [[nodiscard]] GroupElem random(Rng& rng) const;

  [[nodiscard]] std::string to_string(const GroupElem& g) const;
  [[nodiscard]] json to_json(const GroupElem& g) const;
  [[nodiscard]] GroupElem from_json(const json& j) const;
  [[nodiscard]] GroupElem parse(const std::string& text) const;
  [[nodiscard]] json describe() const;

  /// Builds a shift element from (position, value) pairs, normalizing values.
  [[nodiscard]] GroupElem make_shift(std::vector<std::pair<SgElem, std::int64_t>> terms) const;
  /// Value of a shift element at a position.
  [[nodiscard]] std::int64_t shift_value(const GroupElem& f, const SgElem& pos) const;
  [[nodiscard]] std::int64_t normalize_base(std::int64_t v) const;

 private:
  Group() = default;

  GroupFamily family_ = GroupFamily::Trivial;
  std::int64_t modulus_ = 0;
  std::shared_ptr<const Semigroup> positions_;
  std::string name_;
};

/// Uniform value in [0, n) from the generator; kept explicit so that samples do
/// not depend on the standard library's distribution implementations.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

/// Lists finitely supported functions on a sequence of positions in level order.
///
/// Level L collects the functions whose support lies in the first L positions
/// and that are not of smaller level; for G0 = Z a function with a value of
/// absolute value L also has level at least L.  Inside a level the order is by
/// support size, then by the positions used, then by the values (G0 ordered as
/// 1, -1, 2, -2, ... for Z and 1, ..., n-1 for Z/n).  `positions(m)` must return
/// the first m positions (fewer only when the sequence is exhausted).
std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> enumerate_finitely_supported(
    const std::function<std::vector<SgElem>(std::size_t)>& positions, std::int64_t base_order, std::size_t n);

}  // namespace lcmalg
