#pragma once

// Checked 64-bit integer arithmetic and the Gaussian integers Z[i].

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lcmalg {

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 multiplication overflow");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

/// Least nonnegative residue of a modulo m (m > 0).
inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Quotient rounded towards negative infinity (b != 0).
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Bezout data: a*x + b*y = d with d = gcd(a, b) >= 0.
struct IntXgcd {
  std::int64_t d = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
};

IntXgcd xgcd(std::int64_t a, std::int64_t b);

/// A Gaussian integer re + im*i.
struct Gauss {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend auto operator<=>(const Gauss&, const Gauss&) = default;

  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] std::int64_t norm() const {
    return checked_add(checked_mul(re, re), checked_mul(im, im));
  }
  [[nodiscard]] bool is_unit() const { return norm() == 1; }
  [[nodiscard]] Gauss conj() const { return {re, checked_neg(im)}; }
};

inline Gauss operator+(Gauss a, Gauss b) { return {checked_add(a.re, b.re), checked_add(a.im, b.im)}; }
inline Gauss operator-(Gauss a, Gauss b) { return {checked_sub(a.re, b.re), checked_sub(a.im, b.im)}; }
inline Gauss operator-(Gauss a) { return {checked_neg(a.re), checked_neg(a.im)}; }
inline Gauss operator*(Gauss a, Gauss b) {
  return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
          checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
}

/// a / b when b divides a exactly in Z[i].
std::optional<Gauss> exact_div(Gauss a, Gauss b);

/// Euclidean quotient: the Gaussian integer nearest to a / b (b != 0).
Gauss euclid_quotient(Gauss a, Gauss b);

struct GaussXgcd {
  Gauss d;
  Gauss x;
  Gauss y;
};

/// a*x + b*y = d with d a gcd of a and b, normalized to the first quadrant.
GaussXgcd gauss_xgcd(Gauss a, Gauss b);

/// The associate of a with re > 0 and im >= 0 (zero maps to zero).
Gauss first_quadrant_associate(Gauss a);

/// Integer power with overflow checks.
Gauss gauss_pow(Gauss base, std::uint32_t exp);

std::string to_string(Gauss z);

/// Parses "3", "-2", "i", "-i", "1+i", "2-3i", "4i". Throws std::invalid_argument.
Gauss parse_gauss(std::string_view text);

}  // namespace lcmalg
