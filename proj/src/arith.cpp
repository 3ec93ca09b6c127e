#include "lcmalg/arith.hpp"

#include <cctype>
#include <string>

namespace lcmalg {

IntXgcd xgcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = checked_sub(old_r, checked_mul(q, r));
    old_r = r;
    r = tmp;
    tmp = checked_sub(old_s, checked_mul(q, s));
    old_s = s;
    s = tmp;
    tmp = checked_sub(old_t, checked_mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {checked_neg(old_r), checked_neg(old_s), checked_neg(old_t)};
  return {old_r, old_s, old_t};
}

std::optional<Gauss> exact_div(Gauss a, Gauss b) {
  if (b.is_zero()) return std::nullopt;
  const Gauss num = a * b.conj();
  const std::int64_t n = b.norm();
  if (num.re % n != 0 || num.im % n != 0) return std::nullopt;
  return Gauss{num.re / n, num.im / n};
}

namespace {

// Nearest integer to num / den (den > 0), ties rounded up.
std::int64_t round_div(std::int64_t num, std::int64_t den) {
  return floor_div(checked_add(checked_mul(2, num), den), checked_mul(2, den));
}

}  // namespace

Gauss euclid_quotient(Gauss a, Gauss b) {
  if (b.is_zero()) throw std::domain_error("division by zero in Z[i]");
  const Gauss num = a * b.conj();
  const std::int64_t n = b.norm();
  return {round_div(num.re, n), round_div(num.im, n)};
}

Gauss first_quadrant_associate(Gauss a) {
  if (a.is_zero()) return a;
  Gauss u = a;
  for (int k = 0; k < 4; ++k) {
    if (u.re > 0 && u.im >= 0) return u;
    u = u * Gauss{0, 1};
  }
  return u;
}

GaussXgcd gauss_xgcd(Gauss a, Gauss b) {
  Gauss old_r = a, r = b;
  Gauss old_s{1, 0}, s{0, 0};
  Gauss old_t{0, 0}, t{1, 0};
  while (!r.is_zero()) {
    const Gauss q = euclid_quotient(old_r, r);
    Gauss tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r.is_zero()) return {old_r, old_s, old_t};
  // Rotate (d, x, y) by the unit that brings d into the first quadrant.
  Gauss unit{1, 0};
  for (int k = 0; k < 4; ++k) {
    const Gauss cand = old_r * unit;
    if (cand.re > 0 && cand.im >= 0) break;
    unit = unit * Gauss{0, 1};
  }
  return {old_r * unit, old_s * unit, old_t * unit};
}

Gauss gauss_pow(Gauss base, std::uint32_t exp) {
  Gauss result{1, 0};
  while (exp > 0) {
    if (exp & 1U) result = result * base;
    exp >>= 1U;
    if (exp > 0) base = base * base;
  }
  return result;
}

std::string to_string(Gauss z) {
  if (z.im == 0) return std::to_string(z.re);
  std::string imag;
  if (z.im == 1) {
    imag = "i";
  } else if (z.im == -1) {
    imag = "-i";
  } else {
    imag = std::to_string(z.im) + "i";
  }
  if (z.re == 0) return imag;
  if (imag.front() != '-') imag.insert(imag.begin(), '+');
  return std::to_string(z.re) + imag;
}

Gauss parse_gauss(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty Gaussian integer");
  Gauss z;
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (any) {
      throw std::invalid_argument("malformed Gaussian integer: " + s);
    }
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    const std::string digits = s.substr(start, pos - start);
    const bool imaginary = pos < s.size() && s[pos] == 'i';
    if (imaginary) ++pos;
    if (digits.empty() && !imaginary) throw std::invalid_argument("malformed Gaussian integer: " + s);
    const std::int64_t magnitude = digits.empty() ? 1 : std::stoll(digits);
    const std::int64_t value = sign * magnitude;
    if (imaginary) {
      z.im = checked_add(z.im, value);
    } else {
      z.re = checked_add(z.re, value);
    }
    any = true;
  }
  return z;
}

}  // namespace lcmalg
