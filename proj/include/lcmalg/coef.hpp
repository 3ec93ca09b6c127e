#pragma once

// Exact rational-complex scalars: re + im*i with arbitrary-precision rationals.

#include <gmpxx.h>

#include <nlohmann/json_fwd.hpp>
#include <string>

namespace lcmalg {

class Coef {
 public:
  Coef() = default;
  Coef(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Coef(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Coef i() { return Coef(0, 1); }

  [[nodiscard]] const mpq_class& re() const { return re_; }
  [[nodiscard]] const mpq_class& im() const { return im_; }
  [[nodiscard]] bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  [[nodiscard]] Coef conj() const { return {re_, -im_}; }

  Coef& operator+=(const Coef& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Coef& operator-=(const Coef& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Coef& operator*=(const Coef& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }

  friend Coef operator+(Coef a, const Coef& b) { return a += b; }
  friend Coef operator-(Coef a, const Coef& b) { return a -= b; }
  friend Coef operator*(Coef a, const Coef& b) { return a *= b; }
  friend Coef operator-(const Coef& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const Coef& a, const Coef& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// "3", "1/2", "2-i", "1/3+2/5i".
  [[nodiscard]] std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

void to_json(nlohmann::json& j, const Coef& c);
void from_json(const nlohmann::json& j, Coef& c);

}  // namespace lcmalg
