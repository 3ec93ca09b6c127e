#include "lcmalg/coef.hpp"

#include <nlohmann/json.hpp>

namespace lcmalg {

std::string Coef::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  if (imag.front() != '-') imag.insert(imag.begin(), '+');
  return re_.get_str() + imag;
}

void to_json(nlohmann::json& j, const Coef& c) {
  j = nlohmann::json{{"re", c.re().get_str()}, {"im", c.im().get_str()}};
}

void from_json(const nlohmann::json& j, Coef& c) {
  if (j.is_number_integer()) {
    c = Coef(j.get<long>());
    return;
  }
  mpq_class re(j.at("re").get<std::string>());
  mpq_class im(j.contains("im") ? j.at("im").get<std::string>() : std::string("0"));
  c = Coef(re, im);
}

}  // namespace lcmalg
