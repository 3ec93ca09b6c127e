#include "lcmalg/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace lcmalg {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::int64_t int_pow(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

// Calls f on every exponent vector of the given length with total degree <= bound.
template <class F>
void for_each_exponent(int length, int bound, F&& f) {
  std::vector<std::int32_t> e(static_cast<std::size_t>(length), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == length) {
      f(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
    e[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, bound);
}

Gauss unit_power(int order, int u) {
  // The unit-group generator is -1 for order 2 and i for order 4.
  const Gauss zeta = order == 4 ? Gauss{0, 1} : Gauss{-1, 0};
  Gauss r{1, 0};
  for (int k = 0; k < u; ++k) r = r * zeta;
  return r;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::string s = trim(text);
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) s = s.substr(1);
  if (!s.empty() && (s.back() == ']' || s.back() == ')')) s.pop_back();
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::size_t pos = 0;
    const long long v = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("not an integer: " + item);
    out.push_back(v);
  }
  return out;
}

}  // namespace

Semigroup Semigroup::free_abelian(int rank) {
  if (rank < 0) throw RegistrationError("negative rank", json{{"rank", rank}});
  Semigroup s;
  s.family_ = SemigroupFamily::FreeAbelian;
  s.rank_ = rank;
  if (rank == 0) {
    s.name_ = "{1}";
  } else if (rank == 1) {
    s.name_ = "ℕ";
  } else {
    s.name_ = "ℕ^" + std::to_string(rank);
  }
  s.finish_declared();
  return s;
}

Semigroup Semigroup::free_monoid(int letters) {
  if (letters < 1 || letters > 26) {
    throw RegistrationError("free monoid needs between 1 and 26 letters", json{{"letters", letters}});
  }
  Semigroup s;
  s.family_ = SemigroupFamily::FreeMonoid;
  s.rank_ = letters;
  s.name_ = "𝔽_" + std::to_string(letters) + "^+";
  s.finish_declared();
  return s;
}

Semigroup Semigroup::integers(const std::vector<std::int64_t>& generators, int relation_search_length) {
  Semigroup s;
  s.family_ = SemigroupFamily::Integer;
  bool has_minus_one = false;
  for (std::int64_t g : generators) {
    if (g == 0 || g == 1) {
      throw RegistrationError("generator " + std::to_string(g) + " is not admissible",
                              json{{"generator", g}});
    }
    if (g == -1) {
      has_minus_one = true;
      continue;
    }
    if (std::find(s.int_gens_.begin(), s.int_gens_.end(), g) != s.int_gens_.end()) {
      throw RegistrationError("repeated generator", json{{"generator", g}});
    }
    s.int_gens_.push_back(g);
  }
  s.rank_ = static_cast<int>(s.int_gens_.size());
  s.unit_order_ = has_minus_one ? 2 : 1;

  // Freeness up to units: distinct normal forms of bounded degree have distinct values.
  std::map<std::int64_t, SgElem> seen;
  for_each_exponent(s.rank_, relation_search_length, [&](const std::vector<std::int32_t>& e) {
    for (int u = 0; u < s.unit_order_; ++u) {
      SgElem p{static_cast<std::uint8_t>(u), e};
      std::int64_t v = 0;
      try {
        v = s.int_value(p);
      } catch (const ArithmeticOverflow&) {
        continue;
      }
      auto [it, fresh] = seen.emplace(v, p);
      if (!fresh) {
        throw RegistrationError(
            "generators satisfy a relation",
            json{{"value", v}, {"first", json{{"unit", it->second.unit}, {"exponents", it->second.data}}},
                 {"second", json{{"unit", p.unit}, {"exponents", p.data}}}});
      }
    }
  });

  s.name_ = "|";
  for (std::size_t i = 0; i < generators.size(); ++i) s.name_ += (i ? "," : "") + std::to_string(generators[i]);
  s.name_ += "⟩";
  if (generators.empty()) s.name_ = "{1}";
  s.finish_declared();
  // Keep -1 in its declared position.
  if (has_minus_one) {
    s.declared_.clear();
    std::size_t next = 0;
    for (std::int64_t g : generators) {
      if (g == -1) {
        s.declared_.push_back(s.unit_generator());
      } else {
        s.declared_.push_back(s.generator(static_cast<int>(next++)));
      }
    }
  }
  return s;
}

Semigroup Semigroup::gaussian(const std::vector<Gauss>& generators) {
  Semigroup s;
  s.family_ = SemigroupFamily::Gaussian;
  std::vector<Gauss> unit_gens;
  for (const Gauss& g : generators) {
    if (g.is_zero() || g == Gauss{1, 0}) {
      throw RegistrationError("generator " + lcmalg::to_string(g) + " is not admissible",
                              json{{"generator", lcmalg::to_string(g)}});
    }
    if (g.is_unit()) {
      unit_gens.push_back(g);
    } else {
      s.gauss_gens_.push_back(g);
    }
  }
  for (std::size_t i = 0; i < s.gauss_gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < s.gauss_gens_.size(); ++j) {
      const GaussXgcd x = gauss_xgcd(s.gauss_gens_[i], s.gauss_gens_[j]);
      if (!x.d.is_unit()) {
        throw RegistrationError("generators are not pairwise coprime",
                                json{{"first", lcmalg::to_string(s.gauss_gens_[i])},
                                     {"second", lcmalg::to_string(s.gauss_gens_[j])},
                                     {"gcd", lcmalg::to_string(x.d)}});
      }
    }
  }
  s.unit_order_ = 1;
  for (const Gauss& u : unit_gens) {
    if (u.im != 0) {
      s.unit_order_ = 4;
    } else if (s.unit_order_ == 1) {
      s.unit_order_ = 2;
    }
  }
  s.rank_ = static_cast<int>(s.gauss_gens_.size());
  s.name_ = "|";
  for (std::size_t i = 0; i < generators.size(); ++i) s.name_ += (i ? "," : "") + lcmalg::to_string(generators[i]);
  s.name_ += "⟩";
  s.finish_declared();
  s.declared_.clear();
  std::size_t next = 0;
  for (const Gauss& g : generators) {
    if (g.is_unit()) {
      s.declared_.push_back(*s.from_gauss(g));
    } else {
      s.declared_.push_back(s.generator(static_cast<int>(next++)));
    }
  }
  return s;
}

void Semigroup::finish_declared() {
  declared_.clear();
  if (unit_order_ > 1) declared_.push_back(unit_generator());
  for (int i = 0; i < rank_; ++i) declared_.push_back(generator(i));
}

bool Semigroup::is_free_monoid() const {
  if (family_ == SemigroupFamily::FreeMonoid) return true;
  return rank_ == 1 && unit_order_ == 1;
}

SgElem Semigroup::identity() const {
  SgElem e;
  if (family_ != SemigroupFamily::FreeMonoid) e.data.assign(static_cast<std::size_t>(rank_), 0);
  return e;
}

SgElem Semigroup::generator(int i) const {
  if (i < 0 || i >= rank_) throw StructuralError("generator index out of range");
  SgElem e = identity();
  if (family_ == SemigroupFamily::FreeMonoid) {
    e.data.push_back(i);
  } else {
    e.data[static_cast<std::size_t>(i)] = 1;
  }
  return e;
}

SgElem Semigroup::unit_generator() const {
  SgElem e = identity();
  if (unit_order_ > 1) e.unit = 1;
  return e;
}

void Semigroup::check(const SgElem& p) const {
  if (p.unit >= unit_order_) throw StructuralError("unit part outside the unit group of " + name_);
  if (family_ == SemigroupFamily::FreeMonoid) {
    for (std::int32_t c : p.data) {
      if (c < 0 || c >= rank_) throw StructuralError("letter outside the alphabet of " + name_);
    }
    return;
  }
  if (static_cast<int>(p.data.size()) != rank_) throw StructuralError("element does not belong to " + name_);
  for (std::int32_t c : p.data) {
    if (c < 0) throw StructuralError("negative exponent in element of " + name_);
  }
}

SgElem Semigroup::compose(const SgElem& p, const SgElem& q) const {
  check(p);
  check(q);
  SgElem r = p;
  if (family_ == SemigroupFamily::FreeMonoid) {
    r.data.insert(r.data.end(), q.data.begin(), q.data.end());
    return r;
  }
  r.unit = static_cast<std::uint8_t>((p.unit + q.unit) % unit_order_);
  for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] += q.data[i];
  return r;
}

RightLcmOutcome Semigroup::right_lcm(const SgElem& p, const SgElem& q) const {
  check(p);
  check(q);
  if (family_ == SemigroupFamily::FreeMonoid) {
    const bool p_shorter = p.data.size() <= q.data.size();
    const SgElem& s = p_shorter ? p : q;
    const SgElem& l = p_shorter ? q : p;
    if (!std::equal(s.data.begin(), s.data.end(), l.data.begin())) return std::nullopt;
    SgElem rest;
    rest.data.assign(l.data.begin() + static_cast<std::ptrdiff_t>(s.data.size()), l.data.end());
    if (p_shorter) return Meet{l, rest, identity()};
    return Meet{l, identity(), rest};
  }
  Meet m{identity(), identity(), identity()};
  for (std::size_t i = 0; i < p.data.size(); ++i) {
    const std::int32_t mx = std::max(p.data[i], q.data[i]);
    m.r.data[i] = mx;
    m.p_comp.data[i] = mx - p.data[i];
    m.q_comp.data[i] = mx - q.data[i];
  }
  m.p_comp.unit = static_cast<std::uint8_t>((unit_order_ - p.unit) % unit_order_);
  m.q_comp.unit = static_cast<std::uint8_t>((unit_order_ - q.unit) % unit_order_);
  return m;
}

std::optional<SgElem> Semigroup::divides(const SgElem& p, const SgElem& q) const {
  check(p);
  check(q);
  if (family_ == SemigroupFamily::FreeMonoid) {
    if (p.data.size() > q.data.size() || !std::equal(p.data.begin(), p.data.end(), q.data.begin())) {
      return std::nullopt;
    }
    SgElem x;
    x.data.assign(q.data.begin() + static_cast<std::ptrdiff_t>(p.data.size()), q.data.end());
    return x;
  }
  SgElem x = identity();
  for (std::size_t i = 0; i < p.data.size(); ++i) {
    if (q.data[i] < p.data[i]) return std::nullopt;
    x.data[i] = q.data[i] - p.data[i];
  }
  x.unit = static_cast<std::uint8_t>((q.unit + unit_order_ - p.unit) % unit_order_);
  return x;
}

std::vector<SgElem> Semigroup::units() const {
  std::vector<SgElem> out;
  for (int u = 0; u < unit_order_; ++u) {
    SgElem e = identity();
    e.unit = static_cast<std::uint8_t>(u);
    out.push_back(e);
  }
  return out;
}

bool Semigroup::is_unit(const SgElem& p) const {
  check(p);
  if (family_ == SemigroupFamily::FreeMonoid) return p.data.empty();
  return std::all_of(p.data.begin(), p.data.end(), [](std::int32_t c) { return c == 0; });
}

SgElem Semigroup::unit_inverse(const SgElem& u) const {
  if (!is_unit(u)) throw StructuralError("not a unit");
  SgElem r = identity();
  r.unit = static_cast<std::uint8_t>((unit_order_ - u.unit) % unit_order_);
  return r;
}

SgElem Semigroup::strip_unit(const SgElem& p) const {
  SgElem r = p;
  r.unit = 0;
  return r;
}

std::int64_t Semigroup::degree(const SgElem& p) const {
  if (family_ == SemigroupFamily::FreeMonoid) return static_cast<std::int64_t>(p.data.size());
  std::int64_t d = 0;
  for (std::int32_t c : p.data) d += c;
  return d;
}

std::vector<SgElem> Semigroup::enumerate_ball(int radius) const {
  std::vector<SgElem> out{identity()};
  std::set<SgElem> seen{identity()};
  std::vector<SgElem> shell{identity()};
  for (int k = 0; k < radius; ++k) {
    std::set<SgElem> next;
    for (const SgElem& x : shell) {
      for (const SgElem& g : declared_) {
        SgElem y = compose(x, g);
        if (!seen.count(y)) next.insert(std::move(y));
      }
    }
    if (next.empty()) break;
    shell.assign(next.begin(), next.end());
    for (const SgElem& y : shell) {
      seen.insert(y);
      out.push_back(y);
    }
  }
  return out;
}

std::optional<std::pair<SgElem, SgElem>> Semigroup::right_reversibility_witness(const SgElem& p, const SgElem& q,
                                                                                int bound) const {
  const std::vector<SgElem> ball = enumerate_ball(bound);
  std::map<SgElem, SgElem> left_multiples_of_q;
  for (const SgElem& b : ball) left_multiples_of_q.emplace(compose(b, q), b);
  for (const SgElem& a : ball) {
    auto it = left_multiples_of_q.find(compose(a, p));
    if (it != left_multiples_of_q.end()) return std::make_pair(a, it->second);
  }
  return std::nullopt;
}

std::optional<std::size_t> Semigroup::complement_size(const SgElem& p) const {
  if (is_unit(p)) return 0;
  if (family_ == SemigroupFamily::FreeMonoid) {
    if (rank_ == 1) return p.data.size();
    return std::nullopt;
  }
  if (rank_ == 1) return static_cast<std::size_t>(unit_order_) * static_cast<std::size_t>(p.data[0]);
  return std::nullopt;
}

std::int64_t Semigroup::int_value(const SgElem& p) const {
  if (family_ != SemigroupFamily::Integer) throw StructuralError(name_ + " is not a semigroup of integers");
  check(p);
  std::int64_t v = p.unit == 1 ? -1 : 1;
  for (std::size_t i = 0; i < p.data.size(); ++i) v = checked_mul(v, int_pow(int_gens_[i], p.data[i]));
  return v;
}

Gauss Semigroup::gauss_value(const SgElem& p) const {
  if (family_ == SemigroupFamily::Integer) return Gauss{int_value(p), 0};
  if (family_ != SemigroupFamily::Gaussian) throw StructuralError(name_ + " is not a numeric semigroup");
  check(p);
  Gauss v = unit_power(unit_order_, p.unit);
  for (std::size_t i = 0; i < p.data.size(); ++i) {
    v = v * gauss_pow(gauss_gens_[i], static_cast<std::uint32_t>(p.data[i]));
  }
  return v;
}

std::optional<SgElem> Semigroup::from_int(std::int64_t v) const {
  if (family_ == SemigroupFamily::Gaussian) return from_gauss(Gauss{v, 0});
  if (family_ != SemigroupFamily::Integer) throw StructuralError(name_ + " is not a semigroup of integers");
  if (v == 0) return std::nullopt;
  std::optional<SgElem> found;
  SgElem cur = identity();
  auto rec = [&](auto&& self, std::size_t i, std::int64_t rest) -> void {
    if (found) return;
    if (i == int_gens_.size()) {
      if (rest != 1) return;
      for (int u = 0; u < unit_order_; ++u) {
        cur.unit = static_cast<std::uint8_t>(u);
        if (int_value(cur) == v) {
          found = cur;
          return;
        }
      }
      return;
    }
    const std::int64_t a = int_gens_[i] < 0 ? -int_gens_[i] : int_gens_[i];
    std::int64_t r = rest;
    std::int32_t e = 0;
    std::vector<std::pair<std::int32_t, std::int64_t>> options{{0, rest}};
    while (r % a == 0) {
      r /= a;
      ++e;
      options.emplace_back(e, r);
    }
    for (auto it = options.rbegin(); it != options.rend(); ++it) {
      cur.data[i] = it->first;
      self(self, i + 1, it->second);
    }
    cur.data[i] = 0;
  };
  rec(rec, 0, v < 0 ? -v : v);
  return found;
}

std::optional<SgElem> Semigroup::from_gauss(Gauss v) const {
  if (family_ == SemigroupFamily::Integer) {
    if (v.im != 0) return std::nullopt;
    return from_int(v.re);
  }
  if (family_ != SemigroupFamily::Gaussian) throw StructuralError(name_ + " is not a numeric semigroup");
  if (v.is_zero()) return std::nullopt;
  std::optional<SgElem> found;
  SgElem cur = identity();
  auto rec = [&](auto&& self, std::size_t i, Gauss rest) -> void {
    if (found) return;
    if (i == gauss_gens_.size()) {
      if (!rest.is_unit()) return;
      for (int u = 0; u < unit_order_; ++u) {
        if (unit_power(unit_order_, u) == rest) {
          cur.unit = static_cast<std::uint8_t>(u);
          found = cur;
          return;
        }
      }
      return;
    }
    std::vector<std::pair<std::int32_t, Gauss>> options{{0, rest}};
    Gauss r = rest;
    std::int32_t e = 0;
    while (auto q = exact_div(r, gauss_gens_[i])) {
      r = *q;
      ++e;
      options.emplace_back(e, r);
    }
    for (auto it = options.rbegin(); it != options.rend(); ++it) {
      cur.data[i] = it->first;
      self(self, i + 1, it->second);
    }
    cur.data[i] = 0;
  };
  rec(rec, 0, v);
  return found;
}

std::string Semigroup::to_string(const SgElem& p) const {
  switch (family_) {
    case SemigroupFamily::Integer:
      return std::to_string(int_value(p));
    case SemigroupFamily::Gaussian:
      return lcmalg::to_string(gauss_value(p));
    case SemigroupFamily::FreeMonoid: {
      if (p.data.empty()) return "ε";
      std::string w;
      for (std::int32_t c : p.data) w.push_back(static_cast<char>('a' + c));
      return w;
    }
    case SemigroupFamily::FreeAbelian: {
      if (rank_ == 1) return std::to_string(p.data[0]);
      std::string s = "[";
      for (std::size_t i = 0; i < p.data.size(); ++i) s += (i ? "," : "") + std::to_string(p.data[i]);
      return s + "]";
    }
  }
  return {};
}

json Semigroup::to_json(const SgElem& p) const {
  switch (family_) {
    case SemigroupFamily::Integer:
      return int_value(p);
    case SemigroupFamily::Gaussian: {
      const Gauss z = gauss_value(p);
      return json::array({z.re, z.im});
    }
    case SemigroupFamily::FreeMonoid:
      return p.data.empty() ? std::string{} : to_string(p);
    case SemigroupFamily::FreeAbelian:
      if (rank_ == 1) return p.data[0];
      return p.data;
  }
  return nullptr;
}

SgElem Semigroup::from_json(const json& j) const {
  if (j.is_string()) return parse(j.get<std::string>());
  switch (family_) {
    case SemigroupFamily::Integer: {
      const auto v = j.get<std::int64_t>();
      auto p = from_int(v);
      if (!p) throw std::invalid_argument(std::to_string(v) + " is not an element of " + name_);
      return *p;
    }
    case SemigroupFamily::Gaussian: {
      Gauss z;
      if (j.is_array()) {
        z = Gauss{j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()};
      } else {
        z = Gauss{j.get<std::int64_t>(), 0};
      }
      auto p = from_gauss(z);
      if (!p) throw std::invalid_argument(lcmalg::to_string(z) + " is not an element of " + name_);
      return *p;
    }
    case SemigroupFamily::FreeAbelian: {
      SgElem e = identity();
      if (j.is_array()) {
        if (static_cast<int>(j.size()) != rank_) throw std::invalid_argument("wrong number of exponents for " + name_);
        for (std::size_t i = 0; i < j.size(); ++i) e.data[i] = j.at(i).get<std::int32_t>();
      } else if (rank_ == 1) {
        e.data[0] = j.get<std::int32_t>();
      } else {
        throw std::invalid_argument("expected an exponent array for " + name_);
      }
      check(e);
      return e;
    }
    case SemigroupFamily::FreeMonoid:
      break;
  }
  throw std::invalid_argument("cannot read an element of " + name_ + " from " + j.dump());
}

SgElem Semigroup::parse(const std::string& text) const {
  const std::string s = trim(text);
  switch (family_) {
    case SemigroupFamily::Integer: {
      std::size_t pos = 0;
      const long long v = std::stoll(s, &pos);
      if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
      auto p = from_int(v);
      if (!p) throw std::invalid_argument(s + " is not an element of " + name_);
      return *p;
    }
    case SemigroupFamily::Gaussian: {
      Gauss z;
      if (!s.empty() && s.front() == '[') {
        const auto v = parse_int_list(s);
        if (v.size() != 2) throw std::invalid_argument("expected [re,im]: " + s);
        z = Gauss{v[0], v[1]};
      } else {
        z = parse_gauss(s);
      }
      auto p = from_gauss(z);
      if (!p) throw std::invalid_argument(s + " is not an element of " + name_);
      return *p;
    }
    case SemigroupFamily::FreeAbelian: {
      const auto v = parse_int_list(s);
      if (static_cast<int>(v.size()) != rank_) throw std::invalid_argument("wrong number of exponents for " + name_);
      SgElem e = identity();
      for (std::size_t i = 0; i < v.size(); ++i) e.data[i] = static_cast<std::int32_t>(v[i]);
      check(e);
      return e;
    }
    case SemigroupFamily::FreeMonoid: {
      SgElem e;
      if (s.empty() || s == "ε" || s == "1") return e;
      for (char c : s) {
        const int letter = c - 'a';
        if (letter < 0 || letter >= rank_) throw std::invalid_argument("letter outside alphabet: " + s);
        e.data.push_back(letter);
      }
      return e;
    }
  }
  throw std::invalid_argument("unparsable element: " + s);
}

json Semigroup::describe() const {
  json j;
  switch (family_) {
    case SemigroupFamily::FreeAbelian:
      j["kind"] = "free-abelian";
      j["rank"] = rank_;
      break;
    case SemigroupFamily::FreeMonoid:
      j["kind"] = "free";
      j["letters"] = rank_;
      break;
    case SemigroupFamily::Integer:
    case SemigroupFamily::Gaussian:
      j["kind"] = family_ == SemigroupFamily::Integer ? "integers" : "gaussian";
      j["generators"] = json::array();
      for (const SgElem& g : declared_) j["generators"].push_back(to_json(g));
      break;
  }
  j["name"] = name_;
  j["unit_order"] = unit_order_;
  return j;
}

}  // namespace lcmalg
