#include "lcmalg/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace lcmalg {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::int64_t parse_int(const std::string& s) {
  std::size_t pos = 0;
  const long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

// Values of G0 in enumeration order, restricted to |v| <= bound for Z.
std::vector<std::int64_t> base_values(std::int64_t base_order, std::int64_t bound) {
  std::vector<std::int64_t> vals;
  if (base_order == 0) {
    for (std::int64_t k = 1; k <= bound; ++k) {
      vals.push_back(k);
      vals.push_back(-k);
    }
  } else {
    for (std::int64_t k = 1; k < base_order; ++k) vals.push_back(k);
  }
  return vals;
}

const std::string kDelta = "δ";

}  // namespace

Group Group::trivial() {
  Group g;
  g.family_ = GroupFamily::Trivial;
  g.name_ = "{1}";
  return g;
}

Group Group::integers() {
  Group g;
  g.family_ = GroupFamily::Integers;
  g.name_ = "ℤ";
  return g;
}

Group Group::gaussian() {
  Group g;
  g.family_ = GroupFamily::Gaussian;
  g.name_ = "ℤ[i]";
  return g;
}

Group Group::cyclic(std::int64_t order) {
  if (order < 1) throw RegistrationError("cyclic group order must be positive", json{{"order", order}});
  Group g;
  g.family_ = GroupFamily::Cyclic;
  g.modulus_ = order;
  g.name_ = "ℤ/" + std::to_string(order);
  return g;
}

Group Group::shift(std::shared_ptr<const Semigroup> positions, std::int64_t base_order) {
  if (base_order < 0 || base_order == 1) {
    throw RegistrationError("shift base group must be Z (order 0) or Z/n with n >= 2",
                            json{{"order", base_order}});
  }
  Group g;
  g.family_ = GroupFamily::Shift;
  g.modulus_ = base_order;
  g.positions_ = std::move(positions);
  g.name_ = "⊕_{" + g.positions_->name() + "} " + (base_order == 0 ? std::string("ℤ") : "ℤ/" + std::to_string(base_order));
  return g;
}

std::optional<std::int64_t> Group::order() const {
  switch (family_) {
    case GroupFamily::Trivial:
      return 1;
    case GroupFamily::Cyclic:
      return modulus_;
    case GroupFamily::Shift:
      if (positions_->rank() == 0 && modulus_ != 0) {
        std::int64_t o = 1;
        for (int u = 0; u < positions_->unit_order(); ++u) o = checked_mul(o, modulus_);
        return o;
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

GroupElem Group::identity() const {
  switch (family_) {
    case GroupFamily::Trivial:
      return GroupElem::trivial();
    case GroupFamily::Integers:
    case GroupFamily::Cyclic:
      return GroupElem::integer(0);
    case GroupFamily::Gaussian:
      return GroupElem::gauss(Gauss{});
    case GroupFamily::Shift:
      return GroupElem::shift(ShiftFn{});
  }
  return {};
}

std::int64_t Group::normalize_base(std::int64_t v) const {
  return modulus_ == 0 ? v : floor_mod(v, modulus_);
}

void Group::check(const GroupElem& g) const {
  bool ok = false;
  switch (family_) {
    case GroupFamily::Trivial:
      ok = std::holds_alternative<std::monostate>(g.v);
      break;
    case GroupFamily::Integers:
      ok = std::holds_alternative<std::int64_t>(g.v);
      break;
    case GroupFamily::Cyclic:
      ok = std::holds_alternative<std::int64_t>(g.v) && g.as_int() >= 0 && g.as_int() < modulus_;
      break;
    case GroupFamily::Gaussian:
      ok = std::holds_alternative<Gauss>(g.v);
      break;
    case GroupFamily::Shift:
      ok = std::holds_alternative<ShiftFn>(g.v);
      if (ok) {
        for (const auto& [pos, val] : g.as_shift().terms) {
          positions_->check(pos);
          if (val == 0 || normalize_base(val) != val) ok = false;
        }
      }
      break;
  }
  if (!ok) throw StructuralError("element does not belong to " + name_);
}

GroupElem Group::op(const GroupElem& a, const GroupElem& b) const {
  switch (family_) {
    case GroupFamily::Trivial:
      return a;
    case GroupFamily::Integers:
      return GroupElem::integer(checked_add(a.as_int(), b.as_int()));
    case GroupFamily::Cyclic:
      return GroupElem::integer(floor_mod(checked_add(a.as_int(), b.as_int()), modulus_));
    case GroupFamily::Gaussian:
      return GroupElem::gauss(a.as_gauss() + b.as_gauss());
    case GroupFamily::Shift: {
      const auto& x = a.as_shift().terms;
      const auto& y = b.as_shift().terms;
      ShiftFn r;
      std::size_t i = 0, j = 0;
      while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
          r.terms.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
          r.terms.push_back(y[j++]);
        } else {
          const std::int64_t v = normalize_base(checked_add(x[i].second, y[j].second));
          if (v != 0) r.terms.emplace_back(x[i].first, v);
          ++i;
          ++j;
        }
      }
      return GroupElem::shift(std::move(r));
    }
  }
  return {};
}

GroupElem Group::inverse(const GroupElem& a) const {
  switch (family_) {
    case GroupFamily::Trivial:
      return a;
    case GroupFamily::Integers:
      return GroupElem::integer(checked_neg(a.as_int()));
    case GroupFamily::Cyclic:
      return GroupElem::integer(floor_mod(-a.as_int(), modulus_));
    case GroupFamily::Gaussian:
      return GroupElem::gauss(-a.as_gauss());
    case GroupFamily::Shift: {
      ShiftFn r = a.as_shift();
      for (auto& t : r.terms) t.second = normalize_base(checked_neg(t.second));
      return GroupElem::shift(std::move(r));
    }
  }
  return {};
}

GroupElem Group::power(const GroupElem& g, std::int64_t n) const {
  switch (family_) {
    case GroupFamily::Trivial:
      return g;
    case GroupFamily::Integers:
      return GroupElem::integer(checked_mul(g.as_int(), n));
    case GroupFamily::Cyclic:
      return GroupElem::integer(floor_mod(checked_mul(g.as_int(), floor_mod(n, modulus_)), modulus_));
    case GroupFamily::Gaussian:
      return GroupElem::gauss(g.as_gauss() * Gauss{n, 0});
    case GroupFamily::Shift: {
      std::vector<std::pair<SgElem, std::int64_t>> terms;
      for (const auto& [pos, val] : g.as_shift().terms) terms.emplace_back(pos, checked_mul(val, n));
      return make_shift(std::move(terms));
    }
  }
  return {};
}

GroupElem Group::make_shift(std::vector<std::pair<SgElem, std::int64_t>> terms) const {
  std::map<SgElem, std::int64_t> acc;
  for (auto& [pos, val] : terms) {
    positions_->check(pos);
    auto& slot = acc[pos];
    slot = normalize_base(checked_add(slot, val));
  }
  ShiftFn f;
  for (auto& [pos, val] : acc) {
    if (val != 0) f.terms.emplace_back(pos, val);
  }
  return GroupElem::shift(std::move(f));
}

std::int64_t Group::shift_value(const GroupElem& f, const SgElem& pos) const {
  const auto& t = f.as_shift().terms;
  auto it = std::lower_bound(t.begin(), t.end(), pos,
                             [](const std::pair<SgElem, std::int64_t>& a, const SgElem& b) { return a.first < b; });
  if (it != t.end() && it->first == pos) return it->second;
  return 0;
}

std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> enumerate_finitely_supported(
    const std::function<std::vector<SgElem>(std::size_t)>& positions, std::int64_t base_order, std::size_t n) {
  using Fn = std::vector<std::pair<std::size_t, std::int64_t>>;
  std::vector<Fn> out;
  if (n == 0) return out;
  out.emplace_back();
  std::size_t known_positions = 0;
  bool exhausted = false;
  for (std::size_t level = 1; out.size() < n; ++level) {
    if (!exhausted) {
      known_positions = positions(level).size();
      if (known_positions < level) exhausted = true;
    }
    const std::size_t avail = std::min(level, known_positions);
    if (base_order != 0 && level > avail) break;
    if (base_order == 0 && avail == 0) break;
    const auto bound = static_cast<std::int64_t>(level);
    const std::vector<std::int64_t> vals = base_values(base_order, bound);
    for (std::size_t s = 1; s <= avail && out.size() < n; ++s) {
      // Supports of size s in lexicographic order.
      std::vector<std::size_t> idx(s);
      for (std::size_t k = 0; k < s; ++k) idx[k] = k;
      while (true) {
        const bool reaches_last = idx.back() + 1 == level;
        // For a finite base the level is determined by the support alone.
        if (base_order == 0 || reaches_last) {
          std::vector<std::size_t> choice(s, 0);
          bool more = true;
          while (more) {
            bool big_value = false;
            for (std::size_t k = 0; k < s; ++k) {
              const std::int64_t v = vals[choice[k]];
              if (v == bound || v == -bound) big_value = true;
            }
            if (reaches_last || big_value) {
              Fn f;
              for (std::size_t k = 0; k < s; ++k) f.emplace_back(idx[k], vals[choice[k]]);
              out.push_back(std::move(f));
              if (out.size() >= n) return out;
            }
            more = false;
            for (std::size_t k = s; k > 0;) {
              --k;
              if (++choice[k] < vals.size()) {
                more = true;
                break;
              }
              choice[k] = 0;
            }
          }
        }
        // next combination
        std::size_t k = s;
        bool advanced = false;
        while (k > 0) {
          --k;
          if (idx[k] < avail - s + k) {
            ++idx[k];
            for (std::size_t m = k + 1; m < s; ++m) idx[m] = idx[m - 1] + 1;
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
    }
  }
  return out;
}

std::vector<GroupElem> Group::small_elements(std::size_t n) const {
  std::vector<GroupElem> out;
  switch (family_) {
    case GroupFamily::Trivial:
      if (n > 0) out.push_back(identity());
      return out;
    case GroupFamily::Integers:
      for (std::int64_t k = 0; out.size() < n; ++k) {
        out.push_back(GroupElem::integer(k));
        if (k != 0 && out.size() < n) out.push_back(GroupElem::integer(-k));
      }
      return out;
    case GroupFamily::Cyclic: {
      std::vector<bool> used(static_cast<std::size_t>(modulus_), false);
      for (std::int64_t k = 0; out.size() < n && k <= modulus_; ++k) {
        for (std::int64_t v : {k, -k}) {
          const std::int64_t r = floor_mod(v, modulus_);
          if (!used[static_cast<std::size_t>(r)] && out.size() < n) {
            used[static_cast<std::size_t>(r)] = true;
            out.push_back(GroupElem::integer(r));
          }
        }
      }
      return out;
    }
    case GroupFamily::Gaussian: {
      // Rings of growing L1 radius, each in reading order.
      out.push_back(identity());
      for (std::int64_t d = 1; out.size() < n; ++d) {
        for (std::int64_t y = d; y >= -d && out.size() < n; --y) {
          const std::int64_t rest = d - (y < 0 ? -y : y);
          if (rest == 0) {
            out.push_back(GroupElem::gauss(Gauss{0, y}));
          } else {
            out.push_back(GroupElem::gauss(Gauss{-rest, y}));
            if (out.size() < n) out.push_back(GroupElem::gauss(Gauss{rest, y}));
          }
        }
      }
      out.resize(std::min(out.size(), n));
      return out;
    }
    case GroupFamily::Shift: {
      auto positions = [this](std::size_t m) {
        std::vector<SgElem> pos;
        for (int radius = 0;; ++radius) {
          pos = positions_->enumerate_ball(radius);
          const std::size_t before = pos.size();
          if (pos.size() >= m) break;
          if (positions_->enumerate_ball(radius + 1).size() == before) break;
        }
        if (pos.size() > m) pos.resize(m);
        return pos;
      };
      const auto fns = enumerate_finitely_supported(positions, modulus_, n);
      std::size_t need = 0;
      for (const auto& f : fns) {
        for (const auto& t : f) need = std::max(need, t.first + 1);
      }
      const std::vector<SgElem> pos = positions(need);
      for (const auto& f : fns) {
        std::vector<std::pair<SgElem, std::int64_t>> terms;
        for (const auto& [i, v] : f) terms.emplace_back(pos[i], v);
        out.push_back(make_shift(std::move(terms)));
      }
      return out;
    }
  }
  return out;
}

GroupElem Group::random(Rng& rng) const {
  auto centered = [&rng](std::int64_t r) {
    return static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(2 * r + 1))) - r;
  };
  switch (family_) {
    case GroupFamily::Trivial:
      return identity();
    case GroupFamily::Integers:
      return GroupElem::integer(centered(20));
    case GroupFamily::Cyclic:
      return GroupElem::integer(static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(modulus_))));
    case GroupFamily::Gaussian: {
      const std::int64_t re = centered(10);
      return GroupElem::gauss(Gauss{re, centered(10)});
    }
    case GroupFamily::Shift: {
      const std::vector<SgElem> ball = positions_->enumerate_ball(3);
      const std::uint64_t support = uniform_below(rng, 4);
      std::vector<std::pair<SgElem, std::int64_t>> terms;
      for (std::uint64_t k = 0; k < support; ++k) {
        const SgElem& pos = ball[uniform_below(rng, ball.size())];
        std::int64_t v = 0;
        if (modulus_ == 0) {
          v = centered(3);
        } else {
          v = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(modulus_)));
        }
        terms.emplace_back(pos, v);
      }
      return make_shift(std::move(terms));
    }
  }
  return identity();
}

std::string Group::to_string(const GroupElem& g) const {
  switch (family_) {
    case GroupFamily::Trivial:
      return "1";
    case GroupFamily::Integers:
    case GroupFamily::Cyclic:
      return std::to_string(g.as_int());
    case GroupFamily::Gaussian:
      return lcmalg::to_string(g.as_gauss());
    case GroupFamily::Shift: {
      const auto& t = g.as_shift().terms;
      if (t.empty()) return "0";
      std::string s;
      for (std::size_t i = 0; i < t.size(); ++i) {
        const std::int64_t v = t[i].second;
        if (v < 0) {
          s += "-";
        } else if (i > 0) {
          s += "+";
        }
        const std::int64_t mag = v < 0 ? -v : v;
        if (mag != 1) s += std::to_string(mag);
        std::string pos = positions_->to_string(t[i].first);
        if (!pos.empty() && pos.front() == '-') pos = "(" + pos + ")";
        s += kDelta + pos;
      }
      return s;
    }
  }
  return {};
}

json Group::to_json(const GroupElem& g) const {
  switch (family_) {
    case GroupFamily::Trivial:
      return 1;
    case GroupFamily::Integers:
    case GroupFamily::Cyclic:
      return g.as_int();
    case GroupFamily::Gaussian:
      return json::array({g.as_gauss().re, g.as_gauss().im});
    case GroupFamily::Shift: {
      json arr = json::array();
      for (const auto& [pos, val] : g.as_shift().terms) arr.push_back(json::array({positions_->to_json(pos), val}));
      return arr;
    }
  }
  return nullptr;
}

GroupElem Group::from_json(const json& j) const {
  if (j.is_string()) return parse(j.get<std::string>());
  switch (family_) {
    case GroupFamily::Trivial:
      return identity();
    case GroupFamily::Integers:
      return GroupElem::integer(j.get<std::int64_t>());
    case GroupFamily::Cyclic:
      return GroupElem::integer(floor_mod(j.get<std::int64_t>(), modulus_));
    case GroupFamily::Gaussian:
      if (j.is_array()) return GroupElem::gauss(Gauss{j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()});
      return GroupElem::gauss(Gauss{j.get<std::int64_t>(), 0});
    case GroupFamily::Shift: {
      if (j.is_number_integer() && j.get<std::int64_t>() == 0) return identity();
      std::vector<std::pair<SgElem, std::int64_t>> terms;
      for (const auto& t : j) terms.emplace_back(positions_->from_json(t.at(0)), t.at(1).get<std::int64_t>());
      return make_shift(std::move(terms));
    }
  }
  return identity();
}

GroupElem Group::parse(const std::string& text) const {
  const std::string s = trim(text);
  switch (family_) {
    case GroupFamily::Trivial:
      if (s == "1" || s == "e" || s == "0" || s.empty()) return identity();
      throw std::invalid_argument("not an element of the trivial group: " + s);
    case GroupFamily::Integers:
      return GroupElem::integer(parse_int(s));
    case GroupFamily::Cyclic:
      return GroupElem::integer(floor_mod(parse_int(s), modulus_));
    case GroupFamily::Gaussian:
      if (!s.empty() && s.front() == '[') return from_json(json::parse(s));
      return GroupElem::gauss(parse_gauss(s));
    case GroupFamily::Shift: {
      if (s == "0" || s.empty()) return identity();
      if (s.front() == '[') return from_json(json::parse(s));
      // Terms look like [+|-][coeff](δ|d)position.
      std::vector<std::pair<SgElem, std::int64_t>> terms;
      std::size_t i = 0;
      while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
          if (s[i] == '-') sign = -1;
          ++i;
        }
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        const std::int64_t coeff = i > start ? parse_int(s.substr(start, i - start)) : 1;
        if (s.compare(i, kDelta.size(), kDelta) == 0) {
          i += kDelta.size();
        } else if (i < s.size() && s[i] == 'd') {
          ++i;
        } else {
          throw std::invalid_argument("expected δ in shift element: " + s);
        }
        std::string pos;
        if (i < s.size() && s[i] == '(') {
          const std::size_t close = s.find(')', i);
          if (close == std::string::npos) throw std::invalid_argument("unbalanced parenthesis: " + s);
          pos = s.substr(i + 1, close - i - 1);
          i = close + 1;
        } else {
          int depth = 0;
          start = i;
          while (i < s.size()) {
            if (s[i] == '[') ++depth;
            if (s[i] == ']') --depth;
            if (depth == 0 && (s[i] == '+' || s[i] == '-') && i > start) break;
            ++i;
          }
          pos = s.substr(start, i - start);
        }
        terms.emplace_back(positions_->parse(pos), sign * coeff);
      }
      return make_shift(std::move(terms));
    }
  }
  return identity();
}

json Group::describe() const {
  json j;
  switch (family_) {
    case GroupFamily::Trivial:
      j["kind"] = "trivial";
      break;
    case GroupFamily::Integers:
      j["kind"] = "integers";
      break;
    case GroupFamily::Gaussian:
      j["kind"] = "gaussian";
      break;
    case GroupFamily::Cyclic:
      j["kind"] = "cyclic";
      j["order"] = modulus_;
      break;
    case GroupFamily::Shift:
      j["kind"] = "shift";
      j["base_order"] = modulus_;
      j["positions"] = positions_->describe();
      break;
  }
  j["name"] = name_;
  return j;
}

}  // namespace lcmalg
