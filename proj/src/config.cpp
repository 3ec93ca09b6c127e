#include "lcmalg/config.hpp"

#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#define TOML_EXCEPTIONS 1
#include "toml.hpp"

namespace lcmalg {

namespace {

const std::map<std::string, json>& catalog() {
  static const std::map<std::string, json> entries = [] {
    std::map<std::string, json> m;
    auto int_mult = [&](const std::string& name, std::vector<int> gens) {
      m[name] = json{{"kind", "int-mult"}, {"generators", gens}};
    };
    int_mult("z[2,3]", {2, 3});
    int_mult("z[-1,2,3]", {-1, 2, 3});
    int_mult("z[-2,3]", {-2, 3});
    int_mult("z[2,-3]", {2, -3});
    int_mult("z[-2,-3]", {-2, -3});
    int_mult("z[2]", {2});
    int_mult("z[3]", {3});
    int_mult("z[-1]", {-1});
    int_mult("z[]", {});
    m["zi[i,1+i,3]"] = json{{"kind", "gauss-mult"}, {"generators", {"i", "1+i", "3"}}};
    m["toeplitz2"] = json{{"kind", "shift"},
                          {"base_group", {{"kind", "cyclic"}, {"order", 2}}},
                          {"semigroup", {{"kind", "free-abelian"}, {"rank", 1}}}};
    m["shift2-free2"] = json{{"kind", "shift"},
                             {"base_group", {{"kind", "cyclic"}, {"order", 2}}},
                             {"semigroup", {{"kind", "free-monoid"}, {"letters", 2}}}};
    m["shiftz-n2"] = json{{"kind", "shift"},
                          {"base_group", {{"kind", "integers"}}},
                          {"semigroup", {{"kind", "free-abelian"}, {"rank", 2}}}};
    m["trivial-free2"] = json{{"kind", "trivial-group"}, {"semigroup", {{"kind", "free-monoid"}, {"letters", 2}}}};
    m["trivial-n2"] = json{{"kind", "trivial-group"}, {"semigroup", {{"kind", "free-abelian"}, {"rank", 2}}}};
    return m;
  }();
  return entries;
}

Gauss gauss_from(const json& j) {
  if (j.is_number_integer()) return Gauss{j.get<std::int64_t>(), 0};
  if (j.is_array() && j.size() == 2) return Gauss{j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
  if (j.is_string()) return parse_gauss(j.get<std::string>());
  throw ConfigError("not a Gaussian integer: " + j.dump());
}

int int_field(const json& spec, const char* key) {
  if (!spec.contains(key) || !spec.at(key).is_number_integer()) {
    throw ConfigError(std::string("missing integer field '") + key + "'", spec);
  }
  return spec.at(key).get<int>();
}

std::string kind_of(const json& spec) {
  if (!spec.is_object() || !spec.contains("kind") || !spec.at("kind").is_string()) {
    throw ConfigError("missing 'kind'", spec);
  }
  return spec.at("kind").get<std::string>();
}

json toml_to_json(const toml::node& node) {
  if (const auto* t = node.as_table()) {
    json out = json::object();
    for (const auto& [k, v] : *t) out[std::string(k.str())] = toml_to_json(v);
    return out;
  }
  if (const auto* a = node.as_array()) {
    json out = json::array();
    for (const auto& v : *a) out.push_back(toml_to_json(v));
    return out;
  }
  if (const auto* s = node.as_string()) return s->get();
  if (const auto* i = node.as_integer()) return i->get();
  if (const auto* f = node.as_floating_point()) return f->get();
  if (const auto* b = node.as_boolean()) return b->get();
  throw ConfigError("unsupported TOML value (dates and times are not used)");
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : catalog()) out.push_back(k);
  return out;
}

json builtin_spec(const std::string& name) {
  auto it = catalog().find(name);
  if (it == catalog().end()) throw ConfigError("unknown built-in system '" + name + "'", json{{"known", builtin_names()}});
  return it->second;
}

Semigroup semigroup_from_spec(const json& spec) {
  const std::string kind = kind_of(spec);
  if (kind == "free-abelian") return Semigroup::free_abelian(int_field(spec, "rank"));
  if (kind == "free-monoid") return Semigroup::free_monoid(int_field(spec, "letters"));
  if (kind == "integers") {
    const int len = spec.value("relation_search_length", 6);
    return Semigroup::integers(spec.at("generators").get<std::vector<std::int64_t>>(), len);
  }
  if (kind == "gaussian") {
    std::vector<Gauss> gens;
    for (const json& g : spec.at("generators")) gens.push_back(gauss_from(g));
    return Semigroup::gaussian(gens);
  }
  throw ConfigError("unknown semigroup kind '" + kind + "'", spec);
}

DynamicalSystem system_from_spec(const json& spec_in) {
  json spec = spec_in;
  if (spec.is_string()) spec = builtin_spec(spec.get<std::string>());
  if (spec.is_object() && spec.contains("builtin")) spec = builtin_spec(spec.at("builtin").get<std::string>());
  const std::string kind = kind_of(spec);
  try {
    if (kind == "int-mult") {
      Semigroup P = spec.contains("semigroup")
                        ? semigroup_from_spec(spec.at("semigroup"))
                        : Semigroup::integers(spec.at("generators").get<std::vector<std::int64_t>>(),
                                              spec.value("relation_search_length", 6));
      return DynamicalSystem::int_mult(std::move(P), spec.value("modulus", std::int64_t{0}));
    }
    if (kind == "gauss-mult") {
      if (spec.contains("semigroup")) return DynamicalSystem::gauss_mult(semigroup_from_spec(spec.at("semigroup")));
      std::vector<Gauss> gens;
      for (const json& g : spec.at("generators")) gens.push_back(gauss_from(g));
      return DynamicalSystem::gauss_mult(Semigroup::gaussian(gens));
    }
    if (kind == "shift") {
      const json& base = spec.at("base_group");
      const std::string bk = kind_of(base);
      std::int64_t order = 0;
      if (bk == "cyclic") {
        order = base.at("order").get<std::int64_t>();
        if (order < 2) throw ConfigError("cyclic base group needs order >= 2", base);
      } else if (bk != "integers") {
        throw ConfigError("unknown base group kind '" + bk + "'", base);
      }
      return DynamicalSystem::shift(semigroup_from_spec(spec.at("semigroup")), order);
    }
    if (kind == "trivial-group") return DynamicalSystem::trivial(semigroup_from_spec(spec.at("semigroup")));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed system table: ") + e.what(), spec);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("malformed system table: ") + e.what(), spec);
  }
  throw ConfigError("unknown system kind '" + kind + "'", spec);
}

DynamicalSystem load_system(const json& spec, const SampleSpec& verify) {
  return register_system(system_from_spec(spec), verify);
}

SampleSpec sample_spec_from(const json& verify, SampleSpec base) {
  if (verify.is_null()) return base;
  if (!verify.is_object()) throw ConfigError("[verify] must be a table", verify);
  auto take = [&](const char* key, auto& field) {
    if (!verify.contains(key)) return;
    const json& v = verify.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw ConfigError(std::string("[verify] ") + key + " must be a non-negative integer", verify);
    }
    field = v.get<std::remove_reference_t<decltype(field)>>();
  };
  take("p_ball", base.p_radius);
  take("p_radius", base.p_radius);
  take("g_samples", base.g_samples);
  take("seed", base.seed);
  take("search_radius", base.search_radius);
  take("pairs", base.pairs);
  take("prefix", base.prefix);
  take("vectors", base.vectors);
  return base;
}

json parse_toml(const std::string& text, const std::string& source_name) {
  try {
    const toml::table tbl = toml::parse(text, source_name);
    return toml_to_json(tbl);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << "TOML parse error in " << source_name << " at line " << e.source().begin.line << ": " << e.description();
    throw ConfigError(msg.str());
  }
}

json read_toml(const std::string& path) {
  try {
    const toml::table tbl = toml::parse_file(path);
    return toml_to_json(tbl);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    if (e.source().begin.line == 0) {
      msg << "cannot read " << path << ": " << e.description();
    } else {
      msg << "TOML parse error in " << path << " at line " << e.source().begin.line << ": " << e.description();
    }
    throw ConfigError(msg.str());
  }
}

LoadedConfig load_config_json(const json& raw) {
  LoadedConfig out;
  out.raw = raw;
  out.spec = sample_spec_from(raw.contains("verify") ? raw.at("verify") : json(nullptr));
  if (!raw.contains("system")) throw ConfigError("missing [system] table");
  out.system = std::make_shared<const DynamicalSystem>(load_system(raw.at("system"), out.spec));
  return out;
}

LoadedConfig load_config(const std::string& path) { return load_config_json(read_toml(path)); }

AdsMorphism morphism_from_spec(const json& spec, const SampleSpec& verify) {
  if (!spec.is_object()) throw ConfigError("[morphism] must be a table", spec);
  for (const char* key : {"source", "target", "phi_p"}) {
    if (!spec.contains(key)) throw ConfigError(std::string("[morphism] is missing '") + key + "'", spec);
  }
  auto source = std::make_shared<const DynamicalSystem>(load_system(spec.at("source"), verify));
  auto target = std::make_shared<const DynamicalSystem>(load_system(spec.at("target"), verify));
  try {
    const GroupMap phi_g = spec.contains("phi_g") ? GroupMap::from_json(spec.at("phi_g")) : GroupMap::identity();
    // phi_p is either a list of [generator, image] pairs or a table keyed by generator.
    std::map<SgElem, SgElem> images;
    auto add = [&](const json& key, const json& value) {
      const SgElem k = key.is_string() ? source->P().parse(key.get<std::string>()) : source->P().from_json(key);
      const SgElem v = value.is_string() ? target->P().parse(value.get<std::string>()) : target->P().from_json(value);
      images[k] = v;
    };
    const json& table = spec.at("phi_p");
    if (table.is_array()) {
      for (const json& pair : table) {
        if (!pair.is_array() || pair.size() != 2) throw ConfigError("phi_p entries must be [generator, image]", pair);
        add(pair[0], pair[1]);
      }
    } else if (table.is_object()) {
      for (const auto& [k, v] : table.items()) add(json(k), v);
    } else {
      throw ConfigError("phi_p must be a table or a list of pairs", table);
    }
    return AdsMorphism(source, target, phi_g, std::move(images));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed [morphism] table: ") + e.what(), spec);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("malformed [morphism] table: ") + e.what(), spec);
  }
}

}  // namespace lcmalg
