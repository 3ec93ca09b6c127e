#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lcmalg/config.hpp"
#include "lcmalg/monomial.hpp"
#include "lcmalg/product_system.hpp"
#include "lcmalg/regular_rep.hpp"

using namespace lcmalg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

const char* const kDefaultSystem = "z[2,3]";

struct Globals {
  std::string config;
  std::string system;
  std::optional<std::uint64_t> seed;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int emit_report(const Report& rep) {
  emit(rep.to_json());
  return rep.passed() ? kExitPass : kExitFail;
}

json raw_config(const Globals& g) {
  json raw = g.config.empty() ? json::object() : read_toml(g.config);
  if (!g.system.empty()) raw["system"] = g.system;
  if (!raw.contains("system")) raw["system"] = kDefaultSystem;
  if (g.seed) raw["verify"]["seed"] = *g.seed;
  return raw;
}

LoadedConfig resolve(const Globals& g) { return load_config_json(raw_config(g)); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Report start(const std::string& suite, const LoadedConfig& cfg) {
  Report rep(suite, cfg.spec.to_json());
  rep.note("system", cfg.system->describe());
  return rep;
}

int cmd_verify(const Globals& g) {
  const LoadedConfig cfg = resolve(g);
  const DynamicalSystem& sys = *cfg.system;
  Report rep = start("verify", cfg);
  rep.merge(sys.verify_axioms(cfg.spec), "axioms");
  rep.merge(check_li_relations(sys, cfg.spec), "li");
  rep.merge(check_nica_covariance(sys, cfg.spec), "nica");
  rep.merge(check_generator_relations(sys, cfg.spec), "generators");
  return emit_report(rep);
}

int cmd_lcm(const Globals& g, const std::string& left, const std::string& right) {
  const LoadedConfig cfg = resolve(g);
  const Semigroup& P = cfg.system->P();
  const SgElem p = P.parse(left);
  const SgElem q = P.parse(right);
  const RightLcmOutcome meet = P.right_lcm(p, q);
  if (!meet) {
    emit(json{{"kind", "disjoint"}});
  } else {
    emit(json{{"kind", "principal"},
              {"lcm", P.to_json(meet->r)},
              {"left_cofactor", P.to_json(meet->p_comp)},
              {"right_cofactor", P.to_json(meet->q_comp)}});
  }
  return kExitPass;
}

int cmd_intersect(const Globals& g, const std::string& left, const std::string& right) {
  const LoadedConfig cfg = resolve(g);
  const DynamicalSystem& sys = *cfg.system;
  emit(ideal_to_json(sys, ideal_intersect(sys, sd_parse(sys, left), sd_parse(sys, right))));
  return kExitPass;
}

int cmd_mult(const Globals& g, const std::string& path) {
  const LoadedConfig cfg = resolve(g);
  const DynamicalSystem& sys = *cfg.system;
  json input;
  try {
    input = json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("monomial file is not JSON: ") + e.what());
  }
  if (input.is_object() && input.contains("monomials")) input = input.at("monomials");
  if (!input.is_array() || input.empty()) throw ConfigError("expected a non-empty list of monomials", input);
  Monomial acc = monomial_from_json(sys, input.at(0));
  for (std::size_t i = 1; i < input.size(); ++i) acc = mult(sys, acc, monomial_from_json(sys, input.at(i)));
  emit(monomial_to_json(sys, acc));
  return kExitPass;
}

int cmd_rep_check(const Globals& g, std::optional<int> radius) {
  LoadedConfig cfg = resolve(g);
  if (radius) cfg.spec.p_radius = *radius;
  const DynamicalSystem& sys = *cfg.system;
  Report rep = start("rep-check", cfg);
  rep.merge(check_li_relations(sys, cfg.spec), "li");
  rep.merge(check_homomorphism(sys, cfg.spec, cfg.spec.pairs), "regular");
  return emit_report(rep);
}

int cmd_fock_check(const Globals& g, std::optional<std::size_t> samples) {
  LoadedConfig cfg = resolve(g);
  if (samples) cfg.spec.pairs = *samples;
  const DynamicalSystem& sys = *cfg.system;
  Report rep = start("fock-check", cfg);
  rep.merge(check_product_system(sys, cfg.spec), "product");
  rep.merge(check_nica_covariance(sys, cfg.spec), "nica");
  rep.merge(check_generator_relations(sys, cfg.spec), "generators");
  return emit_report(rep);
}

int cmd_morphism_check(const Globals& g, const std::string& path, bool force_full) {
  const json file = read_toml(path);
  SampleSpec spec = sample_spec_from(file.contains("verify") ? file.at("verify") : json(nullptr));
  if (!g.config.empty()) {
    const json outer = read_toml(g.config);
    if (outer.contains("verify")) spec = sample_spec_from(outer.at("verify"), spec);
  }
  if (g.seed) spec.seed = *g.seed;
  const AdsMorphism m = morphism_from_spec(file.contains("morphism") ? file.at("morphism") : file, spec);

  Report rep("morphism-check", spec.to_json());
  rep.note("morphism", m.describe());
  const Report morphism = check_morphism(m, spec);
  const Report admissible = check_admissible(m, spec, force_full);
  const Report ideal_eq = ideal_equation_check(m, spec);
  rep.merge(morphism, "morphism");
  rep.merge(admissible, "admissible");
  rep.merge(ideal_eq, "ideal_equation");
  // Surjectivity and injectivity are properties of the morphism, not laws.
  const Report bounded = hom_surjectivity_injectivity(m, spec);
  json findings = json::object();
  for (const char* check : {"p_surjective", "p_injective", "g_surjective", "g_injective"}) {
    findings[check] = bounded.failures(check) == 0;
    if (bounded.failures(check) != 0) findings[std::string(check) + "_witness"] = bounded.first_witness(check);
  }
  rep.note("bounded", findings);
  rep.note("is_morphism", morphism.passed());
  rep.note("is_admissible", admissible.passed());
  rep.note("ideal_equation_holds", ideal_eq.passed());
  rep.note("admissible_iff_ideal_equation", admissible.passed() == ideal_eq.passed());
  rep.note("source_units", sd_unit_description(m.source()));
  rep.note("target_units", sd_unit_description(m.target()));
  return emit_report(rep);
}

int cmd_ore_check(const Globals& g, const std::string& left, const std::string& right, std::optional<int> radius) {
  LoadedConfig cfg = resolve(g);
  const DynamicalSystem& sys = *cfg.system;
  if (radius) cfg.spec.search_radius = *radius;
  if (left.empty() != right.empty()) throw ConfigError("--left and --right go together");
  if (!left.empty()) {
    Report rep = start("ore-check", cfg);
    rep.merge(sd_left_ore_pairs(sys, {{sd_parse(sys, left), sd_parse(sys, right)}}, cfg.spec.search_radius), "pair");
    return emit_report(rep);
  }
  Report rep = start("ore-check", cfg);
  rep.merge(sd_left_ore_sample(sys, cfg.spec), "sample");
  return emit_report(rep);
}

int cmd_report(const Globals& g) {
  const LoadedConfig cfg = resolve(g);
  const DynamicalSystem& sys = *cfg.system;
  Report rep = start("report", cfg);
  rep.merge(sys.verify_axioms(cfg.spec), "axioms");
  rep.merge(check_monomial_calculus(sys, cfg.spec, cfg.spec.pairs), "monomial");
  rep.merge(check_li_relations(sys, cfg.spec), "li");
  rep.merge(check_homomorphism(sys, cfg.spec, cfg.spec.pairs), "regular");
  rep.merge(check_product_system(sys, cfg.spec), "product");
  rep.merge(check_nica_covariance(sys, cfg.spec), "nica");
  rep.merge(check_generator_relations(sys, cfg.spec), "generators");
  // Being left Ore is a property of the system, not a law, so it is reported
  // without affecting the verdict.
  const Report ore = sd_left_ore_sample(sys, cfg.spec);
  rep.note("left_ore_on_sample", ore.passed());
  if (!ore.passed()) rep.note("left_ore_witness", ore.first_witness("ore_witness"));
  rep.note("units", sd_unit_description(sys));
  return emit_report(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of semigroup crossed-product calculus"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::uint64_t seed = 0;
  app.add_option("--config", g.config, "TOML configuration file")->check(CLI::ExistingFile);
  app.add_option("--system", g.system, "built-in system name (overrides [system])");
  auto* seed_opt = app.add_option("--seed", seed, "seed override for [verify]");

  auto* verify = app.add_subcommand("verify", "dynamics axioms, Li relations, Nica covariance, generator relations");

  std::string left, right;
  auto* lcm = app.add_subcommand("lcm", "right LCM of two semigroup elements");
  lcm->add_option("--left", left, "p")->required();
  lcm->add_option("--right", right, "q")->required();

  auto* intersect = app.add_subcommand("intersect", "intersection of principal right ideals of the semidirect product");
  intersect->add_option("--left", left, "\"g,p\"")->required();
  intersect->add_option("--right", right, "\"h,q\"")->required();

  std::string monomials;
  auto* mult_cmd = app.add_subcommand("mult", "product of the monomials listed in a JSON file");
  mult_cmd->add_option("--monomials", monomials, "JSON list of [g,p,q,h] or {g,p,q,h}")->required();

  int radius = 0;
  auto* rep_check = app.add_subcommand("rep-check", "Li relations and the regular representation");
  auto* radius_opt = rep_check->add_option("--radius", radius, "semigroup ball radius")->check(CLI::NonNegativeNumber);

  std::size_t samples = 0;
  auto* fock = app.add_subcommand("fock-check", "product system, Nica covariance and Fock realization");
  auto* samples_opt = fock->add_option("--samples", samples, "sampled pairs")->check(CLI::PositiveNumber);

  std::string morphism_file;
  bool force_full = false;
  auto* morph = app.add_subcommand("morphism-check", "morphism axioms, admissibility and ideal compatibility");
  morph->add_option("--morphism", morphism_file, "TOML file with a [morphism] table")->required()->check(CLI::ExistingFile);
  morph->add_flag("--force-full", force_full, "test admissibility even when the source semigroup is a group");

  int ore_radius = 0;
  auto* ore = app.add_subcommand("ore-check", "left Ore witnesses in the semidirect product");
  ore->add_option("--left", left, "\"g,p\" (with --right: test this pair only)");
  ore->add_option("--right", right, "\"h,q\"");
  auto* ore_radius_opt = ore->add_option("--radius", ore_radius, "search radius")->check(CLI::NonNegativeNumber);

  auto* report = app.add_subcommand("report", "full suite");
  auto* systems = app.add_subcommand("systems", "list built-in systems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }
  if (*seed_opt) g.seed = seed;

  try {
    if (*verify) return cmd_verify(g);
    if (*lcm) return cmd_lcm(g, left, right);
    if (*intersect) return cmd_intersect(g, left, right);
    if (*mult_cmd) return cmd_mult(g, monomials);
    if (*rep_check) return cmd_rep_check(g, *radius_opt ? std::optional<int>(radius) : std::nullopt);
    if (*fock) return cmd_fock_check(g, *samples_opt ? std::optional<std::size_t>(samples) : std::nullopt);
    if (*morph) return cmd_morphism_check(g, morphism_file, force_full);
    if (*ore) return cmd_ore_check(g, left, right, *ore_radius_opt ? std::optional<int>(ore_radius) : std::nullopt);
    if (*report) return cmd_report(g);
    if (*systems) {
      json out = json::object();
      for (const std::string& name : builtin_names()) out[name] = builtin_spec(name);
      emit(out);
      return kExitPass;
    }
  } catch (const ConfigError& e) {
    emit(json{{"error", e.what()}, {"detail", e.detail()}});
    return kExitConfig;
  } catch (const RegistrationError& e) {
    emit(json{{"error", std::string("registration failed: ") + e.what()}, {"witness", e.witness()}});
    return kExitConfig;
  } catch (const StructuralError& e) {
    emit(json{{"error", e.what()}});
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    emit(json{{"error", e.what()}});
    return kExitConfig;
  } catch (const json::exception& e) {
    emit(json{{"error", e.what()}});
    return kExitConfig;
  }
  return kExitConfig;
}
