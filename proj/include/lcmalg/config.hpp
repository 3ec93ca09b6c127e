#pragma once

// Configuration: built-in systems, TOML loading and system construction from
// a JSON-shaped spec ({"kind": "int-mult", "generators": [2,3]} and so on).

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcmalg/morphism.hpp"

namespace lcmalg {

/// Anything wrong with the user's configuration (exit code 2 in the CLI).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, json detail = nullptr)
      : std::runtime_error(what), detail_(std::move(detail)) {}
  [[nodiscard]] const json& detail() const { return detail_; }

 private:
  json detail_;
};

[[nodiscard]] std::vector<std::string> builtin_names();
/// The system spec of a built-in; throws ConfigError for unknown names.
[[nodiscard]] json builtin_spec(const std::string& name);

[[nodiscard]] Semigroup semigroup_from_spec(const json& spec);
/// Builds the system without running the registration checks.
[[nodiscard]] DynamicalSystem system_from_spec(const json& spec);
/// Builds and registers; a string spec names a built-in.
[[nodiscard]] DynamicalSystem load_system(const json& spec, const SampleSpec& verify = {});

/// Reads the [verify] table (p_ball, g_samples, seed, search_radius, pairs,
/// prefix, vectors); missing keys keep their defaults.
[[nodiscard]] SampleSpec sample_spec_from(const json& verify, SampleSpec base = {});

/// Parses a TOML file into JSON; throws ConfigError on I/O or syntax errors.
[[nodiscard]] json read_toml(const std::string& path);
/// Parses TOML text.
[[nodiscard]] json parse_toml(const std::string& text, const std::string& source_name = "<string>");

struct LoadedConfig {
  json raw;
  SampleSpec spec;
  std::shared_ptr<const DynamicalSystem> system;
};
/// Reads [system] and [verify] from a TOML file and registers the system.
[[nodiscard]] LoadedConfig load_config(const std::string& path);
/// Same from already-parsed TOML.
[[nodiscard]] LoadedConfig load_config_json(const json& raw);

/// Builds a morphism from a [morphism] table: source, target (built-in names
/// or system tables), phi_g and phi_p.
[[nodiscard]] AdsMorphism morphism_from_spec(const json& spec, const SampleSpec& verify = {});

}  // namespace lcmalg
