#pragma once

// Pass/fail bookkeeping shared by every verifier, serialized as
// {suite, passed, checks, failures:[{check, witness, inputs}], spec}.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace lcmalg {

using json = nlohmann::json;

/// Bounds for sampled verification; serialized into every report.
struct SampleSpec {
  int p_radius = 3;            // radius of the semigroup ball
  std::size_t g_samples = 50;  // group elements per sample set
  std::uint64_t seed = 1;
  int search_radius = 4;        // bound for witness searches
  std::size_t pairs = 500;      // sampled pairs for pairwise checks
  std::size_t prefix = 20;      // transversal prefix length
  std::size_t vectors = 100;    // basis vectors per operator comparison

  [[nodiscard]] json to_json() const;
  static SampleSpec from_json(const json& j);
};

class Report {
 public:
  explicit Report(std::string suite, json spec = json::object());

  /// Counts one case of `check`; a failing case keeps its witness (at most
  /// kMaxWitnesses per check are stored, all are counted).
  void record(const std::string& check, bool ok, const std::function<json()>& witness = {},
              const json& inputs = json::object());
  /// Registers a check with zero cases so that it shows up in the output.
  void declare(const std::string& check);
  void note(const std::string& key, json value) { notes_[key] = std::move(value); }
  /// Appends the checks, failures and notes of `other` under "prefix.name".
  void merge(const Report& other, const std::string& prefix);

  [[nodiscard]] bool passed() const { return total_failures_ == 0; }
  [[nodiscard]] std::size_t cases(const std::string& check) const;
  [[nodiscard]] std::size_t failures(const std::string& check) const;
  [[nodiscard]] const std::vector<json>& failure_entries() const { return failure_list_; }
  /// First stored witness for `check`, or null.
  [[nodiscard]] json first_witness(const std::string& check) const;
  [[nodiscard]] const std::string& suite() const { return suite_; }
  [[nodiscard]] json to_json() const;

  static constexpr std::size_t kMaxWitnesses = 20;

 private:
  struct Tally {
    std::size_t cases = 0;
    std::size_t failures = 0;
  };
  std::string suite_;
  json spec_;
  std::vector<std::string> order_;
  std::map<std::string, Tally> tallies_;
  std::vector<json> failure_list_;
  std::size_t total_failures_ = 0;
  std::map<std::string, json> notes_;
};

}  // namespace lcmalg
