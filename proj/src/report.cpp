#include "lcmalg/report.hpp"

namespace lcmalg {

json SampleSpec::to_json() const {
  return json{{"p_radius", p_radius}, {"g_samples", g_samples}, {"seed", seed},   {"search_radius", search_radius},
              {"pairs", pairs},       {"prefix", prefix},       {"vectors", vectors}};
}

SampleSpec SampleSpec::from_json(const json& j) {
  SampleSpec s;
  s.p_radius = j.value("p_radius", s.p_radius);
  s.g_samples = j.value("g_samples", s.g_samples);
  s.seed = j.value("seed", s.seed);
  s.search_radius = j.value("search_radius", s.search_radius);
  s.pairs = j.value("pairs", s.pairs);
  s.prefix = j.value("prefix", s.prefix);
  s.vectors = j.value("vectors", s.vectors);
  return s;
}

Report::Report(std::string suite, json spec) : suite_(std::move(suite)), spec_(std::move(spec)) {}

void Report::declare(const std::string& check) {
  if (tallies_.emplace(check, Tally{}).second) order_.push_back(check);
}

void Report::record(const std::string& check, bool ok, const std::function<json()>& witness, const json& inputs) {
  declare(check);
  Tally& t = tallies_[check];
  ++t.cases;
  if (ok) return;
  ++t.failures;
  ++total_failures_;
  if (t.failures <= kMaxWitnesses) {
    failure_list_.push_back(json{{"check", check}, {"witness", witness ? witness() : json(nullptr)}, {"inputs", inputs}});
  }
}

void Report::merge(const Report& other, const std::string& prefix) {
  auto qualify = [&](const std::string& name) { return prefix.empty() ? name : prefix + "." + name; };
  for (const std::string& name : other.order_) {
    const std::string full = qualify(name);
    declare(full);
    const Tally& src = other.tallies_.at(name);
    tallies_[full].cases += src.cases;
    tallies_[full].failures += src.failures;
  }
  for (json f : other.failure_list_) {
    f["check"] = qualify(f["check"].get<std::string>());
    failure_list_.push_back(std::move(f));
  }
  for (const auto& [key, value] : other.notes_) notes_[qualify(key)] = value;
  total_failures_ += other.total_failures_;
}

std::size_t Report::cases(const std::string& check) const {
  auto it = tallies_.find(check);
  return it == tallies_.end() ? 0 : it->second.cases;
}

std::size_t Report::failures(const std::string& check) const {
  auto it = tallies_.find(check);
  return it == tallies_.end() ? 0 : it->second.failures;
}

json Report::first_witness(const std::string& check) const {
  for (const json& f : failure_list_) {
    if (f.at("check") == check) return f.at("witness");
  }
  return nullptr;
}

json Report::to_json() const {
  json checks = json::array();
  for (const std::string& name : order_) {
    const Tally& t = tallies_.at(name);
    checks.push_back(json{{"name", name}, {"cases", t.cases}, {"failures", t.failures}, {"passed", t.failures == 0}});
  }
  json out{{"suite", suite_}, {"passed", passed()}, {"checks", checks}, {"failures", failure_list_}, {"spec", spec_}};
  if (!notes_.empty()) {
    json n = json::object();
    for (const auto& [k, v] : notes_) n[k] = v;
    out["notes"] = n;
  }
  return out;
}

}  // namespace lcmalg
