#pragma once

#include "../core.hpp"
#include "../problems.hpp"
#include "../selection.hpp"
#include "../variation.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace e3a::harness {

/// Environment variable that replaces `output_dir` from the config file.
inline constexpr const char* output_dir_env = "E3A_OUTPUT_DIR";

struct ProblemSpec {
  std::string id;
  std::size_t m = 3;
  std::optional<std::size_t> d;
  /// External front file used instead of the built-in sampler.
  std::optional<std::string> reference_file;
};

/// Declarative campaign. Every field has a default matching the standard
/// protocol: 30 runs, 300 generations, SBX/PM with indices 20, crossover
/// probability 1, mutation probability 1/d, and population sizes
/// 105/126/230/240 for 3/5/10/15 objectives.
///
/// JSON schema (all keys optional except `problems`):
///   problems         [{"id": "MaF1", "m": 3, "d": 12, "reference_file": "pf.txt"}]
///   algorithms       ["E3A", "CrowdingBaseline"]
///   runs             30
///   population_size  {"3": 105, "5": 126, "10": 230, "15": 240} or one integer
///   generations      300
///   master_seed      0
///   output_dir       "results"
///   variation        {"p_crossover": 1.0, "p_mutation": null, "eta_c": 20, "eta_m": 20}
///   reference_factor 10      (reference-set size = factor * population size)
///   reference_size   null    (fixed reference-set size, overrides the factor)
///   hv_samples       1000000
///   dump_fronts      true
struct ExperimentConfig {
  std::vector<ProblemSpec> problems;
  std::vector<std::string> algorithms{"E3A"};
  std::size_t runs = 30;
  std::map<std::size_t, std::size_t> population_sizes{{3, 105}, {5, 126}, {10, 230}, {15, 240}};
  std::size_t generations = 300;
  std::uint64_t master_seed = 0;
  std::string output_dir = "results";
  VariationParams variation;
  std::size_t reference_factor = 10;
  std::optional<std::size_t> reference_size;
  std::size_t hv_samples = 1'000'000;
  bool dump_fronts = true;

  [[nodiscard]] std::size_t population_size_for(std::size_t m) const {
    if (auto it = population_sizes.find(m); it != population_sizes.end()) {
      return it->second;
    }
    throw Error(Errc::InvalidConfig, "no population size configured for m = " + std::to_string(m));
  }

  [[nodiscard]] std::size_t reference_size_for(std::size_t m) const {
    return reference_size.value_or(reference_factor * population_size_for(m));
  }

  /// Rejects the whole campaign before any run starts.
  void validate() const {
    if (problems.empty()) {
      throw Error(Errc::InvalidConfig, "config lists no problems");
    }
    if (algorithms.empty()) {
      throw Error(Errc::InvalidConfig, "config lists no algorithms");
    }
    if (runs < 1) {
      throw Error(Errc::InvalidConfig, "runs must be at least 1");
    }
    if (generations < 1) {
      throw Error(Errc::InvalidConfig, "generations must be at least 1");
    }
    for (const auto& a : algorithms) {
      if (!parse_selector(a)) {
        throw Error(Errc::UnsupportedAlgorithm, a);
      }
    }
    for (const auto& p : problems) {
      const auto problem = make_problem(p.id, p.m, p.d);
      if (!p.reference_file && !problem->has_analytic_front()) {
        throw Error(Errc::NoAnalyticFront, p.id + " needs a reference_file");
      }
      if (population_size_for(p.m) < p.m) {
        throw Error(Errc::InvalidConfig, "population size below objective count for " + p.id);
      }
    }
    variation.validate();
  }
};

inline void to_json(nlohmann::json& j, const ProblemSpec& p) {
  j = nlohmann::json{{"id", p.id}, {"m", p.m}};
  if (p.d) {
    j["d"] = *p.d;
  }
  if (p.reference_file) {
    j["reference_file"] = *p.reference_file;
  }
}

inline void from_json(const nlohmann::json& j, ProblemSpec& p) {
  j.at("id").get_to(p.id);
  p.m = j.value("m", std::size_t{3});
  if (j.contains("d") && !j["d"].is_null()) {
    p.d = j["d"].get<std::size_t>();
  }
  if (j.contains("reference_file") && !j["reference_file"].is_null()) {
    p.reference_file = j["reference_file"].get<std::string>();
  }
}

inline nlohmann::json to_json(const ExperimentConfig& cfg) {
  nlohmann::json pops = nlohmann::json::object();
  for (const auto& [m, n] : cfg.population_sizes) {
    pops[std::to_string(m)] = n;
  }
  nlohmann::json variation{{"p_crossover", cfg.variation.p_crossover},
                           {"p_mutation", nullptr},
                           {"eta_c", cfg.variation.eta_c},
                           {"eta_m", cfg.variation.eta_m}};
  if (cfg.variation.p_mutation) {
    variation["p_mutation"] = *cfg.variation.p_mutation;
  }
  nlohmann::json j{{"problems", cfg.problems},
                   {"algorithms", cfg.algorithms},
                   {"runs", cfg.runs},
                   {"population_size", pops},
                   {"generations", cfg.generations},
                   {"master_seed", cfg.master_seed},
                   {"output_dir", cfg.output_dir},
                   {"variation", variation},
                   {"reference_factor", cfg.reference_factor},
                   {"reference_size", nullptr},
                   {"hv_samples", cfg.hv_samples},
                   {"dump_fronts", cfg.dump_fronts}};
  if (cfg.reference_size) {
    j["reference_size"] = *cfg.reference_size;
  }
  return j;
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  try {
    if (j.contains("problems")) {
      cfg.problems = j["problems"].get<std::vector<ProblemSpec>>();
    }
    if (j.contains("algorithms")) {
      cfg.algorithms = j["algorithms"].get<std::vector<std::string>>();
    }
    cfg.runs = j.value("runs", cfg.runs);
    if (j.contains("population_size")) {
      const auto& p = j["population_size"];
      if (p.is_number_integer()) {
        const auto n = p.get<std::size_t>();
        for (const auto& spec : cfg.problems) {
          cfg.population_sizes[spec.m] = n;
        }
      } else {
        for (const auto& [key, value] : p.items()) {
          cfg.population_sizes[std::stoul(key)] = value.get<std::size_t>();
        }
      }
    }
    cfg.generations = j.value("generations", cfg.generations);
    cfg.master_seed = j.value("master_seed", cfg.master_seed);
    cfg.output_dir = j.value("output_dir", cfg.output_dir);
    if (j.contains("variation")) {
      const auto& v = j["variation"];
      cfg.variation.p_crossover = v.value("p_crossover", cfg.variation.p_crossover);
      cfg.variation.eta_c = v.value("eta_c", cfg.variation.eta_c);
      cfg.variation.eta_m = v.value("eta_m", cfg.variation.eta_m);
      if (v.contains("p_mutation") && !v["p_mutation"].is_null()) {
        cfg.variation.p_mutation = v["p_mutation"].get<double>();
      }
    }
    cfg.reference_factor = j.value("reference_factor", cfg.reference_factor);
    if (j.contains("reference_size") && !j["reference_size"].is_null()) {
      cfg.reference_size = j["reference_size"].get<std::size_t>();
    }
    cfg.hv_samples = j.value("hv_samples", cfg.hv_samples);
    cfg.dump_fronts = j.value("dump_fronts", cfg.dump_fronts);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidConfig, e.what());
  } catch (const std::logic_error& e) {
    throw Error(Errc::InvalidConfig, e.what());
  }
  return cfg;
}

/// Reads a JSON config file; E3A_OUTPUT_DIR, when set, replaces output_dir.
inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::IoError, "cannot open config " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidConfig, path + ": " + e.what());
  }
  auto cfg = config_from_json(j);
  if (const char* dir = std::getenv(output_dir_env); dir != nullptr && *dir != '\0') {
    cfg.output_dir = dir;
  }
  return cfg;
}

} // namespace e3a::harness
