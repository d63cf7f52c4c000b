#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pslab/green.hpp"
#include "pslab/potential.hpp"

#include "json.hpp"

namespace pslab {

// A single JSON document drives every experiment: the rank, named weight
// tables, named walk specs, and per-subcommand parameter blocks.
struct ExperimentConfig {
  unsigned rank = 2;
  std::uint64_t seed = 1;
  std::string out_dir = "out";
  std::map<std::string, std::vector<double>> potential_weights;  // per letter
  std::map<std::string, std::vector<double>> walk_probs;
  nlohmann::json experiments = nlohmann::json::object();
  std::string raw_text;  // hashed into the manifest

  Alphabet alphabet() const { return Alphabet(rank); }
  WeightedPotential potential(const std::string& name) const;
  WalkSpec walk(const std::string& name) const;
};

struct Diagnostic {
  std::string path;
  std::string message;
};

// Schema and range checks only; no computation.
std::vector<Diagnostic> validate_config_text(const std::string& text);

// Parses and fully validates; throws ConfigError with the first diagnostic.
ExperimentConfig load_config_text(const std::string& text);

ExperimentConfig load_config_file(const std::string& path);
std::vector<Diagnostic> validate_config_file(const std::string& path);

// Applies a dotted-path override ("experiments.exponent.R=14") onto the
// parsed document; values parse as JSON when possible and as strings
// otherwise.
void apply_override(nlohmann::json& doc, const std::string& assignment);

}  // namespace pslab
