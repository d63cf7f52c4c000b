#include "pslab/config.hpp"

#include <fstream>
#include <sstream>

#include "pslab/errors.hpp"

namespace pslab {
namespace {

using nlohmann::json;

void check_weight_table(const Alphabet& alphabet, const std::string& path, const json& table,
                        bool is_walk, std::vector<Diagnostic>& out) {
  if (!table.is_object()) {
    out.push_back({path, "expected an object of letter: value entries"});
    return;
  }
  double sum = 0.0;
  for (Letter l = 0; l < alphabet.letter_count(); ++l) {
    const std::string key(1, alphabet.letter_char(l));
    if (!table.contains(key)) {
      out.push_back({path + "/" + key, "missing weight for letter " + key});
      continue;
    }
    if (!table.at(key).is_number()) {
      out.push_back({path + "/" + key, "weight must be a number"});
      continue;
    }
    const double v = table.at(key).get<double>();
    if (!(v > 0.0)) {
      out.push_back({path + "/" + key, "NonPositiveWeight: letter " + key + " must be positive"});
      continue;
    }
    sum += v;
  }
  for (auto it = table.begin(); it != table.end(); ++it) {
    bool known = false;
    for (Letter l = 0; l < alphabet.letter_count(); ++l)
      if (it.key() == std::string(1, alphabet.letter_char(l))) known = true;
    if (!known) out.push_back({path + "/" + it.key(), "unknown letter for this rank"});
  }
  if (is_walk && std::abs(sum - 1.0) > 1e-9)
    out.push_back({path, "step probabilities must sum to 1"});
}

std::vector<double> table_to_vector(const Alphabet& alphabet, const json& table) {
  std::vector<double> v(alphabet.letter_count());
  for (Letter l = 0; l < alphabet.letter_count(); ++l)
    v[l] = table.at(std::string(1, alphabet.letter_char(l))).get<double>();
  return v;
}

void check_name_exists(const json& doc, const std::string& section, const json& block,
                       const std::string& key, const std::string& path,
                       std::vector<Diagnostic>& out) {
  if (!block.contains(key)) return;
  if (!block.at(key).is_string()) {
    out.push_back({path + "/" + key, "expected a name string"});
    return;
  }
  const std::string name = block.at(key).get<std::string>();
  if (!doc.contains(section) || !doc.at(section).contains(name))
    out.push_back({path + "/" + key, "unresolved " + section + " name: " + name});
}

void check_experiments(const json& doc, const Alphabet& alphabet, std::vector<Diagnostic>& out) {
  if (!doc.contains("experiments")) return;
  const json& ex = doc.at("experiments");
  if (!ex.is_object()) {
    out.push_back({"/experiments", "expected an object"});
    return;
  }
  for (auto it = ex.begin(); it != ex.end(); ++it) {
    const std::string path = "/experiments/" + it.key();
    const json& block = it.value();
    if (!block.is_object()) {
      out.push_back({path, "expected an object"});
      continue;
    }
    check_name_exists(doc, "potentials", block, "potential", path, out);
    check_name_exists(doc, "walks", block, "walk", path, out);
    if (block.contains("pair")) {
      const json& pair = block.at("pair");
      if (!pair.is_array() || pair.size() != 2) {
        out.push_back({path + "/pair", "expected two potential names"});
      } else {
        for (std::size_t i = 0; i < 2; ++i) {
          const std::string name = pair[i].is_string() ? pair[i].get<std::string>() : "";
          if (!doc.contains("potentials") || !doc.at("potentials").contains(name))
            out.push_back({path + "/pair", "unresolved potential name: " + name});
        }
      }
    }
    if (block.contains("lambdas")) {
      if (!block.at("lambdas").is_array()) {
        out.push_back({path + "/lambdas", "expected an array"});
      } else {
        for (const auto& v : block.at("lambdas")) {
          const double lam = v.is_number() ? v.get<double>() : -1.0;
          if (!(lam > 0.0 && lam < 1.0))
            out.push_back({path + "/lambdas", "lambda must lie strictly between 0 and 1"});
        }
      }
    }
    for (const char* key : {"m", "depth", "samples", "paths", "cap", "harmonic_paths",
                            "harmonic_cap", "ambient_k", "sub_k"}) {
      if (!block.contains(key)) continue;
      if (!block.at(key).is_number_unsigned() || block.at(key).get<std::uint64_t>() == 0)
        out.push_back({path + "/" + key, "expected a positive integer"});
    }
    for (const char* key : {"R", "r_min", "r_max", "window", "n_max"}) {
      if (!block.contains(key)) continue;
      if (!block.at(key).is_number() || !(block.at(key).get<double>() >= 0.0))
        out.push_back({path + "/" + key, "expected a nonnegative number"});
    }
    for (const char* key : {"mc_targets", "harmonic_cylinders", "elements"}) {
      if (!block.contains(key)) continue;
      if (!block.at(key).is_array()) {
        out.push_back({path + "/" + key, "expected an array of words"});
        continue;
      }
      for (const auto& w : block.at(key)) {
        if (!w.is_string()) {
          out.push_back({path + "/" + key, "expected word strings"});
          continue;
        }
        try {
          (void)parse_word(alphabet, w.get<std::string>());
        } catch (const std::exception& e) {
          out.push_back({path + "/" + key, std::string("bad word: ") + e.what()});
        }
      }
    }
    if (block.contains("ambient_k") && block.contains("sub_k")) {
      const auto ak = block.at("ambient_k").get<std::uint64_t>();
      const auto sk = block.at("sub_k").get<std::uint64_t>();
      if (!(sk >= 2 && sk < ak))
        out.push_back({path, "need 2 <= sub_k < ambient_k for a strict free factor"});
    }
  }
}

}  // namespace

WeightedPotential ExperimentConfig::potential(const std::string& name) const {
  const auto it = potential_weights.find(name);
  if (it == potential_weights.end()) throw ConfigError("unknown potential: " + name);
  return WeightedPotential(alphabet(), it->second);
}

WalkSpec ExperimentConfig::walk(const std::string& name) const {
  const auto it = walk_probs.find(name);
  if (it == walk_probs.end()) throw ConfigError("unknown walk: " + name);
  return WalkSpec(alphabet(), it->second);
}

std::vector<Diagnostic> validate_config_text(const std::string& text) {
  std::vector<Diagnostic> out;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    out.push_back({"/", std::string("parse error: ") + e.what()});
    return out;
  }
  if (!doc.is_object()) {
    out.push_back({"/", "top level must be an object"});
    return out;
  }

  unsigned rank = 2;
  if (!doc.contains("rank") || !doc.at("rank").is_number_unsigned()) {
    out.push_back({"/rank", "missing or non-integer rank"});
  } else {
    rank = doc.at("rank").get<unsigned>();
    if (rank < 2 || rank > 26) out.push_back({"/rank", "rank must lie in [2, 26]"});
  }
  if (!out.empty()) return out;
  const Alphabet alphabet(rank);

  if (doc.contains("potentials")) {
    if (!doc.at("potentials").is_object()) {
      out.push_back({"/potentials", "expected an object"});
    } else {
      for (auto it = doc.at("potentials").begin(); it != doc.at("potentials").end(); ++it)
        check_weight_table(alphabet, "/potentials/" + it.key(), it.value(), false, out);
    }
  }
  if (doc.contains("walks")) {
    if (!doc.at("walks").is_object()) {
      out.push_back({"/walks", "expected an object"});
    } else {
      for (auto it = doc.at("walks").begin(); it != doc.at("walks").end(); ++it)
        check_weight_table(alphabet, "/walks/" + it.key(), it.value(), true, out);
    }
  }
  if (doc.contains("seed") && !doc.at("seed").is_number_unsigned())
    out.push_back({"/seed", "seed must be an unsigned integer"});
  if (doc.contains("out") && !doc.at("out").is_string())
    out.push_back({"/out", "out must be a directory path string"});

  check_experiments(doc, alphabet, out);
  return out;
}

ExperimentConfig load_config_text(const std::string& text) {
  const auto diagnostics = validate_config_text(text);
  if (!diagnostics.empty())
    throw ConfigError(diagnostics.front().path + ": " + diagnostics.front().message);

  const json doc = json::parse(text);
  ExperimentConfig cfg;
  cfg.raw_text = text;
  cfg.rank = doc.at("rank").get<unsigned>();
  const Alphabet alphabet(cfg.rank);
  if (doc.contains("seed")) cfg.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("out")) cfg.out_dir = doc.at("out").get<std::string>();
  if (doc.contains("potentials"))
    for (auto it = doc.at("potentials").begin(); it != doc.at("potentials").end(); ++it)
      cfg.potential_weights[it.key()] = table_to_vector(alphabet, it.value());
  if (doc.contains("walks"))
    for (auto it = doc.at("walks").begin(); it != doc.at("walks").end(); ++it)
      cfg.walk_probs[it.key()] = table_to_vector(alphabet, it.value());
  if (doc.contains("experiments")) cfg.experiments = doc.at("experiments");
  return cfg;
}

namespace {
std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

ExperimentConfig load_config_file(const std::string& path) {
  return load_config_text(read_file(path));
}

std::vector<Diagnostic> validate_config_file(const std::string& path) {
  return validate_config_text(read_file(path));
}

void apply_override(nlohmann::json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw ConfigError("override must look like dotted.path=value: " + assignment);
  std::string pointer = "/" + assignment.substr(0, eq);
  for (auto& c : pointer)
    if (c == '.') c = '/';
  const std::string value = assignment.substr(eq + 1);
  json parsed;
  try {
    parsed = json::parse(value);
  } catch (const json::parse_error&) {
    parsed = value;  // treat as a bare string
  }
  doc[json::json_pointer(pointer)] = parsed;
}

}  // namespace pslab
