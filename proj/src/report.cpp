#include "pslab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace pslab {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  add_row(std::move(header));
}

namespace {
std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}
}  // namespace

void CsvWriter::add_row(std::vector<std::string> fields) {
  if (fields.size() != columns_) throw std::invalid_argument("CsvWriter: column count mismatch");
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) body_ += ',';
    body_ += csv_escape(fields[i]);
  }
  body_ += '\n';
}

std::string CsvWriter::str() const { return body_; }

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

void write_file(const std::string& out_dir, const std::string& name, const std::string& bytes) {
  std::filesystem::create_directories(out_dir);
  const auto path = std::filesystem::path(out_dir) / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void write_manifest(const std::string& out_dir, const std::string& command,
                    const std::string& config_text, std::uint64_t seed, unsigned workers,
                    double wall_seconds) {
  nlohmann::json j;
  char hash[32];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(fnv1a64(config_text)));
  j["command"] = command;
  j["config_fnv1a64"] = hash;
  j["seed"] = seed;
  j["workers"] = workers;
  j["version"] = kVersion;
  j["wall_seconds"] = wall_seconds;
  write_file(out_dir, "MANIFEST-" + command + ".json", j.dump(2) + "\n");
}

}  // namespace pslab
