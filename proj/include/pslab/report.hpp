#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pslab {

// Fixed-format float printing so that identical runs produce byte-identical
// report bodies.
std::string format_double(double v);

// RFC-4180-style CSV: header row, '.' decimal separator, "\n" line ends,
// quoting only when a field needs it.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(std::vector<std::string> fields);
  std::string str() const;

 private:
  std::size_t columns_;
  std::string body_;
};

std::uint64_t fnv1a64(const std::string& bytes);

// Writes bytes to out_dir/name, creating the directory if needed.
void write_file(const std::string& out_dir, const std::string& name, const std::string& bytes);

// MANIFEST-<command>.json: config hash, seed, version, wall time, workers.
void write_manifest(const std::string& out_dir, const std::string& command,
                    const std::string& config_text, std::uint64_t seed, unsigned workers,
                    double wall_seconds);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pslab
