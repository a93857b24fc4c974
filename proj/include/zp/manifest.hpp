#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zp/argtrack.hpp"
#include "zp/zeta.hpp"

namespace zp {

// Reproducibility sidecar written by every CLI run: the exact settings and
// input digests needed to regenerate the outputs bit-identically.
struct RunManifest {
  std::string subcommand;
  std::vector<std::string> argv;
  EvalConfig ecfg;
  bool has_path_config = false;
  PathConfig pcfg;

  struct FileDigest {
    std::string path;
    std::string fnv1a64;  // 16 hex digits
  };
  std::vector<FileDigest> inputs;
  std::vector<std::string> outputs;

  double wall_time_seconds = 0.0;
  std::int64_t record_count = 0;
  std::int64_t flagged_count = 0;
  int jobs = 1;
};

void write_manifest(std::ostream& out, const RunManifest& manifest);

std::uint64_t fnv1a64(const void* data, std::size_t size);
std::string fnv1a64_hex_file(const std::string& path);  // IoError

}  // namespace zp
