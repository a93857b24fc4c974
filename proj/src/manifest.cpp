#include "zp/manifest.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "zp/version.hpp"

namespace zp {

void write_manifest(std::ostream& out, const RunManifest& m) {
  nlohmann::json j;
  j["tool"] = "zp";
  j["version"] = kVersion;
  j["subcommand"] = m.subcommand;
  j["argv"] = m.argv;
  j["eval_config"] = {{"em_terms_factor", m.ecfg.em_terms_factor},
                      {"bernoulli_depth", m.ecfg.bernoulli_depth},
                      {"dirichlet_sigma_min", m.ecfg.dirichlet_sigma_min},
                      {"target_abs_error", m.ecfg.target_abs_error}};
  if (m.has_path_config)
    j["path_config"] = {{"dx", m.pcfg.dx},
                        {"sigma_start", m.pcfg.sigma_start},
                        {"slip_threshold", m.pcfg.slip_threshold},
                        {"max_refine_depth", m.pcfg.max_refine_depth}};
  j["inputs"] = nlohmann::json::array();
  for (const auto& f : m.inputs)
    j["inputs"].push_back({{"path", f.path}, {"fnv1a64", f.fnv1a64}});
  j["outputs"] = m.outputs;
  j["wall_time_seconds"] = m.wall_time_seconds;
  j["record_count"] = m.record_count;
  j["flagged_count"] = m.flagged_count;
  j["jobs"] = m.jobs;
  out << j.dump(2) << "\n";
  if (!out) throw IoError("write_manifest: stream write failed");
}

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::uint64_t h = 1469598103934665603ull;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    const auto got = std::size_t(in.gcount());
    for (std::size_t i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
    if (!in) break;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

}  // namespace zp
