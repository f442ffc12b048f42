#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace steinchar {

struct RunConfig {
  std::string structure;
  std::optional<int> n, d, q, i, u, s, t, m;
  std::optional<std::string> tau, mu, variant, n_range, file;
  bool bruteforce = false;
  std::string suite = "all";
  std::string format = "json";
  std::optional<std::string> out;
};

// Each returns the process exit code and writes its report to `os`.
int cmd_spectrum(const RunConfig& cfg, std::ostream& os);
int cmd_walk(const RunConfig& cfg, std::ostream& os);
int cmd_audit(const RunConfig& cfg, std::ostream& os);
int cmd_bound(const RunConfig& cfg, std::ostream& os);
int cmd_sweep(const RunConfig& cfg, std::ostream& os);
int cmd_verify(const RunConfig& cfg, std::ostream& os);

}  // namespace steinchar
