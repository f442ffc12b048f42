#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stein/scheme.hpp"

namespace stein {

struct CheckResult {
  std::string suite;
  std::string tag;        // check tag, e.g. "orth1", "big1GP", "2chains"
  std::string structure;
  std::string params;
  bool passed = false;
  std::string detail;
};

// Defaults are the desk-scale ranges. Setting structure restricts a suite to
// that structure; n (or d, q) then pins the size.
struct VerifyOptions {
  std::optional<std::string> structure;
  std::optional<int> n, d, q;
  std::optional<AssociationScheme> scheme;  // structure = scheme-file
};

const std::vector<std::string>& suite_names();  // orthogonality chains moments walks bounds
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts = {});

}  // namespace stein
