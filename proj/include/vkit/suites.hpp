#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vkit/codec.hpp"
#include "vkit/oracles.hpp"

namespace vkit {

struct SuiteOptions {
  int m = 2;
  std::uint64_t seed = 1;
  std::string corpus_path;  // empty: bundled corpus
  std::string config_path;  // empty: bundled c2.config
};

struct PropertyResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<std::string> suite_names();

/// Runs one named suite, or every suite for "all". Throws MalformedToken
/// for an unknown name.
std::vector<PropertyResult> run_suite(const std::string& name, const SuiteOptions& opts);

/// Reads a persisted configuration.
ArrowConfiguration load_configuration(const std::string& path);

}  // namespace vkit
