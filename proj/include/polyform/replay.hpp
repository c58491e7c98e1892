#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "polyform/core.hpp"

namespace polyform {

// Re-derives every row of a bundled reference table from the library
// and reports agreement row by row.

struct RowResult {
  std::string label;
  bool pass = false;
  std::string detail;  // empty when the row passes
};

struct ReplayReport {
  std::string set_name;
  std::vector<RowResult> rows;

  Int passed() const;
  bool all_pass() const;
};

const std::vector<std::string>& fixture_set_names();

// POLYFORM_FIXTURES overrides; falls back to the directory this build
// was configured with.
std::filesystem::path fixture_directory();

ReplayReport replay_fixture_set(const std::string& set_name,
                                const std::filesystem::path& fixture_dir);

}  // namespace polyform
