#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varlat/error.hpp"

namespace varlat::verify {

// Shared knobs for the verification suites. Each suite reads the subset it
// needs and ignores the rest.
struct Options {
  int cap = 6;
  int degree = 3;
  std::uint64_t seed = 1729;
  int depth = 8;
  std::optional<std::size_t> size;
  int max_len = 4;
  int letters = 3;
  int count = 5000;
  std::string fixtures_dir = "fixtures";
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool ok() const;
};

// Runs one of the named suites: figure1, prop31, lemma36, incomparability,
// or oracles. Unknown names raise invalid_argument.
SuiteReport run_suite(std::string_view suite, const Options& options);

// Checks the stored expectations for the subgroup lattice of S_degree;
// only degrees 3 and 4 have stored expectations.
SuiteReport subgroup_figure(int degree, const Options& options);

}  // namespace varlat::verify
