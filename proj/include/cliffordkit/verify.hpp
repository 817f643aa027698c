#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffordkit/quadratic_space.hpp"

namespace cliffordkit {

/// Fault injection hooks for exercising the failure-reporting path. The
/// sign_table fault flips the product sign of the blade pair ({1}, {2})
/// inside the suite's product wrapper, which breaks the anticommutation
/// identity without touching the library kernels.
enum class Fault { none, sign_table };

struct VerifyOptions {
  std::uint64_t seed = 0;
  int trials = 200;
  Fault fault = Fault::none;
};

struct VerifyFailure {
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct VerifyCheck {
  std::string name;    // identity label, e.g. "clifford-anticommutation"
  std::string anchor;  // equation anchor cited on failure, e.g. "Eq. 3"
  int cases = 0;
  int failures = 0;
  std::vector<VerifyFailure> samples;  // at most 3 recorded failures
};

struct VerifyReport {
  std::string suite;
  std::string signature;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<VerifyCheck> checks;
  std::vector<std::string> skipped;  // checks not applicable to the space
  double wall_seconds = 0.0;

  int total_failures() const;
};

/// Runs one of: core, car, spin, spinor, decomp, all. Unknown names throw.
VerifyReport run_verify_suite(const std::string& suite, const QuadraticSpace& space,
                              const VerifyOptions& options);

std::vector<std::string> verify_suite_names();

}  // namespace cliffordkit
