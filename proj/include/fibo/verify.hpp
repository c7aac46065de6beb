#pragma once

#include "fibo/boards.hpp"
#include "fibo/stirling.hpp"

#include <string>
#include <vector>

namespace fibo {

struct VerifyBounds {
  int max_n = 10;
  int max_x = 5;
  int series_order = 12;
};

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail; // witness text for failures
};

/// The fixed board test set: every board has n <= 6 and b_n <= 6.
const std::vector<FerrersBoard>& test_boards();

/// Runs one verification suite; valid names: files, rooks, mixed,
/// connection, identities, gf, coeffs, inverse, all. Results are sorted
/// by name. Throws std::invalid_argument for unknown suites.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyBounds& bounds);

bool all_pass(const std::vector<CheckResult>& results);

} // namespace fibo
