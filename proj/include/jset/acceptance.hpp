#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jset {

struct CriterionResult {
  int id = 0;
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  bool verbose = false;
};

inline constexpr int kCriteria = 13;

CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
std::string format_result(const CriterionResult& r);

}  // namespace jset
