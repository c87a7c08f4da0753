#ifndef WPI_VERIFY_HPP
#define WPI_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace wpi {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  bool ok = true;
  std::vector<CheckResult> checks;
  std::string to_json() const;
};

// suites: sl2z, abelian, fixtures, hl, numerology, slice, family-g
SuiteReport run_suite(const std::string& suite, std::uint64_t seed = 1);

std::vector<std::string> suite_names();

}  // namespace wpi

#endif
