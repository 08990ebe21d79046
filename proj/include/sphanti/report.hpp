#pragma once

#include <string>
#include <vector>

namespace sphanti {

/// One row of a validation or audit report.
struct Finding {
  std::string check;
  std::string subject;
  std::string expected;
  std::string actual;
  bool pass = true;

  friend bool operator==(const Finding&, const Finding&) = default;
  friend auto operator<=>(const Finding&, const Finding&) = default;
};

using Report = std::vector<Finding>;

bool all_pass(const Report& report);
Report failures(const Report& report);

}  // namespace sphanti
