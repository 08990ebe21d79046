#include "sphanti/report.hpp"

#include <algorithm>

namespace sphanti {

bool all_pass(const Report& report) {
  return std::all_of(report.begin(), report.end(), [](const Finding& f) { return f.pass; });
}

Report failures(const Report& report) {
  Report out;
  std::copy_if(report.begin(), report.end(), std::back_inserter(out), [](const Finding& f) { return !f.pass; });
  return out;
}

}  // namespace sphanti
