#include <fmt/format.h>

#include "numrad/cli.hpp"

namespace numrad::cli {

std::string formatNumber(double v) {
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  std::string s = fmt::format("{:.12g}", v);
  if (s.rfind("-0", 0) == 0 && s.find_first_not_of("-0.e+") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string formatComplex(cplx z) {
  return fmt::format("({}, {})", formatNumber(z.real()), formatNumber(z.imag()));
}

std::string_view toString(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::discrepancy: return "DISCREPANCY";
  }
  return "?";
}

bool ScenarioResult::failed() const {
  for (const ScenarioCheck& c : checks) {
    if (c.status == CheckStatus::fail) return true;
  }
  return false;
}

int exitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return kParse;
    case ErrorCode::NoConvergence: return kNumerical;
    default: return kUsage;
  }
}

}  // namespace numrad::cli
