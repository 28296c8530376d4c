#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numrad/linalg.hpp"
#include "numrad/matrix.hpp"

namespace numrad::cli {

/// JSON matrix file: {"rows", "cols", "entries": [[[re, im], ...], ...],
/// "field": "real"|"complex", "partition": [n1, n2, ...]}.
struct MatrixDocument {
  CMatrix matrix;
  std::optional<BlockPartition> partition;
};

/// Throws Error(ParseError) on malformed or inconsistent documents.
MatrixDocument parseDocument(std::string_view text);
MatrixDocument loadDocument(const std::string& path);

/// Shortest round-trip decimal form, so parseDocument(writeDocument(d))
/// reproduces every entry bit for bit.
std::string writeDocument(const MatrixDocument& doc);

/// 12 significant digits, '.' separator, no negative zero.
std::string formatNumber(double v);
std::string formatComplex(cplx z);

enum class CheckStatus { pass, fail, discrepancy };
std::string_view toString(CheckStatus s);

struct ScenarioCheck {
  std::string description;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::pass;
};

struct ScenarioResult {
  std::string id;
  std::vector<ScenarioCheck> checks;

  bool failed() const;
};

const std::vector<std::string>& scenarioIds();

/// Throws Error(InvalidArgument) for unknown ids.
ScenarioResult runScenario(std::string_view id);

/// Exit status of the command line tool.
enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kNumerical = 3 };

int exitCodeFor(ErrorCode code);

/// Full command line (without the program name). Output is written only when
/// the command gets far enough to produce it; parse failures print nothing to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numrad::cli
