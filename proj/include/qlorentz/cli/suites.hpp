#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qlorentz/intertwiners/report.hpp"

namespace qlorentz {

enum class Suite { All, Moves, Braid, Spectral, Compat, Crossed, Pbw, Delta, Length };

const std::vector<std::string>& suite_names();
// Throws DomainError on an unknown name.
Suite parse_suite(std::string_view name);

/// Exact checks of one suite (or all), sorted by check id.
Reports run_suite(const Regime& r, Suite s);

/// Floating-point mirrors of the matrix identities at one point, plus the
/// numeric contraction behind the Minkowski length and (unit circle, real
/// q) the obstruction coefficients evaluated on their vanishing locus.
Reports run_numeric(const Regime& r, const NumericPoint& p, double tol, Suite s = Suite::All);

struct Summary {
  std::size_t passed = 0, failed = 0, skipped = 0;
};
Summary summarize(const Reports& reps);

inline constexpr const char* kReportVersion = "1.0";

/// {version, regime, checks, summary}
nlohmann::json report_json(const std::string& regime, const Reports& reps);

/// One line per check plus a summary line.
std::string report_text(const Reports& reps);

}  // namespace qlorentz
