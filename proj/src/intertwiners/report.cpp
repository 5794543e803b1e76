#include "qlorentz/intertwiners/report.hpp"

#include <sstream>

namespace qlorentz {

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j{{"check_id", r.check_id},
                   {"regime", r.regime},
                   {"status", r.passed ? "pass" : "fail"},
                   {"elapsed_ms", r.elapsed_ms}};
  if (r.residual) j["residual"] = *r.residual;
  if (r.negative_control) j["negative_control"] = true;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

std::optional<std::string> residual(const TMap& diff, double) {
  auto nz = first_nonzero(diff);
  if (!nz) return std::nullopt;
  return nz->describe();
}

std::optional<std::string> residual(const NumMap& diff, double tol) {
  const double norm = max_norm(diff);
  if (norm < tol) return std::nullopt;
  std::ostringstream os;
  os << "max-norm " << norm;
  return os.str();
}

}  // namespace qlorentz
