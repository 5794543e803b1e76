#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qlorentz/tensor/tmap.hpp"

namespace qlorentz {

/// Outcome of one verification. `passed` means the observed outcome is the
/// expected one; for a negative control (an input that must break an
/// identity) that is a nonzero residual, recorded in `residual`.
struct CheckReport {
  std::string check_id;
  std::string regime;
  bool passed = false;
  bool negative_control = false;
  std::optional<std::string> residual;
  std::string detail;
  double elapsed_ms = 0.0;
};

using Reports = std::vector<CheckReport>;

inline CheckReport new_report(std::string id, const Regime& r, bool passed = false) {
  CheckReport rep;
  rep.check_id = std::move(id);
  rep.regime = r.name();
  rep.passed = passed;
  return rep;
}

nlohmann::json to_json(const CheckReport& r);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Description of the first nonzero entry, or nullopt when the map is zero.
// The exact overload ignores `tol`; the numeric one compares the max-norm.
std::optional<std::string> residual(const TMap& diff, double tol);
std::optional<std::string> residual(const NumMap& diff, double tol);

inline bool near(const Scalar& a, const Scalar& b, double) { return a == b; }
inline bool near(const std::complex<double>& a, const std::complex<double>& b, double tol) {
  return std::abs(a - b) < tol;
}

template <class T>
std::optional<std::string> difference(const BasicTMap<T>& lhs, const BasicTMap<T>& rhs, double tol) {
  if (lhs.in_sig() != rhs.in_sig() || lhs.out_sig() != rhs.out_sig())
    return "signature " + to_string(lhs.in_sig()) + "->" + to_string(lhs.out_sig()) + " vs " +
           to_string(rhs.in_sig()) + "->" + to_string(rhs.out_sig());
  return residual(lhs - rhs, tol);
}

template <class T>
CheckReport expect_equal(std::string id, const Regime& r, const BasicTMap<T>& lhs, const BasicTMap<T>& rhs,
                         double tol, const Stopwatch& sw) {
  CheckReport rep = new_report(std::move(id), r);
  rep.residual = difference(lhs, rhs, tol);
  rep.passed = !rep.residual.has_value();
  rep.elapsed_ms = sw.ms();
  return rep;
}

template <class T>
CheckReport expect_different(std::string id, const Regime& r, const BasicTMap<T>& lhs, const BasicTMap<T>& rhs,
                             double tol, const Stopwatch& sw) {
  CheckReport rep = new_report(std::move(id), r);
  rep.negative_control = true;
  rep.residual = difference(lhs, rhs, tol);
  rep.passed = rep.residual.has_value();
  rep.elapsed_ms = sw.ms();
  return rep;
}

inline CheckReport expect_true(std::string id, const Regime& r, bool ok, std::string detail, const Stopwatch& sw) {
  CheckReport rep = new_report(std::move(id), r);
  rep.passed = ok;
  if (!ok) rep.residual = detail;
  rep.detail = std::move(detail);
  rep.elapsed_ms = sw.ms();
  return rep;
}

}  // namespace qlorentz
