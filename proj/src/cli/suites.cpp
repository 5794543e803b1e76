#include "qlorentz/cli/suites.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "qlorentz/algebras/braided.hpp"
#include "qlorentz/algebras/crossed.hpp"
#include "qlorentz/algebras/minkowski.hpp"
#include "qlorentz/errors.hpp"
#include "qlorentz/intertwiners/checks.hpp"

namespace qlorentz {

namespace {

void append(Reports& out, Reports more) {
  for (auto& r : more) out.push_back(std::move(r));
}

bool wants(Suite s, Suite part) { return s == Suite::All || s == part; }

template <class T>
void matrix_suites(Reports& out, const CheckContext<T>& c, Suite s) {
  const auto kind = c.regime.kind();
  if (wants(s, Suite::Moves)) {
    append(out, elementary_moves(c));
    if (kind != Regime::Kind::Case2 && kind != Regime::Kind::Classical) out.push_back(moves_negative_control(c));
  }
  if (wants(s, Suite::Braid)) append(out, braid(c));
  if (wants(s, Suite::Spectral)) append(out, spectral(c));
  if (wants(s, Suite::Crossed)) {
    for (Variant v : {Variant::First, Variant::Second}) append(out, crossed_identities(c, v));
    out.push_back(x_e_shuttle(c));
    out.push_back(sse_negative_control(c));
  }
  if (kind == Regime::Kind::UnitCircle && wants(s, Suite::Compat) && !std::is_same_v<T, Scalar>)
    out.push_back(braided_sigma(c));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",     "moves", "braid", "spectral", "compat",
                                              "crossed", "pbw",   "delta", "length"};
  return names;
}

Suite parse_suite(std::string_view name) {
  const auto& names = suite_names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw DomainError("unknown suite '" + std::string(name) + "'");
  return static_cast<Suite>(it - names.begin());
}

Reports run_suite(const Regime& r, Suite s) {
  Reports out;
  matrix_suites(out, exact_context(r), s);
  const auto kind = r.kind();
  if (wants(s, Suite::Spectral) && kind == Regime::Kind::Classical) append(out, classical_limit());
  if (wants(s, Suite::Compat)) append(out, translation_compat(r));
  if (wants(s, Suite::Crossed)) {
    out.push_back(x_normalization(r));
    out.push_back(s_uniqueness(r));
    for (Variant v : {Variant::First, Variant::Second}) append(out, crossed_checks(r, v));
  }
  if (wants(s, Suite::Pbw)) {
    append(out, relation_checks(r));
    if (kind == Regime::Kind::Generic) append(out, pbw_checks());
  }
  if (wants(s, Suite::Delta)) append(out, delta_checks(r));
  if (wants(s, Suite::Length)) append(out, length_checks(r));
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
  return out;
}

Reports run_numeric(const Regime& r, const NumericPoint& p, double tol, Suite s) {
  const NumOperators ops = numeric_operators(r, p);
  const NumericContext c = numeric_context(ops, r, p, tol);
  Reports out;
  matrix_suites(out, c, s);
  const auto kind = r.kind();
  if (wants(s, Suite::Pbw) && (kind == Regime::Kind::UnitCircle || kind == Regime::Kind::RealQ)) {
    // the generic coefficients at a point with qb = conj(q)
    Stopwatch sw;
    const PbwObstruction ob = pbw_obstruction_generic();
    const double v = std::max(std::abs(evaluate(ob.at_aad, p)), std::abs(evaluate(ob.at_abg, p)));
    std::ostringstream os;
    os << "max |coefficient| " << v;
    out.push_back(expect_true("pbw.obstruction-vanishes", r, v < tol, os.str(), sw));
  }
  if (wants(s, Suite::Length) && kind != Regime::Kind::Generic) {
    Stopwatch sw;
    const NumMap ep_bar = compose(bar_conjugate(ops.Ep, r), flip<std::complex<double>>(Leg::B, Leg::B));
    const NumMap f = compose(kron(ops.Ep, ep_bar), place(ops.Xinv, {1, 2}, detail::sig("UBUB")));
    const NCPoly ell = minkowski_length(r);
    NumMap exact(f.in_sig(), f.out_sig());
    for (const auto& [w, coeff] : ell.terms()) exact(0, 4 * w[0] + w[1]) = evaluate(coeff, p);
    out.push_back(expect_equal("length.contraction", r, f, exact, tol, sw));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
  return out;
}

Summary summarize(const Reports& reps) {
  Summary s;
  for (const auto& r : reps) (r.passed ? s.passed : s.failed)++;
  return s;
}

nlohmann::json report_json(const std::string& regime, const Reports& reps) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : reps) checks.push_back(to_json(r));
  const Summary s = summarize(reps);
  return {{"version", kReportVersion},
          {"regime", regime},
          {"checks", checks},
          {"summary", {{"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}}}};
}

std::string report_text(const Reports& reps) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& r : reps) width = std::max(width, r.check_id.size());
  for (const auto& r : reps) {
    os << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.check_id << "  "
       << std::right << std::fixed << std::setprecision(1) << std::setw(8) << r.elapsed_ms << " ms";
    if (r.negative_control) os << "  [negative control]";
    if (!r.detail.empty()) os << "  " << r.detail;
    if (r.residual && (!r.passed || r.negative_control)) os << "  residual: " << *r.residual;
    os << "\n";
  }
  const Summary s = summarize(reps);
  os << s.passed << " passed, " << s.failed << " failed, " << s.skipped << " skipped\n";
  return os.str();
}

}  // namespace qlorentz
