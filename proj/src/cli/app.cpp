#include "qlorentz/cli/app.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "qlorentz/algebras/braided.hpp"
#include "qlorentz/algebras/crossed.hpp"
#include "qlorentz/algebras/minkowski.hpp"
#include "qlorentz/algebras/symbols.hpp"
#include "qlorentz/cli/expr.hpp"
#include "qlorentz/cli/suites.hpp"
#include "qlorentz/errors.hpp"

namespace qlorentz {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string regime = "unit-circle";
  std::string suite = "all";
  std::string format = "text";
  std::string expr;
  std::string q;
  std::optional<double> t;
  int samples = 5;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::string json_path;
};

using Json = nlohmann::json;

std::string show(const NCPoly& p, const Alphabet& a, const Options& o) {
  const std::string s = to_string(p, a);
  return o.format == "unicode" ? pretty(s) : s;
}
std::string show(const Scalar& s, const Options& o) {
  return o.format == "unicode" ? pretty(s.to_string()) : s.to_string();
}

void write_json_file(const Options& o, const Json& j) {
  if (o.json_path.empty()) return;
  std::ofstream f(o.json_path);
  if (!f) throw UsageError("cannot write '" + o.json_path + "'");
  f << j.dump(2) << "\n";
}

int finish(const Options& o, const Regime& r, const Reports& reps, std::ostream& out, const Json& extra = {}) {
  Json j = report_json(r.name(), reps);
  if (extra.is_object())
    for (const auto& [k, v] : extra.items()) j[k] = v;
  if (o.format == "json")
    out << j.dump(2) << "\n";
  else
    out << report_text(reps);
  write_json_file(o, j);
  return summarize(reps).failed == 0 ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Regime r = Regime::parse(o.regime);
  return finish(o, r, run_suite(r, parse_suite(o.suite)), out);
}

int cmd_relations(const Options& o, std::ostream& out) {
  const Regime r = Regime::parse(o.regime);
  const MinkowskiAlgebra& alg = minkowski(r);
  const Alphabet& a = alg.system.alphabet();
  std::vector<std::string> order;
  for (int id : a.ordered()) order.push_back(a.name(id));
  if (o.format == "json") {
    Json rel = Json::array(), rules = Json::array();
    for (const auto& p : alg.relations) rel.push_back(to_string(p, a));
    for (const auto& rule : alg.system.rules())
      rules.push_back({{"lhs", to_string(rule.lhs, a)}, {"rhs", to_string(rule.rhs, a)}});
    out << Json{{"regime", r.name()}, {"order", order}, {"relations", rel}, {"rules", rules}}.dump(2) << "\n";
    return 0;
  }
  out << "regime: " << r.name() << "\norder:";
  for (std::size_t k = 0; k < order.size(); ++k) out << (k ? " < " : " ") << (o.format == "unicode" ? pretty(order[k]) : order[k]);
  out << "\nrelations:\n";
  for (const auto& p : alg.relations) out << "  " << show(p, a, o) << " = 0\n";
  out << "rules:\n";
  for (const auto& rule : alg.system.rules()) {
    const std::string s = to_string(rule, a);
    out << "  " << (o.format == "unicode" ? pretty(s) : s) << "\n";
  }
  return 0;
}

bool any_of_kind(const NCPoly& p, bool (*pred)(int)) {
  for (const auto& [w, c] : p.terms())
    for (int id : w)
      if (pred(id)) return true;
  return false;
}

// Braided system when x' or h occur, crossed product when u or ub occur,
// Minkowski space otherwise.
NCPoly reduce_any(const NCPoly& p, const Regime& r) {
  const bool braided = any_of_kind(p, gen::is_xp) || any_of_kind(p, gen::is_h);
  const bool crossed_part = any_of_kind(p, gen::is_u) || any_of_kind(p, gen::is_ub);
  if (braided && crossed_part) throw UsageError("u/ub and x'/h cannot be mixed in one expression");
  if (braided) {
    if (r.kind() == Regime::Kind::UnitCircle) return normal_form(braided_system(r, Scalar::q(-1)), p);
    if (r.kind() == Regime::Kind::Classical) return normal_form(braided_system(r, Scalar(1)), p);
    throw UsageError("x' and h need the unit-circle or classical regime");
  }
  if (crossed_part) return crossed_reduce(p, r, Variant::First);
  return normal_form(minkowski(r).system, p);
}

int cmd_nf(const Options& o, std::ostream& out) {
  const Regime r = Regime::parse(o.regime);
  if (o.expr.empty()) throw UsageError("nf needs --expr");
  const NCPoly nf = reduce_any(parse_expr(o.expr, r), r);
  const Alphabet a = full_alphabet(r);
  if (o.format == "json")
    out << Json{{"regime", r.name()}, {"expr", o.expr}, {"normal_form", to_string(nf, a)}}.dump(2) << "\n";
  else
    out << show(nf, a, o) << "\n";
  return 0;
}

int cmd_obstruction(const Options& o, std::ostream& out) {
  const Regime r = Regime::generic();
  const PbwObstruction ob = pbw_obstruction_generic();
  const Alphabet a = minkowski_alphabet(r);
  const Json coeffs{{"alpha*alpha*delta", ob.at_aad.to_string()},
                    {"alpha*beta*gamma", ob.at_abg.to_string()},
                    {"ratio", (ob.at_abg / ob.at_aad).to_string()}};
  if (o.format != "json") {
    out << "gamma*(beta*alpha): " << show(ob.inner_first, a, o) << "\n"
        << "(gamma*beta)*alpha: " << show(ob.outer_first, a, o) << "\n"
        << "at alpha*alpha*delta: " << show(ob.at_aad, o) << "\n"
        << "at alpha*beta*gamma:  " << show(ob.at_abg, o) << "\n"
        << "ratio: " << show(ob.at_abg / ob.at_aad, o) << "\n";
  }
  return finish(o, r, pbw_checks(), out, Json{{"coefficients", coeffs}});
}

int cmd_length(const Options& o, std::ostream& out) {
  const Regime r = Regime::parse(o.regime);
  if (r.kind() == Regime::Kind::Generic) throw UsageError("length needs a specialized regime");
  const MinkowskiAlgebra& alg = minkowski(r);
  const NCPoly ell = normal_form(alg.system, minkowski_length(r));
  if (o.format != "json") out << "l = " << show(ell, alg.system.alphabet(), o) << "\n";
  return finish(o, r, length_checks(r), out, Json{{"length", to_string(ell, alg.system.alphabet())}});
}

std::complex<double> parse_q(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const double re = std::stod(text.substr(0, comma), &used);
    if (used != text.substr(0, comma).size()) throw std::invalid_argument(text);
    double im = 0.0;
    if (comma != std::string::npos) {
      const std::string rest = text.substr(comma + 1);
      im = std::stod(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(text);
    }
    return {re, im};
  } catch (const std::logic_error&) {
    throw UsageError("--q expects RE,IM, got '" + text + "'");
  }
}

// A user point within 1e-3 of the unit circle is projected onto it so that
// rounded inputs like 0.80902,0.58779 are accepted.
std::complex<double> normalize_q(std::complex<double> q, const Regime& r) {
  if (r.kind() == Regime::Kind::UnitCircle && std::abs(std::abs(q) - 1.0) < 1e-3) return q / std::abs(q);
  if ((r.kind() == Regime::Kind::RealQ || r.kind() == Regime::Kind::Case2) && std::abs(q.imag()) < 1e-12)
    return {q.real(), 0.0};
  return q;
}

// Angles stay away from q = +-1 and q = +-i, where some matrices degenerate.
std::pair<std::complex<double>, double> sample_point(const Regime& r, std::mt19937_64& rng,
                                                     std::optional<double> fixed_t) {
  std::uniform_real_distribution<double> angle(0.15, 1.42), modulus(0.6, 1.6), real(0.4, 2.5), tdist(0.5, 2.0);
  std::bernoulli_distribution coin;
  const double theta = (coin(rng) ? 1.0 : -1.0) * angle(rng) + (coin(rng) ? std::numbers::pi : 0.0);
  const double t = fixed_t ? *fixed_t : tdist(rng);
  switch (r.kind()) {
    case Regime::Kind::UnitCircle:
      return {std::polar(1.0, theta), t};
    case Regime::Kind::Generic:
      return {std::polar(modulus(rng), theta), t};
    case Regime::Kind::RealQ:
    case Regime::Kind::Case2:
      return {real(rng), t};
    case Regime::Kind::Classical:
      break;
  }
  return {1.0, 1.0};
}

std::string describe(std::complex<double> q, double t) {
  std::ostringstream os;
  os.precision(6);
  os << "q = " << q.real() << (q.imag() < 0 ? "-" : "+") << std::abs(q.imag()) << "i, t = " << t;
  return os.str();
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Regime r = Regime::parse(o.regime);
  const Suite suite = parse_suite(o.suite);
  if (o.samples < 0) throw UsageError("--samples must be non-negative");
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  std::vector<std::pair<std::complex<double>, double>> points;
  if (!o.q.empty()) points.emplace_back(normalize_q(parse_q(o.q), r), o.t.value_or(1.0));
  std::mt19937_64 rng(o.seed);
  for (int k = 0; k < o.samples; ++k) points.push_back(sample_point(r, rng, o.t));

  Reports all;
  std::ostringstream text;
  for (const auto& [q, t] : points) {
    NumericPoint p;
    try {
      p = numeric_point(q, t, r);
    } catch (const DomainError& e) {
      throw UsageError(std::string(e.what()));
    }
    Reports reps = run_numeric(r, p, o.tol, suite);
    const std::string where = describe(q, t);
    text << where << "\n" << report_text(reps);
    for (auto& rep : reps) {
      rep.detail = rep.detail.empty() ? where : where + "; " + rep.detail;
      all.push_back(std::move(rep));
    }
  }
  const Json j = report_json(r.name(), all);
  if (o.format == "json")
    out << j.dump(2) << "\n";
  else
    out << text.str() << points.size() << " points: " << summarize(all).passed << " passed, "
        << summarize(all).failed << " failed\n";
  write_json_file(o, j);
  return summarize(all).failed == 0 ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of quantum Lorentz group intertwiners and quantum Minkowski space"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> regimes{"generic", "unit-circle", "real-q", "case2+", "case2-", "classical"};

  auto regime_flag = [&](CLI::App* c) {
    c->add_option("--regime", o.regime, "parameter regime")->check(CLI::IsMember(regimes));
  };
  auto format_flag = [&](CLI::App* c, std::vector<std::string> formats) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
  };
  auto json_flag = [&](CLI::App* c) { c->add_option("--json", o.json_path, "also write the JSON report here"); };
  auto suite_flag = [&](CLI::App* c) {
    c->add_option("--suite", o.suite, "check suite")->check(CLI::IsMember(suite_names()));
  };

  auto* verify = app.add_subcommand("verify", "run exact check suites");
  regime_flag(verify), suite_flag(verify), format_flag(verify, {"text", "json"}), json_flag(verify);

  auto* relations = app.add_subcommand("relations", "print the Minkowski relations and rewrite rules");
  regime_flag(relations), format_flag(relations, {"text", "json", "unicode"});

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  regime_flag(nf), format_flag(nf, {"text", "json", "unicode"});
  nf->add_option("--expr", o.expr, "expression")->required();

  auto* obstruction = app.add_subcommand("obstruction", "the generic PBW obstruction");
  format_flag(obstruction, {"text", "json", "unicode"}), json_flag(obstruction);

  auto* length = app.add_subcommand("length", "the Minkowski length and its checks");
  regime_flag(length), format_flag(length, {"text", "json", "unicode"}), json_flag(length);

  auto* eval = app.add_subcommand("eval", "floating-point mirrors of the matrix identities");
  regime_flag(eval), suite_flag(eval), format_flag(eval, {"text", "json"}), json_flag(eval);
  eval->add_option("--q", o.q, "q as RE,IM");
  eval->add_option("--t", o.t, "t (random in [0.5, 2] when absent)")->check(CLI::PositiveNumber);
  eval->add_option("--samples", o.samples, "random points besides --q")->check(CLI::NonNegativeNumber);
  eval->add_option("--tol", o.tol, "residual tolerance")->check(CLI::PositiveNumber);
  eval->add_option("--seed", o.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(o, out);
    if (*relations) return cmd_relations(o, out);
    if (*nf) return cmd_nf(o, out);
    if (*obstruction) return cmd_obstruction(o, out);
    if (*length) return cmd_length(o, out);
    if (*eval) return cmd_eval(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownSymbol& e) {
    err << "unknown symbol: " << e.what() << "\n";
    return 2;
  } catch (const NoncommutativeDivision& e) {
    err << "noncommutative division: " << e.what() << "\n";
    return 2;
  } catch (const DivisionByZero& e) {
    err << "division by zero: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qlorentz
