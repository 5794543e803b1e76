#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qlorentz/algebras/minkowski.hpp"
#include "qlorentz/algebras/symbols.hpp"
#include "qlorentz/cli/app.hpp"
#include "qlorentz/cli/expr.hpp"
#include "qlorentz/cli/suites.hpp"
#include "qlorentz/errors.hpp"
#include "qlorentz/rewrite/system.hpp"
#include "test_support.hpp"

using namespace qlorentz;
using nlohmann::json;

namespace {

const Regime uc = Regime::unit_circle();

NCPoly g(int id) { return NCPoly::gen(id); }

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qlorentz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json strip_timings(json j) {
  for (auto& c : j["checks"]) c.erase("elapsed_ms");
  return j;
}

NCPoly random_ncpoly(std::mt19937& rng, const Regime& r) {
  std::uniform_int_distribution<int> letter(0, gen::kCount - 1), deg(0, 3), count(1, 4);
  NCPoly p;
  for (int k = count(rng); k > 0; --k) {
    Word w(deg(rng));
    for (auto& x : w) x = letter(rng);
    for (;;) {
      try {
        p.add(w, specialize(testing::random_scalar(rng), r));
        break;
      } catch (const DivisionByZero&) {
      }
    }
  }
  return p;
}

}  // namespace

TEST_CASE("parse: defining polynomials of the unit-circle relations") {
  const Scalar q = specialize(Scalar::q(), uc), t = Scalar::t();
  const NCPoly ab = parse_expr("alpha*beta - t*q*beta*alpha", uc);
  CHECK(ab.terms().size() == 2);
  CHECK(ab == g(gen::kAlpha) * g(gen::kBeta) - t * q * g(gen::kBeta) * g(gen::kAlpha));

  const NCPoly ad = parse_expr("[alpha, delta] - (1/t)*(q - 1/q)*beta*gamma", uc);
  CHECK(ad == commutator(g(gen::kAlpha), g(gen::kDelta)) - (q - q.inverse()) / t * g(gen::kBeta) * g(gen::kGamma));
  CHECK(normal_form(minkowski(uc).system, ad).is_zero());
  CHECK(normal_form(minkowski(uc).system, ab).is_zero());

  CHECK(parse_expr("star(beta)", uc) == g(gen::kGamma));
  CHECK(parse_expr("star(q)", uc) == NCPoly(q.inverse()));
  CHECK(parse_expr("star(q)", Regime::real_q()) == NCPoly(specialize(Scalar::q(), Regime::real_q())));
}

TEST_CASE("parse: generators, powers and scalars") {
  CHECK(parse_expr("x[1,1]", uc) == g(gen::kAlpha));
  CHECK(parse_expr("x[2,1]", uc) == g(gen::kGamma));
  CHECK(parse_expr("x'[1,2]", uc) == g(gen::xp(1)));
  CHECK(parse_expr("beta'", uc) == g(gen::xp(1)));
  CHECK(parse_expr("u[2,1] + ub[1,2]", uc) == g(gen::u(1, 0)) + g(gen::ub(0, 1)));
  CHECK(parse_expr("h[3,0]", uc) == g(gen::h(3, 0)));
  CHECK(parse_expr("alpha^3", uc) == g(0) * g(0) * g(0));
  CHECK(parse_expr("q^(1/2)*q^(1/2)", uc) == parse_expr("q", uc));
  CHECK(parse_expr("t^(-1/2)", uc) == NCPoly(Scalar::atom(Atom::T, -1)));
  CHECK(parse_expr("0.25*alpha", uc) == g(0) * Scalar::rational(1, 4));
  CHECK(parse_expr("i*i", uc) == NCPoly(Scalar(-1)));
  CHECK(parse_expr("alpha/(q + 1)", uc) == g(0) * (specialize(Scalar::q(), uc) + Scalar(1)).inverse());
  CHECK(parse_expr("-alpha + alpha", uc).is_zero());
  CHECK(parse_expr("qb", uc) == NCPoly(specialize(Scalar::q(), uc).inverse()));
}

TEST_CASE("parse: errors") {
  CHECK_THROWS_AS(parse_expr("alpha +", uc), SyntaxError);
  CHECK_THROWS_AS(parse_expr("(alpha", uc), SyntaxError);
  CHECK_THROWS_AS(parse_expr("alpha ) ", uc), SyntaxError);
  CHECK_THROWS_AS(parse_expr("foo*alpha", uc), UnknownSymbol);
  CHECK_THROWS_AS(parse_expr("u[3,1]", uc), UnknownSymbol);
  CHECK_THROWS_AS(parse_expr("h[4,0]", uc), UnknownSymbol);
  CHECK_THROWS_AS(parse_expr("star(h[0,0])", uc), UnknownSymbol);
  CHECK_THROWS_AS(parse_expr("alpha/beta", uc), NoncommutativeDivision);
  CHECK_THROWS_AS(parse_expr("alpha^-1", uc), NoncommutativeDivision);
  CHECK_THROWS_AS(parse_expr("alpha^(1/2)", uc), SyntaxError);
  CHECK_THROWS_AS(parse_expr("alpha/(q - q)", uc), DivisionByZero);
  try {
    parse_expr("alpha * * beta", uc);
    FAIL("no throw");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 8);
  }
}

TEST_CASE("print then parse is the identity") {
  std::mt19937 rng(5);
  for (const Regime& r : {Regime::generic(), uc, Regime::real_q(), Regime::case2(-1), Regime::classical()}) {
    const Alphabet a = full_alphabet(r);
    for (int k = 0; k < 40; ++k) {
      const NCPoly p = random_ncpoly(rng, r);
      const std::string text = to_string(p, a);
      INFO(r.name() << ": " << text);
      CHECK(parse_expr(text, r) == p);
    }
  }
}

TEST_CASE("pretty printing") {
  CHECK(pretty("alpha*delta - (1/t)*(q - 1/qb)*beta'*gamma") ==
        "α·δ - (1/t)·(q - 1/q̄)·β′·γ");
}

TEST_CASE("suites") {
  CHECK(parse_suite("braid") == Suite::Braid);
  CHECK_THROWS_AS(parse_suite("nope"), DomainError);
  const Reports all = run_suite(uc, Suite::All);
  CHECK(std::is_sorted(all.begin(), all.end(),
                       [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; }));
  std::size_t parts = 0;
  for (const auto& name : suite_names())
    if (name != "all") parts += run_suite(uc, parse_suite(name)).size();
  CHECK(parts == all.size());
  CHECK(summarize(all).failed == 0);
}

TEST_CASE("cli: nf") {
  Run r = cli({"nf", "--regime", "unit-circle", "--expr", "delta*alpha"});
  CHECK(r.code == 0);
  CHECK(r.out == "alpha*delta - (1/t)*(q - 1/q)*beta*gamma\n");
  CHECK(cli({"nf", "--expr", "star(beta)"}).out == "gamma\n");
  CHECK(cli({"nf", "--regime", "classical", "--expr", "[delta', h[1,2]]"}).out == "0\n");
  CHECK(cli({"nf", "--regime", "classical", "--expr", "[alpha, u[1,2]]"}).out == "0\n");
  CHECK(cli({"nf", "--expr", "alpha/beta"}).code == 2);
  CHECK(cli({"nf", "--expr", "alpha +"}).code == 2);
  CHECK(cli({"nf", "--regime", "generic", "--expr", "h[0,0]*alpha"}).code == 2);
  CHECK(cli({"nf"}).code == 2);
}

TEST_CASE("cli: verify exit codes and report schema") {
  for (const char* r : {"generic", "unit-circle", "real-q", "case2+", "case2-", "classical"}) {
    Run run = cli({"verify", "--regime", r, "--format", "json"});
    INFO(r << run.err);
    CHECK(run.code == 0);
    const json j = json::parse(run.out);
    CHECK(j["version"] == kReportVersion);
    CHECK(j["regime"] == r);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["passed"] == j["checks"].size());
    CHECK(j["summary"].contains("skipped"));
    for (const auto& c : j["checks"]) {
      CHECK(c.contains("check_id"));
      CHECK(c["status"] == "pass");
    }
  }
  const json generic = json::parse(cli({"verify", "--regime", "generic", "--suite", "pbw", "--format", "json"}).out);
  bool found = false;
  for (const auto& c : generic["checks"])
    if (c["check_id"] == "pbw.obstruction-nonzero") {
      found = true;
      CHECK(c["negative_control"] == true);
      CHECK(c.contains("residual"));
    }
  CHECK(found);

  CHECK(cli({"verify", "--suite", "nope"}).code == 2);
  CHECK(cli({"verify", "--regime", "nope"}).code == 2);
  CHECK(cli({"verify", "--unknown"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli: json file output") {
  const auto path = std::filesystem::temp_directory_path() / "qlorentz_cli_test.json";
  std::filesystem::remove(path);
  CHECK(cli({"verify", "--suite", "moves", "--json", path.string()}).code == 0);
  std::ifstream f(path);
  const json j = json::parse(f);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["checks"].size() == run_suite(uc, Suite::Moves).size());
  std::filesystem::remove(path);
}

TEST_CASE("cli: relations, obstruction, length") {
  Run rel = cli({"relations", "--regime", "real-q", "--format", "json"});
  CHECK(rel.code == 0);
  const json j = json::parse(rel.out);
  CHECK(j["rules"].size() == 6);
  CHECK(j["order"] == json({"beta", "alpha", "delta", "gamma"}));
  // each printed relation parses back and reduces to zero
  for (const auto& s : j["relations"])
    CHECK(normal_form(minkowski(Regime::real_q()).system, parse_expr(s.get<std::string>(), Regime::real_q())).is_zero());

  Run ob = cli({"obstruction"});
  CHECK(ob.code == 0);
  CHECK(ob.out.find("ratio: -1/(qb*t)") != std::string::npos);

  Run len = cli({"length", "--regime", "unit-circle"});
  CHECK(len.code == 0);
  CHECK(len.out.find("c = -2") != std::string::npos);
  CHECK(cli({"length", "--regime", "generic"}).code == 2);
}

TEST_CASE("cli: eval") {
  Run r = cli({"eval", "--q", "0.80902,0.58779", "--t", "2.0", "--samples", "5", "--tol", "1e-9", "--regime",
               "unit-circle"});
  CHECK(r.code == 0);
  CHECK(r.out.find("6 points") != std::string::npos);

  const std::vector<std::string> args{"eval", "--regime", "real-q", "--samples", "3", "--seed", "42", "--format", "json"};
  const json a = strip_timings(json::parse(cli(args).out));
  const json b = strip_timings(json::parse(cli(args).out));
  CHECK(a == b);
  CHECK(a["summary"]["failed"] == 0);
  auto other = args;
  other[6] = "43";
  CHECK(strip_timings(json::parse(cli(other).out)) != a);

  CHECK(cli({"eval", "--q", "2,0", "--regime", "unit-circle", "--samples", "0"}).code == 2);
  CHECK(cli({"eval", "--q", "abc"}).code == 2);
  CHECK(cli({"eval", "--tol", "-1"}).code == 2);
  // a tolerance below rounding makes the mirrors fail
  CHECK(cli({"eval", "--samples", "1", "--tol", "1e-300"}).code == 1);
}
