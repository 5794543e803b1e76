#include <random>

#include "doctest.h"
#include "qlorentz/errors.hpp"
#include "qlorentz/rewrite/system.hpp"
#include "test_support.hpp"

using namespace qlorentz;

namespace {

const Scalar q = Scalar::q();
const Scalar t = Scalar::t();

enum { A, B, C, D };

Alphabet greek(std::vector<int> order) {
  Alphabet a;
  for (const char* n : {"alpha", "beta", "gamma", "delta"}) a.add(n);
  a.set_star(A, A);
  a.set_star(B, C);
  a.set_star(D, D);
  a.set_order(order);
  return a;
}

NCPoly g(int id) { return NCPoly::gen(id); }

// Unit-circle relations, written out by hand.
std::vector<NCPoly> unit_circle_relations() {
  return {
      g(A) * g(B) - t * q * g(B) * g(A),
      g(A) * g(C) - q / t * g(C) * g(A),
      g(B) * g(D) - t * q * g(D) * g(B),
      g(C) * g(D) - q / t * g(D) * g(C),
      g(B) * g(C) - g(C) * g(B),
      commutator(g(A), g(D)) - (q - q.inverse()) / t * g(B) * g(C),
  };
}

RewriteSystem unit_circle_system() {
  return orient(unit_circle_relations(), greek({A, B, C, D}), Regime::unit_circle());
}

// Words of the given degree avoiding every rule lhs, by enumeration.
std::size_t brute_force_normal_words(const RewriteSystem& sys, std::size_t degree) {
  const int n = static_cast<int>(sys.alphabet().size());
  std::size_t total = 0, count = 1;
  for (std::size_t k = 0; k < degree; ++k) count *= n;
  for (std::size_t code = 0; code < count; ++code) {
    Word w;
    for (std::size_t k = 0, c = code; k < degree; ++k, c /= n) w.push_back(static_cast<int>(c % n));
    if (is_normal(sys, w)) ++total;
  }
  return total;
}

NCPoly random_ncpoly(std::mt19937& rng, std::size_t max_degree, int terms) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::uniform_int_distribution<int> letter(0, 3), coeff(-3, 3);
  NCPoly p;
  for (int k = 0; k < terms; ++k) {
    Word w(deg(rng));
    for (auto& x : w) x = letter(rng);
    p.add(w, specialize(Scalar(coeff(rng)) * q.pow(coeff(rng)), Regime::unit_circle()));
  }
  return p;
}

}  // namespace

TEST_CASE("deg-lex order") {
  Alphabet a = greek({B, A, D, C});
  CHECK(deglex_less(a, {A}, {B, B}));
  CHECK(deglex_less(a, {B, C}, {A, B}));
  CHECK_FALSE(deglex_less(a, {A, B}, {A, B}));
  CHECK(a.ordered() == std::vector<int>{B, A, D, C});
  Alphabet dup;
  dup.add("x");
  CHECK_THROWS_AS(dup.add("x"), DomainError);
}

TEST_CASE("orienting the unit-circle relations") {
  RewriteSystem sys = unit_circle_system();
  REQUIRE(sys.rules().size() == 6);
  const RewriteRule* ba = sys.find(B, A);
  REQUIRE(ba);
  CHECK(ba->rhs == NCPoly::word({A, B}, (t * q).inverse()));
  CHECK(sys.find(A, B) == nullptr);
  CHECK(to_string(*ba, sys.alphabet()) == "beta*alpha -> 1/(q*t)*alpha*beta");
}

TEST_CASE("normal form examples") {
  RewriteSystem sys = unit_circle_system();
  const Alphabet& a = sys.alphabet();
  NCPoly da = normal_form(sys, g(D) * g(A));
  CHECK(to_string(da, a) == "alpha*delta - (1/t)*(q - 1/q)*beta*gamma");
  CHECK(normal_form(sys, g(C) * g(B)) == g(B) * g(C));
  CHECK(normal_form(sys, g(A) * g(B)) == g(A) * g(B));
  CHECK(normal_form(sys, NCPoly(Scalar(3))) == NCPoly(Scalar(3)));
  CHECK(normal_form(sys, NCPoly()).is_zero());
  // gamma*beta*alpha -> beta*gamma*alpha -> ... -> alpha*beta*gamma
  NCPoly cba = normal_form(sys, g(C) * g(B) * g(A));
  CHECK(cba == NCPoly::word({A, B, C}, specialize(q.pow(-2), Regime::unit_circle())));
}

TEST_CASE("star of words") {
  Alphabet a = greek({A, B, C, D});
  CHECK(star_poly(a, Regime::unit_circle(), g(A) * g(B)) == g(C) * g(A));
  NCPoly p = Scalar::i() * q * g(B) * g(D);
  NCPoly s = star_poly(a, Regime::unit_circle(), p);
  CHECK(s == -Scalar::i() * q.inverse() * g(D) * g(C));
  CHECK(star_poly(a, Regime::unit_circle(), s) == p);
}

TEST_CASE("orientation errors") {
  Alphabet a = greek({A, B, C, D});
  CHECK_THROWS_AS(orient({g(A) - Scalar(1)}, a, Regime::generic()), NotOrientable);
  CHECK_THROWS_AS(orient({NCPoly(Scalar(2))}, a, Regime::generic()), NotOrientable);
  CHECK(orient({}, a, Regime::generic()).rules().empty());
  RewriteSystem sys(a, Regime::generic());
  sys.add_rule({{B, A}, g(A) * g(B)});
  CHECK_THROWS_AS(sys.add_rule({{B, A}, g(A) * g(A)}), DuplicateLeading);
  CHECK_THROWS_AS(sys.add_rule({{A, B}, g(B) * g(A)}), NotOrientable);
  CHECK_THROWS_AS(sys.add_rule({{A, B, C}, NCPoly()}), NotOrientable);
  // dependent relations collapse to one rule
  NCPoly r = g(B) * g(A) - q * g(A) * g(B);
  CHECK(orient({r, r * Scalar(2)}, a, Regime::generic()).rules().size() == 1);
}

TEST_CASE("confluence") {
  RewriteSystem sys = unit_circle_system();
  CHECK(check_confluence(sys).empty());
  const std::size_t expected[] = {1, 4, 10, 20, 35};
  for (std::size_t d = 0; d < 5; ++d) {
    CHECK(count_normal_words(sys, d) == expected[d]);
    CHECK(count_normal_words(sys, d) == brute_force_normal_words(sys, d));
  }

  // b a -> q a b, c b -> q b c, c a -> a c + a b: the overlap c b a
  // resolves to q^2 abc + q^2 abb one way and q^2 abc + q abb the other.
  Alphabet abc;
  for (const char* n : {"a", "b", "c"}) abc.add(n);
  for (int k = 0; k < 3; ++k) abc.set_star(k, k);
  abc.set_order({0, 1, 2});
  RewriteSystem bad(abc, Regime::generic());
  bad.add_rule({{1, 0}, q * g(0) * g(1)});
  bad.add_rule({{2, 1}, q * g(1) * g(2)});
  bad.add_rule({{2, 0}, g(0) * g(2) + g(0) * g(1)});
  auto obstructions = check_confluence(bad);
  REQUIRE(obstructions.size() == 1);
  CHECK(obstructions[0].overlap == Word{2, 1, 0});
  CHECK(obstructions[0].difference == NCPoly::word({0, 1, 1}, q * (q - Scalar(1))));
}

TEST_CASE("normal form properties") {
  RewriteSystem sys = unit_circle_system();
  const Regime uc = Regime::unit_circle();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    NCPoly p = random_ncpoly(rng, 3, 3), r = random_ncpoly(rng, 3, 3);
    NCPoly np = normal_form(sys, p), nr = normal_form(sys, r);
    for (const auto& [w, c] : np.terms()) CHECK(is_normal(sys, w));
    CHECK(normal_form(sys, np) == np);
    CHECK(normal_form(sys, p * r) == normal_form(sys, np * nr));
    CHECK(normal_form(sys, p + r) == np + nr);
    CHECK(normal_form(sys, p - np).is_zero());
    // the relation ideal is star-stable on the unit circle
    NCPoly sp = star_poly(sys.alphabet(), uc, p);
    CHECK(normal_form(sys, sp) == normal_form(sys, star_poly(sys.alphabet(), uc, np)));
  }
}
