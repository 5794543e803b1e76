#include "qlorentz/cli/expr.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>

#include "qlorentz/algebras/symbols.hpp"
#include "qlorentz/errors.hpp"

namespace qlorentz {

namespace {

bool is_scalar(const NCPoly& p) {
  for (const auto& [w, c] : p.terms())
    if (!w.empty()) return false;
  return true;
}

Scalar scalar_of(const NCPoly& p) { return p.coeff({}); }

class Parser {
 public:
  Parser(std::string_view text, const Regime& r) : text_(text), regime_(r), alphabet_(full_alphabet(r)) {}

  NCPoly parse() {
    NCPoly p = expr();
    skip();
    if (pos_ != text_.size()) throw SyntaxError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      skip();
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected an integer", pos_);
    if (pos_ - start > 15) throw SyntaxError("integer too long", start);
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  NCPoly expr() {
    NCPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  NCPoly term() {
    NCPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (peek('/')) {
        const std::size_t at = pos_++;
        NCPoly d = unary();
        if (!is_scalar(d)) throw NoncommutativeDivision("division by a noncommutative expression at position " + std::to_string(at));
        if (d.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(at));
        acc *= scalar_of(d).inverse();
      } else {
        return acc;
      }
    }
  }

  NCPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  NCPoly power() {
    std::optional<Atom> half_base;
    NCPoly base = atom(half_base);
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    long num, den = 1;
    if (accept('(')) {
      const bool neg = accept('-');
      num = integer();
      if (neg) num = -num;
      if (accept('/')) den = integer();
      expect(')');
    } else {
      const bool neg = accept('-');
      num = integer();
      if (neg) num = -num;
    }
    if (den != 1 && den != 2) throw SyntaxError("exponent denominator must be 1 or 2", at);
    if (den == 2) {
      if (!half_base) throw SyntaxError("half powers apply to q, qb and t only", at);
      return NCPoly(specialize(Scalar::atom(*half_base, static_cast<int>(num)), regime_));
    }
    if (is_scalar(base)) {
      const Scalar s = scalar_of(base);
      if (s.is_zero() && num < 0) throw DivisionByZero("zero to a negative power at position " + std::to_string(at));
      return NCPoly(s.pow(static_cast<int>(num)));
    }
    if (num < 0) throw NoncommutativeDivision("negative power of a noncommutative expression at position " + std::to_string(at));
    NCPoly out(Scalar(1));
    for (long k = 0; k < num; ++k) out = out * base;
    return out;
  }

  NCPoly number() {
    const std::size_t start = pos_;
    long whole = integer();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const std::size_t frac_start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::size_t digits = pos_ - frac_start;
      if (digits == 0 || digits > 9) throw SyntaxError("bad decimal", start);
      long scale = 1;
      for (std::size_t k = 0; k < digits; ++k) scale *= 10;
      const long frac = std::stol(std::string(text_.substr(frac_start, digits)));
      return NCPoly(Scalar::rational(whole * scale + frac, scale));
    }
    return NCPoly(Scalar(whole));
  }

  // [a,b] index pair after a generator family name.
  std::pair<int, int> index_pair(int lo, int hi) {
    expect('[');
    skip();
    const std::size_t at = pos_;
    const long a = integer();
    expect(',');
    const long b = integer();
    expect(']');
    if (a < lo || a > hi || b < lo || b > hi)
      throw UnknownSymbol("index out of range at position " + std::to_string(at));
    return {static_cast<int>(a), static_cast<int>(b)};
  }

  NCPoly atom(std::optional<Atom>& half_base) {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (accept('(')) {
      NCPoly p = expr();
      expect(')');
      return p;
    }
    if (accept('[')) {
      NCPoly a = expr();
      expect(',');
      NCPoly b = expr();
      expect(']');
      return commutator(a, b);
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) throw SyntaxError("unexpected '" + std::string(1, c) + "'", pos_);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    const bool primed = pos_ < text_.size() && text_[pos_] == '\'';
    if (primed) ++pos_;

    if (!primed) {
      for (const auto& [sym, a] : {std::pair{"q", Atom::Q}, std::pair{"qb", Atom::QBar}, std::pair{"t", Atom::T}}) {
        if (name != sym) continue;
        half_base = a;
        return NCPoly(specialize(Scalar::atom(a, 2), regime_));
      }
      if (name == "i") return NCPoly(Scalar::i());
      if (name == "star") {
        expect('(');
        NCPoly p = expr();
        expect(')');
        try {
          return star_poly(alphabet_, regime_, specialize(p, regime_));
        } catch (const DomainError& e) {
          throw UnknownSymbol(std::string(e.what()) + " (star at position " + std::to_string(start) + ")");
        }
      }
      if (name == "u" || name == "ub") {
        auto [a, b] = index_pair(1, 2);
        return NCPoly::gen(name == "u" ? gen::u(a - 1, b - 1) : gen::ub(a - 1, b - 1));
      }
      if (name == "h") {
        auto [j, k] = index_pair(0, 3);
        return NCPoly::gen(gen::h(j, k));
      }
    }
    if (name == "x") {
      auto [a, b] = index_pair(1, 2);
      const int j = gen::x(a - 1, b - 1);
      return NCPoly::gen(primed ? gen::xp(j) : j);
    }
    if (auto id = alphabet_.find(primed ? name + "'" : name)) {
      if (gen::is_x(*id) || gen::is_xp(*id)) return NCPoly::gen(*id);
    }
    throw UnknownSymbol("unknown symbol '" + name + (primed ? "'" : "") + "' at position " + std::to_string(start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const Regime& regime_;
  Alphabet alphabet_;
};

}  // namespace

NCPoly parse_expr(std::string_view text, const Regime& r) { return specialize(Parser(text, r).parse(), r); }

std::string pretty(std::string_view ascii) {
  static const std::map<std::string, std::string, std::less<>> names{
      {"alpha", "\u03b1"}, {"beta", "\u03b2"}, {"gamma", "\u03b3"}, {"delta", "\u03b4"}, {"qb", "q\u0304"}};
  std::string out;
  std::size_t i = 0;
  while (i < ascii.size()) {
    const char c = ascii[i];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < ascii.size() && std::isalpha(static_cast<unsigned char>(ascii[j]))) ++j;
      const std::string_view word = ascii.substr(i, j - i);
      auto it = names.find(word);
      out += it == names.end() ? std::string(word) : it->second;
      i = j;
    } else {
      out += c == '*' ? std::string("\u00b7") : c == '\'' ? std::string("\u2032") : std::string(1, c);
      ++i;
    }
  }
  return out;
}

}  // namespace qlorentz
