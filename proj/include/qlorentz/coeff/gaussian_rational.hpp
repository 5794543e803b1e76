#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace qlorentz {

/// Exact complex rational `re + im*i`.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }
  static GaussianRational fraction(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return is_real() && re_ == 1; }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const;
  GaussianRational pow(int exponent) const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  // Text in the expression grammar: "3/2", "-i", "1/2 + 3*i".
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

}  // namespace qlorentz
