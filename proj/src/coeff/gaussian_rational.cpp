#include "qlorentz/coeff/gaussian_rational.hpp"

#include "qlorentz/errors.hpp"

namespace qlorentz {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator in rational literal");
  mpq_class v(num, den);
  v.canonicalize();
  return {v, 0};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero Gaussian rational");
  if (is_real()) return {mpq_class(1) / re_, 0};
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational GaussianRational::pow(int exponent) const {
  GaussianRational base = exponent < 0 ? inverse() : *this;
  unsigned e = exponent < 0 ? -exponent : exponent;
  GaussianRational result(1);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) throw DivisionByZero("division by zero Gaussian rational");
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  std::string im;
  if (im_ == 1) {
    im = "i";
  } else if (im_ == -1) {
    im = "-i";
  } else {
    im = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return im;
  if (sgn(im_) < 0) {
    std::string pos = (-im_ == 1) ? "i" : (mpq_class(-im_)).get_str() + "*i";
    return re_.get_str() + " - " + pos;
  }
  return re_.get_str() + " + " + im;
}

}  // namespace qlorentz
