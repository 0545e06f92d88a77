#include "courant/scalar.hpp"

#include <stdexcept>

namespace courant {

namespace {

std::string rational_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (is_real()) return Scalar(mpq_class(1) / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::str() const {
  if (is_real()) return rational_str(re_);
  auto imag_part = [](const mpq_class& q) -> std::string {
    if (q == 1) return "i";
    if (q == -1) return "-i";
    return rational_str(q) + "*i";
  };
  if (sgn(re_) == 0) return imag_part(im_);
  std::string out = "(" + rational_str(re_);
  std::string im = imag_part(im_);
  if (im.front() != '-') out += "+";
  out += im + ")";
  return out;
}

bool Scalar::prints_negative() const {
  if (is_real()) return sgn(re_) < 0;
  return sgn(re_) == 0 && sgn(im_) < 0;
}

}  // namespace courant
