#include "ncnull/scalar.hpp"

#include <cctype>
#include <ostream>

#include "ncnull/errors.hpp"

namespace ncnull {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  bool digits = false, slash = false, den_digits = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? den_digits : digits) = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
    } else {
      throw Error("malformed rational '" + s + "'");
    }
  }
  if (!digits || (slash && !den_digits)) throw Error("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw SingularMatrix("division by zero scalar");
  if (is_real()) return Scalar(1 / re_);
  const Rational n = norm();
  return Scalar(re_ / n, -im_ / n);
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
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  if (sgn(im_) < 0) return re_.get_str() + " - " + Rational(-im_).get_str() + "i";
  return re_.get_str() + " + " + im_.get_str() + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::string scalar_literal(const Scalar& s) {
  if (s.is_real()) {
    if (sgn(s.re()) >= 0) return s.re().get_str();
    return "(" + s.re().get_str() + ")";
  }
  return "(" + s.to_string() + ")";
}

}  // namespace ncnull
