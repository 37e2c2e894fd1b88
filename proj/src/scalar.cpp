#include "liecoh/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "liecoh/error.hpp"

namespace liecoh {

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (is_real()) return Scalar(1 / re_);
  Rational n = norm();
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

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (is_real() && o.is_real()) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  if (a.is_real() && b.is_real()) {
    re_ -= a.re_ * b.re_;
    return;
  }
  *this -= a * b;
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
  if (a.is_real() && b.is_real()) {
    re_ += a.re_ * b.re_;
    return;
  }
  *this += a * b;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view original) : original_(original) {
    for (char c : original)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  Scalar run() {
    if (text_.empty()) fail("empty scalar");
    Scalar total;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Scalar term = parse_term();
      total += sign < 0 ? -term : term;
      first = false;
    }
    return total;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "invalid scalar '" << original_ << "': " << what;
    if (pos_ < text_.size())
      os << " at '" << text_[pos_] << "' (position " << pos_ << ")";
    else
      os << " at end of input";
    throw ParseError(os.str());
  }

  mpz_class parse_digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(text_.substr(start, pos_ - start));
  }

  Scalar parse_term() {
    if (peek() == 'i') {
      ++pos_;
      return Scalar::i();
    }
    mpz_class num = parse_digits();
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos_;
      den = parse_digits();
      if (den == 0) fail("zero denominator");
    }
    Rational value(num, den);
    value.canonicalize();
    if (peek() == '*') {
      ++pos_;
      if (peek() != 'i') fail("expected 'i' after '*'");
      ++pos_;
      return Scalar(0, value);
    }
    return Scalar(value);
  }

  std::string_view original_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).run(); }

std::string Scalar::str() const {
  if (is_real()) return re_.get_str();
  std::string imag;
  Rational mag = abs(im_);
  if (mag == 1)
    imag = "i";
  else
    imag = mag.get_str() + "*i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace liecoh
