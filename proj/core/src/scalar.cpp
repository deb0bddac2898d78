#include "hypermoment/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "hypermoment/errors.hpp"

namespace hypermoment {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw UsageError("malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) bad_number(text);
    Integer n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
    result = Rational(n, d);
    result.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !is_digits(whole)) || (!frac.empty() && !is_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      bad_number(text);
    }
    Integer n(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    result = Rational(n, d);
    result.canonicalize();
  } else {
    if (!is_digits(s)) bad_number(text);
    result = Rational(Integer(std::string(s), 10));
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Scalar& Scalar::operator+=(const Scalar& other) {
  re_ += other.re_;
  if (!other.is_real()) im_ += other.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  re_ -= other.re_;
  if (!other.is_real()) im_ -= other.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_real() && other.is_real()) {
    re_ *= other.re_;
    return *this;
  }
  Rational re = re_ * other.re_ - im_ * other.im_;
  Rational im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw std::domain_error("division by zero scalar");
  if (other.is_real()) {
    re_ /= other.re_;
    if (!is_real()) im_ /= other.re_;
    return *this;
  }
  const Rational den = other.re_ * other.re_ + other.im_ * other.im_;
  Rational re = (re_ * other.re_ + im_ * other.im_) / den;
  Rational im = (im_ * other.re_ - re_ * other.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (int c = cmp(a.re_, b.re_); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  int c = cmp(a.im_, b.im_);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(const Scalar& s) {
  if (s.is_real()) return to_string(s.re());
  std::string out;
  if (sgn(s.re()) != 0) out = to_string(s.re());
  const bool negative = sgn(s.im()) < 0;
  if (!out.empty() || negative) out += negative ? "-" : "+";
  out += to_string(Rational(abs(s.im())));
  out += "i";
  return out;
}

Scalar parse_scalar(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty() || s.back() != 'i') return Scalar(parse_rational(s));
  s.remove_suffix(1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  auto imag_part = [&](std::string_view t) {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    return parse_rational(t);
  };
  if (split == std::string_view::npos) return Scalar(Rational(0), imag_part(s));
  return Scalar(parse_rational(s.substr(0, split)), imag_part(s.substr(split)));
}

}  // namespace hypermoment
