#include "hodgealg/scalar.hpp"

#include <stdexcept>

namespace hodgealg {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (start == t.size()) return false;
    for (std::size_t k = start; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  Integer d(den);
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign(const Rational& q) { return sgn(q); }

GaussRational GaussRational::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
  return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero in Q(i)");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussRational parse_gauss(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty Gaussian rational literal");
  if (s.back() != 'i') return GaussRational(parse_rational(s));
  s.pop_back();
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return {re, parse_rational(im_part)};
}

std::string to_string(const GaussRational& z) {
  if (z.is_real()) return to_string(z.re());
  Rational im_abs = abs(z.im());
  std::string im_str = (im_abs == 1) ? "" : to_string(im_abs);
  if (sgn(z.re()) == 0) return (sgn(z.im()) < 0 ? "-" : "") + im_str + "i";
  return to_string(z.re()) + (sgn(z.im()) < 0 ? "-" : "+") + im_str + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << to_string(z); }

GaussRational i_power(long e) {
  long r = ((e % 4) + 4) % 4;
  switch (r) {
    case 0: return GaussRational(1);
    case 1: return {Rational(0), Rational(1)};
    case 2: return GaussRational(-1);
    default: return {Rational(0), Rational(-1)};
  }
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw std::logic_error("inexact integer division");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  // a / b = a * conj(b) / N(b)
  Integer n = b.re * b.re + b.im * b.im;
  if (sgn(n) == 0) throw std::domain_error("division by zero in Z[i]");
  GaussInt num = a * GaussInt{b.re, -b.im};
  return {exact_div(num.re, n), exact_div(num.im, n)};
}

void FieldTraits<Rational>::accumulate_denominator(Integer& lcm_acc, const Rational& x) {
  mpz_lcm(lcm_acc.get_mpz_t(), lcm_acc.get_mpz_t(), x.get_den_mpz_t());
}

Integer FieldTraits<Rational>::to_ring(const Rational& x, const Integer& scale) {
  return exact_div(Integer(x.get_num() * scale), x.get_den());
}

void FieldTraits<GaussRational>::accumulate_denominator(Integer& lcm_acc, const GaussRational& x) {
  mpz_lcm(lcm_acc.get_mpz_t(), lcm_acc.get_mpz_t(), x.re().get_den_mpz_t());
  mpz_lcm(lcm_acc.get_mpz_t(), lcm_acc.get_mpz_t(), x.im().get_den_mpz_t());
}

GaussInt FieldTraits<GaussRational>::to_ring(const GaussRational& x, const Integer& scale) {
  return {exact_div(Integer(x.re().get_num() * scale), x.re().get_den()),
          exact_div(Integer(x.im().get_num() * scale), x.im().get_den())};
}

}  // namespace hodgealg
