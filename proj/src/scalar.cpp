#include "cmreal/scalar.hpp"

#include <cctype>
#include <cmath>

namespace cmreal {

Gq Gq::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Rational n = norm2();
  return Gq(Rational(re / n), Rational(-im / n));
}

Gq& Gq::operator*=(const Gq& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Gq& Gq::operator/=(const Gq& o) {
  if (o.im == 0) {
    if (o.re == 0) throw std::domain_error("division by zero");
    re /= o.re;
    im /= o.re;
    return *this;
  }
  return *this *= o.inverse();
}

std::string rational_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string Gq::str() const {
  if (sgn(im) == 0) return rational_str(re);
  std::string imag;
  if (im == 1)
    imag = "i";
  else if (im == -1)
    imag = "-i";
  else
    imag = rational_str(im) + "i";
  if (sgn(re) == 0) return imag;
  std::string out = rational_str(re);
  if (imag[0] != '-') out += "+";
  return out + imag;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  s = s.substr(b);
  if (!s.empty() && s[0] == '+') s = s.substr(1);
  if (s.empty()) throw std::invalid_argument("empty rational");
  // decimal notation ("0.25") is accepted and converted exactly
  auto dot = s.find('.');
  if (dot != std::string::npos && s.find('/') == std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t scale = s.size() - dot - 1;
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Gq parse_gq(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.back() != 'i') return Gq(parse_rational(s));
  s.pop_back();
  // split at the last sign that is not in leading position
  size_t split = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    im_part = s;
  } else {
    re_part = s.substr(0, split);
    im_part = s.substr(split);
  }
  Rational im;
  if (im_part.empty() || im_part == "+")
    im = 1;
  else if (im_part == "-")
    im = -1;
  else
    im = parse_rational(im_part);
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return Gq(re, im);
}

namespace {
Rational rationalize_real(double x, long max_den) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite value");
  // continued fraction convergents
  long double v = x;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    long double a = std::floor(v);
    mpz_class ai(static_cast<double>(a));
    mpz_class p2 = ai * p1 + p0;
    mpz_class q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    long double frac = v - a;
    if (frac < 1e-15L) break;
    v = 1.0L / frac;
  }
  Rational r(p1, q1);
  r.canonicalize();
  return r;
}
}  // namespace

Gq rationalize(cplx z, long max_den) {
  return Gq(rationalize_real(z.real(), max_den), rationalize_real(z.imag(), max_den));
}

}  // namespace cmreal
