#pragma once

#include <complex>
#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cmreal {

using Rational = mpq_class;
using cplx = std::complex<double>;

/// Exact Gaussian rational a + b i with a, b arbitrary-precision rationals.
///
/// Both parts are kept in canonical (reduced, positive denominator) form so
/// that equality is structural.
class Gq {
public:
  Rational re;
  Rational im;

  Gq() : re(0), im(0) {}
  Gq(long v) : re(v), im(0) {}  // NOLINT: implicit from integer literals
  Gq(const Rational& r) : re(r), im(0) {}  // NOLINT
  Gq(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static Gq i() { return Gq(Rational(0), Rational(1)); }
  static Gq frac(long num, long den) { return Gq(Rational(num, den), Rational(0)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Gq conj() const { return Gq(re, -im); }
  Rational norm2() const { return Rational(re * re + im * im); }
  Gq inverse() const;

  Gq& operator+=(const Gq& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gq& operator-=(const Gq& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gq& operator*=(const Gq& o);
  Gq& operator/=(const Gq& o);

  friend Gq operator+(Gq a, const Gq& b) { return a += b; }
  friend Gq operator-(Gq a, const Gq& b) { return a -= b; }
  friend Gq operator*(Gq a, const Gq& b) { return a *= b; }
  friend Gq operator/(Gq a, const Gq& b) { return a /= b; }
  friend Gq operator-(const Gq& a) { return Gq(Rational(-a.re), Rational(-a.im)); }
  friend bool operator==(const Gq& a, const Gq& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gq& a, const Gq& b) { return !(a == b); }

  cplx to_complex() const { return {re.get_d(), im.get_d()}; }

  /// "p/q" for real values, "a+bi" style otherwise.
  std::string str() const;
};

/// Parses "p", "p/q", "-p/q", "1/2+3/4i", "2i", "-i", "1-i".
Gq parse_gq(std::string_view text);
/// Parses a plain rational "p/q" (no imaginary part).
Rational parse_rational(std::string_view text);
std::string rational_str(const Rational& r);

/// Closest Gaussian rational with bounded denominators; exactness must be
/// verified by the caller.
Gq rationalize(cplx z, long max_den = 1000000);

// Uniform helpers so templates can treat both backends alike.
inline bool is_zero(const Gq& a) { return a.is_zero(); }
inline bool is_zero(const cplx& a) { return a == cplx(0.0, 0.0); }
inline Gq conj(const Gq& a) { return a.conj(); }
inline cplx to_complex(const Gq& a) { return a.to_complex(); }
inline cplx to_complex(const cplx& a) { return a; }
inline double magnitude(const Gq& a) { return std::abs(a.to_complex()); }
inline double magnitude(const cplx& a) { return std::abs(a); }

template <class S>
S from_int(long v) {
  if constexpr (std::is_same_v<S, cplx>)
    return cplx(static_cast<double>(v), 0.0);
  else
    return S(v);
}

template <class S>
S from_gq(const Gq& v) {
  if constexpr (std::is_same_v<S, cplx>)
    return v.to_complex();
  else
    return v;
}

/// Default relative tolerance for the approximate backend.
inline constexpr double kDefaultTol = 1e-9;

/// |im| <= tol * max(1, |re|)
inline bool is_real_approx(const cplx& z, double tol = kDefaultTol) {
  return std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z.real()));
}
inline bool is_real(const Gq& a, double = 0.0) { return a.is_real(); }
inline bool is_real(const cplx& a, double tol = kDefaultTol) { return is_real_approx(a, tol); }

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, Gq>;

}  // namespace cmreal
