#pragma once

#include <string>
#include <vector>

#include "cmreal/poly.hpp"

namespace cmreal {

/// Reduced rational function num/den over the Gaussian rationals.
/// Canonical form: gcd(num, den) = 1, den monic; zero is 0/1.
class RatFunc {
public:
  RatFunc() : num_(), den_(PolyQ::constant(Gq(1))) {}
  RatFunc(const PolyQ& p) : num_(p), den_(PolyQ::constant(Gq(1))) {}  // NOLINT
  RatFunc(const Gq& c) : RatFunc(PolyQ::constant(c)) {}              // NOLINT
  RatFunc(PolyQ num, PolyQ den);

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool has_real_coeffs() const { return num_.has_real_coeffs() && den_.has_real_coeffs(); }

  Gq operator()(const Gq& x) const { return num_(x) / den_(x); }
  cplx eval_approx(cplx x) const;
  RatFunc derivative() const;
  RatFunc conj() const { return RatFunc(num_.conj(), den_.conj()); }

  /// Coefficients of x^0, x^{-1}, ..., x^{-order} of the expansion at
  /// infinity. Requires deg num <= deg den.
  std::vector<Gq> expand_at_infinity(int order) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str(const std::string& var = "x") const;

private:
  PolyQ num_;
  PolyQ den_;
};

}  // namespace cmreal
