#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmreal/scalar.hpp"

namespace cmreal {

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// Leading zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1. For the approximate backend only exact
/// zeros are trimmed.
template <class S>
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(const S& v) { return UniPoly(std::vector<S>{v}); }
  static UniPoly monomial(const S& v, int deg) {
    std::vector<S> c(static_cast<size_t>(deg) + 1);
    c[static_cast<size_t>(deg)] = v;
    return UniPoly(std::move(c));
  }
  static UniPoly x() { return monomial(from_int<S>(1), 1); }
  /// (x - r)
  static UniPoly linear_root(const S& r) { return UniPoly({-r, from_int<S>(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }
  S coeff(int k) const {
    if (k < 0 || k > degree()) return S{};
    return c_[static_cast<size_t>(k)];
  }
  const S& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  S operator()(const S& x) const {
    S acc{};
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<S> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * from_int<S>(static_cast<long>(k));
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    S inv = from_int<S>(1) / leading();
    std::vector<S> c(c_);
    for (auto& v : c) v = v * inv;
    return UniPoly(std::move(c));
  }

  /// p(s * x)
  UniPoly scale_argument(const S& s) const {
    std::vector<S> c(c_);
    S pw = from_int<S>(1);
    for (auto& v : c) {
      v = v * pw;
      pw = pw * s;
    }
    return UniPoly(std::move(c));
  }

  /// p(q(x))
  UniPoly compose(const UniPoly& q) const {
    UniPoly acc;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * q + constant(c_[k]);
    return acc;
  }

  UniPoly conj() const {
    std::vector<S> c(c_);
    for (auto& v : c) v = cmreal::conj(v);
    return UniPoly(std::move(c));
  }

  bool has_real_coeffs(double tol = kDefaultTol) const {
    return std::all_of(c_.begin(), c_.end(), [&](const S& v) { return is_real(v, tol); });
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<S> c(a.c_);
    for (auto& v : c) v = -v;
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (cmreal::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend UniPoly operator*(const S& s, const UniPoly& a) {
    std::vector<S> c(a.c_);
    for (auto& v : c) v = s * v;
    return UniPoly(std::move(c));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Euclidean division over a field: returns (quotient, remainder).
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<S> r(c_);
    int dd = d.degree();
    if (degree() < dd) return {UniPoly{}, *this};
    std::vector<S> q(static_cast<size_t>(degree() - dd) + 1);
    S inv = from_int<S>(1) / d.leading();
    for (int k = degree(); k >= dd; --k) {
      S f = r[static_cast<size_t>(k)] * inv;
      q[static_cast<size_t>(k - dd)] = f;
      if (cmreal::is_zero(f)) continue;
      for (int j = 0; j <= dd; ++j) r[static_cast<size_t>(k - dd + j)] -= f * d.c_[static_cast<size_t>(j)];
      r[static_cast<size_t>(k)] = S{};
    }
    r.resize(static_cast<size_t>(dd));
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
  }
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return a.divmod(b).first; }
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return a.divmod(b).second; }

  /// Exact quotient; throws if b does not divide a.
  UniPoly exact_div(const UniPoly& b) const {
    auto [q, r] = divmod(b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
  }

private:
  void trim() {
    while (!c_.empty() && cmreal::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<S> c_;
};

template <class S>
bool is_zero(const UniPoly<S>& p) {
  return p.is_zero();
}

using PolyQ = UniPoly<Gq>;
using PolyC = UniPoly<cplx>;

/// Monic gcd (exact backend only).
PolyQ gcd(PolyQ a, PolyQ b);

/// Square-free decomposition f = c * prod_i f_i^i (Yun). Each entry is
/// (monic square-free factor, multiplicity); factors of degree 0 omitted.
std::vector<std::pair<PolyQ, int>> square_free_decomposition(const PolyQ& f);

std::string to_string(const PolyQ& p, const std::string& var = "x");
PolyC to_approx(const PolyQ& p);

}  // namespace cmreal
