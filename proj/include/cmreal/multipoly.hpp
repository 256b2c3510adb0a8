#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cmreal/poly.hpp"

namespace cmreal {

/// Sparse multivariate polynomial in variables 0..num_vars-1.
///
/// Exponent vectors are stored with trailing zeros stripped, so two
/// polynomials compare equal regardless of their declared variable count.
/// Zero coefficients are never stored.
template <class S>
class MultiPoly {
public:
  using Exps = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(int num_vars) : nv_(num_vars) {}
  MultiPoly(int num_vars, const S& c) : nv_(num_vars) {
    if (!cmreal::is_zero(c)) terms_[{}] = c;
  }

  /// The monomial c * t_var.
  static MultiPoly variable(int var, int num_vars, const S& c = from_int<S>(1)) {
    MultiPoly p(num_vars);
    Exps e(static_cast<size_t>(var) + 1, 0);
    e[static_cast<size_t>(var)] = 1;
    p.add_term(e, c);
    return p;
  }

  int num_vars() const { return nv_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exps, S>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  S coeff(Exps e) const {
    strip(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? S{} : it->second;
  }

  void add_term(Exps e, const S& c) {
    if (cmreal::is_zero(c)) return;
    strip(e);
    if (static_cast<int>(e.size()) > nv_) nv_ = static_cast<int>(e.size());
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (cmreal::is_zero(it->second)) terms_.erase(it);
    }
  }

  int degree_in(int var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_)
      if (var < static_cast<int>(e.size())) d = std::max(d, e[static_cast<size_t>(var)]);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }
  /// Largest variable index with a nonzero exponent, -1 for constants.
  int max_variable_used() const {
    int m = -1;
    for (const auto& [e, c] : terms_) m = std::max(m, static_cast<int>(e.size()) - 1);
    return m;
  }
  bool depends_on(int var) const { return degree_in(var) > 0; }

  bool has_real_coeffs(double tol = kDefaultTol) const {
    for (const auto& [e, c] : terms_)
      if (!is_real(c, tol)) return false;
    return true;
  }

  /// Drop every term whose exponent in `var` exceeds `max_deg`.
  MultiPoly truncated(int var, int max_deg) const {
    MultiPoly out(nv_);
    for (const auto& [e, c] : terms_) {
      if (var < static_cast<int>(e.size()) && e[static_cast<size_t>(var)] > max_deg) continue;
      out.terms_.emplace(e, c);
    }
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    nv_ = std::max(nv_, o.nv_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    nv_ = std::max(nv_, o.nv_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out(a.nv_);
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(std::max(a.nv_, b.nv_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exps e(std::max(ea.size(), eb.size()), 0);
        for (size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
        for (size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator*(const S& s, const MultiPoly& a) {
    MultiPoly out(a.nv_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
    return out;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(int k) const {
    MultiPoly out(nv_, from_int<S>(1));
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
  }

  /// Replace variable v by images[v] (a polynomial in the target ring);
  /// variables beyond images.size() are left in place. `reduce` is applied
  /// after every product, e.g. to truncate a power-series variable.
  MultiPoly compose(const std::vector<MultiPoly>& images, int target_vars,
                    const std::function<MultiPoly(const MultiPoly&)>& reduce = {}) const {
    auto red = [&](MultiPoly p) { return reduce ? reduce(p) : p; };
    std::vector<std::vector<MultiPoly>> powers(images.size());
    MultiPoly out(target_vars);
    for (const auto& [e, c] : terms_) {
      MultiPoly term(target_vars, c);
      for (size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (v >= images.size()) {
          Exps mono(v + 1, 0);
          mono[v] = e[v];
          MultiPoly m(target_vars);
          m.add_term(mono, from_int<S>(1));
          term = term * m;
          continue;
        }
        auto& pw = powers[v];
        if (pw.empty()) pw.push_back(MultiPoly(target_vars, from_int<S>(1)));
        while (static_cast<int>(pw.size()) <= e[v]) pw.push_back(red(pw.back() * images[v]));
        term = red(term * pw[static_cast<size_t>(e[v])]);
      }
      out += term;
    }
    return out;
  }

  /// Substitute scalar values for some variables (partial evaluation).
  MultiPoly substitute(const std::map<int, S>& values) const {
    MultiPoly out(nv_);
    for (const auto& [e, c] : terms_) {
      S coef = c;
      Exps rest = e;
      for (size_t v = 0; v < e.size(); ++v) {
        auto it = values.find(static_cast<int>(v));
        if (it == values.end() || e[v] == 0) continue;
        for (int k = 0; k < e[v]; ++k) coef = coef * it->second;
        rest[v] = 0;
      }
      out.add_term(rest, coef);
    }
    return out;
  }

  using Image = std::variant<S, UniPoly<S>>;
  /// Map to a univariate polynomial; every variable that occurs must be
  /// assigned either a scalar or a polynomial in x.
  UniPoly<S> to_univariate(const std::map<int, Image>& assignment) const {
    std::map<int, std::vector<UniPoly<S>>> powers;
    UniPoly<S> out;
    for (const auto& [e, c] : terms_) {
      UniPoly<S> term = UniPoly<S>::constant(c);
      for (size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        auto it = assignment.find(static_cast<int>(v));
        if (it == assignment.end())
          throw std::out_of_range("variable t" + std::to_string(v + 1) + " not assigned");
        UniPoly<S> base = std::holds_alternative<S>(it->second)
                              ? UniPoly<S>::constant(std::get<S>(it->second))
                              : std::get<UniPoly<S>>(it->second);
        auto& pw = powers[static_cast<int>(v)];
        if (pw.empty()) pw.push_back(UniPoly<S>::constant(from_int<S>(1)));
        while (static_cast<int>(pw.size()) <= e[v]) pw.push_back(pw.back() * base);
        term = term * pw[static_cast<size_t>(e[v])];
      }
      out += term;
    }
    return out;
  }

  S evaluate(const std::vector<S>& point) const {
    S acc{};
    for (const auto& [e, c] : terms_) {
      S t = c;
      for (size_t v = 0; v < e.size(); ++v)
        for (int k = 0; k < e[v]; ++k) t = t * point.at(v);
      acc += t;
    }
    return acc;
  }

  /// Coefficient of var^k as a polynomial in the remaining variables.
  MultiPoly coefficient_of(int var, int k) const {
    MultiPoly out(nv_);
    for (const auto& [e, c] : terms_) {
      int ev = var < static_cast<int>(e.size()) ? e[static_cast<size_t>(var)] : 0;
      if (ev != k) continue;
      Exps rest = e;
      if (var < static_cast<int>(rest.size())) rest[static_cast<size_t>(var)] = 0;
      out.add_term(rest, c);
    }
    return out;
  }

private:
  static void strip(Exps& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
  }
  int nv_ = 0;
  std::map<Exps, S> terms_;
};

template <class S>
bool is_zero(const MultiPoly<S>& p) {
  return p.is_zero();
}

using MultiPolyQ = MultiPoly<Gq>;

/// Terms ordered by total degree, then t1 before t2 before ...; e.g.
/// "2 + t1 - 6 t2 + 27 t3".
std::string to_string(const MultiPolyQ& p, const std::string& var_prefix = "t");

/// Univariate view of a polynomial that only involves variable `var`.
PolyQ as_univariate(const MultiPolyQ& p, int var);

}  // namespace cmreal
