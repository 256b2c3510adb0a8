#include "cmreal/poly.hpp"

#include "cmreal/ratfunc.hpp"

namespace cmreal {

PolyQ gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<PolyQ, int>> square_free_decomposition(const PolyQ& f) {
  if (f.is_zero()) throw std::domain_error("square-free decomposition of zero polynomial");
  std::vector<std::pair<PolyQ, int>> out;
  if (f.degree() == 0) return out;
  PolyQ fp = f.derivative();
  PolyQ a = gcd(f, fp);
  PolyQ b = f.exact_div(a);
  PolyQ c = fp.exact_div(a);
  PolyQ d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    PolyQ ai = gcd(b, d);
    b = b.exact_div(ai);
    c = d.exact_div(ai);
    d = c - b.derivative();
    if (ai.degree() > 0) out.emplace_back(ai.monic(), i);
  }
  return out;
}

std::string to_string(const PolyQ& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Gq& c = p.coeffs()[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string cs;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re) < 0;
      Rational a = abs(c.re);
      cs = (a == 1 && k > 0) ? "" : rational_str(a);
    } else {
      cs = "(" + c.str() + ")";
    }
    std::string term = cs.empty() ? mono : (mono.empty() ? cs : cs + " " + mono);
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

PolyC to_approx(const PolyQ& p) {
  std::vector<cplx> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(v.to_complex());
  return PolyC(std::move(c));
}

// ---------------------------------------------------------------------------

RatFunc::RatFunc(PolyQ num, PolyQ den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = PolyQ::constant(Gq(1));
    return;
  }
  PolyQ g = gcd(num, den);
  if (g.degree() > 0) {
    num = num.exact_div(g);
    den = den.exact_div(g);
  }
  Gq lead = den.leading();
  Gq inv = lead.inverse();
  num_ = inv * num;
  den_ = inv * den;
}

cplx RatFunc::eval_approx(cplx x) const {
  return to_approx(num_)(x) / to_approx(den_)(x);
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::vector<Gq> RatFunc::expand_at_infinity(int order) const {
  std::vector<Gq> out(static_cast<size_t>(order) + 1);
  if (is_zero()) return out;
  int dn = num_.degree(), dd = den_.degree();
  if (dn > dd) throw std::domain_error("expansion at infinity of improper rational function");
  // With u = 1/x: num(1/u)/den(1/u) = u^{dd-dn} * rev(num)(u) / rev(den)(u)
  std::vector<Gq> rn(num_.coeffs().rbegin(), num_.coeffs().rend());
  std::vector<Gq> rd(den_.coeffs().rbegin(), den_.coeffs().rend());
  int shift = dd - dn;
  // power series quotient q = rn / rd, rd[0] = 1 (den monic)
  std::vector<Gq> q(static_cast<size_t>(order) + 1);
  for (int k = 0; k + shift <= order; ++k) {
    Gq acc = k < static_cast<int>(rn.size()) ? rn[static_cast<size_t>(k)] : Gq(0);
    for (int j = 1; j <= k && j < static_cast<int>(rd.size()); ++j)
      acc -= rd[static_cast<size_t>(j)] * q[static_cast<size_t>(k - j)];
    q[static_cast<size_t>(k)] = acc;
    out[static_cast<size_t>(k + shift)] = acc;
  }
  return out;
}

std::string RatFunc::str(const std::string& var) const {
  if (is_polynomial()) return to_string(num_, var);
  return "(" + to_string(num_, var) + ")/(" + to_string(den_, var) + ")";
}

}  // namespace cmreal
