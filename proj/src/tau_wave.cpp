#include "cmreal/tau_wave.hpp"

#include "cmreal/roots.hpp"

namespace cmreal {

namespace {

// Bivariate polynomials in (x, w): variable 0 is x, variable 1 is w = 1/z.
constexpr int kX = 0;
constexpr int kW = 1;

MultiPolyQ lift_x(const PolyQ& p) {
  MultiPolyQ out(2);
  for (int k = 0; k <= p.degree(); ++k) out.add_term({k}, p.coeff(k));
  return out;
}

MultiPolyQ w_power(int k, const Gq& c) {
  MultiPolyQ out(2);
  out.add_term({0, k}, c);
  return out;
}

WaveFunction split_by_w(const MultiPolyQ& series, const PolyQ& denominator, int m) {
  WaveFunction wf;
  for (int k = 0; k <= m; ++k)
    wf.a.emplace_back(as_univariate(series.coefficient_of(kW, k), kX), denominator);
  return wf;
}

}  // namespace

TruncatedTau tau_from_cm(const CMPair& p, int m) {
  if (m < 1) throw std::invalid_argument("tau_from_cm: m must be at least 1");
  const int n = p.n();
  Matrix<MultiPolyQ> a(n, n, MultiPolyQ(m));
  MatQ neg_z = -p.Z;
  MatQ power = MatQ::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = MultiPolyQ(m, p.X(i, j));
  for (int t = 1; t <= m; ++t) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!power(i, j).is_zero()) a(i, j) += MultiPolyQ::variable(t - 1, m, Gq(t) * power(i, j));
    power = power * neg_z;
  }
  MultiPolyQ det = det_division_free(a, MultiPolyQ(m, Gq(1)));
  Gq lead = det.coeff({n});
  if (lead.is_zero()) throw std::logic_error("tau_from_cm: vanishing t_1^n coefficient");
  if (lead != Gq(1)) det = lead.inverse() * det;
  return {det, m, n};
}

PolyQ tau_at_x(const TruncatedTau& tau) {
  std::map<int, MultiPolyQ::Image> assign;
  assign[0] = PolyQ::x();
  for (int j = 1; j < std::max(tau.m, tau.poly.max_variable_used() + 1); ++j) assign[j] = Gq(0);
  return tau.poly.to_univariate(assign);
}

WaveFunction wave_from_cm(const CMPair& p, int m) {
  if (m < 0) throw std::invalid_argument("wave_from_cm: negative order");
  const int n = p.n();
  MatQ neg_x = -p.X;
  PolyQ d = char_poly(neg_x);  // det(xI + X)
  std::vector<MatQ> adj = adjugate_resolvent(neg_x);
  auto truncate = [m](const MultiPolyQ& q) { return q.truncated(kW, m); };

  // adj(xI + X) and (zI + Z)^{-1} = sum_k (-Z)^k w^{k+1}, truncated at w^m
  Matrix<MultiPolyQ> adj_x(n, n, MultiPolyQ(2)), resolvent(n, n, MultiPolyQ(2));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!adj[static_cast<size_t>(k)](i, j).is_zero()) {
          MultiPolyQ term(2);
          term.add_term({n - 1 - k}, adj[static_cast<size_t>(k)](i, j));
          adj_x(i, j) += term;
        }
  MatQ power = MatQ::identity(n);
  MatQ neg_z = -p.Z;
  for (int k = 0; k + 1 <= m; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!power(i, j).is_zero()) resolvent(i, j) += w_power(k + 1, power(i, j));
    power = power * neg_z;
  }
  Matrix<MultiPolyQ> prod = adj_x * resolvent;
  MultiPolyQ dx = lift_x(d);
  Matrix<MultiPolyQ> nmat(n, n, MultiPolyQ(2));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) nmat(i, j) = truncate((i == j ? dx : MultiPolyQ(2)) - prod(i, j));
  MultiPolyQ det = det_division_free(nmat, MultiPolyQ(2, Gq(1)), std::function<MultiPolyQ(const MultiPolyQ&)>(truncate));
  PolyQ dn = PolyQ::constant(Gq(1));
  for (int i = 0; i < n; ++i) dn = dn * d;
  return split_by_w(det, dn, m);
}

std::vector<cplx> wave_coefficients_at(const CMPairC& p, cplx x0, int m) {
  const int n = p.n();
  MatC a_inv = inverse(p.X + x0 * MatC::identity(n));
  auto truncate = [m](const PolyC& q) {
    std::vector<cplx> c = q.coeffs();
    if (static_cast<int>(c.size()) > m + 1) c.resize(static_cast<size_t>(m) + 1);
    return PolyC(std::move(c));
  };
  // I - (x0 + X)^{-1} sum_k (-Z)^k w^{k+1}
  Matrix<PolyC> nmat(n, n);
  MatC power = MatC::identity(n);
  MatC neg_z = -p.Z;
  for (int i = 0; i < n; ++i) nmat(i, i) = PolyC::constant(1.0);
  for (int k = 0; k + 1 <= m; ++k) {
    MatC term = a_inv * power;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) nmat(i, j) -= PolyC::monomial(term(i, j), k + 1);
    power = power * neg_z;
  }
  PolyC det = det_division_free(nmat, PolyC::constant(1.0), std::function<PolyC(const PolyC&)>(truncate));
  std::vector<cplx> out(static_cast<size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) out[static_cast<size_t>(k)] = det.coeff(k);
  return out;
}

WaveFunction sato_wave(const TruncatedTau& tau, int m) {
  if (m > tau.m) throw std::invalid_argument("sato_wave: tau truncated below the requested order");
  auto truncate = [m](const MultiPolyQ& q) { return q.truncated(kW, m); };
  std::vector<MultiPolyQ> images;
  MultiPolyQ x = MultiPolyQ::variable(kX, 2);
  images.push_back(x - w_power(1, Gq(1)));
  for (int j = 2; j <= tau.m; ++j) images.push_back(w_power(j, -Gq::frac(1, j)));
  MultiPolyQ shifted =
      tau.poly.compose(images, 2, std::function<MultiPolyQ(const MultiPolyQ&)>(truncate));
  return split_by_w(truncate(shifted), tau_at_x(tau), m);
}

WaveFunction bispectral_dual_wave(const CMPair& p, int m) {
  return wave_from_cm(bispectral_involution(p), m);
}

std::vector<std::vector<Gq>> double_expansion(const WaveFunction& w, int order) {
  if (w.order() < order) throw std::invalid_argument("double_expansion: wave function too short");
  std::vector<std::vector<Gq>> b(static_cast<size_t>(order) + 1,
                                 std::vector<Gq>(static_cast<size_t>(order) + 1));
  for (int j = 0; j <= order; ++j) {
    auto e = w.a[static_cast<size_t>(j)].expand_at_infinity(order - j);
    for (int i = 0; i <= order - j; ++i) b[static_cast<size_t>(j)][static_cast<size_t>(i)] = e[static_cast<size_t>(i)];
  }
  return b;
}

bool bispectral_symmetric(const CMPair& p, int order) {
  auto bw = double_expansion(wave_from_cm(p, order), order);
  auto bb = double_expansion(bispectral_dual_wave(p, order), order);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j)
      if (bw[static_cast<size_t>(i)][static_cast<size_t>(j)] != bb[static_cast<size_t>(j)][static_cast<size_t>(i)])
        return false;
  return true;
}

RealityReport reality_conditions(const CMPair& p, int m) {
  RealityReport r;
  r.cond2 = tau_from_cm(p, m).poly.has_real_coeffs();
  WaveFunction w = wave_from_cm(p, m);
  r.cond3 = std::all_of(w.a.begin(), w.a.end(), [](const RatFunc& f) { return f.has_real_coeffs(); });
  try {
    realify_regular(p, false);
    r.cond4 = true;
  } catch (const NonRegularError&) {
    r.cond4.reset();
  } catch (const std::domain_error&) {
    r.cond4 = false;
  }
  return r;
}

bool thm_wad_criterion(const CMPair& p) {
  for (const MatQ* m : {&p.X, &p.Z}) {
    PolyQ chi = char_poly(*m);
    if (!chi.has_real_coeffs()) return false;
    if (!real_roots_certified(chi).all_real) return false;
  }
  return true;
}

}  // namespace cmreal
