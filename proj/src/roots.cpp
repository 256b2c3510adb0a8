#include "cmreal/roots.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace cmreal {

namespace {

std::vector<cplx> companion_guesses(const PolyC& p) {
  const int n = p.degree();
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  const cplx lead = p.leading();
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -p.coeff(i) / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<cplx> z(static_cast<size_t>(n));
  if (es.info() == Eigen::Success) {
    for (int i = 0; i < n; ++i) z[static_cast<size_t>(i)] = es.eigenvalues()(i);
  } else {
    // Cauchy-bound circle with an irrational angular offset
    double bound = 0.0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(p.coeff(i) / lead));
    bound += 1.0;
    for (int i = 0; i < n; ++i)
      z[static_cast<size_t>(i)] = std::polar(bound, 2.0 * std::numbers::pi * i / n + 0.4);
  }
  // Aberth needs pairwise distinct starting points
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (std::abs(z[i] - z[j]) < 1e-12 * std::max(1.0, std::abs(z[i])))
        z[i] += cplx(1e-7 * (static_cast<double>(i) + 1.0), 1e-7);
  return z;
}

}  // namespace

std::vector<cplx> poly_roots(const PolyC& p, const AberthOptions& opts) {
  if (p.is_zero()) throw std::domain_error("poly_roots: zero polynomial");
  const int n = p.degree();
  if (n == 0) return {};
  for (const auto& c : p.coeffs())
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::domain_error("poly_roots: non-finite coefficient");
  if (n == 1) return {-p.coeff(0) / p.coeff(1)};

  const PolyC dp = p.derivative();
  std::vector<double> abs_coeffs;
  for (const auto& c : p.coeffs()) abs_coeffs.push_back(std::abs(c));
  auto rounding_level = [&](cplx z) {
    double r = std::abs(z), acc = 0.0;
    for (size_t k = abs_coeffs.size(); k-- > 0;) acc = acc * r + abs_coeffs[k];
    return 16.0 * std::numeric_limits<double>::epsilon() * acc;
  };

  std::vector<cplx> z = companion_guesses(p);
  std::vector<bool> done(static_cast<size_t>(n), false);
  for (int it = 0; it < opts.max_iterations; ++it) {
    bool all_done = true;
    for (int i = 0; i < n; ++i) {
      if (done[static_cast<size_t>(i)]) continue;
      cplx zi = z[static_cast<size_t>(i)];
      cplx pv = p(zi);
      if (std::abs(pv) <= rounding_level(zi)) {
        done[static_cast<size_t>(i)] = true;
        continue;
      }
      cplx ratio = pv / dp(zi);
      cplx sum = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (zi - z[static_cast<size_t>(j)]);
      cplx w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      z[static_cast<size_t>(i)] = zi - w;
      if (std::abs(w) < opts.correction_tol * std::max(1.0, std::abs(zi)))
        done[static_cast<size_t>(i)] = true;
      else
        all_done = false;
    }
    if (all_done) return z;
  }
  throw RootFindingError("Aberth iteration did not converge within " +
                         std::to_string(opts.max_iterations) + " iterations");
}

std::vector<cplx> poly_roots(const PolyQ& p) {
  if (p.is_zero()) throw std::domain_error("poly_roots: zero polynomial");
  std::vector<cplx> out;
  for (const auto& [f, mult] : square_free_decomposition(p)) {
    auto r = poly_roots(to_approx(f));
    for (int k = 0; k < mult; ++k) out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

std::optional<std::vector<Gq>> exact_roots_if_split(const PolyQ& p) {
  if (p.is_zero()) throw std::domain_error("exact_roots_if_split: zero polynomial");
  std::vector<Gq> out;
  for (const auto& [f, mult] : square_free_decomposition(p)) {
    PolyQ rest = f;
    for (const cplx& r : poly_roots(to_approx(f))) {
      bool found = false;
      for (long den : {1000L, 1000000L, 1000000000L}) {
        Gq cand = rationalize(r, den);
        if (rest(cand).is_zero()) {
          rest = rest.exact_div(PolyQ::linear_root(cand));
          for (int k = 0; k < mult; ++k) out.push_back(cand);
          found = true;
          break;
        }
      }
      if (!found) return std::nullopt;
    }
    if (rest.degree() != 0) return std::nullopt;
  }
  return out;
}

int sturm_distinct_real_roots(const PolyQ& p) {
  if (p.degree() <= 0) return 0;
  std::vector<PolyQ> chain{p, p.derivative()};
  while (chain.back().degree() > 0) {
    PolyQ r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  auto variations = [&](bool at_plus_inf) {
    int v = 0, last = 0;
    for (const auto& q : chain) {
      int s = sgn(q.leading().re);
      if (!at_plus_inf && q.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  return variations(false) - variations(true);
}

RealRootCount real_roots_certified(const PolyQ& p) {
  if (p.is_zero()) throw std::domain_error("real_roots_certified: zero polynomial");
  for (const auto& c : p.coeffs())
    if (!c.is_real()) throw std::domain_error("real_roots_certified: non-real coefficient");
  RealRootCount out;
  for (const auto& [f, mult] : square_free_decomposition(p))
    out.count += mult * sturm_distinct_real_roots(f);
  out.all_real = out.count == p.degree();
  return out;
}

}  // namespace cmreal
