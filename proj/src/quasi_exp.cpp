#include "cmreal/quasi_exp.hpp"

#include <algorithm>

#include "cmreal/roots.hpp"

namespace cmreal {

namespace {

// D_mu p = mu p + p'
PolyQ shifted_derivative(const Gq& mu, const PolyQ& p) { return mu * p + p.derivative(); }

std::vector<QuasiExp> flatten(const QuasiExpSpace& s) {
  std::vector<QuasiExp> qs;
  for (int j = 0; j < s.k(); ++j)
    for (const auto& p : s.spaces[static_cast<size_t>(j)]) qs.push_back({s.mus[static_cast<size_t>(j)], p});
  return qs;
}

// Row r holds D^r of every kernel element; rows 0..rows-1.
Matrix<PolyQ> derivative_table(const std::vector<QuasiExp>& qs, int rows) {
  const int n = static_cast<int>(qs.size());
  Matrix<PolyQ> m(rows, n);
  for (int c = 0; c < n; ++c) {
    PolyQ cur = qs[static_cast<size_t>(c)].p;
    for (int r = 0; r < rows; ++r) {
      m(r, c) = cur;
      cur = shifted_derivative(qs[static_cast<size_t>(c)].mu, cur);
    }
  }
  return m;
}

PolyQ poly_det(const Matrix<PolyQ>& m) { return det_division_free(m, PolyQ::constant(Gq(1))); }

}  // namespace

int QuasiExpSpace::total_dim() const {
  int d = 0;
  for (const auto& v : spaces) d += static_cast<int>(v.size());
  return d;
}

WronskianResult wronskian(const std::vector<QuasiExp>& qs) {
  if (qs.empty()) throw std::invalid_argument("wronskian: empty list");
  Gq mu_sum;
  for (const auto& q : qs) mu_sum += q.mu;
  const int n = static_cast<int>(qs.size());
  return {mu_sum, poly_det(derivative_table(qs, n))};
}

MatQ coefficient_matrix(const std::vector<PolyQ>& basis, int columns) {
  if (columns < 0) {
    columns = 1;
    for (const auto& p : basis) columns = std::max(columns, p.degree() + 1);
  }
  MatQ m(static_cast<int>(basis.size()), columns);
  for (size_t r = 0; r < basis.size(); ++r)
    for (int d = 0; d <= basis[r].degree(); ++d) m(static_cast<int>(r), d) = basis[r].coeff(d);
  return m;
}

std::vector<PolyQ> echelon_basis(const std::vector<PolyQ>& basis) {
  if (basis.empty()) return {};
  RowEchelon e = rref(coefficient_matrix(basis));
  std::vector<PolyQ> out;
  for (int r = 0; r < e.reduced.rows(); ++r) {
    std::vector<Gq> c(static_cast<size_t>(e.reduced.cols()));
    for (int d = 0; d < e.reduced.cols(); ++d) c[static_cast<size_t>(d)] = e.reduced(r, d);
    out.emplace_back(std::move(c));
  }
  return out;
}

namespace {
int span_rank(const std::vector<PolyQ>& basis, int columns) {
  return basis.empty() ? 0 : rank_exact(coefficient_matrix(basis, columns));
}
int max_columns(const std::vector<PolyQ>& a, const std::vector<PolyQ>& b) {
  int c = 1;
  for (const auto* v : {&a, &b})
    for (const auto& p : *v) c = std::max(c, p.degree() + 1);
  return c;
}
}  // namespace

bool same_span(const std::vector<PolyQ>& a, const std::vector<PolyQ>& b) {
  int cols = max_columns(a, b);
  std::vector<PolyQ> both = a;
  both.insert(both.end(), b.begin(), b.end());
  int ra = span_rank(a, cols), rb = span_rank(b, cols);
  return ra == rb && span_rank(both, cols) == ra;
}

bool contains_constant(const std::vector<PolyQ>& basis) {
  if (basis.empty()) return false;
  std::vector<PolyQ> with_one = basis;
  with_one.push_back(PolyQ::constant(Gq(1)));
  int cols = max_columns(basis, with_one);
  return span_rank(with_one, cols) == span_rank(basis, cols);
}

void check_space(const QuasiExpSpace& s) {
  if (s.mus.size() != s.spaces.size()) throw std::invalid_argument("quasi-exponential space: size mismatch");
  for (int i = 0; i < s.k(); ++i)
    for (int j = 0; j < i; ++j)
      if (s.mus[static_cast<size_t>(i)] == s.mus[static_cast<size_t>(j)])
        throw std::domain_error("quasi-exponential space: repeated exponent");
  for (const auto& v : s.spaces)
    if (span_rank(v, -1) != static_cast<int>(v.size()))
      throw std::domain_error("quasi-exponential space: dependent basis");
}

PolyQ normalized_wronskian(const QuasiExpSpace& s) {
  check_space(s);
  auto qs = flatten(s);
  if (qs.empty()) return PolyQ::constant(Gq(1));
  PolyQ w = wronskian(qs).poly;
  if (w.is_zero()) throw std::domain_error("normalized_wronskian: dependent basis");
  return w.monic();
}

QuasiExpSpace canonicalize(const QuasiExpSpace& s) {
  check_space(s);
  QuasiExpSpace cur;
  for (int j = 0; j < s.k(); ++j)
    if (!s.spaces[static_cast<size_t>(j)].empty()) {
      cur.mus.push_back(s.mus[static_cast<size_t>(j)]);
      cur.spaces.push_back(s.spaces[static_cast<size_t>(j)]);
    }
  for (;;) {
    int j = 0;
    while (j < cur.k() && !contains_constant(cur.spaces[static_cast<size_t>(j)])) ++j;
    if (j == cur.k()) return cur;
    // A constant in V_j is the condition f(mu_j) = 0 on the dual side.
    // Dividing it out maps V_j to V_j' and V_l to (D + mu_l - mu_j) V_l.
    const Gq mu = cur.mus[static_cast<size_t>(j)];
    for (int l = 0; l < cur.k(); ++l) {
      auto& basis = cur.spaces[static_cast<size_t>(l)];
      std::vector<PolyQ> next;
      for (const auto& p : basis) {
        PolyQ q = l == j ? p.derivative() : shifted_derivative(cur.mus[static_cast<size_t>(l)] - mu, p);
        if (!q.is_zero()) next.push_back(q);
      }
      basis = echelon_basis(next);
    }
    if (cur.spaces[static_cast<size_t>(j)].empty()) {
      cur.mus.erase(cur.mus.begin() + j);
      cur.spaces.erase(cur.spaces.begin() + j);
    }
  }
}

DiffOperator operator_from_kernel(const QuasiExpSpace& s) {
  check_space(s);
  auto qs = flatten(s);
  const int n = static_cast<int>(qs.size());
  DiffOperator op;
  if (n == 0) return op;
  Matrix<PolyQ> table = derivative_table(qs, n + 1);
  auto minor_without = [&](int skip) {
    Matrix<PolyQ> m(n, n);
    for (int r = 0, rr = 0; r <= n; ++r) {
      if (r == skip) continue;
      for (int c = 0; c < n; ++c) m(rr, c) = table(r, c);
      ++rr;
    }
    return m;
  };
  PolyQ wr = poly_det(minor_without(n));
  if (wr.is_zero()) throw std::domain_error("operator_from_kernel: dependent kernel");
  for (int r = 0; r < n; ++r) {
    PolyQ num = poly_det(minor_without(r));
    if ((r + n) % 2 == 1) num = -num;
    op.c.emplace_back(num, wr);
  }
  return op;
}

RatFunc apply_operator(const DiffOperator& op, const Gq& mu, const PolyQ& p) {
  RatFunc acc;
  PolyQ cur = p;
  for (int r = 0; r < op.order(); ++r) {
    acc += op.c[static_cast<size_t>(r)] * RatFunc(cur);
    cur = shifted_derivative(mu, cur);
  }
  return acc + RatFunc(cur);
}

WaveFunction gamma_wave(const QuasiExpSpace& s, int m) {
  DiffOperator op = operator_from_kernel(s);
  const int n = op.order();
  // g(w) = prod_j (1 - mu_j w)^{-dim V_j}, truncated at w^m
  std::vector<Gq> g(static_cast<size_t>(m) + 1);
  g[0] = Gq(1);
  for (int j = 0; j < s.k(); ++j) {
    const Gq& mu = s.mus[static_cast<size_t>(j)];
    for (size_t rep = 0; rep < s.spaces[static_cast<size_t>(j)].size(); ++rep)
      // multiply by 1/(1 - mu w): running prefix sums with ratio mu
      for (int i = 1; i <= m; ++i) g[static_cast<size_t>(i)] += mu * g[static_cast<size_t>(i - 1)];
  }
  WaveFunction wf;
  for (int k = 0; k <= m; ++k) {
    RatFunc a;
    for (int r = 0; r <= n; ++r) {
      int idx = k - (n - r);
      if (idx < 0) continue;
      RatFunc c = r == n ? RatFunc(Gq(1)) : op.c[static_cast<size_t>(r)];
      a += c * RatFunc(g[static_cast<size_t>(idx)]);
    }
    wf.a.push_back(a);
  }
  return wf;
}

namespace {
std::vector<PolyQ> conj_basis(const std::vector<PolyQ>& b) {
  std::vector<PolyQ> out;
  for (const auto& p : b) out.push_back(p.conj());
  return out;
}

std::optional<int> partner_of(const QuasiExpSpace& s, int j) {
  Gq target = s.mus[static_cast<size_t>(j)].conj();
  for (int l = 0; l < s.k(); ++l)
    if (s.mus[static_cast<size_t>(l)] == target) return l;
  return std::nullopt;
}
}  // namespace

bool real_span_test(const QuasiExpSpace& s) {
  check_space(s);
  for (int j = 0; j < s.k(); ++j) {
    auto l = partner_of(s, j);
    if (!l) return false;
    if (!same_span(conj_basis(s.spaces[static_cast<size_t>(j)]), s.spaces[static_cast<size_t>(*l)])) return false;
  }
  return true;
}

QuasiExpSpace extract_real_basis(const QuasiExpSpace& s) {
  if (!real_span_test(s)) throw std::domain_error("extract_real_basis: data not closed under conjugation");
  QuasiExpSpace out = s;
  for (int j = 0; j < s.k(); ++j) {
    const Gq& mu = s.mus[static_cast<size_t>(j)];
    const auto& basis = s.spaces[static_cast<size_t>(j)];
    if (mu.is_real()) {
      std::vector<PolyQ> parts;
      for (const auto& p : basis) {
        std::vector<Gq> re, im;
        for (int d = 0; d <= p.degree(); ++d) {
          re.emplace_back(p.coeff(d).re);
          im.emplace_back(p.coeff(d).im);
        }
        parts.emplace_back(std::move(re));
        parts.emplace_back(std::move(im));
      }
      parts.erase(std::remove_if(parts.begin(), parts.end(), [](const PolyQ& p) { return p.is_zero(); }),
                  parts.end());
      out.spaces[static_cast<size_t>(j)] = echelon_basis(parts);
    } else if (sgn(mu.im) < 0) {
      int l = *partner_of(s, j);
      out.spaces[static_cast<size_t>(j)] = conj_basis(s.spaces[static_cast<size_t>(l)]);
    }
  }
  return out;
}

Thm3Report thm3_harness(const QuasiExpSpace& s) {
  check_space(s);
  Thm3Report r;
  for (const auto& mu : s.mus)
    if (!mu.is_real()) return r;
  PolyQ w = normalized_wronskian(s);
  if (!w.has_real_coeffs()) return r;
  r.applicable = true;
  r.hypothesis = real_roots_certified(w).all_real;
  r.conclusion = real_span_test(s);
  return r;
}

Tau0Match lemma_tau0_match(const QuasiExpSpace& s, std::uint64_t seed, double tol) {
  Tau0Match res;
  QuasiExpSpace c = canonicalize(s);
  PolyQ w = normalized_wronskian(c);
  res.n = w.degree();
  if (res.n < 1 || res.n > 3) return res;
  if (gcd(w, w.derivative()).degree() > 0) return res;  // fiber_solve needs distinct spec X
  std::vector<cplx> spec_x, spec_z;
  for (const auto& r : poly_roots(w)) spec_x.push_back(-r);
  for (int j = 0; j < c.k(); ++j) {
    QuasiExpSpace block{{c.mus[static_cast<size_t>(j)]}, {c.spaces[static_cast<size_t>(j)]}};
    int nj = normalized_wronskian(block).degree();
    for (int r = 0; r < nj; ++r) spec_z.push_back(-c.mus[static_cast<size_t>(j)].to_complex());
  }
  res.evaluated = true;
  res.discrepancy = std::numeric_limits<double>::infinity();
  if (static_cast<int>(spec_z.size()) != res.n) return res;

  FiberOptions opts;
  opts.seed = seed;
  FiberResult fiber = fiber_solve(spec_x, spec_z, opts);
  const int m = std::max(2, 2 * res.n);
  WaveFunction gw = gamma_wave(c, m);
  const cplx samples[] = {{0.37, 0.21}, {-1.3, 0.55}, {2.1, -0.7}};
  for (const auto& chart : fiber.points) {
    CMPairC p = from_chart(chart);
    double worst = 0.0;
    for (const cplx& x0 : samples) {
      auto beta = wave_coefficients_at(p, x0, m);
      for (int k = 0; k <= m; ++k) {
        cplx g = gw.a[static_cast<size_t>(k)].eval_approx(x0);
        worst = std::max(worst, std::abs(g - beta[static_cast<size_t>(k)]) / std::max(1.0, std::abs(g)));
      }
    }
    if (worst < res.discrepancy) {
      res.discrepancy = worst;
      res.chart = chart;
    }
  }
  res.matched = res.discrepancy <= tol;
  return res;
}

}  // namespace cmreal
