#include "cmreal/calogero_moser.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cmreal/roots.hpp"

namespace cmreal {

namespace {

bool gq_less(const Gq& a, const Gq& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

bool cplx_less(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

template <class S, class Less>
void sort_chart(std::vector<S>& lambda, std::vector<S>& alpha, Less less) {
  std::vector<size_t> idx(lambda.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return less(lambda[a], lambda[b]); });
  std::vector<S> l, a;
  for (size_t i : idx) {
    l.push_back(lambda[i]);
    a.push_back(alpha[i]);
  }
  lambda = std::move(l);
  alpha = std::move(a);
}

template <class S>
Matrix<S> chart_z(const std::vector<S>& lambda, const std::vector<S>& alpha) {
  const int n = static_cast<int>(lambda.size());
  Matrix<S> z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const size_t a = static_cast<size_t>(i), b = static_cast<size_t>(j);
      z(i, j) = i == j ? alpha[a] : from_int<S>(1) / (lambda[a] - lambda[b]);
    }
  return z;
}

Eigen::MatrixXcd to_eigen(const MatC& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

void require_same_square(const MatQ& X, const MatQ& Z) {
  X.require_square("validate");
  if (X.rows() != Z.rows() || !Z.is_square())
    throw std::invalid_argument("X and Z must be square of equal size");
}

}  // namespace

MatQ cm_defect(const MatQ& X, const MatQ& Z) { return commutator(X, Z) + MatQ::identity(X.rows()); }
MatC cm_defect(const MatC& X, const MatC& Z) { return commutator(X, Z) + MatC::identity(X.rows()); }

CMPair validate(const MatQ& X, const MatQ& Z) {
  require_same_square(X, Z);
  int r = rank_exact(cm_defect(X, Z));
  if (r != 1) throw NotCMPairError(r);
  return {X, Z};
}

CMPairC validate(const MatC& X, const MatC& Z, double tol) {
  X.require_square("validate");
  if (X.rows() != Z.rows() || !Z.is_square())
    throw std::invalid_argument("X and Z must be square of equal size");
  auto sv = singular_values(cm_defect(X, Z));
  const double scale = std::max(1.0, sv.empty() ? 0.0 : sv.front());
  int r = 0;
  for (double s : sv)
    if (s > tol * scale) ++r;
  if (r != 1) throw NotCMPairError(r);
  return {X, Z};
}

CMPair from_chart(const CMChart& c) {
  if (c.lambda.size() != c.alpha.size()) throw std::invalid_argument("chart: lambda/alpha size mismatch");
  for (size_t i = 0; i < c.lambda.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (c.lambda[i] == c.lambda[j]) throw std::domain_error("chart: repeated lambda");
  return {MatQ::diagonal(c.lambda), chart_z(c.lambda, c.alpha)};
}

CMPairC from_chart(const CMChartC& c) {
  if (c.lambda.size() != c.alpha.size()) throw std::invalid_argument("chart: lambda/alpha size mismatch");
  for (size_t i = 0; i < c.lambda.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (c.lambda[i] == c.lambda[j]) throw std::domain_error("chart: repeated lambda");
  return {MatC::diagonal(c.lambda), chart_z(c.lambda, c.alpha)};
}

void canonicalize(CMChart& c) { sort_chart(c.lambda, c.alpha, gq_less); }
void canonicalize(CMChartC& c) { sort_chart(c.lambda, c.alpha, cplx_less); }

std::optional<CMChart> to_chart_exact(const CMPair& p) {
  const int n = p.n();
  auto roots = exact_roots_if_split(char_poly(p.X));
  if (!roots) return std::nullopt;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if ((*roots)[static_cast<size_t>(i)] == (*roots)[static_cast<size_t>(j)])
        throw NonRegularError("non-regular point: X has a repeated eigenvalue");
  MatQ P(n, n);
  for (int k = 0; k < n; ++k) {
    MatQ shifted = p.X - (*roots)[static_cast<size_t>(k)] * MatQ::identity(n);
    MatQ v = nullspace(shifted);
    for (int i = 0; i < n; ++i) P(i, k) = v(i, 0);
  }
  MatQ zc = inverse(P) * p.Z * P;
  CMChart c{*roots, {}};
  for (int i = 0; i < n; ++i) c.alpha.push_back(zc(i, i));
  canonicalize(c);
  return c;
}

CMChartC to_chart(const CMPairC& p, double tol) {
  const int n = p.n();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(p.X));
  if (es.info() != Eigen::Success) throw std::runtime_error("to_chart: eigensolver failed");
  CMChartC c;
  for (int i = 0; i < n; ++i) c.lambda.push_back(es.eigenvalues()(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (std::abs(c.lambda[static_cast<size_t>(i)] - c.lambda[static_cast<size_t>(j)]) <=
          tol * std::max(1.0, std::abs(c.lambda[static_cast<size_t>(i)])))
        throw NonRegularError("non-regular point: X eigenvalues closer than tolerance");
  Eigen::MatrixXcd P = es.eigenvectors();
  Eigen::MatrixXcd zc = P.inverse() * to_eigen(p.Z) * P;
  for (int i = 0; i < n; ++i) c.alpha.push_back(zc(i, i));
  canonicalize(c);
  return c;
}

CMChartC to_chart(const CMPair& p) { return to_chart(to_approx(p)); }

CMPairC to_approx(const CMPair& p) { return {to_approx(p.X), to_approx(p.Z)}; }

CMChartC to_approx(const CMChart& c) {
  CMChartC out;
  for (const auto& v : c.lambda) out.lambda.push_back(v.to_complex());
  for (const auto& v : c.alpha) out.alpha.push_back(v.to_complex());
  return out;
}

UpsilonTarget upsilon(const CMPair& p) { return {eigenvalues(p.X), eigenvalues(p.Z)}; }
UpsilonTarget upsilon(const CMPairC& p) { return {eigenvalues(p.X), eigenvalues(p.Z)}; }

// ---------------------------------------------------------------- fibers

namespace {

std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots) {
  PolyC p = PolyC::constant(1.0);
  for (const auto& r : roots) p = p * PolyC::linear_root(r);
  return p.coeffs();
}

struct NewtonSystem {
  std::vector<cplx> lambda;
  std::vector<cplx> target;  // char-poly coefficients c_0..c_{n-1}

  int n() const { return static_cast<int>(lambda.size()); }

  Eigen::VectorXcd residual(const Eigen::VectorXcd& a) const {
    MatC z = chart_z(lambda, std::vector<cplx>(a.data(), a.data() + a.size()));
    PolyC chi = char_poly(z);
    Eigen::VectorXcd f(n());
    for (int k = 0; k < n(); ++k) f(k) = chi.coeff(k) - target[static_cast<size_t>(k)];
    return f;
  }

  // d c_k / d alpha_i = -[s^k] det(s I - Z with row/column i removed)
  Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& a) const {
    MatC z = chart_z(lambda, std::vector<cplx>(a.data(), a.data() + a.size()));
    Eigen::MatrixXcd j(n(), n());
    for (int i = 0; i < n(); ++i) {
      MatC minor(n() - 1, n() - 1);
      for (int r = 0, rr = 0; r < n(); ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n(); ++c) {
          if (c == i) continue;
          minor(rr, cc++) = z(r, c);
        }
        ++rr;
      }
      PolyC chi = char_poly(minor);
      for (int k = 0; k < n(); ++k) j(k, i) = -chi.coeff(k);
    }
    return j;
  }

  std::optional<Eigen::VectorXcd> solve(Eigen::VectorXcd a, int max_steps, double scale) const {
    for (int it = 0; it < max_steps; ++it) {
      Eigen::VectorXcd f = residual(a);
      Eigen::PartialPivLU<Eigen::MatrixXcd> lu(jacobian(a));
      Eigen::VectorXcd step = lu.solve(f);
      if (!step.allFinite()) return std::nullopt;
      a -= step;
      if (a.cwiseAbs().maxCoeff() > 1e8 * scale) return std::nullopt;
      if (step.cwiseAbs().maxCoeff() <= 1e-14 * std::max(1.0, a.cwiseAbs().maxCoeff())) break;
    }
    if (residual(a).cwiseAbs().maxCoeff() > 1e-10 * scale) return std::nullopt;
    return a;
  }
};

// Quad-precision complex numbers for polishing multiple fiber points, where
// Newton converges only linearly and double precision stalls near sqrt(eps).
struct Qc {
  __float128 re = 0, im = 0;
  friend Qc operator+(Qc a, Qc b) { return {a.re + b.re, a.im + b.im}; }
  friend Qc operator-(Qc a, Qc b) { return {a.re - b.re, a.im - b.im}; }
  friend Qc operator*(Qc a, Qc b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend Qc operator/(Qc a, Qc b) {
    __float128 d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

__float128 qabs(__float128 v) { return v < 0 ? -v : v; }
__float128 l1(Qc a) { return qabs(a.re) + qabs(a.im); }
Qc to_q(cplx z) { return {z.real(), z.imag()}; }
cplx from_q(Qc z) { return {static_cast<double>(z.re), static_cast<double>(z.im)}; }

using QMat = std::vector<std::vector<Qc>>;

// Coefficients c_0..c_{m-1} of det(sI - M) for m <= 3 (monic term dropped).
std::vector<Qc> char_coeffs(const QMat& m) {
  const size_t k = m.size();
  if (k == 0) return {};
  if (k == 1) return {Qc{} - m[0][0]};
  Qc tr{};
  for (size_t i = 0; i < k; ++i) tr = tr + m[i][i];
  auto minor2 = [&](size_t i, size_t j) { return m[i][i] * m[j][j] - m[i][j] * m[j][i]; };
  if (k == 2) return {minor2(0, 1), Qc{} - tr};
  Qc e2 = minor2(0, 1) + minor2(0, 2) + minor2(1, 2);
  Qc det = m[0][0] * minor2(1, 2) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return {Qc{} - det, e2, Qc{} - tr};
}

struct QuadPolish {
  std::vector<Qc> lambda, target;

  QMat z(const std::vector<Qc>& a) const {
    const size_t n = lambda.size();
    QMat m(n, std::vector<Qc>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m[i][j] = i == j ? a[i] : Qc{1, 0} / (lambda[i] - lambda[j]);
    return m;
  }

  std::vector<Qc> step(const std::vector<Qc>& a) const {
    const size_t n = lambda.size();
    QMat zm = z(a);
    std::vector<Qc> chi = char_coeffs(zm);
    QMat jac(n, std::vector<Qc>(n + 1));
    for (size_t k = 0; k < n; ++k) jac[k][n] = chi[k] - target[k];
    for (size_t i = 0; i < n; ++i) {
      QMat minor;
      for (size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Qc> row;
        for (size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(zm[r][c]);
        minor.push_back(row);
      }
      std::vector<Qc> mc = char_coeffs(minor);
      mc.push_back(Qc{1, 0});
      for (size_t k = 0; k < n; ++k) jac[k][i] = Qc{} - mc[k];
    }
    for (size_t c = 0; c < n; ++c) {
      size_t piv = c;
      for (size_t r = c + 1; r < n; ++r)
        if (l1(jac[r][c]) > l1(jac[piv][c])) piv = r;
      std::swap(jac[c], jac[piv]);
      if (l1(jac[c][c]) == 0) return {};
      for (size_t r = c + 1; r < n; ++r) {
        Qc f = jac[r][c] / jac[c][c];
        for (size_t k = c; k <= n; ++k) jac[r][k] = jac[r][k] - f * jac[c][k];
      }
    }
    std::vector<Qc> x(n);
    for (size_t c = n; c-- > 0;) {
      Qc acc = jac[c][n];
      for (size_t k = c + 1; k < n; ++k) acc = acc - jac[c][k] * x[k];
      x[c] = acc / jac[c][c];
    }
    return x;
  }

  // Newton until the step drops below the quad rounding level or stops
  // shrinking, which is where a multiple root's linear convergence ends.
  Eigen::VectorXcd run(const Eigen::VectorXcd& start) const {
    std::vector<Qc> a;
    for (int i = 0; i < start.size(); ++i) a.push_back(to_q(start(i)));
    __float128 prev = -1;
    for (int it = 0; it < 400; ++it) {
      std::vector<Qc> d = step(a);
      if (d.empty()) break;
      __float128 size = 0, mag = 1;
      for (size_t i = 0; i < a.size(); ++i) {
        size = std::max(size, l1(d[i]));
        mag = std::max(mag, l1(a[i]));
      }
      if (prev >= 0 && size > 0.95 * prev) break;
      for (size_t i = 0; i < a.size(); ++i) a[i] = a[i] - d[i];
      if (size <= 1e-30 * mag) break;
      prev = size;
    }
    Eigen::VectorXcd out(start.size());
    for (int i = 0; i < start.size(); ++i) out(i) = from_q(a[static_cast<size_t>(i)]);
    return out;
  }
};

}  // namespace

FiberResult fiber_solve(const std::vector<cplx>& spec_x, const std::vector<cplx>& spec_z,
                        const FiberOptions& opts) {
  const int n = static_cast<int>(spec_x.size());
  if (n < 1 || n > 3) throw std::domain_error("fiber_solve: only 1 <= n <= 3 is supported");
  if (spec_z.size() != spec_x.size()) throw std::invalid_argument("fiber_solve: spectra differ in size");
  std::vector<cplx> lambda = spec_x;
  std::sort(lambda.begin(), lambda.end(), cplx_less);
  for (int i = 1; i < n; ++i)
    if (std::abs(lambda[static_cast<size_t>(i)] - lambda[static_cast<size_t>(i - 1)]) <= 1e-12)
      throw std::domain_error("fiber_solve: repeated X-eigenvalues are unsupported");

  FiberResult res;
  if (n == 1) {
    res.points.push_back({lambda, {spec_z[0]}});
    res.converged_starts = 1;
    return res;
  }
  if (n == 2) {
    cplx e1 = spec_z[0] + spec_z[1];
    cplx e2 = spec_z[0] * spec_z[1];
    cplx d = lambda[0] - lambda[1];
    cplx disc = e1 * e1 - 4.0 * (e2 - 1.0 / (d * d));
    cplx r = std::sqrt(disc);
    res.points.push_back({lambda, {(e1 + r) / 2.0, (e1 - r) / 2.0}});
    if (std::abs(r) > opts.dedup_radius) res.points.push_back({lambda, {(e1 - r) / 2.0, (e1 + r) / 2.0}});
    res.converged_starts = 2;
    std::sort(res.points.begin(), res.points.end(),
              [](const CMChartC& a, const CMChartC& b) {
                return std::lexicographical_compare(a.alpha.begin(), a.alpha.end(), b.alpha.begin(),
                                                    b.alpha.end(), cplx_less);
              });
    return res;
  }

  NewtonSystem sys{lambda, poly_from_roots(spec_z)};
  sys.target.resize(static_cast<size_t>(n));
  double scale = 1.0;
  for (const auto& z : spec_z) scale = std::max(scale, std::abs(z));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      scale = std::max(scale, 1.0 / std::abs(lambda[static_cast<size_t>(i)] - lambda[static_cast<size_t>(j)]));

  QuadPolish polish;
  for (const auto& l : lambda) polish.lambda.push_back(to_q(l));
  for (const auto& c : sys.target) polish.target.push_back(to_q(c));

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, scale);
  std::vector<Eigen::VectorXcd> clusters;
  auto close = [&](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    return (a - b).cwiseAbs().maxCoeff() <= opts.dedup_radius;
  };
  for (int s = 0; s < opts.starts; ++s) {
    Eigen::VectorXcd a(n);
    for (int i = 0; i < n; ++i) a(i) = cplx(gauss(rng), gauss(rng));
    auto sol = sys.solve(a, opts.max_newton_steps, scale);
    if (!sol) continue;
    ++res.converged_starts;
    sol = polish.run(*sol);
    bool seen = false;
    for (const auto& c : clusters)
      if (close(c, *sol)) {
        seen = true;
        break;
      }
    if (!seen) clusters.push_back(*sol);
  }
  int bound = 1;
  for (int k = 2; k <= n; ++k) bound *= k;
  if (static_cast<int>(clusters.size()) > bound)
    throw std::logic_error("fiber_solve: more than n! solution clusters (deduplication failure)");
  for (auto& c : clusters) {
    res.points.push_back({lambda, std::vector<cplx>(c.data(), c.data() + c.size())});
  }
  std::sort(res.points.begin(), res.points.end(), [](const CMChartC& a, const CMChartC& b) {
    return std::lexicographical_compare(a.alpha.begin(), a.alpha.end(), b.alpha.begin(), b.alpha.end(),
                                        cplx_less);
  });
  return res;
}

cplx Surd::approx() const { return a.to_complex() + b.to_complex() * std::sqrt(d.to_complex()); }

std::optional<Rational> Surd::exact_imag() const {
  if (!d.is_real() || sgn(d.re) < 0) return std::nullopt;
  if (b.im == 0) return a.im;
  // sqrt(d) is rational only when d is a perfect square
  mpz_class num = d.re.get_num(), den = d.re.get_den();
  mpz_class rn = sqrt(num), rd = sqrt(den);
  if (rn * rn == num && rd * rd == den) return Rational(a.im + b.im * Rational(rn, rd));
  return std::nullopt;
}

std::vector<SurdChart> fiber_solve_exact(const std::vector<Gq>& lambda_in, const std::vector<Gq>& zeta) {
  if (lambda_in.size() != zeta.size()) throw std::invalid_argument("fiber_solve_exact: size mismatch");
  const size_t n = lambda_in.size();
  if (n < 1 || n > 2) throw std::domain_error("fiber_solve_exact: only n <= 2 has a closed form here");
  std::vector<Gq> lambda = lambda_in;
  std::sort(lambda.begin(), lambda.end(), gq_less);
  if (n == 1) return {{lambda, {Surd{zeta[0], Gq(0), Gq(0)}}}};
  if (lambda[0] == lambda[1]) throw std::domain_error("fiber_solve_exact: repeated X-eigenvalues");
  Gq e1 = zeta[0] + zeta[1];
  Gq dl = lambda[0] - lambda[1];
  // discriminant (zeta_1 - zeta_2)^2 + 4 / (l1 - l2)^2
  Gq disc = (zeta[0] - zeta[1]) * (zeta[0] - zeta[1]) + Gq(4) / (dl * dl);
  Gq half = Gq::frac(1, 2);
  Surd plus{half * e1, half, disc}, minus{half * e1, -half, disc};
  std::vector<SurdChart> out{{lambda, {plus, minus}}};
  if (!disc.is_zero()) out.push_back({lambda, {minus, plus}});
  return out;
}

// ------------------------------------------------------------ realification

namespace {

template <class S>
bool scalar_is_real(const S& v, double tol) {
  if constexpr (is_exact_v<S>)
    return v.is_real();
  else
    return is_real_approx(v, tol);
}

template <class S>
bool scalar_equal(const S& a, const S& b, double tol) {
  if constexpr (is_exact_v<S>)
    return a == b;
  else
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(a));
}

// Conjugation-closed charts: real points stay 1x1, each pair (c, conj c)
// with Im lambda > 0 is rotated by [[1, 1], [i, -i]].
template <class S>
std::optional<std::pair<Matrix<S>, Matrix<S>>> realify_closed_chart(const std::vector<S>& lambda,
                                                                     const std::vector<S>& alpha,
                                                                     double tol) {
  const size_t n = lambda.size();
  std::vector<size_t> order;
  std::vector<bool> used(n, false);
  std::vector<int> block_start;
  for (size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    if (scalar_is_real(lambda[i], tol)) {
      if (!scalar_is_real(alpha[i], tol)) return std::nullopt;
      used[i] = true;
      order.push_back(i);
      continue;
    }
    std::optional<size_t> partner;
    for (size_t j = 0; j < n; ++j)
      if (!used[j] && j != i && scalar_equal(lambda[j], conj(lambda[i]), tol)) partner = j;
    if (!partner || !scalar_equal(alpha[*partner], conj(alpha[i]), tol)) return std::nullopt;
    size_t up = to_complex(lambda[i]).imag() > 0 ? i : *partner;
    size_t down = up == i ? *partner : i;
    used[up] = used[down] = true;
    block_start.push_back(static_cast<int>(order.size()));
    order.push_back(up);
    order.push_back(down);
  }
  std::vector<S> l, a;
  for (size_t k : order) {
    l.push_back(lambda[k]);
    a.push_back(alpha[k]);
  }
  Matrix<S> X = Matrix<S>::diagonal(l), Z = chart_z(l, a);
  const int nn = static_cast<int>(n);
  Matrix<S> s = Matrix<S>::identity(nn), sinv = Matrix<S>::identity(nn);
  const S one = from_int<S>(1), i_unit = from_gq<S>(Gq::i()), half = from_gq<S>(Gq::frac(1, 2));
  for (int b : block_start) {
    s(b, b) = one;
    s(b, b + 1) = one;
    s(b + 1, b) = i_unit;
    s(b + 1, b + 1) = -i_unit;
    sinv(b, b) = half;
    sinv(b, b + 1) = -half * i_unit;
    sinv(b + 1, b) = half;
    sinv(b + 1, b + 1) = half * i_unit;
  }
  return std::make_pair(s * X * sinv, s * Z * sinv);
}

MatQ real_part_checked(const MatQ& m) {
  if (!is_real_matrix(m)) throw std::logic_error("realification produced non-real entries");
  return m;
}

MatC real_part_checked(const MatC& m, double tol) {
  double scale = 1.0;
  for (const auto& v : m.data()) scale = std::max(scale, std::abs(v));
  for (const auto& v : m.data())
    if (std::abs(v.imag()) > tol * scale) throw std::logic_error("realification produced non-real entries");
  return real_part(m);
}

}  // namespace

RealifyResult realify_regular(const CMPairC& p, bool require_real_spectra, double tol) {
  CMChartC c = to_chart(p);
  RealifyResult res;
  if (require_real_spectra) {
    for (const auto& l : c.lambda)
      if (!is_real_approx(l, tol)) throw std::domain_error("realify: X spectrum is not real");
    // Coefficients stay well conditioned at repeated eigenvalues; the roots
    // of a real cubic with a triple root only carry about eps^(1/3).
    PolyC chi_z = char_poly(p.Z);
    double coeff_scale = 1.0;
    for (const auto& v : chi_z.coeffs()) coeff_scale = std::max(coeff_scale, std::abs(v));
    for (const auto& v : chi_z.coeffs())
      if (std::abs(v.imag()) > 1e-9 * coeff_scale) throw std::domain_error("realify: Z spectrum is not real");
    std::vector<cplx> real_coeffs;
    for (const auto& v : chi_z.coeffs()) real_coeffs.emplace_back(v.real(), 0.0);
    for (const auto& z : poly_roots(PolyC(real_coeffs)))
      if (std::abs(z.imag()) > 1e-4 * std::max(1.0, std::abs(z)))
        throw std::domain_error("realify: Z spectrum is not real");
    for (const auto& a : c.alpha) res.residual = std::max(res.residual, std::abs(a.imag()));
    if (res.residual > tol) throw CounterexampleAlarm("realify: Im alpha residual above tolerance");
    for (auto& l : c.lambda) l = cplx(l.real(), 0.0);
    for (auto& a : c.alpha) a = cplx(a.real(), 0.0);
    res.pair_approx = from_chart(c);
    return res;
  }
  auto rp = realify_closed_chart(c.lambda, c.alpha, tol);
  if (!rp) throw std::domain_error("realify: chart is not closed under complex conjugation");
  res.pair_approx = {real_part_checked(rp->first, tol), real_part_checked(rp->second, tol)};
  return res;
}

RealifyResult realify_regular(const CMPair& p, bool require_real_spectra, double tol) {
  auto chart = to_chart_exact(p);
  if (!chart) return realify_regular(to_approx(p), require_real_spectra, tol);
  RealifyResult res;
  res.exact = true;
  if (require_real_spectra) {
    for (const auto& l : chart->lambda)
      if (!l.is_real()) throw std::domain_error("realify: X spectrum is not real");
    PolyQ chi_z = char_poly(p.Z);
    if (!chi_z.has_real_coeffs() || !real_roots_certified(chi_z).all_real)
      throw std::domain_error("realify: Z spectrum is not real");
    Rational worst(0);
    for (const auto& a : chart->alpha) worst = std::max(worst, Rational(abs(a.im)));
    res.residual_exact = worst;
    res.residual = worst.get_d();
    if (worst != 0) throw CounterexampleAlarm("realify: nonzero exact Im alpha residual");
    res.pair = from_chart(*chart);
  } else {
    auto rp = realify_closed_chart(chart->lambda, chart->alpha, 0.0);
    if (!rp) throw std::domain_error("realify: chart is not closed under complex conjugation");
    res.pair = CMPair{real_part_checked(rp->first), real_part_checked(rp->second)};
  }
  res.pair_approx = to_approx(*res.pair);
  return res;
}

// ------------------------------------------------------------ other maps

namespace {
template <class S, class Pred>
bool all_trace_words(const Matrix<S>& X, const Matrix<S>& Z, int L, Pred pred) {
  std::vector<Matrix<S>> level{Matrix<S>::identity(X.rows())};
  for (int len = 1; len <= L; ++len) {
    std::vector<Matrix<S>> next;
    next.reserve(level.size() * 2);
    for (const auto& w : level) {
      next.push_back(w * X);
      next.push_back(w * Z);
    }
    for (const auto& w : next)
      if (!pred(w.trace())) return false;
    level = std::move(next);
  }
  return true;
}
}  // namespace

bool rc_membership_necessary(const CMPair& p, int L) {
  return all_trace_words(p.X, p.Z, L, [](const Gq& t) { return t.is_real(); });
}

bool rc_membership_necessary(const CMPairC& p, int L, double tol) {
  return all_trace_words(p.X, p.Z, L, [&](const cplx& t) { return is_real_approx(t, tol); });
}

CMPair cm_flow(const CMPair& p, int k, const Gq& t) {
  if (k < 1) throw std::invalid_argument("cm_flow: k must be positive");
  MatQ shift = matrix_power(MatQ(-p.Z), k - 1);
  return {p.X + (Gq(k) * t) * shift, p.Z};
}

Gq cm_hamiltonian(const CMPair& p, int k) {
  Gq tr = matrix_power(p.Z, k).trace();
  return (k - 1) % 2 == 0 ? tr : -tr;
}

CMPair bispectral_involution(const CMPair& p) { return {p.Z.transpose(), p.X.transpose()}; }

QuiverRep extend_to_quiver(const CMPair& p) {
  const int n = p.n();
  MatQ m = cm_defect(p.X, p.Z);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (m(i, j).is_zero()) continue;
      // M = w0 v0 has rank one, so M^2 = tr(M) M = n M and v w = n
      MatQ w(n, 1), v(1, n);
      Gq inv = m(i, j).inverse();
      for (int a = 0; a < n; ++a) w(a, 0) = m(a, j);
      for (int b = 0; b < n; ++b) v(0, b) = m(i, b) * inv;
      if (w * v != m) throw NotCMPairError(rank_exact(m));
      return {p.X, p.Z, v, w};
    }
  throw NotCMPairError(0);
}

CMPair conjugate(const CMPair& p, const MatQ& g) {
  MatQ gi = inverse(g);
  return {g * p.X * gi, g * p.Z * gi};
}

CMPairC conjugate(const CMPairC& p, const MatC& g) {
  MatC gi = inverse(g);
  return {g * p.X * gi, g * p.Z * gi};
}

}  // namespace cmreal
