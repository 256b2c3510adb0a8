#include "cmreal/matrix.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "cmreal/roots.hpp"

namespace cmreal {

MatQ real_part(const MatQ& a) {
  MatQ m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = Gq(a(i, j).re);
  return m;
}

MatC real_part(const MatC& a) {
  MatC m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = cplx(a(i, j).real(), 0.0);
  return m;
}

bool is_real_matrix(const MatQ& a) {
  return std::all_of(a.data().begin(), a.data().end(), [](const Gq& v) { return v.is_real(); });
}

bool is_real_matrix(const MatC& a, double tol) {
  return std::all_of(a.data().begin(), a.data().end(),
                     [&](const cplx& v) { return is_real_approx(v, tol); });
}

MatC to_approx(const MatQ& a) {
  MatC m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).to_complex();
  return m;
}

Gq det(const MatQ& a) {
  a.require_square("det");
  MatQ m = a;
  const int n = m.rows();
  Gq d(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!m(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Gq(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Gq inv = m(c, c).inverse();
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Gq f = m(r, c) * inv;
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

cplx det(const MatC& a) {
  a.require_square("det");
  MatC m = a;
  const int n = m.rows();
  cplx d = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
    if (m(piv, c) == cplx(0.0)) return 0.0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      cplx f = m(r, c) / m(c, c);
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

namespace {
template <class S>
UniPoly<S> faddeev_leverrier(const Matrix<S>& a) {
  a.require_square("char_poly");
  const int n = a.rows();
  std::vector<S> c(static_cast<size_t>(n) + 1);
  c[static_cast<size_t>(n)] = from_int<S>(1);
  Matrix<S> mk(n, n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    Matrix<S> am = a * mk;
    mk = am;
    for (int i = 0; i < n; ++i) mk(i, i) += c[static_cast<size_t>(n - k + 1)];
    Matrix<S> amk = a * mk;
    c[static_cast<size_t>(n - k)] = -amk.trace() / from_int<S>(k);
  }
  return UniPoly<S>(std::move(c));
}
}  // namespace

PolyQ char_poly(const MatQ& a) { return faddeev_leverrier(a); }
PolyC char_poly(const MatC& a) { return faddeev_leverrier(a); }

std::vector<MatQ> adjugate_resolvent(const MatQ& a) {
  a.require_square("adjugate_resolvent");
  const int n = a.rows();
  PolyQ chi = char_poly(a);
  std::vector<MatQ> b;
  if (n == 0) return b;
  b.push_back(MatQ::identity(n));
  for (int k = 1; k < n; ++k) {
    MatQ next = a * b.back();
    for (int i = 0; i < n; ++i) next(i, i) += chi.coeff(n - k);
    b.push_back(std::move(next));
  }
  return b;
}

RowEchelon rref(const MatQ& a) {
  MatQ m = a;
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Gq inv = m(row, c).inverse();
    for (int j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      Gq f = m(r, c);
      for (int j = c; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  MatQ reduced(row, m.cols());
  for (int r = 0; r < row; ++r)
    for (int j = 0; j < m.cols(); ++j) reduced(r, j) = m(r, j);
  return {std::move(reduced), std::move(pivots)};
}

int rank_exact(const MatQ& a) { return static_cast<int>(rref(a).pivots.size()); }

MatQ nullspace(const MatQ& a) {
  RowEchelon e = rref(a);
  const int n = a.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  MatQ basis(n, static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    basis(f, static_cast<int>(k)) = Gq(1);
    for (size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], static_cast<int>(k)) = -e.reduced(static_cast<int>(r), f);
  }
  return basis;
}

MatQ inverse(const MatQ& a) {
  a.require_square("inverse");
  const int n = a.rows();
  MatQ aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Gq(1);
  }
  RowEchelon e = rref(aug);
  if (static_cast<int>(e.pivots.size()) < n || e.pivots[static_cast<size_t>(n - 1)] != n - 1)
    throw std::domain_error("inverse: singular matrix");
  MatQ inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

MatC inverse(const MatC& a) {
  a.require_square("inverse");
  const int n = a.rows();
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
  if (!lu.isInvertible()) throw std::domain_error("inverse: singular matrix");
  Eigen::MatrixXcd inv = lu.inverse();
  MatC out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = inv(i, j);
  return out;
}

void Spectrum::canonicalize() {
  std::sort(values.begin(), values.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

namespace {
bool has_matching(const Spectrum& a, const Spectrum& b, double tol) {
  const size_t n = a.size();
  std::vector<int> match_b(n, -1);
  std::function<bool(size_t, std::vector<bool>&)> augment = [&](size_t i, std::vector<bool>& seen) {
    for (size_t j = 0; j < n; ++j) {
      if (seen[j] || std::abs(a.values[i] - b.values[j]) > tol) continue;
      seen[j] = true;
      if (match_b[j] < 0 || augment(static_cast<size_t>(match_b[j]), seen)) {
        match_b[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (size_t i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    if (!augment(i, seen)) return false;
  }
  return true;
}
}  // namespace

bool spectra_match(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.size() != b.size()) return false;
  return has_matching(a, b, tol);
}

double spectrum_distance(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<double> cands{0.0};
  for (const auto& x : a.values)
    for (const auto& y : b.values) cands.push_back(std::abs(x - y));
  std::sort(cands.begin(), cands.end());
  size_t lo = 0, hi = cands.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (has_matching(a, b, cands[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return cands[lo];
}

Spectrum eigenvalues(const MatQ& a) {
  a.require_square("eigenvalues");
  Spectrum s{poly_roots(char_poly(a))};
  s.canonicalize();
  return s;
}

Spectrum eigenvalues(const MatC& a) {
  a.require_square("eigenvalues");
  Spectrum s{poly_roots(char_poly(a))};
  s.canonicalize();
  return s;
}

MatQ realify_conjugation(const std::vector<MatQ>& xs, const std::vector<MatQ>& ys, const MatQ& g) {
  if (xs.size() != ys.size()) throw std::invalid_argument("realify_conjugation: list sizes differ");
  g.require_square("realify_conjugation");
  for (size_t j = 0; j < xs.size(); ++j) {
    if (!is_real_matrix(xs[j]) || !is_real_matrix(ys[j]))
      throw std::domain_error("realify_conjugation: input matrices must be real");
    if (ys[j] * g != g * xs[j])
      throw std::domain_error("realify_conjugation: g does not intertwine the lists");
  }
  if (det(g).is_zero()) throw std::domain_error("realify_conjugation: g is singular");
  // det Re((1 + k i) g) is a nonzero polynomial in k of degree <= n
  for (int k = 0; k <= g.rows(); ++k) {
    MatQ h = real_part(Gq(Rational(1), Rational(k)) * g);
    if (!det(h).is_zero()) return h;
  }
  throw std::logic_error("realify_conjugation: no invertible real part found");
}

std::vector<double> singular_values(const MatC& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

std::string to_string(const MatQ& a) {
  std::string out = "[";
  for (int i = 0; i < a.rows(); ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < a.cols(); ++j) out += (j ? ", " : "") + a(i, j).str();
    out += "]";
  }
  return out + "]";
}

}  // namespace cmreal
