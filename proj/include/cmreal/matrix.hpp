#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmreal/multipoly.hpp"
#include "cmreal/poly.hpp"

namespace cmreal {

/// Dense row-major matrix over any commutative ring R whose value-initialised
/// element is zero (Gq, cplx, UniPoly, MultiPoly).
template <class R>
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols, const R& fill = R{})
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }
  Matrix(std::initializer_list<std::initializer_list<R>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(int n, const R& one = from_int<R>(1)) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  static Matrix diagonal(const std::vector<R>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  R& operator()(int i, int j) { return a_[idx(i, j)]; }
  const R& operator()(int i, int j) const { return a_[idx(i, j)]; }
  const std::vector<R>& data() const { return a_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  R trace() const {
    require_square("trace");
    R s{};
    for (int i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!cmreal::is_zero(v)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = -a.a_[k];
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (cmreal::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }
  friend Matrix operator*(const R& s, const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = s * a.a_[k];
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  void require_square(const char* what) const {
    if (!is_square()) throw std::domain_error(std::string(what) + ": matrix is not square");
  }

private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
  }
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<R> a_;
};

using MatQ = Matrix<Gq>;
using MatC = Matrix<cplx>;

template <class R>
Matrix<R> commutator(const Matrix<R>& a, const Matrix<R>& b) {
  return a * b - b * a;
}

template <class R>
Matrix<R> matrix_power(const Matrix<R>& a, int k) {
  a.require_square("matrix_power");
  Matrix<R> out = Matrix<R>::identity(a.rows());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

template <class S>
Matrix<S> conj(const Matrix<S>& a) {
  Matrix<S> m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = cmreal::conj(a(i, j));
  return m;
}

/// Entrywise real part (imaginary part set to zero).
MatQ real_part(const MatQ& a);
MatC real_part(const MatC& a);
bool is_real_matrix(const MatQ& a);
bool is_real_matrix(const MatC& a, double tol = kDefaultTol);
MatC to_approx(const MatQ& a);

/// Characteristic polynomial by Berkowitz's division-free algorithm.
/// Returns p[0..n] with det(x I - A) = sum_k p[k] x^{n-k}, p[0] = one.
/// `reduce` is applied after every ring product (e.g. series truncation).
template <class R>
std::vector<R> berkowitz(const Matrix<R>& a, const R& one,
                         const std::function<R(const R&)>& reduce = {}) {
  a.require_square("berkowitz");
  auto red = [&](const R& v) { return reduce ? reduce(v) : v; };
  const int n = a.rows();
  std::vector<R> p{one};
  for (int r = 0; r < n; ++r) {
    // Toeplitz column t_0 = 1, t_1 = -a_rr, t_k = -R M^{k-2} C
    std::vector<R> t{one, -a(r, r)};
    std::vector<R> v(static_cast<size_t>(r));  // M^{k} C
    for (int i = 0; i < r; ++i) v[static_cast<size_t>(i)] = a(i, r);
    for (int k = 2; k <= r + 1; ++k) {
      R s{};
      for (int j = 0; j < r; ++j) s += red(a(r, j) * v[static_cast<size_t>(j)]);
      t.push_back(-s);
      if (k == r + 1) break;
      std::vector<R> nv(static_cast<size_t>(r));
      for (int i = 0; i < r; ++i) {
        R acc{};
        for (int j = 0; j < r; ++j) acc += red(a(i, j) * v[static_cast<size_t>(j)]);
        nv[static_cast<size_t>(i)] = acc;
      }
      v = std::move(nv);
    }
    std::vector<R> q(static_cast<size_t>(r) + 2);
    for (int i = 0; i <= r + 1; ++i) {
      R acc{};
      for (int j = 0; j <= std::min(i, r); ++j) {
        const R& tv = t[static_cast<size_t>(i - j)];
        acc += red(tv * p[static_cast<size_t>(j)]);
      }
      q[static_cast<size_t>(i)] = acc;
    }
    p = std::move(q);
  }
  return p;
}

/// Determinant over a commutative ring without division.
template <class R>
R det_division_free(const Matrix<R>& a, const R& one,
                    const std::function<R(const R&)>& reduce = {}) {
  auto p = berkowitz(a, one, reduce);
  R d = p.back();
  return a.rows() % 2 == 0 ? d : -d;
}

Gq det(const MatQ& a);
cplx det(const MatC& a);

/// det(x I - A), monic of degree n (Faddeev-LeVerrier).
PolyQ char_poly(const MatQ& a);
PolyC char_poly(const MatC& a);

/// Coefficient matrices B_0..B_{n-1} with adj(x I - A) = sum_k B_k x^{n-1-k}.
std::vector<MatQ> adjugate_resolvent(const MatQ& a);

int rank_exact(const MatQ& a);

struct RowEchelon {
  MatQ reduced;             ///< reduced row-echelon form, zero rows dropped
  std::vector<int> pivots;  ///< pivot column of each row
};
RowEchelon rref(const MatQ& a);

/// Basis of {v : A v = 0} as columns.
MatQ nullspace(const MatQ& a);
MatQ inverse(const MatQ& a);
MatC inverse(const MatC& a);

/// Unordered multiset of eigenvalues, kept sorted by (re, im).
struct Spectrum {
  std::vector<cplx> values;
  void canonicalize();
  size_t size() const { return values.size(); }
};

/// True iff a perfect matching exists pairing values at distance <= tol
/// (bottleneck matching under the |difference| cost).
bool spectra_match(const Spectrum& a, const Spectrum& b, double tol);
/// Smallest achievable bottleneck distance.
double spectrum_distance(const Spectrum& a, const Spectrum& b);

Spectrum eigenvalues(const MatQ& a);
Spectrum eigenvalues(const MatC& a);

/// Given real X_j, Y_j and an invertible complex g with Y_j g = g X_j,
/// returns a real invertible h with the same intertwining property.
MatQ realify_conjugation(const std::vector<MatQ>& xs, const std::vector<MatQ>& ys, const MatQ& g);

/// Singular values in decreasing order.
std::vector<double> singular_values(const MatC& a);

std::string to_string(const MatQ& a);

}  // namespace cmreal
