#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmreal/matrix.hpp"

namespace cmreal {

/// Exact pair (X, Z) with rank([X,Z] + I) = 1.
struct CMPair {
  MatQ X;
  MatQ Z;
  int n() const { return X.rows(); }
};

/// Floating-point pair; rank one up to the singular-value tolerance.
struct CMPairC {
  MatC X;
  MatC Z;
  int n() const { return X.rows(); }
};

/// Coordinates on the locus where X has distinct eigenvalues.
struct CMChart {
  std::vector<Gq> lambda;
  std::vector<Gq> alpha;
};

struct CMChartC {
  std::vector<cplx> lambda;
  std::vector<cplx> alpha;
};

/// [X,Z] + I = w v with v w = n.
struct QuiverRep {
  MatQ X, Z;
  MatQ v;  ///< 1 x n
  MatQ w;  ///< n x 1
};

struct UpsilonTarget {
  Spectrum x;
  Spectrum z;
};

struct NotCMPairError : std::domain_error {
  int rank;
  explicit NotCMPairError(int r)
      : std::domain_error("not a Calogero-Moser pair: rank([X,Z]+I) = " + std::to_string(r)),
        rank(r) {}
};

struct NonRegularError : std::domain_error {
  using std::domain_error::domain_error;
};

/// [X,Z] + I
MatQ cm_defect(const MatQ& X, const MatQ& Z);
MatC cm_defect(const MatC& X, const MatC& Z);

/// Throws NotCMPairError unless rank([X,Z] + I) = 1 exactly.
CMPair validate(const MatQ& X, const MatQ& Z);
/// Rank-one test via singular values: the n-1 smallest are <= tol * max(1, s_max).
CMPairC validate(const MatC& X, const MatC& Z, double tol = kDefaultTol);

CMPair from_chart(const CMChart& c);
CMPairC from_chart(const CMChartC& c);

/// Sorts the chart by lambda in (re, im) order, permuting alpha alongside.
void canonicalize(CMChart& c);
void canonicalize(CMChartC& c);

/// Exact chart when the eigenvalues of X lie in Q(i); nullopt otherwise.
/// Throws NonRegularError on repeated eigenvalues.
std::optional<CMChart> to_chart_exact(const CMPair& p);
/// Throws NonRegularError when two eigenvalues of X are closer than tol.
CMChartC to_chart(const CMPairC& p, double tol = 1e-7);
CMChartC to_chart(const CMPair& p);

CMPairC to_approx(const CMPair& p);
CMChartC to_approx(const CMChart& c);

UpsilonTarget upsilon(const CMPair& p);
UpsilonTarget upsilon(const CMPairC& p);

struct FiberOptions {
  int starts = 3000;           ///< Newton starts for n = 3
  double dedup_radius = 1e-7;  ///< cluster radius in max-norm over alpha
  int max_newton_steps = 60;
  std::uint64_t seed = 1;
};

struct FiberResult {
  std::vector<CMChartC> points;  ///< canonicalized, sorted by alpha
  int converged_starts = 0;
};

/// All charts over (specX, specZ) for n <= 3 with distinct specX.
FiberResult fiber_solve(const std::vector<cplx>& spec_x, const std::vector<cplx>& spec_z,
                        const FiberOptions& opts = {});

/// a + b * sqrt(d) with a, b, d in Q(i); sqrt taken as the principal branch.
struct Surd {
  Gq a, b, d;
  cplx approx() const;
  /// Exact imaginary part when d is real and nonnegative.
  std::optional<Rational> exact_imag() const;
};

/// Chart point with alpha expressed in radicals.
struct SurdChart {
  std::vector<Gq> lambda;
  std::vector<Surd> alpha;
};

/// Closed-form fiber for n <= 2 over exact data: n = 1 gives alpha = zeta,
/// n = 2 gives the two roots of s^2 - e1 s + (e2 - (l1 - l2)^{-2}).
std::vector<SurdChart> fiber_solve_exact(const std::vector<Gq>& lambda,
                                         const std::vector<Gq>& zeta);

struct RealifyResult {
  bool exact = false;
  std::optional<CMPair> pair;  ///< set on the exact path
  CMPairC pair_approx;
  double residual = 0.0;       ///< max |Im alpha| (real-spectra route)
  std::optional<Rational> residual_exact;
};

struct CounterexampleAlarm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Real representative in the GL_n(C)-orbit of a regular pair.
///
/// require_real_spectra: both spectra must be real; the pair is rebuilt from
/// the chart with alpha coerced to its real part after checking
/// max |Im alpha| <= tol (exact zero on the exact path).
/// Otherwise: the chart multiset {(lambda_i, alpha_i)} must be closed under
/// conjugation; conjugate pairs are rotated into 2x2 real blocks.
/// Throws NonRegularError, std::domain_error (hypothesis not met) or
/// CounterexampleAlarm (residual above tolerance).
RealifyResult realify_regular(const CMPair& p, bool require_real_spectra, double tol = 1e-8);
RealifyResult realify_regular(const CMPairC& p, bool require_real_spectra, double tol = 1e-8);

/// tr w(X, Z) real for every word of length 1..L.
bool rc_membership_necessary(const CMPair& p, int word_length_bound = 6);
bool rc_membership_necessary(const CMPairC& p, int word_length_bound = 6, double tol = kDefaultTol);

/// (X + k t (-Z)^{k-1}, Z)
CMPair cm_flow(const CMPair& p, int k, const Gq& t);
/// (-1)^{k-1} tr Z^k
Gq cm_hamiltonian(const CMPair& p, int k);

/// (Z^t, X^t)
CMPair bispectral_involution(const CMPair& p);

QuiverRep extend_to_quiver(const CMPair& p);

/// g p g^{-1}
CMPair conjugate(const CMPair& p, const MatQ& g);
CMPairC conjugate(const CMPairC& p, const MatC& g);

}  // namespace cmreal
