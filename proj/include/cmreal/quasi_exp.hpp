#pragma once

#include <optional>
#include <vector>

#include "cmreal/matrix.hpp"
#include "cmreal/ratfunc.hpp"
#include "cmreal/tau_wave.hpp"

namespace cmreal {

/// e^{mu_1 x} V_1 + ... + e^{mu_k x} V_k with each V_j given by a basis.
struct QuasiExpSpace {
  std::vector<Gq> mus;
  std::vector<std::vector<PolyQ>> spaces;

  int k() const { return static_cast<int>(mus.size()); }
  int total_dim() const;
};

/// e^{mu x} p(x)
struct QuasiExp {
  Gq mu;
  PolyQ p;
};

struct WronskianResult {
  Gq mu_sum;  ///< exponent of the stripped prefactor e^{mu_sum x}
  PolyQ poly;
};

/// Wr(q_1, ..., q_N) = e^{mu_sum x} poly, using D(e^{mu x} p) = e^{mu x}(mu p + p').
WronskianResult wronskian(const std::vector<QuasiExp>& qs);

/// Throws std::domain_error on repeated mu or a dependent basis.
void check_space(const QuasiExpSpace& s);

/// Monic polynomial part of the Wronskian of any basis; the prefactor
/// exponent is sum_j dim(V_j) mu_j.
PolyQ normalized_wronskian(const QuasiExpSpace& s);

/// Rows are basis vectors, column d holds the x^d coefficient.
MatQ coefficient_matrix(const std::vector<PolyQ>& basis, int columns = -1);
/// Reduced row-echelon basis of span(basis).
std::vector<PolyQ> echelon_basis(const std::vector<PolyQ>& basis);
bool same_span(const std::vector<PolyQ>& a, const std::vector<PolyQ>& b);
bool contains_constant(const std::vector<PolyQ>& basis);

/// Representative in G' with the same gamma image: no V_j contains a
/// nonzero constant and no V_j is zero. Removing a constant from V_j
/// replaces V_j by its derivative image and every other V_l by
/// (D + mu_l - mu_j) V_l.
QuasiExpSpace canonicalize(const QuasiExpSpace& s);

/// Monic operator d^N + c_{N-1} d^{N-1} + ... + c_0.
struct DiffOperator {
  std::vector<RatFunc> c;  ///< c_0 .. c_{N-1}
  int order() const { return static_cast<int>(c.size()); }
};

DiffOperator operator_from_kernel(const QuasiExpSpace& s);
/// e^{-mu x} L(e^{mu x} p)
RatFunc apply_operator(const DiffOperator& op, const Gq& mu, const PolyQ& p);

/// Laurent coefficients of p(z)^{-1} P_W e^{xz} e^{-xz} to order z^{-m}.
WaveFunction gamma_wave(const QuasiExpSpace& s, int m);

/// Data closed under complex conjugation (equivalent to a real basis).
bool real_span_test(const QuasiExpSpace& s);

/// Real bases for real mu_j, conjugate bases for conjugate pairs.
QuasiExpSpace extract_real_basis(const QuasiExpSpace& s);

struct Thm3Report {
  bool applicable = false;  ///< mu real and distinct, Wronskian with real coefficients
  bool hypothesis = false;  ///< certified real-rooted Wronskian
  bool conclusion = false;  ///< real_span_test
  bool falsified() const { return applicable && hypothesis && !conclusion; }
};

Thm3Report thm3_harness(const QuasiExpSpace& s);

/// Outcome of matching gamma(s) against beta(X, Z) over the fiber with
/// spec X = -(roots of the normalized Wronskian) and spec Z = {-mu_j} with
/// multiplicity deg of the block Wronskian of (mu_j, V_j).
struct Tau0Match {
  bool evaluated = false;  ///< false when the instance is outside the supported range
  bool matched = false;
  int n = 0;
  double discrepancy = 0.0;  ///< best max |a_k difference| over sample points
  std::optional<CMChartC> chart;
};

Tau0Match lemma_tau0_match(const QuasiExpSpace& s, std::uint64_t seed = 1, double tol = 1e-7);

}  // namespace cmreal
