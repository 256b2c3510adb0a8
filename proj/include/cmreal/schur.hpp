#pragma once

#include <vector>

#include "cmreal/tau_wave.hpp"
#include "cmreal/multipoly.hpp"

namespace cmreal {

/// lambda_1 >= ... >= lambda_l > 0.
struct Partition {
  std::vector<int> parts;

  int length() const { return static_cast<int>(parts.size()); }
  int size() const;
  /// lambda_1 + l - 1, the number of p-variables s_lambda can involve.
  int num_vars() const;
};

/// Throws std::invalid_argument unless the parts are positive and weakly decreasing.
Partition make_partition(std::vector<int> parts);

/// Coefficient of z^m in exp(sum_k p_k z^k) over variables p_1..p_num_vars
/// (variable index k-1 holds p_k). Zero for m < 0.
MultiPolyQ elementary_schur(int m, int num_vars);

/// Jacobi-Trudi determinant det(S_{lambda_i + j - i}).
MultiPolyQ schur_function(const Partition& lam);

struct CoroSchurReport {
  bool vacuous = false;     ///< specialization is constant
  bool hypothesis = false;  ///< real coefficients and certified real roots
  bool conclusion = false;  ///< c_j real for every j that s_lambda depends on
  bool literal_conclusion = false;  ///< c_j real for every j
  std::vector<int> depended;        ///< 1-based indices j with s_lambda depending on p_j
  PolyQ specialization;
  bool falsified() const { return !vacuous && hypothesis && !conclusion; }
  /// The literal statement names a variable s_lambda does not involve.
  bool literal_untestable() const;
};

/// s_lambda(x + c_1, c_2, ..., c_N); c must hold N = lambda_1 + l - 1 values.
CoroSchurReport coro_schur_harness(const Partition& lam, const std::vector<Gq>& c);

struct PolynomialTauReport {
  int nilpotency_index = 0;  ///< least k with Z^k = 0
  int last_variable = 0;     ///< largest j with tau depending on t_j, 0 if none
  bool polynomial = false;   ///< last_variable <= nilpotency_index
  TruncatedTau tau;
};

/// Requires Z nilpotent (std::domain_error otherwise) and m >= n.
PolynomialTauReport polynomial_tau_check(const CMPair& p, int m);

}  // namespace cmreal
