#pragma once

#include <optional>
#include <vector>

#include "cmreal/calogero_moser.hpp"
#include "cmreal/multipoly.hpp"
#include "cmreal/ratfunc.hpp"

namespace cmreal {

/// tau as a polynomial in t_1..t_m (variable index j-1 holds t_j).
struct TruncatedTau {
  MultiPolyQ poly;
  int m = 0;
  int n = 0;
};

/// Laurent coefficients a_0 = 1, a_1(x), ..., a_m(x) of Psi e^{-xz} in z^{-1}.
struct WaveFunction {
  std::vector<RatFunc> a;
  int order() const { return static_cast<int>(a.size()) - 1; }
};

/// det(X + sum_{j<=m} j t_j (-Z)^{j-1}), scaled so the t_1^n coefficient is 1.
TruncatedTau tau_from_cm(const CMPair& p, int m);

/// tau(x, 0, ..., 0) as a polynomial in x.
PolyQ tau_at_x(const TruncatedTau& tau);

/// Expansion of det(I - (xI + X)^{-1}(zI + Z)^{-1}) to order z^{-m}.
WaveFunction wave_from_cm(const CMPair& p, int m);

/// a_0(x0), ..., a_m(x0) for a floating-point pair.
std::vector<cplx> wave_coefficients_at(const CMPairC& p, cplx x0, int m);

/// tau(t - [z^{-1}]) / tau(t) at t = (x, 0, ...), computed from the tau
/// polynomial by substituting t_1 = x - w, t_j = -w^j / j with w = 1/z.
/// Requires tau.m >= m.
WaveFunction sato_wave(const TruncatedTau& tau, int m);

/// wave_from_cm of (Z^t, X^t).
WaveFunction bispectral_dual_wave(const CMPair& p, int m);

/// B[j][i] = coefficient of x^{-i} z^{-j} in Psi e^{-xz}, for i + j <= order.
std::vector<std::vector<Gq>> double_expansion(const WaveFunction& w, int order);

/// B_W[i][j] == B_bW[j][i] for i + j <= order.
bool bispectral_symmetric(const CMPair& p, int order);

struct RealityReport {
  bool cond2 = false;  ///< tau real after normalization
  bool cond3 = false;  ///< every a_k(x) real
  std::optional<bool> cond4;  ///< realification succeeds; empty at non-regular points
  bool consistent() const { return cond2 == cond3 && (!cond4 || *cond4 == cond2); }
};

RealityReport reality_conditions(const CMPair& p, int m);

/// Both characteristic polynomials real with certified real roots.
bool thm_wad_criterion(const CMPair& p);

}  // namespace cmreal
