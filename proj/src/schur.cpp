#include "cmreal/schur.hpp"

#include <functional>

#include "cmreal/roots.hpp"

namespace cmreal {

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

int Partition::num_vars() const { return parts.empty() ? 0 : parts.front() + length() - 1; }

Partition make_partition(std::vector<int> parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  return {std::move(parts)};
}

namespace {

// Multiplicity vectors (j_1, ..., j_m) with sum_i i j_i = m, built from the
// largest part downwards.
void enumerate(int remaining, int part, std::vector<int>& j, const std::function<void()>& emit) {
  if (part == 0) {
    if (remaining == 0) emit();
    return;
  }
  for (int count = remaining / part; count >= 0; --count) {
    j[static_cast<size_t>(part) - 1] = count;
    enumerate(remaining - count * part, part - 1, j, emit);
  }
  j[static_cast<size_t>(part) - 1] = 0;
}

Rational factorial(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

MultiPolyQ elementary_schur(int m, int num_vars) {
  if (m < 0) return MultiPolyQ(num_vars);
  if (m == 0) return MultiPolyQ(num_vars, Gq(1));
  if (num_vars < m) throw std::invalid_argument("elementary_schur: needs p_1..p_m");
  MultiPolyQ out(num_vars);
  std::vector<int> j(static_cast<size_t>(m), 0);
  enumerate(m, m, j, [&] {
    Rational denom(1);
    for (int c : j) denom *= factorial(c);
    out.add_term(j, Gq(Rational(1 / denom)));
  });
  return out;
}

MultiPolyQ schur_function(const Partition& lam) {
  const int l = lam.length();
  const int nv = lam.num_vars();
  if (l == 0) return MultiPolyQ(0, Gq(1));
  Matrix<MultiPolyQ> jt(l, l, MultiPolyQ(nv));
  for (int i = 0; i < l; ++i)
    for (int k = 0; k < l; ++k) jt(i, k) = elementary_schur(lam.parts[static_cast<size_t>(i)] + k - i, nv);
  return det_division_free(jt, MultiPolyQ(nv, Gq(1)));
}

bool CoroSchurReport::literal_untestable() const {
  return literal_conclusion != conclusion;
}

CoroSchurReport coro_schur_harness(const Partition& lam, const std::vector<Gq>& c) {
  const int nv = lam.num_vars();
  if (static_cast<int>(c.size()) != nv)
    throw std::invalid_argument("coro_schur_harness: expected " + std::to_string(nv) + " shifts");
  MultiPolyQ s = schur_function(lam);
  CoroSchurReport r;
  std::map<int, MultiPolyQ::Image> assign;
  assign[0] = PolyQ({c[0], Gq(1)});
  for (int j = 1; j < nv; ++j) assign[j] = c[static_cast<size_t>(j)];
  r.specialization = s.to_univariate(assign);
  r.vacuous = r.specialization.degree() <= 0;
  if (!r.vacuous && r.specialization.has_real_coeffs())
    r.hypothesis = real_roots_certified(r.specialization).all_real;
  r.conclusion = true;
  r.literal_conclusion = true;
  for (int j = 0; j < nv; ++j) {
    bool real = c[static_cast<size_t>(j)].is_real();
    if (s.depends_on(j)) {
      r.depended.push_back(j + 1);
      r.conclusion = r.conclusion && real;
    }
    r.literal_conclusion = r.literal_conclusion && real;
  }
  return r;
}

PolynomialTauReport polynomial_tau_check(const CMPair& p, int m) {
  const int n = p.n();
  if (m < n) throw std::invalid_argument("polynomial_tau_check: need m >= n");
  PolynomialTauReport r;
  MatQ power = MatQ::identity(n);
  for (int k = 1; k <= n && r.nilpotency_index == 0; ++k) {
    power = power * p.Z;
    if (power.is_zero()) r.nilpotency_index = k;
  }
  if (r.nilpotency_index == 0) throw std::domain_error("polynomial_tau_check: Z is not nilpotent");
  r.tau = tau_from_cm(p, m);
  r.last_variable = r.tau.poly.max_variable_used() + 1;
  r.polynomial = r.last_variable <= r.nilpotency_index;
  return r;
}

}  // namespace cmreal
