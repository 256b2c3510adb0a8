#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cmreal/random.hpp"
#include "cmreal/schur.hpp"

using namespace cmreal;

namespace {

MultiPolyQ p(int k, int nv) { return MultiPolyQ::variable(k - 1, nv); }

// Oracle: E = exp(P) satisfies m E_m = sum_k k p_k E_{m-k}.
std::vector<MultiPolyQ> exp_series(int order, int nv) {
  std::vector<MultiPolyQ> e{MultiPolyQ(nv, Gq(1))};
  for (int m = 1; m <= order; ++m) {
    MultiPolyQ acc(nv);
    for (int k = 1; k <= m; ++k) acc += Gq(k) * (p(k, nv) * e[static_cast<size_t>(m - k)]);
    e.push_back(Gq::frac(1, m) * acc);
  }
  return e;
}

// Oracle: Leibniz expansion of det(S_{lambda_i + j - i}).
MultiPolyQ leibniz_schur(const std::vector<int>& lam, int nv) {
  const int l = static_cast<int>(lam.size());
  auto e = exp_series(lam.front() + l, nv);
  auto entry = [&](int i, int j) {
    int idx = lam[static_cast<size_t>(i)] + j - i;
    return idx < 0 ? MultiPolyQ(nv) : e[static_cast<size_t>(idx)];
  };
  std::vector<int> perm(static_cast<size_t>(l));
  std::iota(perm.begin(), perm.end(), 0);
  MultiPolyQ out(nv);
  do {
    int inversions = 0;
    for (int a = 0; a < l; ++a)
      for (int b = a + 1; b < l; ++b) inversions += perm[static_cast<size_t>(a)] > perm[static_cast<size_t>(b)];
    MultiPolyQ term(nv, Gq(inversions % 2 ? -1 : 1));
    for (int i = 0; i < l; ++i) term *= entry(i, perm[static_cast<size_t>(i)]);
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("elementary Schur polynomials") {
  const int nv = 3;
  CHECK(elementary_schur(0, nv) == MultiPolyQ(nv, Gq(1)));
  CHECK(elementary_schur(-1, nv).is_zero());
  CHECK(elementary_schur(1, nv) == p(1, nv));
  CHECK(elementary_schur(2, nv) == Gq::frac(1, 2) * p(1, nv).pow(2) + p(2, nv));
  CHECK(elementary_schur(3, nv) == Gq::frac(1, 6) * p(1, nv).pow(3) + p(1, nv) * p(2, nv) + p(3, nv));
}

TEST_CASE("elementary Schur polynomials match the exp series") {
  const int nv = 8;
  auto e = exp_series(8, nv);
  for (int m = 0; m <= 8; ++m) CHECK(elementary_schur(m, nv) == e[static_cast<size_t>(m)]);
}

TEST_CASE("generating series times its reflection is 1") {
  // sum S_m(p) z^m * sum S_m(-p) z^m = exp(P(z)) exp(-P(z))
  const int nv = 8;
  for (int order = 1; order <= 8; ++order) {
    MultiPolyQ acc(nv);
    for (int a = 0; a <= order; ++a) {
      MultiPolyQ neg = elementary_schur(order - a, nv);
      std::vector<MultiPolyQ> images;
      for (int k = 1; k <= nv; ++k) images.push_back(-p(k, nv));
      acc += elementary_schur(a, nv) * neg.compose(images, nv);
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("Jacobi-Trudi values") {
  CHECK(schur_function(make_partition({1})) == p(1, 1));
  CHECK(schur_function(make_partition({2})) == Gq::frac(1, 2) * p(1, 2).pow(2) + p(2, 2));
  CHECK(schur_function(make_partition({2, 1})) == Gq::frac(1, 3) * p(1, 3).pow(3) - p(3, 3));
  for (int m = 1; m <= 6; ++m) CHECK(schur_function(make_partition({m})) == elementary_schur(m, m));
  for (const std::vector<int>& lam : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {2, 1}, {3}, {2, 2}, {3, 2, 1}}) {
    Partition part = make_partition(lam);
    CHECK(schur_function(part) == leibniz_schur(lam, part.num_vars()));
  }
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(make_partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_partition({2, 0}), std::invalid_argument);
  CHECK(make_partition({3, 1, 1}).num_vars() == 5);
}

TEST_CASE("Schur corollary harness examples") {
  CoroSchurReport one = coro_schur_harness(make_partition({1}), {Gq(3)});
  CHECK(one.hypothesis);
  CHECK(one.conclusion);
  CoroSchurReport one_c = coro_schur_harness(make_partition({1}), {Gq(Rational(1), Rational(1))});
  CHECK_FALSE(one_c.hypothesis);

  CoroSchurReport two = coro_schur_harness(make_partition({2}), {Gq(2), Gq(-1)});
  CHECK(two.hypothesis);
  CHECK(two.conclusion);
  CHECK_FALSE(two.falsified());

  CoroSchurReport cplx_shift = coro_schur_harness(make_partition({2}), {Gq::i(), Gq(0)});
  CHECK_FALSE(cplx_shift.hypothesis);
  CHECK_FALSE(cplx_shift.conclusion);

  CoroSchurReport hook = coro_schur_harness(make_partition({2, 1}), {Gq(0), Gq::i(), Gq(1)});
  CHECK(hook.depended == std::vector<int>{1, 3});
  CHECK(hook.literal_untestable());
}

TEST_CASE("Schur corollary grid has no falsification") {
  Partition lam = make_partition({2});
  int hypotheses = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      CoroSchurReport r = coro_schur_harness(lam, {Gq(a), Gq(b)});
      CHECK_FALSE(r.falsified());
      hypotheses += r.hypothesis;
    }
  CHECK(hypotheses > 0);
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    Gq c1 = random_gq(rng, true), c2 = random_gq(rng, true);
    CHECK_FALSE(coro_schur_harness(lam, {c1, c2}).falsified());
  }
}

TEST_CASE("polynomial tau functions from nilpotent Z") {
  CMPair one = validate(MatQ{{Gq(2)}}, MatQ{{Gq(0)}});
  PolynomialTauReport r1 = polynomial_tau_check(one, 3);
  CHECK(r1.polynomial);
  CHECK(r1.last_variable == 1);

  // X = [[0,1],[0,0]] style pair with Z^2 = 0: [X, Z] + I has rank one.
  CMPair two = validate(MatQ{{Gq(0), Gq(0)}, {Gq(1), Gq(0)}}, MatQ{{Gq(0), Gq(-1)}, {Gq(0), Gq(0)}});
  PolynomialTauReport r2 = polynomial_tau_check(two, 5);
  CHECK(r2.nilpotency_index == 2);
  CHECK(r2.polynomial);
  CHECK(r2.last_variable <= 2);

  CHECK_THROWS_AS(polynomial_tau_check(validate(MatQ{{Gq(2)}}, MatQ{{Gq(3)}}), 2), std::domain_error);
}
