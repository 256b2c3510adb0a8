#include <doctest.h>

#include <algorithm>

#include "cmreal/random.hpp"
#include "cmreal/ratfunc.hpp"
#include "cmreal/roots.hpp"
#include "cmreal/schur.hpp"

using namespace cmreal;

namespace {

PolyQ random_poly(Rng& rng, int deg, bool complex_coeffs) {
  std::vector<Gq> c;
  for (int k = 0; k < deg; ++k) c.push_back(random_gq(rng, complex_coeffs));
  c.push_back(Gq(1) + Gq(std::uniform_int_distribution<long>(0, 3)(rng)));
  return PolyQ(c);
}

bool near_root_set(std::vector<cplx> got, std::vector<cplx> want, double tol) {
  if (got.size() != want.size()) return false;
  for (const cplx& w : want) {
    auto it = std::min_element(got.begin(), got.end(), [&](cplx a, cplx b) { return std::abs(a - w) < std::abs(b - w); });
    if (std::abs(*it - w) > tol) return false;
    got.erase(it);
  }
  return true;
}

}  // namespace

TEST_CASE("Gaussian rational arithmetic and parsing") {
  Gq a = parse_gq("1/2+3/4i");
  CHECK(a == Gq(Rational(1, 2), Rational(3, 4)));
  CHECK(parse_gq("-i") == Gq(Rational(0), Rational(-1)));
  CHECK(parse_gq("2i") == Gq(Rational(0), Rational(2)));
  CHECK(parse_gq("1-i") == Gq(Rational(1), Rational(-1)));
  CHECK(parse_gq("-3/6") == Gq::frac(-1, 2));
  CHECK(a * a.inverse() == Gq(1));
  CHECK(Gq::i() * Gq::i() == Gq(-1));
  CHECK((a / a) == Gq(1));
  CHECK(parse_gq(a.str()) == a);
  CHECK(parse_gq(Gq::frac(-7, 3).str()) == Gq::frac(-7, 3));
  CHECK_THROWS(parse_gq("1/0"));
  CHECK_THROWS(parse_gq("abc"));
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    PolyQ p = random_poly(rng, 4, true), q = random_poly(rng, 3, true);
    Gq t = random_gq(rng, true);
    CHECK((p * q)(t) == p(t) * q(t));
    CHECK((p + q)(t) == p(t) + q(t));
    auto [quot, rem] = p.divmod(q);
    CHECK(quot * q + rem == p);
    CHECK(rem.degree() < q.degree());
  }
}

TEST_CASE("gcd and square-free decomposition") {
  PolyQ a = PolyQ::linear_root(Gq(1)), b = PolyQ::linear_root(Gq(-2)), c = PolyQ::linear_root(Gq::i());
  PolyQ f = a * a * a * b * c * c;
  auto sf = square_free_decomposition(f);
  PolyQ rebuilt = PolyQ::constant(Gq(1));
  for (const auto& [factor, mult] : sf)
    for (int k = 0; k < mult; ++k) rebuilt = rebuilt * factor;
  CHECK(rebuilt.monic() == f.monic());
  CHECK(gcd(a * b, b * c).monic() == b);
}

TEST_CASE("root finding examples") {
  auto r1 = poly_roots(to_approx(PolyQ({Gq(-1), Gq(0), Gq(1)})));
  CHECK(near_root_set(r1, {1.0, -1.0}, 1e-12));
  PolyQ sq = PolyQ::linear_root(Gq::frac(1, 2)) * PolyQ::linear_root(Gq::frac(1, 2));
  CHECK(near_root_set(poly_roots(sq), {0.5, 0.5}, 1e-12));
  CHECK(near_root_set(poly_roots(PolyQ({Gq(0), Gq(Rational(0), Rational(2)), Gq(1)})), {0.0, cplx(0, -2)}, 1e-12));
  CHECK(poly_roots(to_approx(PolyQ::constant(Gq(3)))).empty());
  auto split = exact_roots_if_split(sq * PolyQ::linear_root(Gq(Rational(1), Rational(-2))));
  REQUIRE(split);
  CHECK(std::count(split->begin(), split->end(), Gq::frac(1, 2)) == 2);
  CHECK_FALSE(exact_roots_if_split(PolyQ({Gq(-2), Gq(0), Gq(1)})));
}

TEST_CASE("certified real roots examples") {
  RealRootCount a = real_roots_certified(PolyQ({Gq(0), Gq(2)}));
  CHECK(a.all_real);
  CHECK(a.count == 1);
  RealRootCount b = real_roots_certified(PolyQ({Gq(1), Gq(0), Gq(1)}));
  CHECK_FALSE(b.all_real);
  CHECK(b.count == 0);
  PolyQ cube = Gq::frac(1, 3) * (PolyQ({Gq(2), Gq(1)}) * PolyQ({Gq(2), Gq(1)}) * PolyQ({Gq(2), Gq(1)}));
  RealRootCount c = real_roots_certified(cube);
  CHECK(c.all_real);
  CHECK(c.count == 3);
  CHECK_THROWS_AS(real_roots_certified(PolyQ({Gq::i(), Gq(1)})), std::domain_error);
}

TEST_CASE("Sturm agrees with Aberth on random real polynomials") {
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    int deg = 1 + k % 8;
    PolyQ p = random_poly(rng, deg, false);
    if (k % 4 == 0) p = p * PolyQ::linear_root(Gq(1)) * PolyQ::linear_root(Gq(1));  // forced multiplicity
    RealRootCount cert = real_roots_certified(p);
    int numeric_real = 0;
    for (cplx r : poly_roots(p)) numeric_real += std::abs(r.imag()) <= 1e-6 * std::max(1.0, std::abs(r));
    CHECK(cert.count == numeric_real);
    CHECK(cert.all_real == (numeric_real == p.degree()));
    CHECK(real_roots_certified(Gq(7) * p).count == cert.count);
    CHECK(sturm_distinct_real_roots(square_free_decomposition(p).front().first) <= cert.count);
  }
}

TEST_CASE("multivariate substitution") {
  MultiPolyQ zero(3);
  std::map<int, MultiPolyQ::Image> assign{{0, PolyQ::x()}, {1, Gq(0)}, {2, Gq(0)}};
  CHECK(zero.to_univariate(assign).is_zero());
  MultiPolyQ s2 = elementary_schur(2, 2);
  Gq c1 = Gq::frac(3, 2), c2 = Gq(-5);
  PolyQ specialized = s2.to_univariate({{0, PolyQ({c1, Gq(1)})}, {1, c2}});
  PolyQ shifted({c1, Gq(1)});
  CHECK(specialized == Gq::frac(1, 2) * (shifted * shifted) + PolyQ::constant(c2));
  CHECK(to_string(s2, "p") == "p2 + 1/2 p1^2");
}

TEST_CASE("rational functions") {
  PolyQ x = PolyQ::x();
  RatFunc f(x * x - PolyQ::constant(Gq(1)), x - PolyQ::constant(Gq(1)));
  CHECK(f.is_polynomial());
  CHECK(f == RatFunc(x + PolyQ::constant(Gq(1)), PolyQ::constant(Gq(1))));
  RatFunc g(PolyQ::constant(Gq(1)), x);
  auto e = g.expand_at_infinity(3);
  CHECK(e == std::vector<Gq>{Gq(0), Gq(1), Gq(0), Gq(0)});
  CHECK(g.derivative() == RatFunc(PolyQ::constant(Gq(-1)), x * x));
  CHECK((f * g - (f / RatFunc(x, PolyQ::constant(Gq(1))))).is_zero());
}
