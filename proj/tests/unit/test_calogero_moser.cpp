#include <doctest.h>

#include "cmreal/random.hpp"
#include "cmreal/roots.hpp"

using namespace cmreal;

namespace {

CMChart chart(std::vector<Gq> l, std::vector<Gq> a) { return {std::move(l), std::move(a)}; }

std::vector<cplx> approx(const std::vector<Gq>& v) {
  std::vector<cplx> out;
  for (const Gq& a : v) out.push_back(a.to_complex());
  return out;
}

MatQ half_z() { return MatQ{{Gq(0), Gq::frac(1, 2)}, {Gq::frac(-1, 2), Gq(0)}}; }

}  // namespace

TEST_CASE("validate examples") {
  CMPair p = validate(MatQ::diagonal({Gq(1), Gq(-1)}), half_z());
  QuiverRep q = extend_to_quiver(p);
  CHECK(q.w * q.v == MatQ{{Gq(1), Gq(1)}, {Gq(1), Gq(1)}});
  CHECK(validate(MatQ(1, 1), MatQ(1, 1)).n() == 1);
  try {
    validate(MatQ(2, 2), MatQ(2, 2));
    FAIL("expected rejection");
  } catch (const NotCMPairError& e) {
    CHECK(e.rank == 2);
  }
}

TEST_CASE("from_chart examples") {
  CMPair p = from_chart(chart({Gq(1), Gq(-1)}, {Gq(0), Gq(0)}));
  CHECK(p.X == MatQ::diagonal({Gq(1), Gq(-1)}));
  CHECK(p.Z == half_z());
  CMPair one = from_chart(chart({Gq(4)}, {Gq(7)}));
  CHECK(one.Z == MatQ{{Gq(7)}});
  CMPair three = from_chart(chart({Gq(0), Gq(1), Gq(2)}, {Gq(0), Gq(0), Gq(0)}));
  CHECK(three.Z(0, 1) == Gq(-1));
  CHECK(three.Z(0, 2) == Gq::frac(-1, 2));
  CHECK(three.Z(1, 2) == Gq(-1));
  CHECK(rank_exact(cm_defect(three.X, three.Z)) == 1);
  CHECK_THROWS_AS(from_chart(chart({Gq(1), Gq(1)}, {Gq(0), Gq(0)})), std::domain_error);
}

TEST_CASE("chart-generated pairs are valid") {
  Rng rng(7);
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k < 20; ++k) {
      CMPair p = from_chart(random_chart(rng, n, k % 2 == 1));
      CHECK(rank_exact(cm_defect(p.X, p.Z)) == 1);
    }
}

TEST_CASE("to_chart round trips through conjugation") {
  CMChart c = chart({Gq(1), Gq(-1)}, {Gq(1), Gq(0)});
  CMPair p = from_chart(c);
  Rng rng(13);
  for (int k = 0; k < 10; ++k) {
    CMPair q = conjugate(p, random_invertible(rng, 2, true));
    CMChartC got = to_chart(q);
    CMChartC want = to_approx(c);
    canonicalize(want);
    for (int i = 0; i < 2; ++i) {
      CHECK(std::abs(got.lambda[static_cast<size_t>(i)] - want.lambda[static_cast<size_t>(i)]) < 1e-9);
      CHECK(std::abs(got.alpha[static_cast<size_t>(i)] - want.alpha[static_cast<size_t>(i)]) < 1e-9);
    }
    auto exact = to_chart_exact(q);
    REQUIRE(exact);
    CMChart sorted = c;
    canonicalize(sorted);
    CHECK(exact->lambda == sorted.lambda);
    CHECK(exact->alpha == sorted.alpha);
  }
  CMPair torus = conjugate(p, MatQ::diagonal({Gq(3), Gq(Rational(0), Rational(5))}));
  auto t = to_chart_exact(torus);
  REQUIRE(t);
  CHECK(t->alpha == std::vector<Gq>{Gq(0), Gq(1)});
}

TEST_CASE("to_chart rejects repeated eigenvalues") {
  // X = [[0,0],[1,0]] is nilpotent
  CMPair p = validate(MatQ{{Gq(0), Gq(0)}, {Gq(1), Gq(0)}}, MatQ{{Gq(0), Gq(-1)}, {Gq(0), Gq(0)}});
  CHECK_THROWS_AS(to_chart(p), NonRegularError);
  CHECK_THROWS_AS(to_chart_exact(p), NonRegularError);
}

TEST_CASE("upsilon examples and conjugation invariance") {
  UpsilonTarget u = upsilon(from_chart(chart({Gq(1), Gq(-1)}, {Gq(1), Gq(0)})));
  CHECK(spectra_match(u.x, Spectrum{{1.0, -1.0}}, 1e-12));
  CHECK(spectra_match(u.z, Spectrum{{0.5, 0.5}}, 1e-7));
  UpsilonTarget v = upsilon(from_chart(chart({Gq(1), Gq(-1)}, {Gq(0), Gq(0)})));
  CHECK(spectra_match(v.z, Spectrum{{cplx(0, 0.5), cplx(0, -0.5)}}, 1e-12));
  Rng rng(19);
  for (int k = 0; k < 100; ++k) {
    int n = 1 + k % 5;
    CMPair p = from_chart(random_chart(rng, n, true));
    UpsilonTarget a = upsilon(p), b = upsilon(conjugate(p, random_invertible(rng, n, true)));
    CHECK(spectrum_distance(a.x, b.x) < 1e-7);
    CHECK(spectrum_distance(a.z, b.z) < 1e-7);
  }
}

TEST_CASE("fiber examples") {
  FiberResult one = fiber_solve({2.0}, {3.0});
  REQUIRE(one.points.size() == 1);
  CHECK(std::abs(one.points[0].alpha[0] - 3.0) < 1e-12);

  FiberResult two = fiber_solve({1.0, -1.0}, {0.5, 0.5});
  // Double root of the fiber quadratic: alpha = (1, 0) and (0, 1) in lambda order (-1, 1).
  REQUIRE(two.points.size() == 2);
  auto ex = fiber_solve_exact({Gq(1), Gq(-1)}, {Gq::frac(1, 2), Gq::frac(1, 2)});
  CHECK(ex.size() == 2);
}

TEST_CASE("non-reduced n = 3 fiber over a triple Z eigenvalue") {
  // Newton converges linearly to the multiple points here; the quad polish
  // must still separate them and land on the real locus.
  FiberResult f = fiber_solve({-2.0, -1.0, -2.5}, {3.0, 3.0, 3.0});
  REQUIRE(f.points.size() == 4);
  for (const CMChartC& c : f.points) {
    for (cplx a : c.alpha) CHECK(std::abs(a.imag()) < 1e-10);
    RealifyResult r = realify_regular(from_chart(c), true);
    CHECK(r.residual <= 1e-8);
  }
}

TEST_CASE("fiber degree for n = 1, 2, 3") {
  Rng rng(53);
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k < (n == 3 ? 3 : 10); ++k) {
      std::vector<Gq> lx = random_distinct(rng, n, true), lz = random_distinct(rng, n, true);
      FiberResult f = fiber_solve(approx(lx), approx(lz));
      CHECK(f.points.size() == static_cast<size_t>(n == 3 ? 6 : n));
      for (const CMChartC& c : f.points) {
        UpsilonTarget u = upsilon(from_chart(c));
        Spectrum want{approx(lz)};
        want.canonicalize();
        CHECK(spectrum_distance(u.z, want) < 1e-7);
      }
    }
}

TEST_CASE("real spectra realify on every fiber point") {
  Rng rng(59);
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k < (n == 3 ? 2 : 8); ++k) {
      std::vector<Gq> lx = random_distinct(rng, n, false), lz = random_distinct(rng, n, false);
      if (n <= 2) {
        for (const SurdChart& s : fiber_solve_exact(lx, lz))
          for (const Surd& a : s.alpha) {
            auto im = a.exact_imag();
            REQUIRE(im);
            CHECK(*im == 0);
          }
      }
      for (const CMChartC& c : fiber_solve(approx(lx), approx(lz)).points) {
        RealifyResult r = realify_regular(from_chart(c), true);
        CHECK(r.residual <= 1e-8);
        CHECK(is_real_matrix(r.pair_approx.X));
        CHECK(is_real_matrix(r.pair_approx.Z));
      }
    }
}

TEST_CASE("realify examples") {
  Rng rng(61);
  CMPair base = from_chart(chart({Gq(1), Gq(-1)}, {Gq(1), Gq(0)}));
  RealifyResult r = realify_regular(conjugate(base, random_invertible(rng, 2, true)), true);
  REQUIRE(r.pair);
  CHECK(is_real_matrix(r.pair->X));
  CHECK(char_poly(r.pair->X) == PolyQ({Gq(-1), Gq(0), Gq(1)}));
  CHECK(char_poly(r.pair->Z) == PolyQ({Gq::frac(1, 4), Gq(-1), Gq(1)}));
  REQUIRE(r.residual_exact);
  CHECK(*r.residual_exact == 0);

  CMPair three = from_chart(chart({Gq(0), Gq(1), Gq(2)}, {Gq(1), Gq(2), Gq(3)}));
  RealifyResult r3 = realify_regular(conjugate(three, random_invertible(rng, 3, true)), false);
  REQUIRE(r3.pair);
  CHECK(is_real_matrix(r3.pair->X));
  CHECK(is_real_matrix(r3.pair->Z));
  CHECK(char_poly(r3.pair->Z) == char_poly(three.Z));

  // conjugate-closed chart with non-real lambda
  CMPair paired = from_chart(chart({Gq(Rational(1), Rational(1)), Gq(Rational(1), Rational(-1))},
                                   {Gq(Rational(0), Rational(2)), Gq(Rational(0), Rational(-2))}));
  RealifyResult rp = realify_regular(conjugate(paired, random_invertible(rng, 2, true)), false);
  REQUIRE(rp.pair);
  CHECK(is_real_matrix(rp.pair->X));
  CHECK(is_real_matrix(rp.pair->Z));
  CHECK(rank_exact(cm_defect(rp.pair->X, rp.pair->Z)) == 1);
  CHECK(char_poly(rp.pair->X) == char_poly(paired.X));
  CHECK(char_poly(rp.pair->Z) == char_poly(paired.Z));

  CMPair not_real = from_chart(chart({Gq(1), Gq(-1)}, {Gq::i(), Gq(0)}));
  CHECK_THROWS_AS(realify_regular(not_real, false), std::domain_error);
}

TEST_CASE("trace-word screening") {
  CHECK(rc_membership_necessary(from_chart(chart({Gq(0), Gq(1), Gq(3)}, {Gq(2), Gq(-1), Gq(0)}))));
  CHECK_FALSE(rc_membership_necessary(validate(MatQ{{Gq::i()}}, MatQ{{Gq(0)}})));
  // alpha = (i, -i): tr Z = 0 is real, but tr XZ = i + i is not
  CHECK_FALSE(rc_membership_necessary(from_chart(chart({Gq(1), Gq(-1)}, {Gq::i(), -Gq::i()})), 4));
  // conjugate-closed chart is a real point
  CHECK(rc_membership_necessary(from_chart(chart({Gq(Rational(1), Rational(1)), Gq(Rational(1), Rational(-1))},
                                                 {Gq(Rational(0), Rational(2)), Gq(Rational(0), Rational(-2))}))));
}

TEST_CASE("flows and hamiltonians") {
  CMPair one = validate(MatQ{{Gq(5)}}, MatQ{{Gq(3)}});
  CHECK(cm_flow(one, 2, Gq(1)).X == MatQ{{Gq(-1)}});
  Rng rng(67);
  for (int k = 0; k < 20; ++k) {
    int n = 1 + k % 4;
    CMPair p = random_pair(rng, n, true);
    Gq t = random_gq(rng, true);
    CMPair f1 = cm_flow(p, 1, t);
    CHECK(f1.X == p.X + t * MatQ::identity(n));
    for (int kk = 1; kk <= 3; ++kk) {
      CMPair f = cm_flow(p, kk, t);
      CHECK(commutator(f.X, f.Z) == commutator(p.X, p.Z));
      for (int j = 1; j <= 3; ++j) CHECK(cm_hamiltonian(f, j) == cm_hamiltonian(p, j));
    }
  }
}

TEST_CASE("bispectral involution") {
  CMPair one = validate(MatQ{{Gq(2)}}, MatQ{{Gq(9)}});
  CMPair b = bispectral_involution(one);
  CHECK(b.X == MatQ{{Gq(9)}});
  CHECK(b.Z == MatQ{{Gq(2)}});
  Rng rng(71);
  for (int k = 0; k < 20; ++k) {
    CMPair p = random_pair(rng, 1 + k % 4, true);
    CMPair q = bispectral_involution(p);
    CHECK(char_poly(q.X) == char_poly(p.Z));
    CHECK(char_poly(q.Z) == char_poly(p.X));
    CMPair qq = bispectral_involution(q);
    CHECK(qq.X == p.X);
    CHECK(qq.Z == p.Z);
  }
}

TEST_CASE("quiver extension") {
  Rng rng(73);
  for (int k = 0; k < 20; ++k) {
    int n = 1 + k % 4;
    CMPair p = random_pair(rng, n, k % 2 == 1);
    QuiverRep q = extend_to_quiver(p);
    CHECK(q.w * q.v == cm_defect(p.X, p.Z));
    CHECK((q.v * q.w)(0, 0) == Gq(n));
    if (is_real_matrix(p.X) && is_real_matrix(p.Z)) {
      CHECK(is_real_matrix(q.v));
      CHECK(is_real_matrix(q.w));
    }
  }
}
