#include <doctest.h>

#include "cmreal/random.hpp"
#include "cmreal/tau_wave.hpp"

using namespace cmreal;

namespace {
CMPair scalar_pair(long a, long b) { return validate(MatQ{{Gq(a)}}, MatQ{{Gq(b)}}); }
CMPair chart_pair(std::vector<Gq> l, std::vector<Gq> a) { return from_chart({std::move(l), std::move(a)}); }
}  // namespace

TEST_CASE("tau of a 1x1 pair") {
  TruncatedTau tau = tau_from_cm(scalar_pair(2, 3), 3);
  CHECK(to_string(tau.poly) == "2 + t1 - 6 t2 + 27 t3");
  CHECK(tau_at_x(tau) == PolyQ({Gq(2), Gq(1)}));
}

TEST_CASE("tau specialization equals (-1)^n chi_X(-x)") {
  Rng rng(11);
  for (int n = 1; n <= 4; ++n)
    for (int rep = 0; rep < 5; ++rep) {
      CMPair p = random_pair(rng, n, rep % 2 == 1);
      PolyQ expect = char_poly(p.X).scale_argument(Gq(-1));
      if (n % 2 == 1) expect = -expect;
      CHECK(tau_at_x(tau_from_cm(p, 2 * n)) == expect);
    }
}

TEST_CASE("wave function of a 1x1 pair") {
  WaveFunction w = wave_from_cm(scalar_pair(2, 3), 3);
  PolyQ xa({Gq(2), Gq(1)});
  CHECK(w.a[0] == RatFunc(Gq(1)));
  CHECK(w.a[1] == RatFunc(PolyQ::constant(Gq(-1)), xa));
  CHECK(w.a[2] == RatFunc(PolyQ::constant(Gq(3)), xa));
  CHECK(w.a[3] == RatFunc(PolyQ::constant(Gq(-9)), xa));
}

TEST_CASE("zero Z gives a_1 = -1/x and nothing else") {
  WaveFunction w = wave_from_cm(scalar_pair(0, 0), 4);
  CHECK(w.a[1] == RatFunc(PolyQ::constant(Gq(-1)), PolyQ::x()));
  for (int k = 2; k <= 4; ++k) CHECK(w.a[static_cast<size_t>(k)].is_zero());
}

TEST_CASE("Sato reconstruction matches the determinant formula") {
  Rng rng(5);
  for (int n = 1; n <= 3; ++n)
    for (int rep = 0; rep < 3; ++rep) {
      CMPair p = random_pair(rng, n, rep == 2);
      WaveFunction direct = wave_from_cm(p, 6);
      WaveFunction sato = sato_wave(tau_from_cm(p, 6), 6);
      for (int k = 0; k <= 6; ++k) CHECK(direct.a[static_cast<size_t>(k)] == sato.a[static_cast<size_t>(k)]);
    }
  CHECK(sato_wave(tau_from_cm(scalar_pair(1, 1), 1), 0).a.size() == 1);
}

TEST_CASE("a_1 is minus the log-derivative of tau(x,0,...)") {
  Rng rng(8);
  for (int n = 1; n <= 3; ++n) {
    CMPair p = random_pair(rng, n, false);
    PolyQ t = tau_at_x(tau_from_cm(p, 2));
    CHECK(wave_from_cm(p, 1).a[1] == -RatFunc(t.derivative(), t));
  }
}

TEST_CASE("bispectral duality") {
  WaveFunction w = bispectral_dual_wave(scalar_pair(2, 3), 2);
  PolyQ xb({Gq(3), Gq(1)});
  CHECK(w.a[1] == RatFunc(PolyQ::constant(Gq(-1)), xb));
  Rng rng(3);
  for (int n = 1; n <= 3; ++n) CHECK(bispectral_symmetric(random_pair(rng, n, n == 2), 6));
}

TEST_CASE("reality conditions") {
  RealityReport r = reality_conditions(chart_pair({Gq(1), Gq(-1)}, {Gq(1), Gq(0)}), 4);
  CHECK(r.cond2);
  CHECK(r.cond3);
  CHECK(r.cond4.value_or(false));
  RealityReport c = reality_conditions(validate(MatQ{{Gq::i()}}, MatQ{{Gq(0)}}), 3);
  CHECK_FALSE(c.cond2);
  CHECK_FALSE(c.cond3);
  CHECK_FALSE(c.cond4.value_or(true));
  Rng rng(4);
  CMPair real = from_chart(random_chart(rng, 3, false));
  CMPair conj = conjugate(real, random_invertible(rng, 3, true));
  RealityReport rc = reality_conditions(conj, 6);
  CHECK(rc.cond2);
  CHECK(rc.cond3);
  CHECK(rc.cond4.value_or(false));
}

TEST_CASE("Wadsworth-type criterion") {
  CHECK(thm_wad_criterion(chart_pair({Gq(1), Gq(-1)}, {Gq(1), Gq(0)})));
  CHECK_FALSE(thm_wad_criterion(chart_pair({Gq(1), Gq(-1)}, {Gq(0), Gq(0)})));
  CHECK(thm_wad_criterion(scalar_pair(4, -7)));
}
