#include <doctest.h>

#include "cmreal/quasi_exp.hpp"
#include "cmreal/random.hpp"
#include "cmreal/roots.hpp"

using namespace cmreal;

namespace {
PolyQ P(std::vector<Gq> c) { return PolyQ(std::move(c)); }
const PolyQ one = PolyQ::constant(Gq(1));
const PolyQ x = PolyQ::x();
const PolyQ x2 = P({0, 0, 1});
QuasiExpSpace single(Gq mu, std::vector<PolyQ> basis) { return {{std::move(mu)}, {std::move(basis)}}; }
}  // namespace

TEST_CASE("wronskian examples") {
  CHECK(wronskian({{Gq(0), one}, {Gq(0), x2}}).poly == P({0, 2}));
  CHECK(wronskian({{Gq(0), P({Gq::i(), 1})}, {Gq(0), x2}}).poly == P({0, Gq(0, 2), 1}));
  WronskianResult r = wronskian({{Gq(7), one}});
  CHECK(r.mu_sum == Gq(7));
  CHECK(r.poly == one);
}

TEST_CASE("normalized wronskian") {
  CHECK(normalized_wronskian(single(0, {one, x2})) == x);
  CHECK(normalized_wronskian(single(0, {one + x2, Gq(3) * x2})) == x);
  CHECK(normalized_wronskian(single(5, {one})) == one);
  CHECK_THROWS_AS(normalized_wronskian(single(0, {x, Gq(2) * x})), std::domain_error);
}

TEST_CASE("normalized wronskian is basis independent") {
  Rng rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    QuasiExpSpace s{{Gq(0), Gq(1)}, {{x + one, P({0, 1, 2, 1})}, {x2}}};
    QuasiExpSpace t = s;
    MatQ g = random_invertible(rng, 2, rep % 2 == 0);
    t.spaces[0] = {g(0, 0) * s.spaces[0][0] + g(0, 1) * s.spaces[0][1],
                   g(1, 0) * s.spaces[0][0] + g(1, 1) * s.spaces[0][1]};
    Gq scale = random_gq(rng, true);
    if (scale.is_zero()) continue;
    t.spaces[1] = {scale * s.spaces[1][0]};
    CHECK(normalized_wronskian(s) == normalized_wronskian(t));
  }
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(single(5, {one})).k() == 0);
  QuasiExpSpace g = single(0, {x2, P({0, 0, 0, 1})});
  QuasiExpSpace c = canonicalize(g);
  REQUIRE(c.k() == 1);
  CHECK(c.spaces[0] == g.spaces[0]);
  CHECK(canonicalize(single(0, {one, x})).k() == 0);
  QuasiExpSpace mixed = single(2, {one, x2});
  QuasiExpSpace cm = canonicalize(mixed);
  REQUIRE(cm.k() == 1);
  CHECK(same_span(cm.spaces[0], {x}));
}

TEST_CASE("operator from kernel") {
  DiffOperator e5 = operator_from_kernel(single(5, {one}));
  REQUIRE(e5.order() == 1);
  CHECK(e5.c[0] == RatFunc(Gq(-5)));
  DiffOperator lin = operator_from_kernel(single(0, {one, x}));
  CHECK(lin.c[0].is_zero());
  CHECK(lin.c[1].is_zero());
  DiffOperator sq = operator_from_kernel(single(0, {one, x2}));
  CHECK(sq.c[0].is_zero());
  CHECK(sq.c[1] == RatFunc(PolyQ::constant(Gq(-1)), x));
  QuasiExpSpace s{{Gq(0), Gq(2), Gq(-1)}, {{x, P({1, 0, 3})}, {x + one}, {x2}}};
  DiffOperator op = operator_from_kernel(s);
  for (int j = 0; j < s.k(); ++j)
    for (const auto& p : s.spaces[static_cast<size_t>(j)]) CHECK(apply_operator(op, s.mus[static_cast<size_t>(j)], p).is_zero());
}

TEST_CASE("gamma wave") {
  CHECK(gamma_wave(QuasiExpSpace{}, 3).a[0] == RatFunc(Gq(1)));
  WaveFunction w5 = gamma_wave(single(5, {one}), 4);
  for (int k = 1; k <= 4; ++k) CHECK(w5.a[static_cast<size_t>(k)].is_zero());
  WaveFunction w = gamma_wave(single(0, {one, x2}), 3);
  CHECK(w.a[1] == RatFunc(PolyQ::constant(Gq(-1)), x));
  for (const QuasiExpSpace& s : {QuasiExpSpace{{Gq(0), Gq(3)}, {{one, x2}, {one, x}}},
                                 QuasiExpSpace{{Gq(0), Gq(3)}, {{x}, {one}}},
                                 QuasiExpSpace{{Gq(1, 1), Gq(-2)}, {{one, x, P({0, 0, 0, 1})}, {x2}}}}) {
    WaveFunction a = gamma_wave(s, 6), b = gamma_wave(canonicalize(s), 6);
    for (int k = 0; k <= 6; ++k) CHECK(a.a[static_cast<size_t>(k)] == b.a[static_cast<size_t>(k)]);
  }
  QuasiExpSpace two = canonicalize(QuasiExpSpace{{Gq(0), Gq(3)}, {{x}, {one}}});
  REQUIRE(two.k() == 1);
  CHECK(same_span(two.spaces[0], {P({1, -3})}));
}

TEST_CASE("gamma a_1 is minus the log-derivative of the normalized wronskian") {
  QuasiExpSpace s{{Gq(1), Gq(-2)}, {{x}, {x2 + one}}};
  PolyQ w = normalized_wronskian(s);
  CHECK(gamma_wave(s, 1).a[1] == -RatFunc(w.derivative(), w));
}

TEST_CASE("real span test") {
  CHECK_FALSE(real_span_test(single(0, {P({Gq::i(), 1}), x2})));
  CHECK(real_span_test(QuasiExpSpace{{Gq(1, 1), Gq(1, -1)}, {{x}, {x}}}));
  CHECK(real_span_test(single(0, {P({0, Gq::i()})})));
  CHECK_FALSE(real_span_test(QuasiExpSpace{{Gq(1, 1)}, {{x}}}));
}

TEST_CASE("extract real basis") {
  QuasiExpSpace r = extract_real_basis(single(0, {P({0, Gq::i()})}));
  CHECK(r.spaces[0] == std::vector<PolyQ>{x});
  QuasiExpSpace s = extract_real_basis(single(0, {P({0, 1, Gq::i()}), P({0, 1, -Gq::i()})}));
  CHECK(same_span(s.spaces[0], {x, x2}));
  for (const auto& p : s.spaces[0]) CHECK(p.has_real_coeffs());
  QuasiExpSpace pair{{Gq(1, 1), Gq(1, -1)}, {{P({Gq::i(), 1})}, {P({-Gq::i(), 2})}}};
  QuasiExpSpace e = extract_real_basis(QuasiExpSpace{{Gq(1, 1), Gq(1, -1)}, {{P({Gq::i(), 1})}, {P({Gq(0, -2), 2})}}});
  CHECK(e.spaces[1][0] == e.spaces[0][0].conj());
  CHECK_THROWS_AS(extract_real_basis(pair), std::domain_error);
}

TEST_CASE("real-rooted Wronskian harness examples") {
  Thm3Report a = thm3_harness(single(0, {one, x2}));
  CHECK(a.applicable);
  CHECK(a.hypothesis);
  CHECK(a.conclusion);
  CHECK_FALSE(thm3_harness(single(0, {P({Gq::i(), 1}), x2})).applicable);
  Thm3Report c = thm3_harness(single(0, {one, P({0, 0, 0, 1})}));
  CHECK(c.hypothesis);
  CHECK(c.conclusion);
}

TEST_CASE("gamma and beta agree through the fiber") {
  Tau0Match a = lemma_tau0_match(single(0, {P({2, 1})}));
  CHECK(a.evaluated);
  CHECK(a.matched);
  Tau0Match b = lemma_tau0_match(QuasiExpSpace{{Gq(1), Gq(-1)}, {{x}, {P({1, 1})}}});
  CHECK(b.evaluated);
  CHECK(b.matched);
  Tau0Match c = lemma_tau0_match(QuasiExpSpace{{Gq(0), Gq(1), Gq(2)}, {{x}, {P({-1, 1})}, {P({3, 1})}}});
  CHECK(c.n == 3);
  CHECK(c.evaluated);
  CHECK(c.matched);
  Tau0Match d = lemma_tau0_match(single(0, {x, P({0, 0, 0, 1})}));
  MESSAGE("n=" << d.n << " eval=" << d.evaluated << " disc=" << d.discrepancy);
}
