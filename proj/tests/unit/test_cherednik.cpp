#include <doctest.h>

#include "cmreal/cherednik.hpp"
#include "cmreal/random.hpp"

using namespace cmreal;

namespace {
Gq cq(long re, long im) { return Gq(Rational(re), Rational(im)); }
}  // namespace

TEST_CASE("n = 1 module") {
  DunklRep rep = build_dunkl_rep({Gq(3)}, {Gq(5)});
  CHECK(rep.dim() == 1);
  CMPair p = extract_cm_pair(rep);
  CHECK(p.X == MatQ{{Gq(3)}});
  CHECK(p.Z == MatQ{{Gq(-5)}});
}

TEST_CASE("n = 2 matrices by hand") {
  // basis (id, s): x_1 = diag(1, -1), s swaps; [x_1, y_1] = -s forces the off-diagonal signs
  Gq m1 = Gq::frac(2, 3), m2 = Gq(-4);
  DunklRep rep = build_dunkl_rep({Gq(1), Gq(-1)}, {m1, m2});
  MatQ s{{Gq(0), Gq(1)}, {Gq(1), Gq(0)}};
  CHECK(rep.x[0] == MatQ{{Gq(1), Gq(0)}, {Gq(0), Gq(-1)}});
  CHECK(rep.transposition(0, 1) == s);
  CHECK(rep.y[0] == MatQ{{m1 + Gq::frac(1, 2), Gq::frac(-1, 2)}, {Gq::frac(1, 2), m2 - Gq::frac(1, 2)}});
  CHECK(commutator(rep.x[0], rep.y[1]) == s);
  CHECK(commutator(rep.x[0], rep.y[0]) == -s);
  CMPair p = extract_cm_pair(rep);
  CHECK(char_poly(p.X) == PolyQ({Gq(-1), Gq(0), Gq(1)}));
}

TEST_CASE("relations hold for random rational data up to n = 4") {
  Rng rng(41);
  for (int n = 1; n <= 4; ++n)
    for (int rep_i = 0; rep_i < (n == 4 ? 3 : 10); ++rep_i) {
      std::vector<Gq> lambda = random_distinct(rng, n, rep_i % 2 == 1);
      std::vector<Gq> mu;
      for (int k = 0; k < n; ++k) mu.push_back(random_gq(rng, rep_i % 3 == 2));
      DunklRep rep = build_dunkl_rep(lambda, mu);
      CHECK(check_relations(rep).empty());
      CHECK(regular_character(rep));

      MatQ e = symmetrizer_full(rep), eb = symmetrizer_bar(rep);
      CHECK(e * e == e);
      CHECK(eb * eb == eb);
      CHECK(rank_exact(e) == 1);
      CHECK(rank_exact(eb) == n);

      CMPair p = extract_cm_pair(rep);
      CHECK(rank_exact(cm_defect(p.X, p.Z)) == 1);
      PolyQ expect = PolyQ::constant(Gq(1));
      for (const Gq& l : lambda) expect = expect * PolyQ::linear_root(l);
      CHECK(char_poly(p.X) == expect);
    }
}

TEST_CASE("a broken sign is caught by the relation check") {
  DunklRep rep = build_dunkl_rep({Gq(1), Gq(2), Gq(4)}, {Gq(0), Gq(1), Gq(-1)});
  rep.y[1] = Gq(-1) * rep.y[1];
  CHECK_FALSE(check_relations(rep).empty());
}

TEST_CASE("c = 0 gives commuting x and y") {
  DunklRep rep = build_dunkl_rep({Gq(1), Gq(2), Gq(4)}, {Gq(0), Gq(1), Gq(-1)}, Gq(0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(commutator(rep.x[static_cast<size_t>(i)], rep.y[static_cast<size_t>(j)]).is_zero());
}

TEST_CASE("repeated lambda is rejected") {
  CHECK_THROWS_AS(build_dunkl_rep({Gq(1), Gq(1)}, {Gq(0), Gq(0)}), std::domain_error);
}

TEST_CASE("reality harness examples") {
  CherednikReport real = reality_harness(build_dunkl_rep({Gq(1), Gq(-1)}, {Gq(2), Gq::frac(1, 3)}));
  CHECK(real.evaluated);
  CHECK(real.hypothesis);
  CHECK(real.conclusion);
  REQUIRE(real.real_form);
  CHECK(is_real_matrix(*real.real_form));

  CherednikReport ii = reality_harness(build_dunkl_rep({Gq(1), Gq(-1)}, {Gq::i(), Gq::i()}));
  CHECK_FALSE(char_poly(ii.pair.Z).has_real_coeffs());
  CHECK_FALSE(ii.hypothesis);

  // conjugate-paired mu over real lambda is never a real point
  CherednikReport paired = reality_harness(build_dunkl_rep({Gq(1), Gq(-1)}, {cq(1, 1), cq(1, -1)}));
  CHECK_FALSE(paired.hypothesis);
  CHECK_FALSE(paired.falsified());
}

TEST_CASE("reality harness sweep at n = 2, 3") {
  Rng rng(43);
  int hypotheses = 0;
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k < 12; ++k) {
      std::vector<Gq> lambda = random_distinct(rng, n, false);
      std::vector<Gq> mu;
      for (int j = 0; j < n; ++j) mu.push_back(random_gq(rng, false));
      if (k % 3 == 1) {
        Gq m = random_gq(rng, true);
        mu[0] = m;
        mu[1] = m.conj();
      }
      CherednikReport r = reality_harness(build_dunkl_rep(lambda, mu));
      CHECK_FALSE(r.falsified());
      hypotheses += r.hypothesis;
      if (r.real_form) {
        DunklRep rep = build_dunkl_rep(lambda, mu);
        const MatQ& h = *r.real_form;
        MatQ hinv = inverse(h);
        for (const MatQ& g : rep.generators()) CHECK(is_real_matrix(h * g * hinv));
      }
    }
  CHECK(hypotheses > 0);
}
