#include "cmreal/random.hpp"

#include <algorithm>

namespace cmreal {

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

Rng instance_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t id) {
  return Rng(splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ id));
}

Rational random_rational(Rng& rng, long bound, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  long q = den(rng);
  std::uniform_int_distribution<long> num(-bound * q, bound * q);
  Rational r(num(rng), q);
  r.canonicalize();
  return r;
}

Gq random_gq(Rng& rng, bool complex_part, long bound, long max_den) {
  Rational re = random_rational(rng, bound, max_den);
  Rational im = complex_part ? random_rational(rng, bound, max_den) : Rational(0);
  return Gq(re, im);
}

std::vector<Gq> random_distinct(Rng& rng, int n, bool complex_part, long bound, long max_den) {
  std::vector<Gq> out;
  while (static_cast<int>(out.size()) < n) {
    Gq v = random_gq(rng, complex_part, bound, max_den);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

CMChart random_chart(Rng& rng, int n, bool complex_data) {
  CMChart c{random_distinct(rng, n, complex_data), {}};
  for (int i = 0; i < n; ++i) c.alpha.push_back(random_gq(rng, complex_data));
  return c;
}

MatQ random_invertible(Rng& rng, int n, bool complex_entries) {
  std::uniform_int_distribution<long> entry(-2, 2);
  for (;;) {
    MatQ g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        g(i, j) = Gq(Rational(entry(rng)), Rational(complex_entries ? entry(rng) : 0));
    if (!det(g).is_zero()) return g;
  }
}

CMPair random_pair(Rng& rng, int n, bool complex_data) {
  return conjugate(from_chart(random_chart(rng, n, complex_data)), random_invertible(rng, n, complex_data));
}

}  // namespace cmreal
