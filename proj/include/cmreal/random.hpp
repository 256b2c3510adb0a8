#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cmreal/calogero_moser.hpp"

namespace cmreal {

using Rng = std::mt19937_64;

/// Per-instance generator derived from (seed, stream, id) by splitmix64.
Rng instance_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t id);

/// Uniform p/q with |p/q| <= bound and q in [1, max_den].
Rational random_rational(Rng& rng, long bound = 3, long max_den = 4);
/// Real part always drawn; imaginary part drawn when complex_part is set.
Gq random_gq(Rng& rng, bool complex_part, long bound = 3, long max_den = 4);

/// n pairwise distinct values.
std::vector<Gq> random_distinct(Rng& rng, int n, bool complex_part, long bound = 3, long max_den = 4);

CMChart random_chart(Rng& rng, int n, bool complex_data);
/// Invertible matrix with small Gaussian-integer entries.
MatQ random_invertible(Rng& rng, int n, bool complex_entries);
/// Chart pair conjugated by a random invertible matrix.
CMPair random_pair(Rng& rng, int n, bool complex_data);

}  // namespace cmreal
