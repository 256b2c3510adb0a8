#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cmreal/poly.hpp"

namespace cmreal {

struct RootFindingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AberthOptions {
  int max_iterations = 1000;
  double correction_tol = 1e-13;
};

/// All deg(p) complex roots with multiplicity. Initial guesses come from the
/// companion-matrix eigenvalues, refined by simultaneous Aberth iteration.
/// A root counts as converged once its correction drops below
/// correction_tol * max(1, |z|), or once |p(z)| is at the rounding level of
/// the evaluation (needed for clustered roots).
std::vector<cplx> poly_roots(const PolyC& p, const AberthOptions& opts = {});

/// Roots of an exact polynomial: square-free factors are solved separately,
/// so repeated roots come back as exact repeats of one value.
std::vector<cplx> poly_roots(const PolyQ& p);

/// Exact Gaussian-rational roots (with multiplicity) if p splits over Q(i);
/// nullopt otherwise. Candidates are rationalized from numeric roots and
/// confirmed by exact evaluation.
std::optional<std::vector<Gq>> exact_roots_if_split(const PolyQ& p);

struct RealRootCount {
  bool all_real = false;
  int count = 0;  ///< real roots counted with multiplicity
};

/// Sturm-sequence certification after square-free decomposition. Exact.
/// Throws std::domain_error if a coefficient has nonzero imaginary part.
RealRootCount real_roots_certified(const PolyQ& p);

/// Number of distinct real roots of a square-free real polynomial.
int sturm_distinct_real_roots(const PolyQ& p);

}  // namespace cmreal
