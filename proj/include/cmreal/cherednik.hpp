#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmreal/calogero_moser.hpp"

namespace cmreal {

/// Permutation of {0..n-1}; w[k] is the image of k.
using Perm = std::vector<int>;

/// The n!-dimensional module of H_{0,c}(S_n) on the free orbit of a
/// regular point (lambda, mu), built through the Dunkl embedding.
///
/// Basis vector delta_sigma sits at (sigma.lambda, sigma.mu) with
/// (sigma.v)_k = v_{sigma^{-1}(k)}. Group elements act by w delta_sigma =
/// delta_{w sigma}; x_k is diagonal with entry (sigma.lambda)_k;
///   y_k = mu_k + c sum_{j != k} (x_k - x_j)^{-1} (1 - s_kj).
/// With this sign the relations hold in the form
///   [x_i, y_j] = c s_ij (i != j),   [x_k, y_k] = -c sum_{i != k} s_ik.
struct DunklRep {
  int n = 0;
  std::vector<Gq> lambda, mu;
  Gq c;
  std::vector<Perm> perms;  ///< basis order, lexicographic
  std::vector<MatQ> x, y;

  int dim() const { return static_cast<int>(perms.size()); }
  MatQ perm_matrix(const Perm& w) const;
  /// s_ij for 0-based i != j.
  MatQ transposition(int i, int j) const;
  /// x_1..x_n, y_1..y_n and every transposition.
  std::vector<MatQ> generators() const;
};

/// Names of the violated relations; empty when all hold exactly.
std::vector<std::string> check_relations(const DunklRep& rep);

/// Throws std::domain_error on repeated lambda and std::logic_error if a
/// relation fails.
DunklRep build_dunkl_rep(const std::vector<Gq>& lambda, const std::vector<Gq>& mu, const Gq& c = Gq(1));

/// e = average over S_n.
MatQ symmetrizer_full(const DunklRep& rep);
/// e-bar = average over the permutations fixing index 1.
MatQ symmetrizer_bar(const DunklRep& rep);

/// (x_1, -y_1 / c) restricted to e-bar V in the basis of pivot columns of
/// e-bar. The sign makes [X, Z] + I rank one under the relations above.
CMPair extract_cm_pair(const DunklRep& rep);

/// tr(w) == 0 for w != id and tr(id) == n! on the permutation matrices.
bool regular_character(const DunklRep& rep);

struct CherednikReport {
  bool evaluated = false;   ///< false at non-regular points or without real chart data
  bool hypothesis = false;  ///< both extracted char polys certified real-rooted
  bool conclusion = false;  ///< the generator list has a simultaneous real form
  CMPair pair;              ///< extracted pair, recorded for the empirical pairing
  std::optional<MatQ> real_form;  ///< real invertible h with h G h^{-1} real for all generators G
  bool falsified() const { return evaluated && hypothesis && !conclusion; }
};

/// Certifies a real form constructively: realify the extracted pair, build
/// the module at the real parts of (lambda, mu), solve for an intertwiner
/// and, when the generators are real, make it real with realify_conjugation.
/// Real parts of lambda that collide leave the instance unevaluated.
CherednikReport reality_harness(const DunklRep& rep);

}  // namespace cmreal
