#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gkern {

// Named numeric tolerances. Every field can be overridden from the CLI as
// --tol-<name> (underscores become dashes).
struct Tolerances {
  double hermitian = 1e-10;       // P = P^H, commutant input check
  double idempotent = 1e-10;      // P P = P
  double invariance = 1e-10;      // rho(a) P = P rho(a)
  double trace = 1e-8;            // trace(P) = dim
  double orthogonal_parts = 1e-9; // P_i P_j = 0, sum P_i = I
  double eigen_reconstruction = 1e-9;
  double cluster_gap = 1e-6;      // absolute floor and relative factor
  double irreducible = 1e-8;      // Schur scalar test
  double identity = 1e-12;        // exact-in-exact-arithmetic identities
  double assertion = 1e-9;        // general numeric assertions
  double symmetry = 1e-10;        // K_x(y) = conj K_y(x), covariance
  double reproduce = 1e-9;
  double membership = 1e-8;       // ||Pf - f||_max for f in H
  double constant = 1e-8;         // c = dim H, constant diagonal
  double expansion = 1e-8;        // orthogonal kernel expansion
  double relation = 1e-7;         // relative: |K_x(y)| >= c (1 - relation)
  double lambda = 1e-8;           // |lambda| = 1, K_y = lambda K_x
  double orthogonality = 1e-8;    // relative: |K_x(y)| <= orthogonality * c
  double rank = 1e-6;             // sigma_2 <= rank * sigma_1

  /// Names accepted by set(); order matches the declaration above.
  static const std::vector<std::string>& names();

  /// Returns false if `name` is unknown.
  bool set(std::string_view name, double value);
  std::optional<double> get(std::string_view name) const;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace gkern
