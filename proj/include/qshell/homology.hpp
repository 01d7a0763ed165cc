#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "qshell/poset.hpp"
#include "qshell/qcomplex.hpp"
#include "qshell/snf.hpp"

namespace qshell {

struct HomologyDegree {
  int p = -1;
  std::uint64_t betti = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1

  bool zero() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyDegree&, const HomologyDegree&) = default;
};

/// Reduced integral homology, degrees -1, 0, ..., listed consecutively.
struct HomologyReport {
  std::vector<HomologyDegree> degrees;

  // Zero for degrees outside the stored range.
  std::uint64_t betti(int p) const;
  const std::vector<mpz_class>& torsion(int p) const;
  bool acyclic() const;
  // Drops all-zero degrees at the top.
  HomologyReport truncated() const;
};

// Equality up to trailing all-zero degrees.
bool same_homology(const HomologyReport& a, const HomologyReport& b);

/// The face poset of a punctured complex, elements in the stored face order.
Poset inclusion_poset(const PuncturedComplex& complex);

OrderComplex order_complex(const Poset& poset);

/// Number of chains with p + 1 elements, for each p, counted without
/// listing them.
std::vector<mpz_class> chain_counts(const Poset& poset);

struct HomologyLimits {
  std::uint64_t max_simplices = 2'000'000;
  // Sum over degrees of rows * cols of the dense boundary matrices.
  std::uint64_t max_boundary_entries = 20'000'000;
};

/// Throws ResourceCapExceeded if the order complex of poset is too large
/// for exact homology under the given limits.
void check_homology_limits(const Poset& poset, const HomologyLimits& limits = {});
// Same, from chain counts indexed by simplex dimension.
void check_homology_limits(const std::vector<mpz_class>& counts, const HomologyLimits& limits = {});

/// Chain counts of the punctured q-sphere on F_q^n by counting partial flags,
/// so the limits can be checked before any subspace is enumerated.
std::vector<mpz_class> sphere_chain_counts(int n, int q);

/// Signed boundary from p-simplices (columns) to (p-1)-simplices (rows).
/// Degree 0 maps onto the augmentation: one row of ones.
IntMatrix boundary_matrix(const OrderComplex& k, int p);

HomologyReport reduced_homology(const OrderComplex& k);
// Checks the limits before building the order complex.
HomologyReport finite_space_homology(const PuncturedComplex& complex, const HomologyLimits& limits = {});

/// Z^{q^{n(n-1)/2}} in degree n - 2. Throws std::overflow_error if the rank
/// does not fit in 64 bits.
HomologyReport expected_sphere_homology(int n, int q);

/// -1 + sum (-1)^p f_p against sum (-1)^p betti_p.
bool euler_check(const OrderComplex& k, const HomologyReport& report);
mpz_class reduced_euler_characteristic(const OrderComplex& k);

}  // namespace qshell
