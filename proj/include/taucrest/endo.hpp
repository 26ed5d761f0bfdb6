#pragma once

// Structure of a finite-dimensional matrix algebra E (typically an
// endomorphism ring): Jacobson radical, locality, and an element witnessing
// non-locality.

#include "taucrest/exactmat.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace taucrest {

/// Coordinates (columns) of a basis of rad E, relative to `basis`.
/// `basis` must be linearly independent n x n matrices spanning a unital
/// subalgebra of M_n.  Over F_p this is the Ronyai / Cohen-Ivanyos-Wales
/// iterated trace-form kernel; over Q the plain trace-form kernel.
Mat radical_coords(const std::vector<Mat>& basis);

struct EndoInfo {
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  bool local = false;
  /// Over Q only: E/rad E has dimension > 1 but no zero divisor was found.
  /// Treated as local; the caller should surface the flag.
  bool nonsplit = false;
  /// When not local: an element of E that is neither nilpotent nor invertible.
  std::optional<Mat> splitter;
};

EndoInfo analyze_endomorphisms(const std::vector<Mat>& basis, std::uint64_t seed = 0);

/// Monic minimal polynomial of m acting on the cyclic subspace of v,
/// coefficients low to high (last entry 1).
std::vector<Scalar> min_poly_on(const Mat& m, const Mat& v);

/// Rational roots of a polynomial with rational coefficients (low to high).
/// Candidate search is skipped when the cleared coefficients are huge.
std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& coeffs);

bool is_nilpotent(const Mat& m);

}  // namespace taucrest
