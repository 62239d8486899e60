#pragma once

#include <cstddef>

#include "barbed/persistence.hpp"

namespace barbed {

/// Independent barcode computation by dense rank counting.
///
/// For every pair of grid values t_i <= t_j it computes the persistent Betti
/// number dim Z_k(X_i) - dim(Z_k(X_i) ∩ B_k(X_j)) from ranks of boundary
/// matrices over Z/2, then recovers bar multiplicities by inclusion-exclusion.
/// Shares nothing with the column reduction beyond the simplex list. Bars
/// carry no birth simplex. Throws CapExceeded above max_vertices.
Barcode naive_homology_oracle(const FilteredComplex& complex, std::size_t k, std::size_t max_vertices = 7);

}  // namespace barbed
