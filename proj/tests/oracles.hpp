#pragma once

#include <cstddef>
#include <random>

#include "cayley_k0/int_matrix.hpp"

// Independent reference implementations used to pin expected values: a
// cofactor-expansion determinant and a brute-force minor-gcd, both written
// against the textbook definitions rather than the library's algorithms.
namespace oracles {

using cayley_k0::Int;
using cayley_k0::exact_linalg::int_matrix;

// O(n!) cofactor expansion along the first row.
Int laplace_determinant(const int_matrix& m);

// gcd of all k x k minors (0 when every minor vanishes, 1 when k = 0).
Int minor_gcd(const int_matrix& m, std::size_t k);

int_matrix random_matrix(std::mt19937& rng, std::size_t rows,
                         std::size_t cols, long bound);

// Product of random elementary row operations applied to I_n.
int_matrix random_unimodular(std::mt19937& rng, std::size_t n, int steps);

}  // namespace oracles
