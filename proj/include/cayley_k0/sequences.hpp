#pragma once

#include "cayley_k0/int_matrix.hpp"

namespace cayley_k0::sequences {

// Narayana's Cows sequence: G(1)=G(2)=G(3)=1, G(n)=G(n-1)+G(n-3), extended
// backwards to G(0)=0, G(-1)=0, G(-2)=1, G(-3)=0.
Int narayana(long n);

// Fibonacci: F(0)=0, F(1)=F(2)=1.
Int fibonacci(long n);

// Companion matrix M_j of p_j(x) = x^j - x^{j-1} - 1: subdiagonal of 1s,
// last column (1,0,...,0,1)^t.
exact_linalg::int_matrix companion_matrix(long j);

// The closed form of M_3^n:
//   [[G(n-2),G(n-1),G(n)],[G(n-3),G(n-2),G(n-1)],[G(n-1),G(n),G(n+1)]].
exact_linalg::int_matrix m3_power_closed_form(long n);

// H_k(n) = |det(I_n - A^t)| for the Cayley graph C_n^k, computed exactly.
// k >= n is reduced mod n (C_n^j only makes sense for 0 <= j <= n-1).
Int haselgrove(long k, long n);

// |prod over n-th roots of unity w of (1 - w - w^k)| in double precision.
// Cross-check only; the exact route is the determinant.
double haselgrove_float(long k, long n);

// True exactly when H_k(n) = 0, i.e. k = 5 (mod 6) and n = 0 (mod 6).
bool haselgrove_is_zero(long k, long n);

// F(n+1) + F(n-1) - 1 - (-1)^n, which equals H_2(n).
Int h2_closed_form(long n);

}  // namespace cayley_k0::sequences
