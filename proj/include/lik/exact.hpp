#pragma once

#include "lik/real.hpp"

#include <vector>

namespace lik {

// Exact combinatorial kernels. All results are exact GMP integers/rationals;
// the memo tables are safe for concurrent readers (guarded writes).

Int factorial(unsigned long n);

// C(n,k); requires n >= 0, returns 0 for k < 0 or k > n.
Int binomial(long n, long k);

// Stirling numbers of the second kind S(l,k); S(l,k) = 0 for k > l.
Int stirling2(unsigned long l, unsigned long k);

// Exact Bernoulli numbers, B_1 = -1/2 convention.
Rat bernoulli(unsigned long n);

}  // namespace lik
