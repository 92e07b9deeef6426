#pragma once

#include <cstdint>
#include <vector>

#include "qtwist/rat.hpp"

namespace qtwist {

struct FactorBudget {
  unsigned long trial_bound = 1000000;  // trial division by primes up to this
  unsigned long rho_iters = 1000000;    // Brent-rho iterations per composite
};

// n = kernel * cofactor_sq^2 with |kernel| square-free when complete.
// complete=false means some cofactor survived the budget unfactored; the
// decomposition is still exact, only square-freeness of the kernel is
// unproven for that part.
struct SquareFreeKernel {
  IntZ kernel;
  IntZ cofactor_sq;
  bool complete = true;
};

SquareFreeKernel square_free_kernel_int(const IntZ& n,
                                        const FactorBudget& budget = {});

// Square class of a rational: p/q == (p*q) / q^2, so the kernel of p*q
// represents d modulo nonzero rational squares. scale satisfies
// r = kernel * scale^2 exactly.
struct RatSquareClass {
  IntZ kernel;
  Rat scale;
  bool complete = true;
};

RatSquareClass rat_square_class(const Rat& r, const FactorBudget& budget = {});

// Probable-prime test (GMP Miller-Rabin, 40 reps).
bool is_probable_prime(const IntZ& n);

// Full factorization within budget; used by rational root search. Returns
// prime -> exponent pairs plus the unfactored remainder (1 when complete).
struct Factorization {
  std::vector<std::pair<IntZ, int>> primes;
  IntZ remainder;  // 1 if fully factored
};

Factorization factorize(const IntZ& n, const FactorBudget& budget = {});

// All positive divisors, capped (empty result if the count would exceed cap
// or the factorization was incomplete).
std::vector<IntZ> divisors(const IntZ& n, size_t cap = 4096,
                           const FactorBudget& budget = {});

}  // namespace qtwist
