#include "qtwist/intfactor.hpp"

#include <algorithm>
#include <map>

namespace qtwist {

bool is_probable_prime(const IntZ& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor
// or 0 if the iteration budget ran out. n must be odd, composite, > 1.
static IntZ brent_rho(const IntZ& n, unsigned long max_iters) {
  if (n % 2 == 0) return IntZ(2);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eed);  // deterministic runs
  for (int attempt = 0; attempt < 8; ++attempt) {
    IntZ y = rng.get_z_range(n - 3) + 2;
    IntZ c = rng.get_z_range(n - 2) + 1;
    IntZ x, ys, q(1), g(1);
    unsigned long r = 1, iters = 0;
    const unsigned long m = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * (x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
        iters += lim;
        if (iters > max_iters) return IntZ(0);
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      do {
        ys = (ys * ys + c) % n;
        IntZ diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return IntZ(0);
}

Factorization factorize(const IntZ& n_in, const FactorBudget& budget) {
  Factorization out;
  out.remainder = 1;
  IntZ n = abs(n_in);
  if (n <= 1) return out;

  std::map<IntZ, int> found;
  // trial division
  IntZ p(2);
  while (p * p <= n && p <= budget.trial_bound) {
    while (n % p == 0) {
      found[p] += 1;
      n /= p;
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  if (n > 1 && p * p > n) {
    found[n] += 1;  // remainder below square of trial bound is prime
    n = 1;
  }

  // split the remainder with perfect-power tests and Brent rho
  std::vector<std::pair<IntZ, int>> stack;
  if (n > 1) stack.push_back({n, 1});
  while (!stack.empty()) {
    auto [m, e] = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_probable_prime(m)) {
      found[m] += e;
      continue;
    }
    if (mpz_perfect_power_p(m.get_mpz_t())) {
      // peel the largest exact root
      for (unsigned long k = mpz_sizeinbase(m.get_mpz_t(), 2); k >= 2; --k) {
        IntZ root;
        if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
          stack.push_back({root, e * static_cast<int>(k)});
          m = 1;
          break;
        }
      }
      if (m == 1) continue;
    }
    IntZ d = brent_rho(m, budget.rho_iters);
    if (d == 0) {
      // budget exhausted; report the unfactored composite
      IntZ part;
      mpz_pow_ui(part.get_mpz_t(), m.get_mpz_t(), e);
      out.remainder *= part;
      continue;
    }
    stack.push_back({d, e});
    stack.push_back({m / d, e});
  }

  for (auto& [q, e] : found) out.primes.push_back({q, e});
  return out;
}

SquareFreeKernel square_free_kernel_int(const IntZ& n,
                                        const FactorBudget& budget) {
  if (n == 0) throw DomainError("square_free_kernel_int: n must be nonzero");
  SquareFreeKernel out;
  out.kernel = n < 0 ? -1 : 1;
  out.cofactor_sq = 1;
  Factorization f = factorize(n, budget);
  for (auto& [p, e] : f.primes) {
    if (e & 1) out.kernel *= p;
    IntZ half;
    mpz_pow_ui(half.get_mpz_t(), p.get_mpz_t(), e / 2);
    out.cofactor_sq *= half;
  }
  if (f.remainder != 1) {
    if (mpz_perfect_square_p(f.remainder.get_mpz_t())) {
      // the whole unresolved part is a square: it moves to the cofactor and
      // the kernel stays a product of distinct proven primes
      IntZ r;
      mpz_sqrt(r.get_mpz_t(), f.remainder.get_mpz_t());
      out.cofactor_sq *= r;
    } else {
      out.kernel *= f.remainder;
      out.complete = false;
    }
  }
  return out;
}

RatSquareClass rat_square_class(const Rat& r, const FactorBudget& budget) {
  if (r == 0) throw DomainError("rat_square_class: zero has no square class");
  IntZ pq = r.get_num() * r.get_den();
  SquareFreeKernel k = square_free_kernel_int(pq, budget);
  RatSquareClass out;
  out.kernel = k.kernel;
  out.scale = make_rat(k.cofactor_sq, r.get_den());
  out.complete = k.complete;
  return out;
}

std::vector<IntZ> divisors(const IntZ& n, size_t cap,
                           const FactorBudget& budget) {
  std::vector<IntZ> out;
  if (n == 0) return out;
  Factorization f = factorize(n, budget);
  if (f.remainder != 1) return out;
  out.push_back(1);
  for (auto& [p, e] : f.primes) {
    size_t base = out.size();
    if (base * (e + 1) > cap) return {};
    IntZ pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qtwist
