#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qtwist/curves.hpp"
#include "qtwist/quadext.hpp"

namespace qtwist {

// Possible orders of rational torsion points, by Mazur's classification of
// torsion subgroups of elliptic curves over Q. A point is of infinite order
// iff nP != O for every n in this list.
inline constexpr std::array<int, 11> kMazurMultiples{1, 2, 3, 4, 5,  6,
                                                     7, 8, 9, 10, 12};

enum class OrderVerdict { InfiniteOrder, Torsion };

struct OrderCertificate {
  ECPointQ point;
  OrderVerdict verdict = OrderVerdict::Torsion;
  int torsion_order = 0;  // exact order when verdict == Torsion
  std::string method = "mazur-scan";
  std::vector<int> witnesses;  // multiples n verified with nP != O
};

OrderCertificate mazur_infinite_order(const WeierstrassCurve& e,
                                      const ECPointQ& p);
OrderCertificate mazur_infinite_order(const TwistedCurve& e, const ECPointQ& p);

// |E(F_p)| for an integral model y^2 = x^3 + a2 x^2 + a4 x + a6 by direct
// x-enumeration with Euler's criterion
long count_points_mod_p(const WeierstrassCurve& integral, long p);

// gcd of point counts over the supplied primes; each must be odd, above 3,
// of good reduction. The rational torsion order divides the result.
IntZ modp_torsion_bound(const WeierstrassCurve& integral,
                        const std::vector<long>& primes);

// first `count` odd primes > min_exclusive not dividing the discriminant
std::vector<long> good_odd_primes(const WeierstrassCurve& integral, int count,
                                  long min_exclusive = 5);

struct CertifyConfig {
  int relation_bound = 3;
  int n_doublings = 4;
  double regulator_tolerance = 1e-3;
  int modp_prime_count = 3;
  size_t digit_budget = 100000;
};

enum class IndependenceVerdict {
  IndependentEvidence,
  RelationFound,
  Inconclusive
};

struct IndependenceReport {
  int relation_bound = 0;
  std::vector<std::pair<int, int>> relations;  // a P1 + b P2 torsion
  double height1 = 0, height2 = 0, pairing = 0;
  double regulator = 0;
  double tolerance = 0;
  IndependenceVerdict verdict = IndependenceVerdict::Inconclusive;
};

// exhaustive exact scan over 0 < max(|a|,|b|) <= bound, modulo the symmetry
// (a,b) ~ (-a,-b); every hit is re-verified through a Mazur scan
IndependenceReport relation_scan(const TwistedCurve& e, const ECPointQ& p1,
                                 const ECPointQ& p2, int bound);

// h(2^n P)/4^n with h the naive height of the x-coordinate on an integral
// short model; exact doubling, the only float is the final log. nullopt when
// coordinates outgrow the digit budget.
std::optional<double> canonical_height_estimate(const TwistedCurve& e,
                                                const ECPointQ& p,
                                                int n_doublings,
                                                size_t digit_budget = 100000);

// relation scan first, then height-pairing Gram determinant as numeric
// evidence of independence
IndependenceReport regulator_evidence(const TwistedCurve& e,
                                      const ECPointQ& p1, const ECPointQ& p2,
                                      const CertifyConfig& cfg);

// ----- symbolic independence over the function field -----

// d(t) y^2 = x(x-1)(x-lambda) with coordinates in Q(alpha)(t)[u]/(u^2 - q)
struct SymbolicTwistedCurve {
  RatFunc d;       // twist polynomial, in t and alpha
  RatFunc lambda;  // Legendre parameter, in alpha
  MPoly modulus;   // q(t, alpha) with u^2 = q
};

struct SymbolicPoint {
  QuadExt x, y;
};

// Checks the automorphism argument for independence: u -> -u fixes p1
// (u-free coordinates after reduction) and sends p2 to its inverse. Both
// points must satisfy the twisted curve equation exactly (DomainError
// otherwise). Returns false when the sigma-structure does not hold, e.g.
// for a pair (P, 2P).
bool verify_function_field_independence(const SymbolicTwistedCurve& curve,
                                        const SymbolicPoint& p1,
                                        const SymbolicPoint& p2);

// d y^2 - x(x-1)(x-lambda) reduced in the extension ring; zero iff the point
// lies on the symbolic twisted curve
QuadExt symbolic_curve_residual(const SymbolicTwistedCurve& curve,
                                const SymbolicPoint& p);

}  // namespace qtwist
