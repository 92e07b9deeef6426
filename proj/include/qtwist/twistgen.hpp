#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qtwist/families.hpp"
#include "qtwist/intfactor.hpp"

namespace qtwist {

// One certified twist: the rational d (raw and square-free form), both
// twisted curves, the four specialized points with their order certificates,
// and the per-curve independence evidence. Everything needed to re-verify is
// exact; floats are evidence only.
struct TwistRecord {
  int index = 0;
  std::string family;
  Rat alpha;
  Rat t, u;  // point on the auxiliary quartic: u^2 = q_alpha(t)
  long walk_n = 0;
  int walk_m = 0;
  Rat d_raw;              // g_alpha(t)
  IntZ d_squarefree;      // square-free kernel of d_raw
  Rat sqrt_scale;         // s with d_raw = d_squarefree * s^2
  bool reduction_complete = true;
  Rat d_used;             // twist actually applied (kernel, or raw if incomplete)
  Rat lambda1, lambda2;
  std::array<ECPointQ, 4> points;  // 0,1 on curve1; 2,3 on curve2
  std::array<OrderCertificate, 4> order_certs;
  std::array<IndependenceReport, 2> independence;
  std::array<IntZ, 2> modp_bounds;
  std::array<std::vector<long>, 2> modp_primes;

  TwistedCurve curve1() const;
  TwistedCurve curve2() const;
};

struct GenerateConfig {
  int count = 3;
  CertifyConfig certify;
  FactorBudget factor;
  int max_candidates = 500;  // walk safety stop
};

struct GenerateResult {
  std::vector<TwistRecord> records;
  std::vector<std::string> log;  // skipped candidates with reasons
};

// Walks rational points of the auxiliary curve (n Q0 + m Q1 over the printed
// infinite-order point Q0 and the 2-torsion image Q1, ordered by |n| + |m|
// then (n, m)), maps each back to (t, u) on the quartic, and emits fully
// certified records with pairwise distinct square-free d until `count` are
// collected. Degenerate parameters are logged and skipped.
GenerateResult generate_twists(const PairFamily& fam, const Rat& alpha,
                               const GenerateConfig& cfg);

// Full re-verification of a record from its exact serialized data: on-curve
// identities, quartic membership, square-class bookkeeping, Mazur scans,
// relation scans, and the regulator verdicts. Returns a list of mismatches
// (empty = verdicts reproduce).
std::vector<std::string> recheck_record(const TwistRecord& rec,
                                        const CertifyConfig& cfg);

}  // namespace qtwist
