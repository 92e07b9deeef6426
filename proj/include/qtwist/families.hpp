#pragma once

#include <array>
#include <string>
#include <vector>

#include "qtwist/certify.hpp"
#include "qtwist/quartic.hpp"

namespace qtwist {

// A pair of Legendre curves over Q(alpha) together with a twist polynomial
// g(t, alpha) and four points with coordinates in Q(alpha)(t)[u]/(u^2 - q)
// making both g-twists of rank >= 2 over the function field. Points 0, 1
// lie on the lambda1 twist, points 2, 3 on the lambda2 twist.
struct PairFamily {
  std::string id;            // wire name: "thm51" or "thm53"
  RatFunc lambda1, lambda2;  // in alpha
  FracLinMap h1, h2;         // root-permuting maps in z
  RatFunc T_subst;           // T(t) substitution, in t and alpha
  MPoly g;                   // twist polynomial in t and alpha
  MPoly modulus;             // q(t, alpha); walk points satisfy u^2 = q
  std::array<SymbolicPoint, 4> points;
  std::vector<Rat> excluded_alpha;  // rational alphas (beyond 0, +-1) where
                                    // the pair degenerates or collides

  SymbolicTwistedCurve curve1() const { return {RatFunc(g), lambda1, modulus}; }
  SymbolicTwistedCurve curve2() const { return {RatFunc(g), lambda2, modulus}; }
};

const PairFamily& family_theorem51();
const PairFamily& family_theorem53();
const PairFamily* family_by_id(const std::string& id);  // null if unknown

// the four point-on-curve identities in the extension ring
struct FamilyIdentityReport {
  std::array<bool, 4> point_on_curve{};
  std::array<bool, 2> sigma_independent{};  // automorphism argument per curve
  bool all() const;
};
FamilyIdentityReport verify_family_identities(const PairFamily& fam);

// rational specialization of the family data
struct SpecializedPair {
  Rat alpha;
  Rat lambda1, lambda2;
  CubicPoly f1, f2;
  MPoly g_t;  // univariate in t
  MPoly q_t;  // univariate in t
};
SpecializedPair specialize(const PairFamily& fam, const Rat& alpha);
bool alpha_admissible(const PairFamily& fam, const Rat& alpha,
                      std::string* why = nullptr);

// (f2 o h2)/(f1 o h1) == M^2, the positive-rank criterion for a pair of
// twists; f1, f2 univariate in var, h1, h2, M rational functions of var
bool lemma31_pair_criterion(const MPoly& f1, const MPoly& f2, const RatFunc& h1,
                            const RatFunc& h2, const RatFunc& M, Var var);

// degree-6 twist polynomial for an arbitrary non-isomorphic Legendre pair,
// with points of infinite order on both g-twists over Q(u)
struct Lemma41Data {
  MPoly g;         // in u, degree 6
  RatFunc x;       // shared x-coordinate
  RatFunc y1, y2;  // y-coordinates on the lambda1 and lambda2 twists
};
Lemma41Data lemma41_construct(const Rat& lambda1, const Rat& lambda2);

// the auxiliary quartic u^2 = alpha^2 t^4 - (alpha^2+1)^2 t^2 + 4 alpha^2,
// its printed Weierstrass model, and the printed point of infinite order
struct AuxCurveData {
  QuarticCurve quartic;
  Rat seed_t, seed_v;        // (0, 2 alpha)
  WeierstrassCurve printed;  // reference Weierstrass model
  ECPointQ xy;               // printed point, verified on `printed`
};
AuxCurveData aux_curve(const Rat& alpha);

// symbolic counterparts over Q(alpha) for the one-shot identity checks
MPoly aux_quartic_symbolic();                       // q(t, alpha)
GenWeierstrass<RatFunc> aux_printed_symbolic();     // C' over Q(alpha)
GenPoint<RatFunc> aux_xy_symbolic();                // (X, Y) over Q(alpha)

// j-invariant over any field
template <class K>
K gen_j_invariant(const GenWeierstrass<K>& e) {
  K b2 = e.a1 * e.a1 + K(4) * e.a2;
  K b4 = K(2) * e.a4 + e.a1 * e.a3;
  K b6 = e.a3 * e.a3 + K(4) * e.a6;
  K b8 = e.a1 * e.a1 * e.a6 + K(4) * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 +
         e.a2 * e.a3 * e.a3 - e.a4 * e.a4;
  K c4 = b2 * b2 - K(24) * b4;
  K disc = -b2 * b2 * b8 - K(8) * b4 * b4 * b4 - K(27) * b6 * b6 +
           K(9) * b2 * b4 * b6;
  if (field_is_zero(disc)) throw SingularCurveError("singular curve");
  return c4 * c4 * c4 / disc;
}

// ----- derivation pipeline -----

struct PipelineStep {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PipelineReport {
  std::vector<PipelineStep> steps;
  RatFunc k1, k2;          // square-free parts of f_i(h_i(z))/f_i(z)
  RatFunc z_of_T;          // the T-parametrization of the common value
  RatFunc z_t;             // z after substituting T(t)
  RatFunc twist_value;     // f1(z(t)), the raw twist class
  MPoly derived_modulus;   // quartic class required to split k1(z(t))
  std::array<QuadExt, 3> c_point;  // derived point on the curve C
  bool has_c_point = false;
  bool matches_g = false;  // twist class equals the supplied g mod squares

  bool all_pass() const;
};

// Recomputes the derivation behind a pair family: root permutation checks,
// the square-free parts k_i, the relation f2(z) = T^2 f1(z), the split of
// k_i(z(t)) after substituting T(t), a point on the associated curve C, and
// the square class of the resulting twist polynomial (compared against
// expected_g when given).
PipelineReport remark52_pipeline(const RatFunc& lambda1, const RatFunc& lambda2,
                                 const FracLinMap& h1, const FracLinMap& h2,
                                 const RatFunc& T_subst,
                                 const MPoly* expected_g = nullptr);

}  // namespace qtwist
