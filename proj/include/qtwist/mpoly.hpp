#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtwist/rat.hpp"

namespace qtwist {

// Fixed variable universe for all symbolic work. Note 't' and 'T' are
// distinct variables.
enum class Var : int { t = 0, u = 1, alpha = 2, z = 3, T = 4, x = 5 };
inline constexpr int kNumVars = 6;

const char* var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

// Exponent vector, indexed by Var. Ordering of monomials is lexicographic on
// this array (t strongest), which fixes leading terms and canonical scaling.
using Exp = std::array<int, kNumVars>;

// Sparse multivariate polynomial over Q. Canonical: no zero coefficients
// stored.
class MPoly {
 public:
  MPoly() = default;  // zero
  explicit MPoly(const Rat& c);
  explicit MPoly(long c);

  static MPoly variable(Var v, int power = 1);
  static MPoly term(const Rat& c, const Exp& e);

  const std::map<Exp, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // requires is_constant(); zero poly gives 0
  Rat constant_value() const;

  bool depends_on(Var v) const;
  std::vector<Var> support() const;
  int deg(Var v) const;        // -1 for the zero polynomial
  int total_degree() const;    // -1 for the zero polynomial

  // lexicographic leading data
  const Exp& lead_exp() const;
  const Rat& lead_coeff() const;

  // univariate view in v
  MPoly coeff_of(Var v, int k) const;
  MPoly lead_coeff_in(Var v) const;
  std::vector<MPoly> coeffs_in(Var v) const;  // index = power of v

  MPoly derivative(Var v) const;
  MPoly pow(int n) const;  // n >= 0

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly& operator*=(const Rat& c);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }

  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  // substitute a polynomial for a variable (Horner in v)
  MPoly subst(Var v, const MPoly& value) const;
  // evaluate with every supported variable bound
  Rat eval(const std::map<Var, Rat>& point) const;
  // partial evaluation: bind one variable to a rational
  MPoly eval_var(Var v, const Rat& value) const;

  // gcd of numerators / lcm of denominators of all coefficients, sign taken
  // from the leading coefficient; exact unit multiple making the polynomial
  // integral-primitive. Zero poly gives 0.
  Rat rational_content() const;

  // divide by leading coefficient (lex); no-op on zero
  MPoly monic() const;

  std::string str() const;

 private:
  void add_term(const Exp& e, const Rat& c);
  std::map<Exp, Rat> terms_;
  friend MPoly mul_term(const MPoly& p, const Exp& e, const Rat& c);
};

// p / q when the division is exact over Q[vars], otherwise nullopt.
std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& q);

// gcd over the full polynomial ring Q[t,u,alpha,z,T,x], normalized so the
// lexicographic leading coefficient is 1. gcd(0,0) is an error.
MPoly poly_gcd(const MPoly& p, const MPoly& q);

// gcd viewing p, q as polynomials in main_var with coefficients in the
// fraction field of the remaining variables: the content in main_var is
// dropped. Monic in main_var whenever its leading coefficient is constant;
// otherwise primitive with lex-leading coefficient 1.
MPoly poly_gcd_in(const MPoly& p, const MPoly& q, Var main_var);

// pseudo-remainder of p by q in v (q nonzero in v)
MPoly prem(const MPoly& p, const MPoly& q, Var v);

// content of p w.r.t. v: full-ring gcd of the v-coefficients
MPoly content_in(const MPoly& p, Var v);

// squarefree decomposition p = constant * prod a_i^i with a_i monic,
// squarefree, pairwise coprime (a_i may be 1)
struct SquareFreeDecomposition {
  Rat constant;
  std::vector<MPoly> factors;  // factors[i] appears with multiplicity i+1
};
SquareFreeDecomposition squarefree_decompose(const MPoly& p);

// Representative of p modulo squares: product of the odd-multiplicity
// squarefree factors, monic; p == constant * part * cofactor^2 exactly.
struct SquareFreePart {
  MPoly part;
  MPoly cofactor;
  Rat constant;
};
SquareFreePart squarefree_part(const MPoly& p);

// exact polynomial square root, if any (returns the root with lead coeff > 0)
std::optional<MPoly> poly_sqrt(const MPoly& p);

// all rational roots of a univariate polynomial (main variable v; other
// variables must be absent)
std::vector<Rat> rational_roots(const MPoly& p, Var v);

}  // namespace qtwist
