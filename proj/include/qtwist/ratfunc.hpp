#pragma once

#include <optional>
#include <string>

#include "qtwist/mpoly.hpp"

namespace qtwist {

// Rational function num/den over Q[t,u,alpha,z,T,x]. den is never zero and
// its lexicographic leading coefficient is 1. Arithmetic keeps only this
// cheap normal form; equality compares cross-multiplied, and reduced() gives
// the fully gcd-reduced canonical representative (used at API boundaries:
// parsing, printing, serialization).
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rat(1)) {}
  RatFunc(MPoly p) : num_(std::move(p)), den_(Rat(1)) {}
  explicit RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
  explicit RatFunc(long c) : num_(Rat(c)), den_(Rat(1)) {}

  // throws DomainError on zero denominator
  static RatFunc quotient(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const;  // requires is_constant
  bool depends_on(Var v) const {
    return num_.depends_on(v) || den_.depends_on(v);
  }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const;
  RatFunc pow(int n) const;  // any integer

  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // canonical representative: num/gcd over den/gcd, den lex-monic
  RatFunc reduced() const;

  RatFunc subst(Var v, const RatFunc& value) const;
  std::optional<Rat> eval(const std::map<Var, Rat>& point) const;
  std::optional<RatFunc> eval_var(Var v, const Rat& value) const;

  // true iff this is the square of some rational function
  bool is_square() const;
  std::optional<RatFunc> sqrt() const;

  std::string str() const;

 private:
  void normalize();
  MPoly num_, den_;
};

RatFunc subst_into_poly(const MPoly& f, Var v, const RatFunc& value);

// t |-> (a t + b)/(c t + d) acting on `var`; entries are rational functions
// free of `var`, with a d - b c != 0.
struct FracLinMap {
  RatFunc a, b, c, d;
  Var var = Var::t;

  FracLinMap(RatFunc a_, RatFunc b_, RatFunc c_, RatFunc d_, Var v);
  // decompose an expression of degree <= 1 over degree <= 1 in `var`
  static FracLinMap from_ratfunc(const RatFunc& r, Var v);

  RatFunc determinant() const { return a * d - b * c; }
  RatFunc as_ratfunc() const;
  RatFunc apply(const RatFunc& arg) const;  // value at arg
  bool is_identity() const;
};

// f(h(t)) for univariate-in-var f; exact, fully reduced
RatFunc compose_fraclin(const MPoly& f, const FracLinMap& h);

// square-free part of a rational function modulo squares: class of num*den
struct RatFuncSquareFree {
  MPoly part;      // monic, squarefree
  Rat constant;    // square-class constant so num/den == constant*part*(sq)^2
  RatFunc square;  // the square root of the removed square factor
};
RatFuncSquareFree ratfunc_squarefree_part(const RatFunc& r);

// r1 and r2 differ by the square of a rational function (same class mod
// squares)?
bool same_square_class(const RatFunc& r1, const RatFunc& r2);

}  // namespace qtwist
