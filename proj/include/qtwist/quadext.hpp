#pragma once

#include "qtwist/ratfunc.hpp"

namespace qtwist {

// Element a + b*u of the quadratic extension of Q(t, alpha, ...) defined by
// u^2 = q, with q free of u and not a square. Every occurrence of u^2 is
// reduced through the modulus, so equality is componentwise.
class QuadExt {
 public:
  QuadExt() = default;  // zero with empty modulus; promoted on first use
  QuadExt(RatFunc a, RatFunc b, MPoly modulus);

  // embed a rational function possibly containing powers of u
  static QuadExt from_ratfunc(const RatFunc& r, const MPoly& modulus);
  static QuadExt constant(const Rat& c, const MPoly& modulus);
  static QuadExt gen(const MPoly& modulus);  // u itself

  const RatFunc& a() const { return a_; }
  const RatFunc& b() const { return b_; }
  const MPoly& modulus() const { return mod_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_u_free() const { return b_.is_zero(); }

  QuadExt conj() const;  // u -> -u
  QuadExt operator-() const;
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

  QuadExt inverse() const;
  QuadExt pow(int n) const;

  bool operator==(const QuadExt& o) const;
  bool operator!=(const QuadExt& o) const { return !(*this == o); }

  // norm a^2 - b^2 q (an element of the base field)
  RatFunc norm() const;

  // specialize every variable; u_value must satisfy u^2 = q at the point
  std::optional<Rat> eval(const std::map<Var, Rat>& base_point,
                          const Rat& u_value) const;

  std::string str() const;

 private:
  static const MPoly& merge_mod(const QuadExt& x, const QuadExt& y);
  RatFunc a_, b_;
  MPoly mod_;  // zero polynomial means "unbound" (additive identity)
};

}  // namespace qtwist
