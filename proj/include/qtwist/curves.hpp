#pragma once

#include <vector>

#include "qtwist/mpoly.hpp"
#include "qtwist/rat.hpp"

namespace qtwist {

struct SingularCurveError : DomainError {
  using DomainError::DomainError;
};
struct PointNotOnCurve : DomainError {
  using DomainError::DomainError;
};

// cubic f(x) = c3 x^3 + c2 x^2 + c1 x + c0
struct CubicPoly {
  Rat c3, c2, c1, c0;

  static CubicPoly legendre(const Rat& lambda);  // x(x-1)(x-lambda)

  Rat eval(const Rat& x) const;
  Rat disc() const;
  bool separable() const { return c3 != 0 && disc() != 0; }
  MPoly to_mpoly(Var v) const;
  bool operator==(const CubicPoly&) const = default;
};

// exact rational point; infinity is the group identity
struct ECPointQ {
  bool infinity = true;
  Rat x, y;

  static ECPointQ infty() { return {}; }
  static ECPointQ affine(Rat px, Rat py) {
    return {false, std::move(px), std::move(py)};
  }
  bool operator==(const ECPointQ&) const = default;
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct WeierstrassCurve {
  Rat a1, a2, a3, a4, a6;

  static WeierstrassCurve short_form(const Rat& A, const Rat& B);

  Rat b2() const;
  Rat b4() const;
  Rat b6() const;
  Rat b8() const;
  Rat c4() const;
  Rat c6() const;
  Rat disc() const;
  Rat j_invariant() const;  // throws SingularCurveError

  bool is_on(const ECPointQ& p) const;
  bool is_short() const { return a1 == 0 && a2 == 0 && a3 == 0; }
  bool operator==(const WeierstrassCurve&) const = default;
};

// coordinate change x = u^2 x' + r, y = u^3 y' + s u^2 x' + w between
// Weierstrass models
struct CurveTransform {
  Rat u{1}, r{0}, s{0}, w{0};

  WeierstrassCurve apply(const WeierstrassCurve& e) const;
  ECPointQ fwd(const ECPointQ& p) const;   // old coords -> new coords
  ECPointQ back(const ECPointQ& p) const;  // new coords -> old coords
  CurveTransform then(const CurveTransform& next) const;
};

// isomorphic short model (a1=a2=a3=0) with the transform that reaches it
std::pair<WeierstrassCurve, CurveTransform> to_short(const WeierstrassCurve& e);
// integral short model (A, B integers) of a short curve
std::pair<WeierstrassCurve, CurveTransform> to_integral_short(const WeierstrassCurve& e);

// Q-isomorphism between two short models, if one exists: (x,y)->(m^2 x, m^3 y)
std::optional<CurveTransform> find_short_isomorphism(const WeierstrassCurve& from,
                                                     const WeierstrassCurve& to);

// d y^2 = f(x), the quadratic twist of y^2 = f(x) by d
struct TwistedCurve {
  CubicPoly f;
  Rat d;

  TwistedCurve(CubicPoly f_, Rat d_);

  bool is_on(const ECPointQ& p) const;
  // isomorphic Weierstrass model plus exact point maps
  WeierstrassCurve weierstrass() const;
  ECPointQ to_weierstrass_point(const ECPointQ& p) const;
  ECPointQ from_weierstrass_point(const ECPointQ& p) const;
  Rat j_invariant() const;
  Rat disc() const { return f.disc() * d.get_num() * d.get_num(); }
  bool operator==(const TwistedCurve&) const = default;
};

TwistedCurve twist(const CubicPoly& f, const Rat& d);

// y^2 = x(x-1)(x-lambda), lambda not in {0,1}
struct LegendreCurve {
  explicit LegendreCurve(Rat lambda);
  Rat lambda;
  CubicPoly cubic() const { return CubicPoly::legendre(lambda); }
  TwistedCurve as_twist(const Rat& d) const { return twist(cubic(), d); }
  Rat j_invariant() const;
};

// the six lambdas giving the same Legendre curve up to isomorphism
std::vector<Rat> legendre_orbit(const Rat& lambda);
bool legendre_isomorphic(const Rat& l1, const Rat& l2);

// v^2 = c4 t^4 + c3 t^3 + c2 t^2 + c1 t + c0, degree 4 and separable
struct QuarticCurve {
  Rat c4, c3, c2, c1, c0;

  QuarticCurve(Rat q4, Rat q3, Rat q2, Rat q1, Rat q0);
  Rat eval(const Rat& t) const;
  bool is_on(const Rat& t, const Rat& v) const { return v * v == eval(t); }
  MPoly to_mpoly(Var v) const;
};

// rank bound floor((deg g - 1)/2) for square-free non-constant g, viewed as a
// polynomial in main_var over the fraction field of the other variables
int genus_bound(const MPoly& g, Var main_var);
int genus_bound(const MPoly& g);  // univariate convenience

// group law on Weierstrass and twisted models, exact; inputs are checked to
// lie on the curve
ECPointQ ec_neg(const WeierstrassCurve& e, const ECPointQ& p);
ECPointQ ec_add(const WeierstrassCurve& e, const ECPointQ& p, const ECPointQ& q);
ECPointQ ec_mul(const WeierstrassCurve& e, long n, const ECPointQ& p);
ECPointQ ec_neg(const TwistedCurve& e, const ECPointQ& p);
ECPointQ ec_add(const TwistedCurve& e, const ECPointQ& p, const ECPointQ& q);
ECPointQ ec_mul(const TwistedCurve& e, long n, const ECPointQ& p);

}  // namespace qtwist
