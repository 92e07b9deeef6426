#include "qtwist/curves.hpp"

#include <algorithm>

#include "qtwist/ecgroup.hpp"

namespace qtwist {

CubicPoly CubicPoly::legendre(const Rat& lambda) {
  // x(x-1)(x-lambda) = x^3 - (1+lambda)x^2 + lambda x
  return CubicPoly{Rat(1), -(1 + lambda), lambda, Rat(0)};
}

Rat CubicPoly::eval(const Rat& x) const {
  return ((c3 * x + c2) * x + c1) * x + c0;
}

Rat CubicPoly::disc() const {
  return Rat(18) * c3 * c2 * c1 * c0 - Rat(4) * c2 * c2 * c2 * c0 +
         c2 * c2 * c1 * c1 - Rat(4) * c3 * c1 * c1 * c1 -
         Rat(27) * c3 * c3 * c0 * c0;
}

MPoly CubicPoly::to_mpoly(Var v) const {
  MPoly xv = MPoly::variable(v);
  return MPoly(c3) * xv.pow(3) + MPoly(c2) * xv.pow(2) + MPoly(c1) * xv +
         MPoly(c0);
}

WeierstrassCurve WeierstrassCurve::short_form(const Rat& A, const Rat& B) {
  return WeierstrassCurve{Rat(0), Rat(0), Rat(0), A, B};
}

Rat WeierstrassCurve::b2() const { return a1 * a1 + 4 * a2; }
Rat WeierstrassCurve::b4() const { return 2 * a4 + a1 * a3; }
Rat WeierstrassCurve::b6() const { return a3 * a3 + 4 * a6; }
Rat WeierstrassCurve::b8() const {
  return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}
Rat WeierstrassCurve::c4() const { return b2() * b2() - 24 * b4(); }
Rat WeierstrassCurve::c6() const {
  return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6();
}
Rat WeierstrassCurve::disc() const {
  Rat B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

Rat WeierstrassCurve::j_invariant() const {
  Rat D = disc();
  if (D == 0) throw SingularCurveError("singular Weierstrass curve");
  Rat C4 = c4();
  return C4 * C4 * C4 / D;
}

bool WeierstrassCurve::is_on(const ECPointQ& p) const {
  if (p.infinity) return true;
  Rat lhs = p.y * p.y + a1 * p.x * p.y + a3 * p.y;
  Rat rhs = ((p.x + a2) * p.x + a4) * p.x + a6;
  return lhs == rhs;
}

WeierstrassCurve CurveTransform::apply(const WeierstrassCurve& e) const {
  if (u == 0) throw DomainError("transform with u = 0");
  Rat u2 = u * u, u3 = u2 * u;
  WeierstrassCurve out;
  out.a1 = (e.a1 + 2 * s) / u;
  out.a2 = (e.a2 - s * e.a1 + 3 * r - s * s) / u2;
  out.a3 = (e.a3 + r * e.a1 + 2 * w) / u3;
  out.a4 = (e.a4 - s * e.a3 + 2 * r * e.a2 - (w + r * s) * e.a1 + 3 * r * r -
            2 * s * w) /
           (u2 * u2);
  out.a6 = (e.a6 + r * e.a4 + r * r * e.a2 + r * r * r - w * e.a3 - w * w -
            r * w * e.a1) /
           (u3 * u3);
  return out;
}

ECPointQ CurveTransform::fwd(const ECPointQ& p) const {
  if (p.infinity) return p;
  Rat u2 = u * u;
  Rat nx = (p.x - r) / u2;
  Rat ny = (p.y - s * (p.x - r) - w) / (u2 * u);
  return ECPointQ::affine(nx, ny);
}

ECPointQ CurveTransform::back(const ECPointQ& p) const {
  if (p.infinity) return p;
  Rat u2 = u * u;
  Rat ox = u2 * p.x + r;
  Rat oy = u2 * u * p.y + s * u2 * p.x + w;
  return ECPointQ::affine(ox, oy);
}

CurveTransform CurveTransform::then(const CurveTransform& n) const {
  // first *this (old->mid), then n (mid->new)
  CurveTransform out;
  out.u = u * n.u;
  out.r = u * u * n.r + r;
  out.s = u * n.s + s;
  out.w = u * u * u * n.w + u * u * n.r * s + w;
  return out;
}

std::pair<WeierstrassCurve, CurveTransform> to_short(const WeierstrassCurve& e) {
  CurveTransform t1{Rat(1), Rat(0), -e.a1 / 2, -e.a3 / 2};
  WeierstrassCurve mid = t1.apply(e);
  CurveTransform t2{Rat(1), -mid.a2 / 3, Rat(0), Rat(0)};
  WeierstrassCurve out = t2.apply(mid);
  return {out, t1.then(t2)};
}

static IntZ lcm_den(const Rat& a, const Rat& b) {
  IntZ l;
  mpz_lcm(l.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  return l;
}

std::pair<WeierstrassCurve, CurveTransform> to_integral_short(
    const WeierstrassCurve& e) {
  if (!e.is_short()) throw DomainError("to_integral_short needs a short model");
  IntZ c = lcm_den(e.a4, e.a6);
  // u = 1/c scales a4 by c^4 and a6 by c^6, so lcm of denominators suffices
  CurveTransform t{make_rat(IntZ(1), c), Rat(0), Rat(0), Rat(0)};
  return {t.apply(e), t};
}

std::optional<CurveTransform> find_short_isomorphism(const WeierstrassCurve& from,
                                                     const WeierstrassCurve& to) {
  if (!from.is_short() || !to.is_short())
    throw DomainError("isomorphism search expects short models");
  const Rat &A1 = from.a4, &B1 = from.a6, &A2 = to.a4, &B2 = to.a6;
  auto as_transform = [](const Rat& mu) {
    // (x,y) -> (mu^2 x, mu^3 y) is the coordinate change with u = 1/mu
    return CurveTransform{1 / mu, Rat(0), Rat(0), Rat(0)};
  };
  auto exact_root = [](const Rat& r, unsigned long k) -> std::optional<Rat> {
    if (r <= 0) return std::nullopt;
    IntZ n, d;
    if (mpz_root(n.get_mpz_t(), r.get_num_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(d.get_mpz_t(), r.get_den_mpz_t(), k) == 0) return std::nullopt;
    return make_rat(n, d);
  };
  if (A1 == 0 && B1 == 0) return std::nullopt;  // singular
  if ((A1 == 0) != (A2 == 0)) return std::nullopt;
  if ((B1 == 0) != (B2 == 0)) return std::nullopt;
  if (A1 == 0) {
    auto mu = exact_root(B2 / B1, 6);
    if (!mu) return std::nullopt;
    return as_transform(*mu);
  }
  if (B1 == 0) {
    auto mu = exact_root(A2 / A1, 4);
    if (!mu) return std::nullopt;
    return as_transform(*mu);
  }
  Rat mu2 = (B2 * A1) / (B1 * A2);
  if (mu2 <= 0) return std::nullopt;
  if (mu2 * mu2 != A2 / A1) return std::nullopt;
  if (mu2 * mu2 * mu2 != B2 / B1) return std::nullopt;
  auto mu = rat_sqrt(mu2);
  if (!mu) return std::nullopt;
  return as_transform(*mu);
}

TwistedCurve::TwistedCurve(CubicPoly f_, Rat d_)
    : f(std::move(f_)), d(std::move(d_)) {
  if (d == 0) throw DomainError("twist by zero");
  if (!f.separable()) throw SingularCurveError("cubic is not separable");
}

TwistedCurve twist(const CubicPoly& f, const Rat& d) { return TwistedCurve(f, d); }

bool TwistedCurve::is_on(const ECPointQ& p) const {
  if (p.infinity) return true;
  return d * p.y * p.y == f.eval(p.x);
}

WeierstrassCurve TwistedCurve::weierstrass() const {
  // monicize via (x,y) -> (c3 x, c3 y), then absorb d via (x,y) -> (dx, d^2 y)
  return WeierstrassCurve{Rat(0), f.c2 * d, Rat(0), f.c1 * f.c3 * d * d,
                          f.c0 * f.c3 * f.c3 * d * d * d};
}

ECPointQ TwistedCurve::to_weierstrass_point(const ECPointQ& p) const {
  if (p.infinity) return p;
  return ECPointQ::affine(d * f.c3 * p.x, d * d * f.c3 * p.y);
}

ECPointQ TwistedCurve::from_weierstrass_point(const ECPointQ& p) const {
  if (p.infinity) return p;
  return ECPointQ::affine(p.x / (d * f.c3), p.y / (d * d * f.c3));
}

Rat TwistedCurve::j_invariant() const { return weierstrass().j_invariant(); }

LegendreCurve::LegendreCurve(Rat l) : lambda(std::move(l)) {
  if (lambda == 0 || lambda == 1)
    throw DomainError("Legendre parameter must avoid {0, 1}");
}

Rat LegendreCurve::j_invariant() const { return as_twist(Rat(1)).j_invariant(); }

std::vector<Rat> legendre_orbit(const Rat& lambda) {
  if (lambda == 0 || lambda == 1)
    throw DomainError("Legendre parameter must avoid {0, 1}");
  std::vector<Rat> orbit{lambda,
                         1 - lambda,
                         1 / lambda,
                         1 / (1 - lambda),
                         lambda / (lambda - 1),
                         (lambda - 1) / lambda};
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

bool legendre_isomorphic(const Rat& l1, const Rat& l2) {
  auto orbit = legendre_orbit(l1);
  return std::find(orbit.begin(), orbit.end(), l2) != orbit.end();
}

QuarticCurve::QuarticCurve(Rat q4, Rat q3, Rat q2, Rat q1, Rat q0)
    : c4(std::move(q4)), c3(std::move(q3)), c2(std::move(q2)),
      c1(std::move(q1)), c0(std::move(q0)) {
  if (c4 == 0) throw DomainError("quartic model must have degree 4");
  MPoly q = to_mpoly(Var::t);
  if (!poly_gcd(q, q.derivative(Var::t)).is_constant())
    throw SingularCurveError("quartic is not separable");
}

Rat QuarticCurve::eval(const Rat& t) const {
  return (((c4 * t + c3) * t + c2) * t + c1) * t + c0;
}

MPoly QuarticCurve::to_mpoly(Var v) const {
  MPoly tv = MPoly::variable(v);
  return MPoly(c4) * tv.pow(4) + MPoly(c3) * tv.pow(3) + MPoly(c2) * tv.pow(2) +
         MPoly(c1) * tv + MPoly(c0);
}

int genus_bound(const MPoly& g, Var main_var) {
  int deg = g.deg(main_var);
  if (deg <= 0) throw DomainError("genus bound needs a non-constant polynomial");
  if (!poly_gcd_in(g, g.derivative(main_var), main_var).is_constant())
    throw DomainError("genus bound needs a square-free polynomial");
  return (deg - 1) / 2;
}

int genus_bound(const MPoly& g) {
  auto sup = g.support();
  if (sup.size() != 1) throw DomainError("genus bound: specify the main variable");
  return genus_bound(g, sup[0]);
}

// ----- exact group law facades -----

static GenWeierstrass<Rat> as_gen(const WeierstrassCurve& e) {
  return {e.a1, e.a2, e.a3, e.a4, e.a6};
}

static GenPoint<Rat> as_gen(const ECPointQ& p) {
  if (p.infinity) return GenPoint<Rat>::infinity();
  return GenPoint<Rat>::affine(p.x, p.y);
}

static ECPointQ from_gen(const GenPoint<Rat>& p) {
  if (p.is_infinity()) return ECPointQ::infty();
  return ECPointQ::affine(p.x(), p.y());
}

static void require_on(const WeierstrassCurve& e, const ECPointQ& p) {
  if (!e.is_on(p))
    throw PointNotOnCurve("point does not satisfy the curve equation");
}

ECPointQ ec_neg(const WeierstrassCurve& e, const ECPointQ& p) {
  require_on(e, p);
  return from_gen(gen_neg(as_gen(e), as_gen(p)));
}

ECPointQ ec_add(const WeierstrassCurve& e, const ECPointQ& p, const ECPointQ& q) {
  require_on(e, p);
  require_on(e, q);
  return from_gen(gen_add(as_gen(e), as_gen(p), as_gen(q)));
}

ECPointQ ec_mul(const WeierstrassCurve& e, long n, const ECPointQ& p) {
  require_on(e, p);
  return from_gen(gen_mul(as_gen(e), n, as_gen(p)));
}

ECPointQ ec_neg(const TwistedCurve& e, const ECPointQ& p) {
  if (!e.is_on(p))
    throw PointNotOnCurve("point does not satisfy the twisted equation");
  if (p.infinity) return p;
  return ECPointQ::affine(p.x, -p.y);
}

ECPointQ ec_add(const TwistedCurve& e, const ECPointQ& p, const ECPointQ& q) {
  if (!e.is_on(p) || !e.is_on(q))
    throw PointNotOnCurve("point does not satisfy the twisted equation");
  WeierstrassCurve w = e.weierstrass();
  return e.from_weierstrass_point(
      from_gen(gen_add(as_gen(w), as_gen(e.to_weierstrass_point(p)),
                       as_gen(e.to_weierstrass_point(q)))));
}

ECPointQ ec_mul(const TwistedCurve& e, long n, const ECPointQ& p) {
  if (!e.is_on(p))
    throw PointNotOnCurve("point does not satisfy the twisted equation");
  WeierstrassCurve w = e.weierstrass();
  return e.from_weierstrass_point(
      from_gen(gen_mul(as_gen(w), n, as_gen(e.to_weierstrass_point(p)))));
}

}  // namespace qtwist
